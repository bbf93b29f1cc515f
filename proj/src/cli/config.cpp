#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "s2dkp/cli.hpp"
#include "s2dkp/errors.hpp"

namespace s2dkp::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& expected) {
  throw Error(ErrorCode::InvalidArgument, "--" + key + "='" + value + "': expected " + expected);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size() || !std::isfinite(x)) bad_value(key, v, "a finite real number");
    return x;
  } catch (const std::logic_error&) {
    bad_value(key, v, "a finite real number");
  }
}

long long to_integer(const std::string& key, const std::string& v) {
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) bad_value(key, v, "an integer");
  return x;
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  bad_value(key, v, "true or false");
}

int to_bounded_int(const std::string& key, const std::string& v, long long lo, long long hi) {
  const long long x = to_integer(key, v);
  if (x < lo || x > hi) bad_value(key, v, "an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(x);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "B",      "M",    "m",       "m-min",     "m-max", "n",    "n-max",        "branch",
      "relativistic", "format", "out", "tolerance", "grids", "seed", "no-timestamp", "samples"};
  return keys;
}

bool RunConfig::was_set(const std::string& key) const {
  const auto it = provenance.find(key);
  return it != provenance.end() && it->second != Source::Default;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  const std::set<std::string> known(config_keys().begin(), config_keys().end());
  std::map<std::string, std::string> values;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string::npos) throw Error(ErrorCode::MalformedConfig, where + ": expected key=value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!known.count(key)) throw Error(ErrorCode::MalformedConfig, where + ": unknown key '" + key + "'");
    if (!values.emplace(key, value).second) {
      throw Error(ErrorCode::MalformedConfig, where + ": duplicate key '" + key + "'");
    }
  }
  return values;
}

RunConfig resolve_config(const std::map<std::string, std::pair<std::string, Source>>& values) {
  RunConfig cfg;
  for (const auto& key : config_keys()) cfg.provenance[key] = Source::Default;

  for (const auto& [key, entry] : values) {
    const auto& [v, source] = entry;
    cfg.provenance[key] = source;
    if (key == "B") {
      cfg.B = to_double(key, v);
    } else if (key == "M") {
      cfg.M = to_double(key, v);
      if (!(cfg.M > 0.0)) bad_value(key, v, "a positive real number");
    } else if (key == "m") {
      cfg.m = to_bounded_int(key, v, -1000, 1000);
    } else if (key == "m-min") {
      cfg.m_min = to_bounded_int(key, v, -1000, 1000);
    } else if (key == "m-max") {
      cfg.m_max = to_bounded_int(key, v, -1000, 1000);
    } else if (key == "n") {
      cfg.n = to_bounded_int(key, v, 0, 1000);
    } else if (key == "n-max") {
      cfg.n_max = to_bounded_int(key, v, 0, 1000);
    } else if (key == "branch") {
      const auto b = parse_branch(v);
      if (!b) bad_value(key, v, "one of plus, zero, minus");
      cfg.branch = *b;
    } else if (key == "relativistic") {
      cfg.relativistic = to_bool(key, v);
    } else if (key == "format") {
      if (v == "json") cfg.format = Format::Json;
      else if (v == "csv") cfg.format = Format::Csv;
      else bad_value(key, v, "json or csv");
    } else if (key == "out") {
      cfg.out = v;
    } else if (key == "tolerance") {
      const double t = to_double(key, v);
      if (!(t > 0.0)) bad_value(key, v, "a positive real number");
      cfg.tolerance = t;
    } else if (key == "grids") {
      std::vector<int> grids;
      std::stringstream ss(v);
      std::string item;
      while (std::getline(ss, item, ',')) grids.push_back(to_bounded_int(key, trim(item), 16, 1 << 22));
      if (grids.size() != 3 || grids[1] != 2 * grids[0] || grids[2] != 2 * grids[1]) {
        bad_value(key, v, "three comma-separated sizes N,2N,4N with N >= 16");
      }
      cfg.grids = grids;
    } else if (key == "seed") {
      const long long s = to_integer(key, v);
      if (s < 0) bad_value(key, v, "a non-negative integer");
      cfg.seed = static_cast<unsigned long long>(s);
    } else if (key == "no-timestamp") {
      cfg.no_timestamp = to_bool(key, v);
    } else if (key == "samples") {
      cfg.samples = to_bounded_int(key, v, 1, 1000000);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown option --" + key);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedConfig, "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::map<std::string, std::pair<std::string, Source>> values;
  for (auto& [k, v] : parse_config_text(buffer.str())) values[k] = {v, Source::File};
  return resolve_config(values);
}

}  // namespace s2dkp::cli
