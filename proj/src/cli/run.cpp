#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "s2dkp/algebra.hpp"
#include "s2dkp/cli.hpp"
#include "s2dkp/errors.hpp"
#include "s2dkp/oracle.hpp"
#include "s2dkp/spectra.hpp"
#include "s2dkp/verify.hpp"
#include "s2dkp/wavefunctions.hpp"

namespace s2dkp::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json conventions() {
  return {
      {"units", "natural units: hbar = c = 1, sphere radius 1"},
      {"radial_variable", "r in (0, pi), y = (1 - cos r) / 2"},
      {"normalization", "integral_0^pi psi(r)^2 sin r dr = 1"},
      {"phase", "real, positive as r -> 0+"},
      {"energy", "nonrelativistic eps excludes the rest energy; relativistic eps includes it"},
      {"spectral_term", "2 eps M (nonrelativistic) or eps^2 - M^2 - 2 s eps B / M with s = +1, 0, -1 "
                        "for plus, zero, minus (relativistic)"},
  };
}

Json header(const RunConfig& cfg) {
  Json params;
  params["B"] = cfg.B;
  params["M"] = cfg.M;
  params["m"] = cfg.m;
  params["m_min"] = cfg.m_min;
  params["m_max"] = cfg.m_max;
  params["n"] = cfg.n;
  params["n_max"] = cfg.n_max;
  params["branch"] = std::string(to_string(cfg.branch));
  params["relativistic"] = cfg.relativistic;
  params["grids"] = cfg.grids;
  params["seed"] = cfg.seed;
  if (cfg.tolerance) params["tolerance"] = *cfg.tolerance;
  Json provenance;
  for (const auto& [k, s] : cfg.provenance) provenance[k] = std::string(to_string(s));

  Json h;
  h["tool"] = "s2dkp";
  h["version"] = std::string(kVersion);
  h["command"] = cfg.subcommand;
  h["parameters"] = params;
  h["provenance"] = provenance;
  h["conventions"] = conventions();
  if (!cfg.no_timestamp) h["timestamp"] = utc_timestamp();
  return h;
}

void csv_header(std::ostream& os, const RunConfig& cfg) {
  const Json h = header(cfg);
  os << "# tool: s2dkp " << kVersion << "\n";
  os << "# command: " << cfg.subcommand << "\n";
  os << "# parameters: " << h["parameters"].dump() << "\n";
  for (const auto& [k, v] : h["conventions"].items()) os << "# " << k << ": " << v.get<std::string>() << "\n";
  if (!cfg.no_timestamp) os << "# timestamp: " << h["timestamp"].get<std::string>() << "\n";
}

Json flags_json(const LineFlags& f) {
  Json out = Json::array();
  if (f.borderline) out.push_back("BORDERLINE");
  if (f.negative_energy) out.push_back("NEGATIVE_ENERGY");
  if (f.complex_roots) out.push_back("COMPLEX_ROOTS");
  return out;
}

Json line_json(const SpectralLine& l) {
  Json j;
  j["branch"] = std::string(to_string(l.branch));
  j["relativistic"] = l.relativistic;
  j["n"] = l.n;
  j["m"] = l.m;
  j["N"] = l.N;
  j["A"] = l.A;
  j["C"] = l.C;
  j["alpha"] = l.alpha;
  j["beta"] = l.beta;
  j["gamma"] = l.gamma;
  if (l.relativistic) {
    if (l.roots) {
      j["energy_plus"] = l.roots->plus;
      j["energy_minus"] = l.roots->minus;
    } else {
      j["energy_plus"] = nullptr;
      j["energy_minus"] = nullptr;
    }
  } else {
    j["energy"] = l.energy;
  }
  j["flags"] = flags_json(l.flags);
  return j;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  const ParameterSet p{cfg.B, cfg.M, 0};
  const auto lines = enumerate_spectrum(p, cfg.branch, cfg.relativistic, cfg.n_max, cfg.m_min, cfg.m_max);
  if (cfg.format == Format::Json) {
    Json doc;
    doc["header"] = header(cfg);
    doc["lines"] = Json::array();
    for (const auto& l : lines) doc["lines"].push_back(line_json(l));
    os << doc.dump(2) << "\n";
    return kExitOk;
  }
  csv_header(os, cfg);
  os << "branch,rel,n,m,N,A,C,alpha,beta,gamma,"
     << (cfg.relativistic ? "energy_plus,energy_minus" : "energy") << "\n";
  for (const auto& l : lines) {
    os << to_string(l.branch) << ',' << (l.relativistic ? 1 : 0) << ',' << l.n << ',' << l.m << ','
       << number(l.N) << ',' << number(l.A) << ',' << number(l.C) << ',' << number(l.alpha) << ','
       << number(l.beta) << ',' << number(l.gamma) << ',';
    if (!l.relativistic) {
      os << number(l.energy);
    } else if (l.roots) {
      os << number(l.roots->plus) << ',' << number(l.roots->minus);
    } else {
      os << "nan,nan";
    }
    os << "\n";
  }
  return kExitOk;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& os) {
  const auto line = make_line(cfg.branch, cfg.relativistic, cfg.n, cfg.m, cfg.B, cfg.M);
  const auto profile = build_profile(line);
  std::vector<DualSample<double>> samples;
  samples.reserve(cfg.samples);
  for (int k = 0; k < cfg.samples; ++k) samples.push_back(profile.sample(M_PI * (k + 0.5) / cfg.samples));

  if (cfg.format == Format::Json) {
    Json doc;
    doc["header"] = header(cfg);
    doc["line"] = line_json(line);
    doc["normalization"] = profile.normalization;
    doc["samples"] = Json::array();
    for (const auto& s : samples) {
      doc["samples"].push_back({{"r", s.r}, {"y", RadialPoint(s.r).y()}, {"psi", s.f}, {"dpsi_dr", s.df}});
    }
    os << doc.dump(2) << "\n";
    return kExitOk;
  }
  csv_header(os, cfg);
  os << "# line: " << line_json(line).dump() << "\n";
  os << "# normalization_factor: " << number(profile.normalization) << "\n";
  os << "r,y,psi,dpsi_dr\n";
  for (const auto& s : samples) {
    os << number(s.r) << ',' << number(RadialPoint(s.r).y()) << ',' << number(s.f) << ',' << number(s.df) << "\n";
  }
  return kExitOk;
}

int cmd_algebra(const RunConfig& cfg, std::ostream& os) {
  const auto basis = build_basis();
  const double tol = cfg.tolerance.value_or(1e-12);
  const double j12 = verify_j12(basis);
  const auto tau = verify_tau_algebra(basis);
  const bool passed = j12 <= tol && tau.max() <= tol;
  Json doc;
  doc["header"] = header(cfg);
  doc["j12_deviation"] = j12;
  doc["tau_commutators"] = {{"tau1_tau2", tau.tau12}, {"tau2_tau3", tau.tau23}, {"tau3_tau1", tau.tau31}};
  doc["tolerance"] = tol;
  doc["passed"] = passed;
  os << doc.dump(2) << "\n";
  return passed ? kExitOk : kExitVerification;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& os) {
  const double tol = cfg.tolerance.value_or(1e-6);
  const bool sweep_n = cfg.was_set("n-max");
  const bool sweep_m = cfg.was_set("m-min") || cfg.was_set("m-max");
  const int n_lo = sweep_n ? 0 : cfg.n, n_hi = sweep_n ? cfg.n_max : cfg.n;
  const int m_lo = sweep_m ? cfg.m_min : cfg.m, m_hi = sweep_m ? cfg.m_max : cfg.m;

  bool all_passed = true;
  Json results = Json::array();
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) {
      const auto line = make_line(cfg.branch, cfg.relativistic, n, m, cfg.B, cfg.M);
      Json j{{"branch", std::string(to_string(line.branch))}, {"relativistic", line.relativistic},
             {"n", n}, {"m", m}};
      if (!oracle_admissible(line)) {
        j["status"] = "INVALID_BOUNDARY";
        results.push_back(j);
        continue;
      }
      const auto c = compare(line, cfg.grids);
      const bool ok = c.abs_err <= tol;
      all_passed = all_passed && ok;
      j["closed_form"] = c.closed_form;
      j["oracle"] = c.oracle;
      j["abs_err"] = c.abs_err;
      j["estimated_error"] = c.estimated_error;
      j["convergence_order"] = c.convergence_order;
      j["status"] = ok ? "PASS" : "FAIL";
      results.push_back(j);
    }
  if (cfg.format == Format::Csv) {
    csv_header(os, cfg);
    os << "branch,rel,n,m,closed_form,oracle,abs_err,convergence_order,status\n";
    for (const auto& j : results) {
      os << j["branch"].get<std::string>() << ',' << (j["relativistic"].get<bool>() ? 1 : 0) << ','
         << j["n"].get<int>() << ',' << j["m"].get<int>() << ',';
      if (j.contains("oracle")) {
        os << number(j["closed_form"]) << ',' << number(j["oracle"]) << ',' << number(j["abs_err"]) << ','
           << number(j["convergence_order"]);
      } else {
        os << ",,,";
      }
      os << ',' << j["status"].get<std::string>() << "\n";
    }
  } else {
    Json doc;
    doc["header"] = header(cfg);
    doc["tolerance"] = tol;
    doc["lines"] = results;
    os << doc.dump(2) << "\n";
  }
  return all_passed ? kExitOk : kExitVerification;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& suites, bool all, std::ostream& os) {
  VerifyOptions o;
  o.B = cfg.B;
  o.M = cfg.M;
  o.m_min = cfg.m_min;
  o.m_max = cfg.m_max;
  o.n_max = cfg.n_max;
  o.grids = cfg.grids;
  o.seed = cfg.seed;
  o.tolerance = cfg.tolerance;

  std::vector<CheckResult> checks;
  if (all) {
    checks = run_all_suites(o);
  } else {
    for (const auto& s : suites) {
      auto part = run_suite(s, o);
      checks.insert(checks.end(), part.begin(), part.end());
    }
  }
  bool passed = true;
  for (const auto& c : checks) passed = passed && c.passed;

  if (cfg.format == Format::Csv) {
    csv_header(os, cfg);
    os << "suite,name,value,tolerance,passed\n";
    for (const auto& c : checks) {
      os << c.suite << ',' << c.name << ',' << number(c.value) << ',' << number(c.tolerance) << ','
         << (c.passed ? 1 : 0) << "\n";
    }
  } else {
    Json doc;
    doc["header"] = header(cfg);
    doc["passed"] = passed;
    doc["checks"] = Json::array();
    for (const auto& c : checks) {
      Json j{{"suite", c.suite}, {"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance},
             {"passed", c.passed}};
      if (!c.info.empty()) {
        Json info;
        for (const auto& [k, v] : c.info) info[k] = v;
        j["info"] = info;
      }
      doc["checks"].push_back(j);
    }
    os << doc.dump(2) << "\n";
  }
  return passed ? kExitOk : kExitVerification;
}

struct FlagStore {
  std::map<std::string, std::string> text;
  std::map<std::string, CLI::Option*> options;
  bool relativistic = false;
  bool no_timestamp = false;
  std::string config_path;
};

void add_shared_flags(CLI::App* sub, FlagStore& store) {
  for (const auto& key : config_keys()) {
    if (key == "relativistic") {
      store.options[key] = sub->add_flag("--relativistic", store.relativistic, "Use the relativistic branches");
    } else if (key == "no-timestamp") {
      store.options[key] = sub->add_flag("--no-timestamp", store.no_timestamp, "Omit the timestamp field");
    } else {
      store.options[key] = sub->add_option("--" + key, store.text[key]);
    }
  }
  sub->add_option("--config", store.config_path, "key=value file; flags override it");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-1 particle in a magnetic field on the sphere: spectra, wavefunctions, checks", "s2dkp"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kVersion));

  std::map<std::string, FlagStore> stores;
  std::map<std::string, CLI::App*> subs;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"spectrum", "Closed-form energy levels with intermediate quantities"},
      {"wavefunction", "Sample a normalized radial profile"},
      {"verify", "Run verification suites"},
      {"oracle", "Compare closed-form levels with the finite-difference eigensolver"},
      {"algebra", "Check the Duffin-Kemmer generator identity"},
  };
  for (const auto& [name, help] : commands) {
    subs[name] = app.add_subcommand(name, help);
    add_shared_flags(subs[name], stores[name]);
  }
  std::vector<std::string> suites;
  bool all_suites = false;
  subs["verify"]->add_option("suites", suites, "Suites: algebra identities composition spectra residuals "
                                               "diagonalization first-order oracle");
  subs["verify"]->add_flag("--all", all_suites, "Run every suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::string name;
  for (const auto& [n, sub] : subs)
    if (sub->parsed()) name = n;
  FlagStore& store = stores[name];

  RunConfig cfg;
  try {
    std::map<std::string, std::pair<std::string, Source>> values;
    if (!store.config_path.empty()) {
      std::ifstream in(store.config_path);
      if (!in) throw Error(ErrorCode::MalformedConfig, "cannot open config file '" + store.config_path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      for (auto& [k, v] : parse_config_text(buffer.str())) values[k] = {v, Source::File};
    }
    for (const auto& key : config_keys()) {
      if (store.options[key]->count() == 0) continue;
      std::string v;
      if (key == "relativistic") v = store.relativistic ? "true" : "false";
      else if (key == "no-timestamp") v = store.no_timestamp ? "true" : "false";
      else v = store.text[key];
      values[key] = {v, Source::Flag};
    }
    cfg = resolve_config(values);
    cfg.subcommand = name;
    if (name == "verify") {
      if (!all_suites && suites.empty()) {
        throw Error(ErrorCode::InvalidArgument, "verify needs suite names or --all");
      }
      for (const auto& s : suites) {
        const auto& known = verify_suite_names();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
          throw Error(ErrorCode::InvalidArgument, "unknown suite '" + s + "'");
        }
      }
    }
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "usage error: cannot write to '" << cfg.out << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& os = cfg.out.empty() ? out : file;

  try {
    if (name == "spectrum") return cmd_spectrum(cfg, os);
    if (name == "wavefunction") return cmd_wavefunction(cfg, os);
    if (name == "algebra") return cmd_algebra(cfg, os);
    if (name == "oracle") return cmd_oracle(cfg, os);
    if (name == "verify") return cmd_verify(cfg, suites, all_suites, os);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitVerification;
  }
  return kExitUsage;
}

}  // namespace s2dkp::cli
