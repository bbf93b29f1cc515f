#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s2dkp/model.hpp"

namespace s2dkp::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Source { Default, File, Flag };

constexpr std::string_view to_string(Source s) {
  switch (s) {
    case Source::Default: return "default";
    case Source::File: return "file";
    case Source::Flag: return "flag";
  }
  return "?";
}

enum class Format { Json, Csv };

struct RunConfig {
  std::string subcommand;
  double B = 0.0;
  double M = 1.0;
  int m = 0;
  int m_min = -2;
  int m_max = 2;
  int n = 0;
  int n_max = 3;
  Branch branch = Branch::SZero;
  bool relativistic = false;
  Format format = Format::Json;
  std::string out;  // empty means standard output
  std::optional<double> tolerance;
  std::vector<int> grids{1000, 2000, 4000};
  unsigned long long seed = 12345;
  bool no_timestamp = false;
  int samples = 101;

  /// Where each key's effective value came from.
  std::map<std::string, Source> provenance;
  /// Keys given explicitly (file or flag), used to choose single-line vs sweep modes.
  bool was_set(const std::string& key) const;
};

/// Keys accepted in config files, spelled like the long flags without dashes.
const std::vector<std::string>& config_keys();

/**
 * Parses key=value lines. Blank lines and lines starting with '#' are
 * ignored. Throws Error(MalformedConfig) naming the line number for a line
 * without '=', an unknown key or a duplicate key.
 */
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Typed configuration from raw values with their sources (defaults fill gaps).
/// Throws Error(InvalidArgument) naming the offending key and valid range.
RunConfig resolve_config(const std::map<std::string, std::pair<std::string, Source>>& values);

/// Defaults overlaid with the file's values. Throws MalformedConfig.
RunConfig load_config(const std::string& path);

/// Entry point. Returns 0 on success, 1 on usage error, 2 on verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s2dkp::cli
