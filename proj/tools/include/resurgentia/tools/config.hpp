#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>

namespace resurgentia::tools {

enum class Format { json, csv };
enum class Precision { double_, extended };

struct RunConfig {
  int order = 64;
  int k_sigma = 6;
  int k_e = 6;
  double tol = 1e-10;
  double ray_margin = 0.05;
  Format format = Format::json;
  std::string output;  // empty: stdout
  std::uint64_t seed = 20240611;
  Precision precision = Precision::double_;
};

// Values present on the command line / in a config file; unset fields keep
// whatever the lower-precedence layer provided.
struct ConfigLayer {
  std::optional<int> order, k_sigma, k_e;
  std::optional<double> tol, ray_margin;
  std::optional<std::string> format, output, precision;
  std::optional<std::uint64_t> seed;
};

// Flat "key = value" text; '#' starts a comment.  Throws Error(parse) on
// unknown keys or malformed values.
ConfigLayer parse_config(std::istream& in, const std::string& origin = "config");
ConfigLayer load_config_file(const std::string& path);

// defaults < file < flags; validates the result.
RunConfig resolve(const ConfigLayer& file, const ConfigLayer& flags);

const char* to_string(Format f);

}  // namespace resurgentia::tools
