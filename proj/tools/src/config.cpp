#include "resurgentia/tools/config.hpp"

#include <fstream>
#include <sstream>

#include "resurgentia/error.hpp"

namespace resurgentia::tools {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T number(const std::string& v, const std::string& where) {
  std::istringstream is(v);
  T x{};
  is >> x;
  if (!is || !is.eof()) throw Error(ErrorKind::parse, where + ": bad value '" + v + "'");
  return x;
}

}  // namespace

ConfigLayer parse_config(std::istream& in, const std::string& origin) {
  ConfigLayer c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw Error(ErrorKind::parse, where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "order") c.order = number<int>(val, where);
    else if (key == "k_sigma") c.k_sigma = number<int>(val, where);
    else if (key == "k_e") c.k_e = number<int>(val, where);
    else if (key == "tol") c.tol = number<double>(val, where);
    else if (key == "ray_margin") c.ray_margin = number<double>(val, where);
    else if (key == "format") c.format = val;
    else if (key == "output") c.output = val;
    else if (key == "precision") c.precision = val;
    else if (key == "seed") c.seed = number<std::uint64_t>(val, where);
    else throw Error(ErrorKind::parse, where + ": unknown key '" + key + "'");
  }
  return c;
}

ConfigLayer load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::parse, "cannot open config file " + path);
  return parse_config(f, path);
}

RunConfig resolve(const ConfigLayer& file, const ConfigLayer& flags) {
  RunConfig r;
  auto pick = [](auto& dst, const auto& lo, const auto& hi) {
    if (hi) dst = *hi;
    else if (lo) dst = *lo;
  };
  pick(r.order, file.order, flags.order);
  pick(r.k_sigma, file.k_sigma, flags.k_sigma);
  pick(r.k_e, file.k_e, flags.k_e);
  pick(r.tol, file.tol, flags.tol);
  pick(r.ray_margin, file.ray_margin, flags.ray_margin);
  pick(r.output, file.output, flags.output);
  pick(r.seed, file.seed, flags.seed);
  std::string fmt = "json", prec = "double";
  pick(fmt, file.format, flags.format);
  pick(prec, file.precision, flags.precision);

  if (fmt == "json") r.format = Format::json;
  else if (fmt == "csv") r.format = Format::csv;
  else throw Error(ErrorKind::parse, "format must be json or csv");
  if (prec == "double") r.precision = Precision::double_;
  else if (prec == "extended") r.precision = Precision::extended;
  else throw Error(ErrorKind::parse, "precision must be double or extended");
  if (r.order <= 0 || r.k_sigma <= 0 || r.k_e <= 0 || !(r.tol > 0) || !(r.ray_margin > 0))
    throw Error(ErrorKind::parse, "order, caps, tol and ray_margin must be positive");
  return r;
}

const char* to_string(Format f) { return f == Format::json ? "json" : "csv"; }

}  // namespace resurgentia::tools
