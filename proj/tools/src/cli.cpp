#include "resurgentia/tools/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <vector>

#include "resurgentia/alien/engine.hpp"
#include "resurgentia/borel/numeric.hpp"
#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"
#include "resurgentia/lr/large_radius.hpp"
#include "resurgentia/tools/config.hpp"
#include "resurgentia/tools/verify.hpp"

namespace resurgentia::tools {

using json = nlohmann::ordered_json;
using LD = long double;
using CLD = std::complex<LD>;

namespace {

constexpr LD kPi = 3.141592653589793238462643383279502884L;

LD parse_real(const std::string& s) {
  std::size_t pos = 0;
  LD v = 0;
  try {
    v = std::stold(s, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "not a number: '" + s + "'");
  }
  if (pos != s.size()) throw Error(ErrorKind::parse, "not a number: '" + s + "'");
  return v;
}

}  // namespace

std::complex<long double> parse_complex(const std::string& in) {
  std::string s;
  for (char ch : in)
    if (ch != ' ') s += ch;
  if (s.empty()) throw Error(ErrorKind::parse, "empty complex number");
  if (auto c = s.find(','); c != std::string::npos) return {parse_real(s.substr(0, c)), parse_real(s.substr(c + 1))};
  if (s.back() != 'i') return {parse_real(s), 0};
  s.pop_back();
  // split at the last sign that is not an exponent sign
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  auto imag = [](const std::string& t) -> LD {
    if (t.empty() || t == "+") return 1;
    if (t == "-") return -1;
    return parse_real(t);
  };
  if (cut == std::string::npos) return {0, imag(s)};
  return {parse_real(s.substr(0, cut)), imag(s.substr(cut))};
}

long double parse_angle(const std::string& s) {
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    const std::string f = s.substr(0, s.size() - 2);
    if (f.empty() || f == "+") return kPi;
    if (f == "-") return -kPi;
    return parse_real(f) * kPi;
  }
  return parse_real(s);
}

namespace {

// ---- output ----

struct Output {
  json doc;
  json table;  // array of flat objects, used for csv when present
  bool pass = true;
};

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return s;
}

void render(const Output& o, Format f, std::ostream& os) {
  if (f == Format::json) {
    os << o.doc.dump(2) << "\n";
    return;
  }
  json rows = o.table;
  if (rows.is_null()) {
    rows = json::array();
    for (auto it = o.doc.begin(); it != o.doc.end(); ++it) rows.push_back({{"key", it.key()}, {"value", it.value()}});
  }
  if (rows.empty()) return;
  bool first = true;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << "\n";
  for (const auto& r : rows) {
    first = true;
    for (auto it = r.begin(); it != r.end(); ++it) {
      os << (first ? "" : ",") << csv_cell(it.value());
      first = false;
    }
    os << "\n";
  }
}

json cjson(CLD v) { return json::array({double(v.real()), double(v.imag())}); }
template <class T>
json cjson(std::complex<T> v) {
  return json::array({double(v.real()), double(v.imag())});
}

json poly_map(const ULaurent& p) {
  json m = json::object();
  for (const auto& [k, c] : p.terms()) {
    if (k.second != 0) continue;
    m[std::to_string(k.first)] = c.str();
  }
  return m;
}

// ---- point inputs ----

struct PointArg {
  std::vector<std::string> z, polar;
};

template <class T>
borel::SheetPoint<T> point_from(const std::string& s, bool polar) {
  if (polar) {
    const auto c = s.find(',');
    if (c == std::string::npos) throw Error(ErrorKind::parse, "--polar expects r,arg");
    return {T(parse_real(s.substr(0, c))), T(parse_angle(s.substr(c + 1)))};
  }
  const CLD z = parse_complex(s);
  return borel::SheetPoint<T>::principal(std::complex<T>(T(z.real()), T(z.imag())));
}

template <class T>
std::vector<borel::SheetPoint<T>> points(const PointArg& a) {
  std::vector<borel::SheetPoint<T>> v;
  for (const auto& s : a.z) v.push_back(point_from<T>(s, false));
  for (const auto& s : a.polar) v.push_back(point_from<T>(s, true));
  return v;
}

template <class T>
std::complex<T> cx(const std::string& s) {
  const CLD z = parse_complex(s);
  return {T(z.real()), T(z.imag())};
}

template <class T>
borel::Settings<T> settings(const RunConfig& c) {
  borel::Settings<T> s;
  s.tol = T(c.tol);
  s.ray_margin = T(c.ray_margin);
  return s;
}

borel::Interval interval_from(const std::string& s) {
  if (s == "I0") return borel::Interval::I0;
  if (s == "Ipi") return borel::Interval::Ipi;
  if (s == "I+" || s == "Iplus") return borel::Interval::Iplus;
  if (s == "I-" || s == "Iminus") return borel::Interval::Iminus;
  throw Error(ErrorKind::parse, "unknown interval " + s);
}

borel::Family family_from(const std::string& s) {
  if (s == "psi") return borel::Family::psi;
  if (s == "phi") return borel::Family::phi;
  if (s == "g") return borel::Family::g;
  if (s == "f") return borel::Family::f;
  throw Error(ErrorKind::parse, "unknown family " + s);
}

json element_json(const alien::TransElement& x) { return json::parse(x.to_json()); }

// ---- subcommand state ----

struct Args {
  // coeffs
  bool ag = false;
  int max_g = 4;
  std::string family = "g";
  int index = 1;
  // ode-check
  std::string ode_family = "g";
  // alien
  std::string dir = "right";
  int nmax = 5, kmax = 5, z2_order = 8;
  // sum / connect
  PointArg pts;
  std::string interval = "I+";
  int shift = 0;
  std::string sigma1 = "0", sigma2;
  std::optional<double> threshold;
  // median
  double x = 3, a = 0, b = 0;
  std::string theta = "0";
  // singularity
  std::string method = "ratio", source = "g", file;
  int count = 80;
  // large-radius
  int n = 1, gmax = 4;
  std::string gs, gs_polar, u = "1";
  int sign = 1;
  bool perturb = false;
  // verify-all
  std::vector<int> only;
};

// ---- handlers ----

Output do_coeffs(const RunConfig& cfg, const Args& a) {
  Output o;
  if (a.ag) {
    if (a.max_g < 2) throw Error(ErrorKind::domain_violation, "--max-g must be at least 2");
    const auto fam = hae::gen_g_f(std::max(a.max_g - 1, 1));
    o.doc = json::array();
    o.table = json::array();
    for (int g = 2; g <= a.max_g; ++g) {
      o.doc.push_back(fam.free_energy.a_g[g - 2].str());
      o.table.push_back({{"g", g}, {"a_g", fam.free_energy.a_g[g - 2].str()}});
    }
    return o;
  }
  const int N = cfg.order;
  PowerSeries s;
  if (a.family == "c") {
    auto c = hae::gen_c_coeffs(N);
    s = PowerSeries(N, c);
  } else if (a.family == "psi" || a.family == "phi") {
    auto pp = hae::gen_psi_phi(N);
    s = a.family == "psi" ? pp.first.series : pp.second.series;
  } else if (a.family == "g" || a.family == "f") {
    auto gf = hae::gen_g_f(N);
    s = a.family == "g" ? gf.g.series : gf.f.series;
  } else if (a.family == "Gn") {
    s = hae::gen_Gn(N, a.index)[a.index - 1].series;
  } else {
    throw Error(ErrorKind::parse, "unknown family " + a.family);
  }
  json coeffs = json::array();
  o.table = json::array();
  for (int k = 0; k <= s.order(); ++k) {
    coeffs.push_back(s[k].str());
    o.table.push_back({{"k", k}, {"coeff", s[k].str()}});
  }
  o.doc = {{"family", a.family}, {"order", N}};
  if (a.family == "Gn") o.doc["n"] = a.index;
  o.doc["coeffs"] = coeffs;
  return o;
}

Output do_ode_check(const RunConfig& cfg, const Args& a) {
  const int N = cfg.order;
  int zt = -1, required = N - 2;
  if (a.ode_family == "psi") {
    zt = hae::zero_through(hae::ode_residual(hae::gen_psi_phi(N).first.series, hae::Ode::airy_linear));
  } else if (a.ode_family == "g") {
    zt = hae::zero_through(hae::ode_residual(hae::gen_g_f(N).g.series, hae::Ode::hae_nonlinear));
  } else if (a.ode_family == "H0") {
    const auto r = lr::u_equation_residual(lr::gen_H0(N)).series;
    for (int k = 0; k <= r.order() && r[k].is_zero(); ++k) zt = k;
    required = N - 1;
  } else {
    throw Error(ErrorKind::parse, "unknown family " + a.ode_family);
  }
  Output o;
  o.pass = zt >= required;
  o.doc = {{"family", a.ode_family}, {"order", N}, {"zero_through", zt}, {"required", required}, {"pass", o.pass}};
  return o;
}

Output do_alien(const std::string& task, const RunConfig& cfg, const Args& a) {
  const alien::Caps caps{cfg.k_sigma, cfg.k_e};
  const auto dir = a.dir == "left" ? alien::Direction::left : alien::Direction::right;
  if (a.dir != "left" && a.dir != "right") throw Error(ErrorKind::parse, "--dir must be right or left");
  Output o;
  o.doc = {{"task", task}, {"caps", {caps.k_sigma, caps.k_e}}};
  if (task == "formal-integral") {
    o.doc["element"] = element_json(alien::formal_integral(caps));
  } else if (task == "companion") {
    o.doc["element"] = element_json(alien::companion_F(caps));
  } else if (task == "bridge") {
    const auto r = alien::bridge_check(caps);
    o.pass = r.zero();
    o.doc["zero"] = o.pass;
    o.doc["residual1"] = element_json(r.r1);
    o.doc["residual2"] = element_json(r.r2);
  } else if (task == "stokes") {
    const auto r = alien::stokes_action_check(dir, caps);
    o.pass = r.is_zero();
    o.doc["direction"] = a.dir;
    o.doc["zero"] = o.pass;
    o.doc["residual"] = element_json(r);
  } else if (task == "deltaplus") {
    o.table = json::array();
    int bad = 0;
    for (const auto& e : alien::deltaplus_table(a.nmax, a.kmax, caps)) {
      bad += !e.match();
      o.table.push_back({{"omega", e.omega}, {"k", e.k}, {"match", e.match()},
                         {"engine", e.engine.to_json()}, {"formula", e.formula.to_json()}});
    }
    o.pass = bad == 0;
    o.doc["mismatches"] = bad;
    o.doc["entries"] = o.table;
  } else if (task == "alienfg") {
    o.table = json::array();
    const ExactScalar i = ExactScalar::i();
    for (int m = 1; m <= a.nmax; ++m) {
      const auto lhs = alien::delta_plus(alien::gen_g(caps), 2 * m);
      const auto rhs = alien::gen_E(m, caps) * alien::Poly(-i.pow(m) * ExactScalar::rational(1, m));
      o.pass = o.pass && lhs == rhs;
      o.table.push_back({{"m", m}, {"match", lhs == rhs}, {"engine", lhs.to_json()}});
    }
    o.doc["entries"] = o.table;
  } else if (task == "lr-bridge") {
    const auto r = lr::lr_bridge_check(caps, a.z2_order);
    o.pass = r.zero();
    o.doc["z2_order"] = a.z2_order;
    o.doc["zero"] = o.pass;
    o.doc["residual1"] = json::parse(lr::lr_to_json(r.r1));
    o.doc["residual2"] = json::parse(lr::lr_to_json(r.r2));
  } else if (task == "lr-stokes") {
    const auto r = lr::lr_stokes_check(dir, caps, a.z2_order);
    o.pass = lr::lr_is_zero(r);
    o.doc["direction"] = a.dir;
    o.doc["z2_order"] = a.z2_order;
    o.doc["zero"] = o.pass;
    o.doc["residual"] = json::parse(lr::lr_to_json(r));
  }
  return o;
}

template <class T>
Output do_sum(const RunConfig& cfg, const Args& a) {
  const auto fam = family_from(a.family);
  const auto iv = interval_from(a.interval);
  auto pts = points<T>(a.pts);
  if (pts.empty()) throw Error(ErrorKind::parse, "give at least one --z or --polar");
  Output o;
  o.table = json::array();
  for (const auto& p : pts) {
    const auto v = borel::sum_family<T>(fam, p, iv, a.shift, settings<T>(cfg));
    const auto z = p.value();
    o.table.push_back({{"z_re", double(z.real())}, {"z_im", double(z.imag())}, {"z_arg", double(p.arg)},
                       {"value_re", double(v.value.real())}, {"value_im", double(v.value.imag())},
                       {"err", double(v.err)}, {"theta", double(v.theta)}, {"nodes", v.nodes}});
  }
  o.doc = {{"family", a.family}, {"interval", a.interval}, {"shift", a.shift}, {"rows", o.table}};
  return o;
}

template <class T>
Output do_connect(const std::string& which, const RunConfig& cfg, const Args& a) {
  const std::complex<T> i(0, 1);
  auto pts = points<T>(a.pts);
  if (pts.size() > 1) throw Error(ErrorKind::parse, "connect takes a single point");
  borel::Residual<T> r;
  double thr = 1e-6;
  borel::SheetPoint<T> z{3, 0};
  std::complex<T> s1 = cx<T>(a.sigma1), s2(1, 0);
  if (which == "left") {
    z = {T(0.9), -kPi};
    s2 = std::complex<T>(0, 0.05);
    thr = 1e-4;
  }
  if (!pts.empty()) z = pts[0];
  if (!a.sigma2.empty()) s2 = cx<T>(a.sigma2);
  if (a.threshold) thr = *a.threshold;
  const auto st = settings<T>(cfg);
  if (which == "right") r = borel::connection_check<T>(borel::Side::right, z, s1, s2, st);
  else if (which == "left") r = borel::connection_check<T>(borel::Side::left, z, s1, s2, st);
  else r = borel::linear_stokes_check<T>(z, st);
  Output o;
  o.pass = double(r.residual) <= thr;
  o.doc = {{"which", which}, {"z_abs", double(z.modulus)}, {"z_arg", double(z.arg)}};
  if (which != "linear") {
    o.doc["sigma1"] = cjson(s1);
    o.doc["sigma2"] = cjson(s2);
  }
  o.doc["lhs"] = cjson(r.lhs);
  o.doc["rhs"] = cjson(r.rhs);
  o.doc["residual"] = double(r.residual);
  o.doc["err"] = double(r.err);
  o.doc["threshold"] = thr;
  o.doc["pass"] = o.pass;
  return o;
}

template <class T>
Output do_median(const std::string& ray, const RunConfig& cfg, const Args& a) {
  const T theta = T(parse_angle(a.theta));
  const auto m = borel::median_real_check<T>(T(a.x), T(a.a), T(a.b),
                                             ray == "argpi" ? borel::MedianRay::argpi : borel::MedianRay::arg0,
                                             theta, settings<T>(cfg));
  const double thr = a.threshold.value_or(1e-8);
  Output o;
  o.pass = double(m.imag_residual) <= thr;
  o.doc = {{"ray", ray}, {"x", a.x}, {"a", a.a}, {"b", a.b}, {"theta", double(theta)},
           {"value", cjson(m.value)}, {"imag_residual", double(m.imag_residual)}, {"threshold", thr},
           {"pass", o.pass}};
  return o;
}

Output do_singularity(const Args& a) {
  std::vector<ExactScalar> d;
  if (a.source == "g") {
    const auto g = hae::gen_g_f(a.count).g.series;
    mpz_class fact = 1;
    for (int n = 0; n < a.count; ++n) {
      if (n > 0) fact *= n;
      d.push_back(g[n + 1] / ExactScalar(mpq_class(fact)));
    }
  } else if (a.source == "bhat") {
    const auto c = hae::gen_c_coeffs(a.count);
    mpz_class fact = 1;
    for (int n = 0; n < a.count; ++n) {
      if (n > 0) fact *= n;
      d.push_back(c[n] / ExactScalar(mpq_class(fact)));
    }
  } else if (a.source == "file") {
    std::ifstream f(a.file);
    if (!f) throw Error(ErrorKind::parse, "cannot open " + a.file);
    std::string line;
    while (std::getline(f, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) d.push_back(ExactScalar::parse(line));
  } else {
    throw Error(ErrorKind::parse, "unknown source " + a.source);
  }
  const auto method = a.method == "pade" ? borel::SingMethod::pade : borel::SingMethod::ratio;
  if (a.method != "pade" && a.method != "ratio") throw Error(ErrorKind::parse, "--method must be ratio or pade");
  const auto e = borel::singularity_locate(d, method);
  Output o;
  o.doc = {{"method", a.method}, {"source", a.source}, {"count", d.size()}, {"finite", e.finite}};
  o.doc["estimate"] = e.finite ? cjson(e.location) : json(nullptr);
  o.doc["modulus"] = e.finite ? json(std::abs(e.location)) : json(nullptr);
  if (method == borel::SingMethod::ratio) o.doc["richardson"] = e.richardson;
  return o;
}

template <class T>
borel::SheetPoint<T> gs_point(const Args& a, borel::SheetPoint<T> dflt) {
  if (!a.gs_polar.empty()) return point_from<T>(a.gs_polar, true);
  if (!a.gs.empty()) return point_from<T>(a.gs, false);
  return dflt;
}

template <class T>
Output do_lr_numeric(const std::string& task, const RunConfig& cfg, const Args& a) {
  const auto st = settings<T>(cfg);
  Output o;
  if (task == "lrsum") {
    const auto gs = gs_point<T>(a, {T(0.3), 0});
    const std::complex<T> s2 = a.sigma2.empty() ? std::complex<T>(0) : cx<T>(a.sigma2);
    const auto v = lr::lr_sum<T>(a.sign, gs, cx<T>(a.u), cx<T>(a.sigma1), s2, st);
    o.doc = {{"sign", a.sign}, {"gs_abs", double(gs.modulus)}, {"gs_arg", double(gs.arg)}, {"u", cjson(cx<T>(a.u))},
             {"sigma1", cjson(cx<T>(a.sigma1))}, {"sigma2", cjson(s2)},
             {"z1_abs", double(v.point.z1.modulus)}, {"z1_arg", double(v.point.z1.arg)},
             {"value", cjson(v.value)}, {"err", double(v.err)}};
  } else if (task == "lrconnect") {
    const bool left = a.dir == "left";
    const auto gs = gs_point<T>(a, left ? borel::SheetPoint<T>{T(0.6), kPi / 2} : borel::SheetPoint<T>{T(0.4), 0});
    std::complex<T> s2 = left ? std::complex<T>(0, T(0.005)) : std::complex<T>(1);
    if (!a.sigma2.empty()) s2 = cx<T>(a.sigma2);
    const auto r = lr::lr_connection_check<T>(left ? borel::Side::left : borel::Side::right, gs, cx<T>(a.u),
                                              cx<T>(a.sigma1), s2, st);
    const double thr = a.threshold.value_or(left ? 1e-4 : 1e-5);
    o.pass = double(r.residual) <= thr;
    o.doc = {{"which", a.dir}, {"gs_abs", double(gs.modulus)}, {"gs_arg", double(gs.arg)},
             {"u", cjson(cx<T>(a.u))}, {"sigma1", cjson(cx<T>(a.sigma1))}, {"sigma2", cjson(s2)},
             {"lhs", cjson(r.lhs)}, {"rhs", cjson(r.rhs)}, {"residual", double(r.residual)},
             {"threshold", thr}, {"pass", o.pass}};
  } else {  // lrmedian
    const double gs = a.gs.empty() ? 0.3 : double(parse_real(a.gs));
    const auto m = lr::lr_median_check<T>(a.sign, T(gs), T(parse_real(a.u)), T(a.a), T(a.b), st);
    const double thr = a.threshold.value_or(1e-8);
    o.pass = double(m.imag_residual) <= thr;
    o.doc = {{"sign", a.sign}, {"gs", gs}, {"u", a.u}, {"a", a.a}, {"b", a.b}, {"value", cjson(m.value)},
             {"imag_residual", double(m.imag_residual)}, {"threshold", thr}, {"pass", o.pass}};
  }
  return o;
}

Output do_large_radius(const std::string& task, const RunConfig& cfg, const Args& a) {
  Output o;
  const std::string convention = lr::HnResult{}.genus1_convention;
  if (task == "pols") {
    const auto h = lr::gen_Hn(a.n, a.gmax);
    json pols = json::array();
    o.table = json::array();
    for (int g = 1; g <= a.gmax; ++g) {
      const auto& p = h.pols[g - 1];
      const std::string label = "Pol_" + std::to_string(a.n) + "(u," + std::to_string(2 * g) + ")";
      pols.push_back({{"g", g}, {"label", label}, {"degree", p.is_zero() ? -1 : p.max_upow()}, {"coeffs", poly_map(p)}});
      o.table.push_back({{"n", a.n}, {"g", g}, {"polynomial", p.str()}});
    }
    o.doc = {{"n", a.n}, {"gmax", a.gmax}, {"prefactor", "exp(2n/u)"},
             {"constant_term", h.series.series[0].str()}, {"pols", pols}, {"convention", convention}};
  } else if (task == "h0" || task == "R" || task == "phi") {
    lr::UCoeffSeries s = task == "h0" ? lr::gen_H0(cfg.order) : task == "R" ? lr::gen_R(cfg.order) : lr::gen_phi_u(cfg.order);
    json coeffs = json::array();
    o.table = json::array();
    for (int k = 0; k <= s.series.order(); ++k) {
      coeffs.push_back({{"k", k}, {"coeffs", poly_map(s.series[k])}});
      o.table.push_back({{"k", k}, {"coefficient", s.series[k].str()}});
    }
    o.doc = {{"series", task}, {"grading", s.grading == lr::Grading::gs2 ? "g_s^2" : "z_2^-1"},
             {"order", cfg.order}, {"log_u", s.log_u_coefficient().str()}, {"coeffs", coeffs}};
    if (task == "h0") {
      o.doc["routes_agree"] = true;
      o.doc["convention"] = convention;
    }
  } else if (task == "uresidual") {
    auto H = lr::gen_H0(cfg.order);
    if (a.perturb && H.series.order() >= 1) H.series[1] += ULaurent::monomial(ExactScalar(1), 1);
    const auto r = lr::u_equation_residual(H).series;
    int zt = -1;
    for (int k = 0; k <= r.order() && r[k].is_zero(); ++k) zt = k;
    o.pass = a.perturb || zt >= cfg.order - 1;
    o.doc = {{"order", cfg.order}, {"perturbed", a.perturb}, {"zero_through", zt},
             {"first_nonzero", zt < r.order() ? r[zt + 1].str() : std::string("none")}};
  }
  return o;
}

Output do_verify(const RunConfig& cfg, const Args& a) {
  Output o;
  o.table = json::array();
  std::vector<CriterionResult> rs;
  if (a.only.empty()) rs = run_acceptance();
  else
    for (int id : a.only) rs.push_back(run_criterion(id));
  for (const auto& r : rs) {
    o.pass = o.pass && r.pass;
    o.table.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
  }
  o.doc = {{"pass", o.pass}, {"criteria", o.table}};
  // the criteria fix their own orders and tolerances; the run settings are echoed for the record
  o.doc["config"] = {{"order", cfg.order}, {"k_sigma", cfg.k_sigma}, {"k_e", cfg.k_e}, {"tol", cfg.tol},
                     {"seed", cfg.seed}};
  return o;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric resurgence toolkit", "resurgentia"};
  app.fallthrough();
  app.require_subcommand(1);

  ConfigLayer flags;
  std::string config_path;
  app.add_option("--config", config_path, "flat key = value file (default: $RESURGENTIA_CONFIG)");
  app.add_option("--order", flags.order, "truncation order N");
  app.add_option("--k-sigma", flags.k_sigma, "sigma-degree cap");
  app.add_option("--k-e", flags.k_e, "exponential cap");
  app.add_option("--tol", flags.tol, "quadrature tolerance");
  app.add_option("--ray-margin", flags.ray_margin, "distance kept from singular rays (rad)");
  app.add_option("--format", flags.format, "json or csv");
  app.add_option("--output,-o", flags.output, "output file (default stdout)");
  app.add_option("--seed", flags.seed, "seed for randomised suites");
  app.add_option("--precision", flags.precision, "double or extended");

  Args a;
  std::string sub;

  auto* coeffs = app.add_subcommand("coeffs", "exact series coefficients");
  coeffs->add_flag("--ag", a.ag, "free-energy coefficients a_2..a_{max-g}");
  coeffs->add_option("--max-g", a.max_g, "largest genus for --ag");
  coeffs->add_option("--family", a.family, "c, psi, phi, g, f or Gn");
  coeffs->add_option("--n", a.index, "index for Gn");

  auto* ode = app.add_subcommand("ode-check", "exact ODE residual certificates");
  ode->add_option("--family", a.ode_family, "psi, g or H0");

  auto* alien_cmd = app.add_subcommand("alien", "symbolic alien calculus");
  alien_cmd->require_subcommand(1);
  for (const char* t : {"formal-integral", "companion", "bridge", "stokes", "deltaplus", "alienfg", "lr-bridge", "lr-stokes"}) {
    auto* s = alien_cmd->add_subcommand(t);
    s->add_option("--dir", a.dir, "right or left");
    s->add_option("--nmax", a.nmax);
    s->add_option("--kmax", a.kmax);
    s->add_option("--z2-order", a.z2_order);
  }

  auto add_points = [&](CLI::App* s) {
    s->add_option("--z", a.pts.z, "complex point, principal sheet (repeatable)");
    s->add_option("--polar", a.pts.polar, "r,arg with explicit sheet, e.g. 0.9,-pi (repeatable)");
  };
  auto* sum = app.add_subcommand("sum", "Borel-Laplace sums of psi, phi, g, f");
  sum->add_option("--family", a.family, "psi, phi, g or f");
  sum->add_option("--interval", a.interval, "I0, Ipi, I+ or I-");
  sum->add_option("--shift", a.shift, "interval shifted by 2 pi shift");
  add_points(sum);

  auto* connect = app.add_subcommand("connect", "numeric connection formulas");
  connect->require_subcommand(1);
  for (const char* t : {"right", "left", "linear"}) {
    auto* s = connect->add_subcommand(t);
    add_points(s);
    s->add_option("--sigma1", a.sigma1);
    s->add_option("--sigma2", a.sigma2);
    s->add_option("--threshold", a.threshold);
  }

  auto* median = app.add_subcommand("median", "real-valued median sums");
  median->require_subcommand(1);
  for (const char* t : {"arg0", "argpi"}) {
    auto* s = median->add_subcommand(t);
    s->add_option("--x", a.x);
    s->add_option("--a", a.a);
    s->add_option("--b", a.b);
    s->add_option("--theta", a.theta);
    s->add_option("--threshold", a.threshold);
  }

  auto* sing = app.add_subcommand("singularity", "nearest Borel-plane singularity");
  sing->add_option("--method", a.method, "ratio or pade");
  sing->add_option("--source", a.source, "g, bhat or file");
  sing->add_option("--count", a.count, "number of coefficients");
  sing->add_option("--file", a.file, "one exact coefficient per line");

  auto* lrc = app.add_subcommand("large-radius", "large-radius series and sums");
  lrc->require_subcommand(1);
  for (const char* t : {"pols", "h0", "R", "phi", "uresidual", "lrsum", "lrconnect", "lrmedian"}) {
    auto* s = lrc->add_subcommand(t);
    s->add_option("--n", a.n);
    s->add_option("--gmax", a.gmax);
    s->add_flag("--perturb", a.perturb, "add u g_s^2 before taking the residual");
    s->add_option("--gs", a.gs, "g_s, principal sheet");
    s->add_option("--gs-polar", a.gs_polar, "|g_s|,arg g_s");
    s->add_option("--u", a.u);
    s->add_option("--sigma1", a.sigma1);
    s->add_option("--sigma2", a.sigma2);
    s->add_option("--sign", a.sign, "+1 or -1");
    s->add_option("--dir", a.dir, "right or left");
    s->add_option("--a", a.a);
    s->add_option("--b", a.b);
    s->add_option("--threshold", a.threshold);
  }

  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--only", a.only, "criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  RunConfig cfg;
  try {
    ConfigLayer file;
    if (config_path.empty())
      if (const char* env = std::getenv("RESURGENTIA_CONFIG")) config_path = env;
    if (!config_path.empty()) file = load_config_file(config_path);
    cfg = resolve(file, flags);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto leaf = [](CLI::App* parent) -> std::string {
    for (auto* s : parent->get_subcommands()) return s->get_name();
    return {};
  };
  const bool ext = cfg.precision == Precision::extended;

  Output o;
  try {
    if (*coeffs) o = do_coeffs(cfg, a);
    else if (*ode) o = do_ode_check(cfg, a);
    else if (*alien_cmd) o = do_alien(leaf(alien_cmd), cfg, a);
    else if (*sum) o = ext ? do_sum<LD>(cfg, a) : do_sum<double>(cfg, a);
    else if (*connect) o = ext ? do_connect<LD>(leaf(connect), cfg, a) : do_connect<double>(leaf(connect), cfg, a);
    else if (*median) o = ext ? do_median<LD>(leaf(median), cfg, a) : do_median<double>(leaf(median), cfg, a);
    else if (*sing) o = do_singularity(a);
    else if (*lrc) {
      const std::string t = leaf(lrc);
      if (t == "lrsum" || t == "lrconnect" || t == "lrmedian")
        o = ext ? do_lr_numeric<LD>(t, cfg, a) : do_lr_numeric<double>(t, cfg, a);
      else
        o = do_large_radius(t, cfg, a);
    } else if (*verify) o = do_verify(cfg, a);
  } catch (const Error& e) {
    o = Output{};
    o.pass = false;
    o.doc = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    o.table = nullptr;
  }

  if (cfg.output.empty()) {
    render(o, cfg.format, out);
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "cannot write " << cfg.output << "\n";
      return 1;
    }
    render(o, cfg.format, f);
  }
  return o.pass ? 0 : 1;
}

}  // namespace resurgentia::tools
