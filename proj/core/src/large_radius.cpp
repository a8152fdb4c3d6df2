#include "resurgentia/lr/large_radius.hpp"

#include <cmath>
#include <sstream>

#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"

namespace resurgentia::lr {

using alien::Caps;
using alien::Frame;
using alien::Poly;
using alien::TransElement;
using alien::Var;

namespace {

const ExactScalar I = ExactScalar::i();

ULaurent mono(const ExactScalar& c, int upow, int logpow = 0) { return ULaurent::monomial(c, upow, logpow); }

ExactScalar q(const mpq_class& v) { return ExactScalar(v); }

// multiply by g_s^2 (shift by one order)
USeries shift_up(const USeries& s) {
  USeries r(s.order());
  for (int k = s.order(); k >= 1; --k) r[k] = s[k - 1];
  return r;
}

USeries times_upow(const USeries& s, int k) {
  USeries r(s.order());
  for (int j = 0; j <= s.order(); ++j) r[j] = s[j].times_upow(k);
  return r;
}

USeries diff_u(const USeries& s) {
  USeries r(s.order());
  for (int j = 0; j <= s.order(); ++j) r[j] = s[j].diff_u();
  return r;
}

// power series in t = g_s^2 u^2, read in the g_s^2 grading
USeries in_t(const PowerSeries& c, int N) {
  USeries r(N);
  for (int j = 0; j <= std::min(N, c.order()); ++j) r[j] = mono(c[j], 2 * j);
  return r;
}

}  // namespace

ExactScalar UCoeffSeries::log_u_coefficient() const { return series[0].coeff(0, 1); }

mpq_class binom(const mpq_class& a, int n) {
  mpq_class r(1);
  for (int j = 0; j < n; ++j) r = r * (a - j) / (j + 1);
  return r;
}

USeries z2_to_gs2(const USeries& s) {
  USeries r(s.order());
  ExactScalar p3(1);
  for (int k = 0; k <= s.order(); ++k) {
    r[k] = s[k].times_upow(3 * k) * p3;
    p3 *= ExactScalar(3);
  }
  return r;
}

USeries gs2_to_z2(const USeries& s) {
  USeries r(s.order());
  ExactScalar p3(1);
  for (int k = 0; k <= s.order(); ++k) {
    r[k] = s[k].times_upow(-3 * k) * p3;
    p3 *= ExactScalar::rational(1, 3);
  }
  return r;
}

UCoeffSeries gen_phi_u(int N) {
  if (N < 1) throw Error(ErrorKind::domain_violation, "phi_u needs N >= 1");
  UCoeffSeries out{Grading::z2, 0, USeries(N)};
  const mpq_class a(3, 2), m(-2, 3);
  mpq_class mp(1);
  for (int k = 0; k <= N; ++k) {
    mp *= m;
    out.series[k] = mono(q(binom(a, k + 1) * mp), -(k + 1));
  }
  return out;
}

USeries phi_u_regular(int N) {
  USeries s = gen_phi_u(N).series;
  s[0] = ULaurent();
  return s;
}

UCoeffSeries gen_R(int N) {
  UCoeffSeries out{Grading::gs2, 0, USeries(N)};
  const mpq_class a(3, 2);
  out.series[0] = mono(ExactScalar::rational(1, 2), 0, 1) + mono(ExactScalar(-1), -1);
  mpz_class two_j(1), m2(-2);
  mpz_class m2p = m2;  // (-2)^{j+1}
  for (int j = 1; j <= N; ++j) {
    two_j *= 2;
    m2p *= m2;
    out.series[j] = mono(q(mpq_class(two_j, 4 * j)), 2 * j) + mono(q(binom(a, j + 1) * m2p / 3), 2 * j - 1);
  }
  return out;
}

UCoeffSeries gen_lambda_sq(int N) {
  UCoeffSeries out{Grading::gs2, 0, USeries(N)};
  for (int l = 1; l <= N; ++l) {
    mpz_class num = mpz_class::factorial(2 * l - 1);
    mpz_class den = mpz_class::factorial(l - 1);
    den = den * den;
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, l - 1);
    out.series[l] = mono(q(mpq_class(num, den * p2)), 2 * l + 1);
  }
  return out;
}

PowerSeries c_minus(int N) {
  PowerSeries c(N);
  mpz_class m2(4);  // (-2)^{j+2}
  for (int j = 0; j <= N; ++j) {
    c[j] = q(binom(mpq_class(3, 2), j + 2) * m2 / 3);
    m2 *= -2;
  }
  return c;
}

PowerSeries c_plus(int N) {
  PowerSeries c(N);
  mpz_class m2(-2);  // (-2)^{j+1}
  for (int j = 0; j <= N; ++j) {
    c[j] = q(binom(mpq_class(-3, 2), j + 1) * m2);
    m2 *= -2;
  }
  return c;
}

UCoeffSeries gen_H0_route(int N, H0Route route) {
  if (N < 1) throw Error(ErrorKind::domain_violation, "H0 needs N >= 1");
  const auto fam = hae::gen_g_f(N);
  USeries body(N);
  if (route == H0Route::substitution) {
    const USeries lam = gen_lambda_sq(N).series;
    USeries p = USeries::constant(N, ULaurent(1));
    for (int l = 1; l <= N; ++l) {
      p = p * lam;
      body += p.scaled(fam.free_energy.a_g[l - 1]);  // a_{l+1}
    }
  } else {
    const USeries g = ps_lift<ULaurent>(fam.g.series);
    body = z2_to_gs2(ps_compose(g, gen_phi_u(N).series));
  }
  return {Grading::gs2, 0, body + gen_R(N).series};
}

UCoeffSeries gen_H0(int N) {
  auto a = gen_H0_route(N, H0Route::substitution);
  auto b = gen_H0_route(N, H0Route::composition);
  if (!(a.series == b.series)) throw Error(ErrorKind::defect, "H0: substitution and composition routes disagree");
  return a;
}

UCoeffSeries u_equation_residual(const UCoeffSeries& H) {
  if (H.grading != Grading::gs2) throw Error(ErrorKind::domain_violation, "u-equation needs the g_s^2 grading");
  const int N = H.series.order();
  const USeries d1 = diff_u(H.series), d2 = diff_u(d1);
  const ExactScalar third = ExactScalar::rational(1, 3);
  USeries inner = d1 + times_upow(d2, 1).scaled(third) + times_upow(d1 * d1, 1).scaled(third);
  USeries r = d1 - shift_up(times_upow(inner, 3)).scaled(ExactScalar::rational(3, 2));
  r[0] -= mono(ExactScalar::rational(1, 2), -1) + mono(ExactScalar(1), -2);
  (void)N;
  return {Grading::gs2, H.exp_n, r};
}

HnResult gen_Hn_route(int n, int gmax, HnRoute route) {
  if (n < 1) throw Error(ErrorKind::domain_violation, "H^(n) needs n >= 1");
  const int N = gmax;
  const auto Gn = hae::gen_Gn(N, n)[n - 1].series;  // (-1)^{n-1}/n E^n
  const ExactScalar sign(n % 2 ? -1 : 1);
  USeries body(N);
  if (route == HnRoute::c_pm) {
    // exponent -2n g^2 u c_-(t)
    USeries ex = shift_up(times_upow(in_t(c_minus(N), N), 1)).scaled(ExactScalar(-2 * n));
    // lambda^2 = g^2 u^3 (1 + t c_+(t))
    USeries one_tc = shift_up(times_upow(in_t(c_plus(N), N), 2));
    one_tc[0] = ULaurent(1);
    const USeries lam = shift_up(times_upow(one_tc, 3));
    USeries sum(N), p = USeries::constant(N, ULaurent(1));
    ExactScalar p3(1);
    for (int k = 0; k <= N; ++k) {
      sum += p.scaled(Gn[k] * p3);
      p = p * lam;
      p3 *= ExactScalar(3);
    }
    body = (ps_exp(ex) * sum).scaled(sign);
  } else {
    const USeries comp = ps_compose(ps_lift<ULaurent>(Gn), gen_phi_u(N).series);
    const USeries ex = ps_exp(phi_u_regular(N).scaled(ExactScalar(-2 * n)));
    body = z2_to_gs2((ex * comp).scaled(sign));
  }
  HnResult r;
  r.n = n;
  r.series = {Grading::gs2, n, body};
  for (int g = 1; g <= gmax; ++g) {
    if (!body[g].is_zero() && body[g].min_upow() < g)
      throw Error(ErrorKind::defect, "H^(n): coefficient not divisible by u^g");
    r.pols.push_back(body[g].times_upow(-g));
  }
  return r;
}

HnResult gen_Hn(int n, int gmax) {
  auto a = gen_Hn_route(n, gmax, HnRoute::c_pm);
  auto b = gen_Hn_route(n, gmax, HnRoute::composition);
  if (!(a.series.series == b.series.series))
    throw Error(ErrorKind::defect, "H^(n): c_+- and composition routes disagree");
  return a;
}

LRExpanded lr_expand(const TransElement& x, int order) {
  const auto ds = alien::expand_to_series(x, order);
  const USeries phi = gen_phi_u(order).series;
  const USeries phibar = phi_u_regular(order);
  std::map<int, USeries> damp;  // exp(-2P phibar)
  LRExpanded out;
  for (const auto& [k, s] : ds) {
    const int P = k.n + k.p;
    auto it = damp.find(P);
    if (it == damp.end()) it = damp.emplace(P, ps_exp(phibar.scaled(ExactScalar(-2 * P)))).first;
    USeries v = ps_compose(ps_lift<ULaurent>(s), phi) * it->second;
    if (!v.is_zero()) out[{k.params, k.n, P}] += v;
  }
  return out;
}

bool lr_is_zero(const LRExpanded& e) {
  for (const auto& [k, s] : e)
    if (!s.is_zero()) return false;
  return true;
}

std::string lr_to_json(const LRExpanded& e) {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto& [k, s] : e) {
    if (s.is_zero()) continue;
    os << (first ? "" : ",") << "{\"params\":\"" << alien::mono_str(k.params) << "\",\"n\":" << k.n
       << ",\"P\":" << k.P << ",\"coeffs\":[";
    for (int j = 0; j <= s.order(); ++j) os << (j ? "," : "") << "\"" << s[j].str() << "\"";
    os << "]}";
    first = false;
  }
  os << "]}";
  return os.str();
}

TransElement lr_formal_integral(Caps caps) {
  return alien::substitute(alien::formal_integral(caps), Var::s2, Poly::var(Var::s2) * Poly(ExactScalar(-1)));
}

namespace {

LRExpanded shifted_n(const LRExpanded& e, int dn) {
  LRExpanded out;
  for (const auto& [k, s] : e) out[{k.params, k.n + dn, k.P}] = s;
  return out;
}

LRExpanded difference(const LRExpanded& a, const LRExpanded& b, Caps caps) {
  LRExpanded out;
  auto keep = [&](const LRKey& k) {
    return std::abs(k.n) <= caps.k_e && k.params[static_cast<int>(Var::s2)] <= caps.k_sigma;
  };
  for (const auto& [k, s] : a)
    if (keep(k)) out[k] += s;
  for (const auto& [k, s] : b)
    if (keep(k)) {
      auto it = out.find(k);
      if (it == out.end()) out.emplace(k, -s);
      else it->second -= s;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

void add_R(LRExpanded& e, int order) {
  e[LRKey{}] += gs2_to_z2(gen_R(order).series);
}

}  // namespace

LRResidual lr_bridge_check(Caps caps, int order) {
  const Caps wide{caps.k_sigma + 1, caps.k_e + 1};
  const TransElement H = lr_formal_integral(wide);
  const Poly s2 = Poly::var(Var::s2);
  LRResidual r;
  {
    auto lhs = lr_expand(alien::delta(H, 2, Frame::lr), order);
    auto rhs = shifted_n(lr_expand(alien::d_param(H, Var::s2) * Poly(I), order), -1);
    r.r1 = difference(lhs, rhs, caps);
  }
  {
    auto lhs = lr_expand(alien::delta(H, -2, Frame::lr), order);
    TransElement inner = alien::d_param(H, Var::s1) * s2 - alien::d_param(H, Var::s2) * (s2 * s2);
    auto rhs = shifted_n(lr_expand(inner * Poly(I), order), 1);
    r.r2 = difference(lhs, rhs, caps);
  }
  return r;
}

LRExpanded lr_stokes_check(alien::Direction dir, Caps caps, int order) {
  const int k = std::max(caps.k_sigma, caps.k_e);
  const bool right = dir == alien::Direction::right;
  const Caps wide = right ? Caps{k, caps.k_e} : Caps{caps.k_sigma, k};
  const TransElement H = lr_formal_integral(wide);
  TransElement lhs = alien::stokes(H, right, Poly(1), Frame::lr), rhs;
  if (right) {
    rhs = alien::substitute(H, Var::s2, Poly::var(Var::s2) + Poly(I));
  } else {
    rhs = alien::substitute(H, Var::s2, alien::mobius_s2(I, caps.k_sigma));
    rhs = alien::substitute(rhs, Var::s1, Poly::var(Var::s1) + alien::log1p_s2(I, caps.k_sigma));
  }
  auto L = lr_expand(lhs, order), R = lr_expand(rhs, order);
  add_R(L, order);
  add_R(R, order);
  return difference(L, R, caps);
}

// ---- numerics ----

template <class T>
LRPoint<T> lr_point(borel::SheetPoint<T> gs, std::complex<T> u) {
  using C = std::complex<T>;
  const C g = gs.value();
  const C t = g * g * u * u;
  if (!(std::abs(t) < T(0.5)))
    throw Error(ErrorKind::domain_violation, "|g_s^2 u^2| must be below 1/2");
  const C w = std::exp(T(1.5) * std::log(T(1) - T(2) * t));
  LRPoint<T> p;
  p.t = t;
  p.z1.modulus = std::abs(w) / (3 * gs.modulus * gs.modulus * std::pow(std::abs(u), T(3)));
  p.z1.arg = std::arg(w) - 2 * gs.arg - 3 * std::arg(u);
  p.R = std::log(u) / T(2) - std::log(T(1) - T(2) * t) / T(4) + (w - T(1)) / (T(3) * g * g * u * u * u);
  return p;
}

template <class T>
LRValue<T> lr_sum(int sign, borel::SheetPoint<T> gs, std::complex<T> u, std::complex<T> s1,
                  std::complex<T> s2, const borel::Settings<T>& s) {
  LRValue<T> v;
  v.point = lr_point(gs, u);
  const auto g = borel::G_pm<T>(sign, v.point.z1, s1, -s2, s);
  v.value = g.value + v.point.R;
  v.err = g.err;
  return v;
}

template <class T>
borel::Residual<T> lr_connection_check(borel::Side which, borel::SheetPoint<T> gs, std::complex<T> u,
                                       std::complex<T> s1, std::complex<T> s2, const borel::Settings<T>& s) {
  const std::complex<T> i(0, 1);
  borel::Residual<T> r;
  try {
    LRValue<T> lhs, rhs;
    if (which == borel::Side::right) {
      lhs = lr_sum<T>(+1, gs, u, s1, s2, s);
      rhs = lr_sum<T>(-1, gs, u, s1, s2 + i, s);
    } else {
      const T pi = std::acos(T(-1));
      lhs = lr_sum<T>(+1, gs.rotated(-pi), u, s1, s2, s);
      const std::complex<T> d = T(1) - i * s2;
      rhs = lr_sum<T>(-1, gs, u, s1 + std::log(d), s2 / d, s);
    }
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.err = lhs.err + rhs.err;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::domain_violation) throw;
    throw Error(ErrorKind::domain_empty,
                std::string("no common domain for both sides of the connection: ") + e.what());
  }
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

template <class T>
borel::MedianValue<T> lr_median_check(int sign, T gs, T u, T a, T b, const borel::Settings<T>& s) {
  const std::complex<T> i(0, 1);
  const std::complex<T> s2 = sign < 0 ? b + i / T(2) : b - i / T(2);
  const auto v = lr_sum<T>(sign, borel::SheetPoint<T>{gs, 0}, std::complex<T>(u), a, s2, s);
  return {v.value, std::abs(v.value.imag())};
}

#define RESURGENTIA_LR(T)                                                                          \
  template LRPoint<T> lr_point<T>(borel::SheetPoint<T>, std::complex<T>);                         \
  template LRValue<T> lr_sum<T>(int, borel::SheetPoint<T>, std::complex<T>, std::complex<T>,      \
                                std::complex<T>, const borel::Settings<T>&);                      \
  template borel::Residual<T> lr_connection_check<T>(borel::Side, borel::SheetPoint<T>,           \
                                                     std::complex<T>, std::complex<T>,            \
                                                     std::complex<T>, const borel::Settings<T>&); \
  template borel::MedianValue<T> lr_median_check<T>(int, T, T, T, T, const borel::Settings<T>&);
RESURGENTIA_LR(double)
RESURGENTIA_LR(long double)
#undef RESURGENTIA_LR

}  // namespace resurgentia::lr
