#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "resurgentia/alien/engine.hpp"
#include "resurgentia/borel/numeric.hpp"
#include "resurgentia/exact/laurent.hpp"
#include "resurgentia/exact/series.hpp"

namespace resurgentia::lr {

using USeries = Series<ULaurent>;

// gs2: coefficient k multiplies g_s^{2k};  z2: coefficient k multiplies z_2^{-k},
// z_2 = 1/(3 g_s^2 u^3).
enum class Grading { gs2, z2 };

struct UCoeffSeries {
  Grading grading = Grading::gs2;
  int exp_n = 0;  // overall prefactor e^{2 n/u}
  USeries series;
  // scalar multiplying log u in the constant coefficient
  ExactScalar log_u_coefficient() const;
};

// z_2^{-k} <-> (3u^3)^k g_s^{2k}
USeries z2_to_gs2(const USeries& s);
USeries gs2_to_z2(const USeries& s);

// C(a, n) for rational a
mpq_class binom(const mpq_class& a, int n);

// phi_u = sum_{n>=1} C(3/2,n) (-2/(3u))^n z_2^{-(n-1)}, coefficients of z_2^0..z_2^{-N}
UCoeffSeries gen_phi_u(int N);
// phi_u + 1/u
USeries phi_u_regular(int N);
// 1/4 log(u^2/(1-2t)) + ((1-2t)^{3/2}-1)/(3 g_s^2 u^3), t = g_s^2 u^2
UCoeffSeries gen_R(int N);
// sum_l (2l-1)!/(2^{l-1}(l-1)!^2) u^{2l+1} g_s^{2l}
UCoeffSeries gen_lambda_sq(int N);
// c_-(t), c_+(t) in powers of t
PowerSeries c_minus(int N);
PowerSeries c_plus(int N);

enum class H0Route { substitution, composition };
UCoeffSeries gen_H0_route(int N, H0Route route);
// both routes; throws ErrorKind::defect on disagreement
UCoeffSeries gen_H0(int N);

// dH - (3/2) g^2 u^3 (dH + (u/3) d2H + (u/3) dH^2) - 1/(2u) - 1/u^2
UCoeffSeries u_equation_residual(const UCoeffSeries& H);

struct HnResult {
  int n = 0;
  UCoeffSeries series;                // H^(n) e^{-2n/u} in g_s^2
  std::vector<ULaurent> pols;         // Pol_n(u, 2g), g = 1..gmax
  std::string genus1_convention = "genus-one constant fixed to 0 beyond -1/u + 1/2 log u";
};
enum class HnRoute { c_pm, composition };
HnResult gen_Hn_route(int n, int gmax, HnRoute route);
// both routes; throws ErrorKind::defect on disagreement
HnResult gen_Hn(int n, int gmax);

// Expansion of a large-radius frame element: key (params, n, P) stands for
// e^{-2 n z_2} e^{2P/u} times a series in z_2^{-1} with Laurent-in-u coefficients.
struct LRKey {
  alien::Mono params{};
  int n = 0;
  int P = 0;
  friend bool operator<(const LRKey& a, const LRKey& b) {
    return std::tie(a.params, a.n, a.P) < std::tie(b.params, b.n, b.P);
  }
  friend bool operator==(const LRKey& a, const LRKey& b) {
    return std::tie(a.params, a.n, a.P) == std::tie(b.params, b.n, b.P);
  }
};
using LRExpanded = std::map<LRKey, USeries>;
LRExpanded lr_expand(const alien::TransElement& x, int order);
bool lr_is_zero(const LRExpanded& e);
std::string lr_to_json(const LRExpanded& e);

// H^u = G~ o (id + phi_u) at (s1, -s2) + R, as a frame-lr element (R kept apart)
alien::TransElement lr_formal_integral(alien::Caps caps);

struct LRResidual {
  LRExpanded r1, r2;
  bool zero() const { return lr_is_zero(r1) && lr_is_zero(r2); }
};
// Delta_2 H = i e^{2 z_2} d_{s2} H;  Delta_{-2} H = i e^{-2 z_2}(s2 d_{s1} - s2^2 d_{s2}) H
LRResidual lr_bridge_check(alien::Caps caps, int order = 8);
// right: D+_{>=0} H - H(s1, s2 + i); left: D+_{<=0} H - H(s1 + log(1 + i s2), s2/(1 + i s2))
LRExpanded lr_stokes_check(alien::Direction dir, alien::Caps caps, int order = 8);

// ---- numerics ----
template <class T>
struct LRPoint {
  borel::SheetPoint<T> z1;  // (1-2t)^{3/2}/(3 g_s^2 u^3) with its sheet
  std::complex<T> t;        // g_s^2 u^2
  std::complex<T> R;        // elementary term
};
template <class T>
LRPoint<T> lr_point(borel::SheetPoint<T> gs, std::complex<T> u);

template <class T>
struct LRValue {
  std::complex<T> value{};
  T err = 0;
  LRPoint<T> point;
};
// H^u_{+-}(g_s,u,s1,s2) = G_{+-}(z_1, s1, -s2) + R(g_s,u)
template <class T>
LRValue<T> lr_sum(int sign, borel::SheetPoint<T> gs, std::complex<T> u, std::complex<T> s1,
                  std::complex<T> s2, const borel::Settings<T>& s);

// right: H_+(s1,s2) vs H_-(s1,s2+i);
// left:  H_+(e^{-i pi} g_s, s1, s2) vs H_-(g_s, s1 + log(1 - i s2), s2/(1 - i s2))
template <class T>
borel::Residual<T> lr_connection_check(borel::Side which, borel::SheetPoint<T> gs, std::complex<T> u,
                                       std::complex<T> s1, std::complex<T> s2, const borel::Settings<T>& s);

// |Im H_-(a, b + i/2)| (sign < 0) or |Im H_+(a, b - i/2)| (sign > 0) for real data
template <class T>
borel::MedianValue<T> lr_median_check(int sign, T gs, T u, T a, T b, const borel::Settings<T>& s);

}  // namespace resurgentia::lr
