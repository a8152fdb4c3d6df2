#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "resurgentia/exact/scalar.hpp"

namespace resurgentia::borel {

template <class T>
using cplx = std::complex<T>;

// Point of the Riemann surface of the logarithm.
template <class T>
struct SheetPoint {
  T modulus = 1;
  T arg = 0;
  cplx<T> value() const { return std::polar(modulus, arg); }
  static SheetPoint principal(cplx<T> z) { return {std::abs(z), std::arg(z)}; }
  SheetPoint rotated(T dtheta) const { return {modulus, arg + dtheta}; }
};

enum class Interval { I0, Ipi, Iplus, Iminus };
const char* to_string(Interval i);
// base bounds, before the 2*pi*shift translation
void interval_bounds(Interval i, double& lo, double& hi);

struct Direction {
  double theta = 0;
  Interval interval = Interval::Iplus;
  int shift = 0;
};

enum class AhatBranch { A, A_plus };
enum class BhatBranch { B, B_plus };
enum class Family { psi, phi, g, f };
const char* to_string(Family f);

template <class T>
struct Settings {
  T tol = T(1e-10);
  T ray_margin = T(0.05);  // radians kept away from singular rays / half-plane edge
};

template <class T>
struct SumValue {
  cplx<T> value{};
  T err = 0;
  T theta = 0;
  long nodes = 0;
  T radius = 0;  // Laplace truncation radius
};

// Closed form; `zeta` carries its sheet through arg.  Cut [2,inf) for A,
// (-inf,-2] for A_plus.
template <class T>
cplx<T> eval_Ahat(SheetPoint<T> zeta, AhatBranch branch);

// Convolution integral by Gauss-Jacobi end panels and adaptive Legendre in
// between.  Principal sheet.
template <class T>
SumValue<T> eval_Bhat(cplx<T> zeta, BhatBranch branch, T tol);

// sum_{n<nterms} c_n zeta^n / n!, for cross-checks with |zeta| < 2.
template <class T>
cplx<T> bhat_maclaurin(cplx<T> zeta, int nterms);

// int_0^{e^{i theta} inf} fhat(zeta) e^{-z zeta} dzeta
template <class T>
SumValue<T> laplace_ray(const std::function<cplx<T>(cplx<T>)>& fhat, cplx<T> z, T theta, T tol,
                        T growth = T(1));

// Laplace direction for z in the summation domain of the interval: the middle
// of the admissible theta-window.  Throws outside_half_plane when the window is
// narrower than twice the margin.
template <class T>
T choose_theta(SheetPoint<T> z, Interval interval, int shift, T margin);

template <class T>
SumValue<T> sum_family(Family fam, SheetPoint<T> z, Interval interval, int shift, const Settings<T>& s);

template <class T>
struct GValue {
  cplx<T> value{};         // closed form  s1 + S g + log(1 + x)
  cplx<T> series_value{};  // partial sums of sum ((-1)^{n-1}/n) x^n
  T err = 0;
  T theta = 0;
  int terms = 0;
};

// G^{+-}(z, s1, s2) = s1 + S g~ + log(1 + s2 e^{-2z} S phi~ / S psi~).
template <class T>
GValue<T> G_pm(int sign, SheetPoint<T> z, cplx<T> s1, cplx<T> s2, const Settings<T>& s);

enum class Side { right, left };
template <class T>
struct Residual {
  T residual = 0;
  cplx<T> lhs{}, rhs{};
  T err = 0;
};

// right: G+(z,s1,s2) vs G-(z,s1,s2-i);
// left:  G+(e^{2 pi i} z,s1,s2) vs G-(z, s1+log(1+i s2), s2/(1+i s2)).
template <class T>
Residual<T> connection_check(Side which, SheetPoint<T> z, cplx<T> s1, cplx<T> s2, const Settings<T>& s);

// S psi(z) vs S psi(e^{2 pi i} z) - i e^{-2z} S phi(z), arg z in (-pi/2, pi/2).
template <class T>
Residual<T> linear_stokes_check(SheetPoint<T> z, const Settings<T>& s);

enum class MedianRay { arg0, argpi };
template <class T>
struct MedianValue {
  cplx<T> value{};
  T imag_residual = 0;
};
// arg0:  G-(x, a, b - i/2);  argpi: G-(x e^{-i pi}, a - i theta/2, -i(1 - e^{i theta})).
template <class T>
MedianValue<T> median_real_check(T x, T a, T b, MedianRay ray, T theta, const Settings<T>& s);

// Ai, Ai', Ai'' from the Maclaurin series (test oracle).
template <class T>
struct AiryValue {
  cplx<T> ai, dai, d2ai;
};
template <class T>
AiryValue<T> airy_oracle(cplx<T> w);

struct SingularityEstimate {
  std::complex<double> location{};
  bool finite = true;
  double richardson = 0;  // ratio method only
  std::vector<double> ratios;
};
enum class SingMethod { ratio, pade };
// coeffs: Taylor coefficients of the Borel function.
SingularityEstimate singularity_locate(const std::vector<ExactScalar>& coeffs, SingMethod method);

template <class T>
struct GevreyTable {
  std::vector<T> errors;  // errors[N-1] = |value - sum_{n<N} coeffs[n] z^{-n}|
  int argmin = 0;         // in N (1-based)
  bool unimodal = false;
  bool monotone = false;
};
template <class T>
GevreyTable<T> gevrey_table(cplx<T> value, const std::vector<ExactScalar>& coeffs, cplx<T> z, int nmax);
// Truncation errors of the g~ expansion against S^{interval} g~(z).
template <class T>
GevreyTable<T> gevrey_check(SheetPoint<T> z, Interval interval, int nmax, const Settings<T>& s);

}  // namespace resurgentia::borel
