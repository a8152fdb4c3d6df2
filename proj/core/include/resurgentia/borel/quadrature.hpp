#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace resurgentia::borel {

template <class T>
struct Rule {
  std::vector<T> x, w;  // nodes and weights
};

// n-point Gauss-Legendre on [-1,1] (Newton on P_n).
template <class T>
Rule<T> gauss_legendre(int n);

// n-point Gauss-Jacobi on [0,1] for the weight x^a (Golub-Welsch).
template <class T>
Rule<T> gauss_jacobi01(int n, T a);

// Cached rules used by the integrators; built once, immutable afterwards.
template <class T>
struct RuleBank {
  Rule<T> gl_lo, gl_hi;                   // 12 / 24 point Legendre on [-1,1]
  Rule<T> jac_a_lo, jac_a_hi;             // x^{-1/6} on [0,1]
  Rule<T> jac_b_lo, jac_b_hi;             // x^{-5/6} on [0,1]
  static const RuleBank& get();
};

template <class T>
struct QuadResult {
  std::complex<T> value{};
  T err = 0;
  long nodes = 0;
  bool converged = true;
};

// Adaptive bisection on [a,b] comparing 12- and 24-point Legendre.
template <class T>
QuadResult<T> adaptive_legendre(const std::function<std::complex<T>(T)>& f, T a, T b, T tol,
                                int max_depth = 40);

}  // namespace resurgentia::borel
