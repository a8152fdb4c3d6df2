#include "resurgentia/borel/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <utility>

namespace resurgentia::borel {

template <class T>
Rule<T> gauss_legendre(int n) {
  // Newton in long double, then rounded to T.
  using L = long double;
  Rule<T> r;
  r.x.resize(n);
  r.w.resize(n);
  const L pi = std::acos(L(-1));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    L x = std::cos(pi * (i + L(0.75)) / (n + L(0.5)));
    L dp = 0;
    for (int it = 0; it < 100; ++it) {
      L p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        L p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      L dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    L w = 2 / ((1 - x * x) * dp * dp);
    r.x[i] = T(-x);
    r.x[n - 1 - i] = T(x);
    r.w[i] = r.w[n - 1 - i] = T(w);
  }
  return r;
}

template <class T>
Rule<T> gauss_jacobi01(int n, T a) {
  // Jacobi matrix for alpha = 0, beta = a on [-1,1], weight (1+y)^a.
  using L = long double;
  const L al = 0, be = a;
  Eigen::Matrix<L, Eigen::Dynamic, Eigen::Dynamic> J =
      Eigen::Matrix<L, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const L s = 2 * k + al + be;
    J(k, k) = k == 0 ? (be - al) / (al + be + 2) : (be * be - al * al) / (s * (s + 2));
    if (k + 1 < n) {
      const L k1 = k + 1, s1 = 2 * k1 + al + be;
      J(k, k + 1) = J(k + 1, k) = std::sqrt(4 * k1 * (k1 + al) * (k1 + be) * (k1 + al + be) /
                                            (s1 * s1 * (s1 + 1) * (s1 - 1)));
    }
  }
  Eigen::SelfAdjointEigenSolver<decltype(J)> es(J);
  const L mu0 = std::pow(L(2), al + be + 1) * std::tgamma(al + 1) * std::tgamma(be + 1) /
                std::tgamma(al + be + 2);
  Rule<T> r;
  for (int i = 0; i < n; ++i) {
    const L y = es.eigenvalues()(i);
    const L v = es.eigenvectors()(0, i);
    r.x.push_back(T((y + 1) / 2));
    r.w.push_back(T(mu0 * v * v * std::pow(L(2), -be - 1)));
  }
  return r;
}

template <class T>
const RuleBank<T>& RuleBank<T>::get() {
  static const RuleBank bank = [] {
    RuleBank b;
    b.gl_lo = gauss_legendre<T>(12);
    b.gl_hi = gauss_legendre<T>(24);
    b.jac_a_lo = gauss_jacobi01<T>(20, T(-1) / 6);
    b.jac_a_hi = gauss_jacobi01<T>(40, T(-1) / 6);
    b.jac_b_lo = gauss_jacobi01<T>(20, T(-5) / 6);
    b.jac_b_hi = gauss_jacobi01<T>(40, T(-5) / 6);
    return b;
  }();
  return bank;
}

template <class T>
QuadResult<T> adaptive_legendre(const std::function<std::complex<T>(T)>& f, T a, T b, T tol,
                                int max_depth) {
  const auto& bank = RuleBank<T>::get();
  QuadResult<T> out;
  const T total = b - a;
  struct Panel {
    T a, b;
    int depth;
  };
  std::vector<Panel> stack{{a, b, 0}};
  auto apply = [&](const Rule<T>& r, T lo, T hi) {
    const T c = (lo + hi) / 2, h = (hi - lo) / 2;
    std::complex<T> s = 0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(c + h * r.x[i]);
    out.nodes += static_cast<long>(r.x.size());
    return s * h;
  };
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const auto lo = apply(bank.gl_lo, p.a, p.b);
    const auto hi = apply(bank.gl_hi, p.a, p.b);
    const T e = std::abs(hi - lo);
    const T budget = tol * (p.b - p.a) / total;
    if (e <= budget || !(e == e)) {
      out.value += hi;
      out.err += e;
      if (!(e == e)) out.converged = false;
    } else if (p.depth >= max_depth) {
      out.value += hi;
      out.err += e;
      out.converged = false;
    } else {
      const T m = (p.a + p.b) / 2;
      stack.push_back({m, p.b, p.depth + 1});
      stack.push_back({p.a, m, p.depth + 1});
    }
  }
  return out;
}

#define RESURGENTIA_QUAD(T)                                                                    \
  template Rule<T> gauss_legendre<T>(int);                                                     \
  template Rule<T> gauss_jacobi01<T>(int, T);                                                  \
  template struct RuleBank<T>;                                                                 \
  template QuadResult<T> adaptive_legendre<T>(const std::function<std::complex<T>(T)>&, T, T, T, \
                                              int);
RESURGENTIA_QUAD(double)
RESURGENTIA_QUAD(long double)
#undef RESURGENTIA_QUAD

}  // namespace resurgentia::borel
