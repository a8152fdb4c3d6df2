#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "resurgentia/error.hpp"
#include "resurgentia/exact/scalar.hpp"

namespace resurgentia {

inline constexpr int kDefaultOrder = 64;

// Truncated series sum_{k<=N} c_k z^{-k} over a commutative coefficient ring R.
// R needs: value-initialisation to zero, R(1), +, -, *, multiplication by
// ExactScalar, is_zero(), inverse() (for unit constant terms only) and ==.
template <class R>
class Series {
 public:
  Series() : c_(1) {}
  explicit Series(int order) : c_(static_cast<size_t>(std::max(order, 0)) + 1) {}
  Series(int order, std::vector<R> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(std::max(order, 0)) + 1);
  }

  static Series constant(int order, const R& v) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }
  static Series monomial(int order, int k, const R& v) {
    Series s(order);
    if (k >= 0 && k <= order) s.c_[k] = v;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int k) const { return c_[k]; }
  R& operator[](int k) { return c_[k]; }
  const std::vector<R>& coeffs() const { return c_; }

  Series truncated(int order) const {
    Series s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
    return s;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& r) { return r.is_zero(); });
  }
  // smallest k with c_k != 0, or order()+1 if none
  int valuation() const {
    for (int k = 0; k <= order(); ++k)
      if (!c_[k].is_zero()) return k;
    return order() + 1;
  }

  Series& operator+=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = R{} - c_[k];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  Series scaled(const ExactScalar& s) const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * s;
    return r;
  }
  Series scaled_r(const R& s) const {
    Series r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * s;
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.order() == b.order() && a.c_ == b.c_;
  }

 private:
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(static_cast<size_t>(order) + 1);
  }
  std::vector<R> c_;
};

using PowerSeries = Series<ExactScalar>;

enum class SeriesOp { add, mul, inv_of_unit };
enum class LogExp { log, exp };

template <class R>
Series<R> ps_inv(const Series<R>& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::not_a_unit, "not a unit");
  const int n = a.order();
  Series<R> b(n);
  const R b0 = a[0].inverse();
  b[0] = b0;
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += a[j] * b[k - j];
    b[k] = R{} - acc * b0;
  }
  return b;
}

template <class R>
Series<R> ps_arith(const Series<R>& a, const Series<R>& b, SeriesOp kind) {
  switch (kind) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::inv_of_unit: return ps_inv(a);
  }
  return a;
}

// Logarithm of a series with constant term 1; recurrence from L' = a'/a.
template <class R>
Series<R> ps_log(const Series<R>& a) {
  if (!(a[0] == R(1))) throw Error(ErrorKind::wrong_constant_term, "wrong constant term: log needs c0 = 1");
  const int n = a.order();
  Series<R> l(n);
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j < k; ++j)
      if (!a[k - j].is_zero()) acc += (l[j] * a[k - j]) * ExactScalar(j);
    l[k] = a[k] - acc * ExactScalar::rational(1, k);
  }
  return l;
}

template <class R>
Series<R> ps_exp(const Series<R>& a) {
  if (!a[0].is_zero()) throw Error(ErrorKind::wrong_constant_term, "wrong constant term: exp needs c0 = 0");
  const int n = a.order();
  Series<R> e(n);
  e[0] = R(1);
  for (int k = 1; k <= n; ++k) {
    R acc{};
    for (int j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += (a[j] * e[k - j]) * ExactScalar(j);
    e[k] = acc * ExactScalar::rational(1, k);
  }
  return e;
}

template <class R>
Series<R> ps_log_exp(const Series<R>& a, LogExp kind) {
  return kind == LogExp::log ? ps_log(a) : ps_exp(a);
}

// d/dz; the z^{-N-1} term produced by c_N is not representable and is dropped.
template <class R>
Series<R> ps_diff(const Series<R>& a) {
  const int n = a.order();
  Series<R> d(n);
  for (int k = 1; k < n; ++k) d[k + 1] = a[k] * ExactScalar(-k);
  return d;
}

template <class R>
Series<R> ps_pow(const Series<R>& a, int e) {
  Series<R> acc = Series<R>::constant(a.order(), R(1));
  Series<R> base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// z -> -z
template <class R>
Series<R> ps_reflect(const Series<R>& a) {
  Series<R> r = a;
  for (int k = 1; k <= a.order(); k += 2) r[k] = R{} - a[k];
  return r;
}

template <class R>
Series<R> ps_lift(const PowerSeries& a) {
  Series<R> r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = R(a[k]);
  return r;
}

// psi o (id + phi) = sum_{n=0}^{N} phi^n d^n psi / n!.  phi may carry a
// constant term; every retained order is then still exactly determined
// because d^n psi has valuation >= n+1 on the non-constant part of psi.
template <class R>
Series<R> ps_compose(const Series<R>& psi, const Series<R>& phi) {
  const int n = std::min(psi.order(), phi.order());
  Series<R> out = psi.truncated(n);
  Series<R> deriv = psi.truncated(n);
  Series<R> phipow = Series<R>::constant(n, R(1));
  mpq_class inv_fact(1);
  for (int k = 1; k <= n; ++k) {
    deriv = ps_diff(deriv);
    if (deriv.is_zero()) break;
    phipow = phipow * phi.truncated(n);
    inv_fact /= k;
    out += (phipow * deriv).scaled(ExactScalar(inv_fact));
  }
  return out;
}

}  // namespace resurgentia
