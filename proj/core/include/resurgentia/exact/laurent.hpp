#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "resurgentia/exact/scalar.hpp"

namespace resurgentia {

// Finite sum  sum c_{k,j} u^k (log u)^j  with k in Z, j >= 0 and exact c.
// Only R(g_s,u) ever produces j = 1; the ring is closed anyway.
class ULaurent {
 public:
  using Key = std::pair<int, int>;  // (power of u, power of log u)

  ULaurent() = default;
  ULaurent(int v) : ULaurent(ExactScalar(v)) {}  // NOLINT(implicit)
  ULaurent(const ExactScalar& c) {               // NOLINT(implicit)
    if (!c.is_zero()) t_[{0, 0}] = c;
  }
  static ULaurent monomial(const ExactScalar& c, int upow, int logpow = 0);

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, ExactScalar>& terms() const { return t_; }
  ExactScalar coeff(int upow, int logpow = 0) const;
  int min_upow() const;  // requires !is_zero()
  int max_upow() const;
  bool has_log() const;

  ULaurent& operator+=(const ULaurent& o);
  ULaurent& operator-=(const ULaurent& o);
  friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
  friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
  friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
  friend ULaurent operator*(const ULaurent& a, const ExactScalar& s);
  friend bool operator==(const ULaurent& a, const ULaurent& b) { return a.t_ == b.t_; }

  ULaurent inverse() const;  // monomials without log only
  ULaurent diff_u() const;
  ULaurent times_upow(int k) const;
  ULaurent conj() const;

  // Numeric value; log u taken as the principal value of log(u).
  std::complex<long double> eval(std::complex<long double> u) const;

  // "5/24*u^3 + 1/2*log(u) - u^-1"; "0" when empty.
  std::string str() const;

 private:
  void add_term(const Key& k, const ExactScalar& c);
  std::map<Key, ExactScalar> t_;
};

}  // namespace resurgentia
