#pragma once

#include <array>
#include <map>
#include <string>

#include "resurgentia/exact/scalar.hpp"

namespace resurgentia::alien {

// Indeterminates of the coefficient ring.  s1, s2 are the transseries
// parameters, d1, d2 those of the companion F~, s and t free flow
// parameters.  zi = z^{-1}, gp = g~', fp = f~' close the algebra under d/dz.
enum class Var : int { s1, s2, d1, d2, s, t, zi, gp, fp };
inline constexpr int kNumVars = 9;
const char* var_name(Var v);
inline bool is_parameter(Var v) { return static_cast<int>(v) <= static_cast<int>(Var::t); }

using Mono = std::array<short, kNumVars>;

// Sparse polynomial over Q(i) in the indeterminates above.
class Poly {
 public:
  Poly() = default;
  Poly(const ExactScalar& c);  // NOLINT(implicit)
  Poly(int c) : Poly(ExactScalar(c)) {}  // NOLINT(implicit)
  static Poly var(Var v, int power = 1);
  static Poly monomial(const Mono& m, const ExactScalar& c);

  bool is_zero() const { return t_.empty(); }
  const std::map<Mono, ExactScalar>& terms() const { return t_; }
  int degree(Var v) const;      // max; -1 for zero
  int min_degree(Var v) const;  // min; large for zero

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  Poly diff(Var v) const;
  // drop monomials whose degree in v exceeds cap
  Poly truncated(Var v, int cap) const;
  // v -> q, truncating intermediate results to degree cap in `trunc_var`
  Poly substitute(Var v, const Poly& q, Var trunc_var, int cap) const;
  // split into parameter part and the remaining (zi, gp, fp) part
  std::map<Mono, Poly> by_parameters() const;

  std::string str() const;

 private:
  void add_term(const Mono& m, const ExactScalar& c);
  std::map<Mono, ExactScalar> t_;
};

std::string mono_str(const Mono& m);

}  // namespace resurgentia::alien
