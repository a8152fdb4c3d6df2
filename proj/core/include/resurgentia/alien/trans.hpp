#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "resurgentia/alien/poly.hpp"

namespace resurgentia::alien {

// Linear generator slot.  At most one non-unit slot per monomial.
enum class Lin : int { one = 0, g = 1, f = 2, z = 3 };

// Basis monomial  L * E^m * e^{-2nz} * Phi^p  with E = e^{f~-g~}.  p counts
// factors Phi = e^{-2 phi_u} produced by the alien chain rule; it is 0 for
// every double-scaling element.
struct Basis {
  Lin lin = Lin::one;
  int m = 0;
  int n = 0;
  int p = 0;
  friend bool operator<(const Basis& a, const Basis& b) {
    return std::tie(a.lin, a.m, a.n, a.p) < std::tie(b.lin, b.m, b.n, b.p);
  }
  friend bool operator==(const Basis& a, const Basis& b) {
    return std::tie(a.lin, a.m, a.n, a.p) == std::tie(b.lin, b.m, b.n, b.p);
  }
};

struct Caps {
  int k_sigma = 6;  // max degree in s2 (and d2)
  int k_e = 6;      // max |n|
};

class TransElement {
 public:
  TransElement() = default;
  explicit TransElement(Caps caps) : caps_(caps) {}
  static TransElement scalar(const Poly& c, Caps caps);
  static TransElement monomial(const Basis& b, const Poly& c, Caps caps);

  const Caps& caps() const { return caps_; }
  void set_caps(Caps c);
  bool is_zero() const { return t_.empty(); }
  const std::map<Basis, Poly>& terms() const { return t_; }
  Poly coeff(const Basis& b) const;

  TransElement& operator+=(const TransElement& o);
  TransElement& operator-=(const TransElement& o);
  friend TransElement operator+(TransElement a, const TransElement& b) { return a += b; }
  friend TransElement operator-(TransElement a, const TransElement& b) { return a -= b; }
  friend TransElement operator*(const TransElement& a, const TransElement& b);
  friend TransElement operator*(const TransElement& a, const Poly& c);
  friend bool operator==(const TransElement& a, const TransElement& b) { return a.t_ == b.t_; }

  // multiply by e^{-2kz} (and Phi^{dp})
  TransElement shifted(int dn, int dp = 0) const;
  TransElement map_poly(const std::function<Poly(const Poly&)>& f) const;
  int min_degree(Var v) const;
  int max_n() const;
  int min_n() const;

  // {"terms":[{"g":0|1,"m":..,"n":..,"poly":"..."}]}; "lin" and "p" only when used
  std::string to_json() const;

  void add(const Basis& b, const Poly& c);

 private:
  void truncate();
  Caps caps_{};
  std::map<Basis, Poly> t_;
};

}  // namespace resurgentia::alien
