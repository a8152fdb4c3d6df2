#include "resurgentia/alien/poly.hpp"

#include <algorithm>
#include <climits>

namespace resurgentia::alien {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"s1", "s2", "d1", "d2", "s", "t", "zi", "gp", "fp"};
  return names[static_cast<int>(v)];
}

Poly::Poly(const ExactScalar& c) {
  if (!c.is_zero()) t_[Mono{}] = c;
}

Poly Poly::var(Var v, int power) {
  Mono m{};
  m[static_cast<int>(v)] = static_cast<short>(power);
  return monomial(m, ExactScalar(1));
}

Poly Poly::monomial(const Mono& m, const ExactScalar& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

int Poly::degree(Var v) const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m[static_cast<int>(v)]));
  return d;
}

int Poly::min_degree(Var v) const {
  int d = INT_MAX;
  for (const auto& [m, c] : t_) d = std::min(d, static_cast<int>(m[static_cast<int>(v)]));
  return d;
}

void Poly::add_term(const Mono& m, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Mono m;
      for (int k = 0; k < kNumVars; ++k) m[k] = static_cast<short>(ma[k] + mb[k]);
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::diff(Var v) const {
  const int k = static_cast<int>(v);
  Poly r;
  for (const auto& [m, c] : t_) {
    if (m[k] == 0) continue;
    Mono d = m;
    --d[k];
    r.add_term(d, c * ExactScalar(m[k]));
  }
  return r;
}

Poly Poly::truncated(Var v, int cap) const {
  const int k = static_cast<int>(v);
  Poly r;
  for (const auto& [m, c] : t_)
    if (m[k] <= cap) r.t_.emplace(m, c);
  return r;
}

Poly Poly::substitute(Var v, const Poly& q, Var trunc_var, int cap) const {
  const int k = static_cast<int>(v);
  std::map<int, Poly> powers;
  powers[0] = Poly(1);
  Poly r;
  for (const auto& [m, c] : t_) {
    const int e = m[k];
    for (int j = static_cast<int>(powers.size()); j <= e; ++j)
      powers[j] = (powers[j - 1] * q).truncated(trunc_var, cap);
    Mono rest = m;
    rest[k] = 0;
    r += (monomial(rest, c) * powers[e]).truncated(trunc_var, cap);
  }
  return r;
}

std::map<Mono, Poly> Poly::by_parameters() const {
  std::map<Mono, Poly> out;
  for (const auto& [m, c] : t_) {
    Mono par{}, rest{};
    for (int k = 0; k < kNumVars; ++k) (is_parameter(static_cast<Var>(k)) ? par : rest)[k] = m[k];
    out[par] += monomial(rest, c);
  }
  return out;
}

std::string mono_str(const Mono& m) {
  std::string s;
  for (int k = 0; k < kNumVars; ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(static_cast<Var>(k));
    if (m[k] != 1) s += "^" + std::to_string(m[k]);
  }
  return s;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : t_) {
    std::string ms = mono_str(m);
    std::string cs;
    bool neg = false;
    if (c.is_real()) {
      neg = sgn(c.re()) < 0;
      cs = (neg ? -c : c).str();
    } else {
      cs = "(" + c.str() + ")";
    }
    std::string term = ms.empty() ? cs : (cs == "1" ? ms : cs + "*" + ms);
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace resurgentia::alien
