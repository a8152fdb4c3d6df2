#include "resurgentia/alien/trans.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>

#include "json.hpp"

#include "resurgentia/error.hpp"

namespace resurgentia::alien {

TransElement TransElement::scalar(const Poly& c, Caps caps) { return monomial(Basis{}, c, caps); }

TransElement TransElement::monomial(const Basis& b, const Poly& c, Caps caps) {
  TransElement x(caps);
  x.add(b, c);
  return x;
}

void TransElement::set_caps(Caps c) {
  caps_ = c;
  truncate();
}

Poly TransElement::coeff(const Basis& b) const {
  auto it = t_.find(b);
  return it == t_.end() ? Poly() : it->second;
}

void TransElement::add(const Basis& b, const Poly& c) {
  if (std::abs(b.n) > caps_.k_e) return;
  Poly cc = c.truncated(Var::s2, caps_.k_sigma).truncated(Var::d2, caps_.k_sigma);
  if (cc.is_zero()) return;
  auto [it, fresh] = t_.emplace(b, cc);
  if (fresh) return;
  it->second += cc;
  if (it->second.is_zero()) t_.erase(it);
}

void TransElement::truncate() {
  std::map<Basis, Poly> old;
  old.swap(t_);
  for (const auto& [b, c] : old) add(b, c);
}

TransElement& TransElement::operator+=(const TransElement& o) {
  for (const auto& [b, c] : o.t_) add(b, c);
  return *this;
}

TransElement& TransElement::operator-=(const TransElement& o) {
  for (const auto& [b, c] : o.t_) add(b, -c);
  return *this;
}

TransElement operator*(const TransElement& a, const TransElement& b) {
  Caps caps{std::min(a.caps_.k_sigma, b.caps_.k_sigma), std::min(a.caps_.k_e, b.caps_.k_e)};
  TransElement r(caps);
  for (const auto& [ba, ca] : a.t_)
    for (const auto& [bb, cb] : b.t_) {
      if (ba.lin != Lin::one && bb.lin != Lin::one)
        throw Error(ErrorKind::g_squared, "product of two linear generators (g~^2 is outside the algebra)");
      Basis bc{ba.lin != Lin::one ? ba.lin : bb.lin, ba.m + bb.m, ba.n + bb.n, ba.p + bb.p};
      if (std::abs(bc.n) > caps.k_e) continue;
      r.add(bc, ca * cb);
    }
  return r;
}

TransElement operator*(const TransElement& a, const Poly& c) {
  TransElement r(a.caps_);
  for (const auto& [b, p] : a.t_) r.add(b, p * c);
  return r;
}

TransElement TransElement::shifted(int dn, int dp) const {
  TransElement r(caps_);
  for (const auto& [b, c] : t_) r.add({b.lin, b.m, b.n + dn, b.p + dp}, c);
  return r;
}

TransElement TransElement::map_poly(const std::function<Poly(const Poly&)>& f) const {
  TransElement r(caps_);
  for (const auto& [b, c] : t_) r.add(b, f(c));
  return r;
}

int TransElement::min_degree(Var v) const {
  int d = INT_MAX;
  for (const auto& [b, c] : t_) d = std::min(d, c.min_degree(v));
  return d;
}

int TransElement::max_n() const {
  int n = INT_MIN;
  for (const auto& [b, c] : t_) n = std::max(n, b.n);
  return n;
}

int TransElement::min_n() const {
  int n = INT_MAX;
  for (const auto& [b, c] : t_) n = std::min(n, b.n);
  return n;
}

std::string TransElement::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [b, c] : t_) {
    nlohmann::ordered_json t;
    t["g"] = b.lin == Lin::g ? 1 : 0;
    if (b.lin == Lin::f) t["lin"] = "f";
    if (b.lin == Lin::z) t["lin"] = "z";
    t["m"] = b.m;
    t["n"] = b.n;
    if (b.p != 0) t["p"] = b.p;
    t["poly"] = c.str();
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out.dump();
}

}  // namespace resurgentia::alien
