#include "resurgentia/exact/laurent.hpp"

#include "resurgentia/error.hpp"

namespace resurgentia {

ULaurent ULaurent::monomial(const ExactScalar& c, int upow, int logpow) {
  ULaurent r;
  if (!c.is_zero()) r.t_[{upow, logpow}] = c;
  return r;
}

ExactScalar ULaurent::coeff(int upow, int logpow) const {
  auto it = t_.find({upow, logpow});
  return it == t_.end() ? ExactScalar() : it->second;
}

int ULaurent::min_upow() const {
  int m = t_.begin()->first.first;
  for (const auto& [k, c] : t_) m = std::min(m, k.first);
  return m;
}

int ULaurent::max_upow() const {
  int m = t_.begin()->first.first;
  for (const auto& [k, c] : t_) m = std::max(m, k.first);
  return m;
}

bool ULaurent::has_log() const {
  for (const auto& [k, c] : t_)
    if (k.second != 0) return true;
  return false;
}

void ULaurent::add_term(const Key& k, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

ULaurent& ULaurent::operator+=(const ULaurent& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
  ULaurent r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

ULaurent operator*(const ULaurent& a, const ExactScalar& s) {
  ULaurent r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.t_) r.t_.emplace(k, c * s);
  return r;
}

ULaurent ULaurent::inverse() const {
  if (t_.size() != 1 || t_.begin()->first.second != 0)
    throw Error(ErrorKind::not_a_unit, "not a unit: only log-free u-monomials are invertible");
  const auto& [k, c] = *t_.begin();
  return monomial(c.inverse(), -k.first);
}

ULaurent ULaurent::diff_u() const {
  ULaurent r;
  for (const auto& [k, c] : t_) {
    auto [p, j] = k;
    if (p != 0) r.add_term({p - 1, j}, c * ExactScalar(p));
    if (j != 0) r.add_term({p - 1, j - 1}, c * ExactScalar(j));
  }
  return r;
}

ULaurent ULaurent::times_upow(int k) const {
  ULaurent r;
  for (const auto& [key, c] : t_) r.t_.emplace(Key{key.first + k, key.second}, c);
  return r;
}

ULaurent ULaurent::conj() const {
  ULaurent r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, c.conj());
  return r;
}

std::complex<long double> ULaurent::eval(std::complex<long double> u) const {
  const std::complex<long double> lu = std::log(u);
  std::complex<long double> acc = 0;
  for (const auto& [k, c] : t_) acc += c.to_complex_ld() * std::pow(u, k.first) * std::pow(lu, k.second);
  return acc;
}

std::string ULaurent::str() const {
  if (t_.empty()) return "0";
  std::string out;
  // descending powers of u, log terms after their u-power
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = c.str();
    bool neg = !c.is_gaussian() || c.is_real() ? sgn(c.re()) < 0 : false;
    if (c.is_real() && neg) cs = (-c).str();
    if (!c.is_real()) cs = "(" + cs + ")";
    std::string mono;
    if (k.first == 1) mono = "u";
    else if (k.first != 0) mono = "u^" + std::to_string(k.first);
    if (k.second == 1) mono += std::string(mono.empty() ? "" : "*") + "log(u)";
    else if (k.second > 1) mono += std::string(mono.empty() ? "" : "*") + "log(u)^" + std::to_string(k.second);
    std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace resurgentia
