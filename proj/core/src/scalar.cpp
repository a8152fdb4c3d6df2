#include "resurgentia/exact/scalar.hpp"

#include <cctype>
#include <cmath>

#include "resurgentia/error.hpp"

namespace resurgentia {

ExactScalar::ExactScalar(const mpq_class& re) : re_(re) { re_.canonicalize(); }

ExactScalar::ExactScalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im), gauss_(true) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactScalar ExactScalar::rational(long p, long q) {
  if (q == 0) throw Error(ErrorKind::parse, "zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return ExactScalar(v);
}

ExactScalar ExactScalar::gaussian(const mpq_class& re, const mpq_class& im) { return {re, im}; }

ExactScalar ExactScalar::i() { return {mpq_class(0), mpq_class(1)}; }

ExactScalar ExactScalar::conj() const {
  ExactScalar r = *this;
  r.im_ = -r.im_;
  return r;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  gauss_ = gauss_ || o.gauss_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  gauss_ = gauss_ || o.gauss_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (!gauss_ && !o.gauss_) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  gauss_ = true;
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::not_a_unit, "division by zero");
  if (!gauss_) return ExactScalar(mpq_class(1) / re_);
  mpq_class n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

ExactScalar ExactScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExactScalar base = *this, acc = gauss_ ? ExactScalar(mpq_class(1), mpq_class(0)) : ExactScalar(1);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::string to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

long double to_long_double(const mpq_class& q) {
  if (sgn(q) == 0) return 0.0L;
  mpz_class n = abs(q.get_num());
  const mpz_class& d = q.get_den();
  long shift = 66 + static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  mpz_class scaled = shift >= 0 ? mpz_class((n << shift) / d) : mpz_class(n / (d << -shift));
  // scaled has 66 or 67 bits; keep the top 64 exactly, then rescale
  long drop = static_cast<long>(mpz_sizeinbase(scaled.get_mpz_t(), 2)) - 64;
  if (drop > 0) scaled >>= drop; else drop = 0;
  unsigned long hi = mpz_get_ui(mpz_class(scaled >> 32).get_mpz_t());
  unsigned long lo = mpz_get_ui(mpz_class(scaled & mpz_class(0xffffffffUL)).get_mpz_t());
  long double m = std::ldexp(static_cast<long double>(hi), 32) + static_cast<long double>(lo);
  long double v = std::ldexp(m, static_cast<int>(drop - shift));
  return sgn(q) < 0 ? -v : v;
}

std::string ExactScalar::str() const {
  if (sgn(im_) == 0) return to_string(re_);
  std::string s = to_string(re_);
  std::string is = to_string(im_);
  if (is[0] != '-') s += '+';
  return s + is + "*i";
}

namespace {

mpq_class parse_rational(std::string_view s) {
  std::string t(s);
  if (t.empty() || t == "+") return mpq_class(1);
  if (t == "-") return mpq_class(-1);
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw Error(ErrorKind::parse, "bad rational '" + std::string(s) + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::parse, "zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

ExactScalar ExactScalar::parse(std::string_view in) {
  std::string s;
  for (char ch : in)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::parse, "empty scalar");
  if (s.back() != 'i') return ExactScalar(parse_rational(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // split at the last sign that is not the leading one
  size_t cut = std::string::npos;
  for (size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {mpq_class(0), parse_rational(s)};
  return {parse_rational(s.substr(0, cut)), parse_rational(s.substr(cut))};
}

std::complex<double> ExactScalar::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::complex<long double> ExactScalar::to_complex_ld() const {
  return {to_long_double(re_), to_long_double(im_)};
}

}  // namespace resurgentia
