#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace resurgentia {

// Exact element of Q or Q(i).  The ring tag is sticky: once an operand is
// Gaussian the result is Gaussian, even if its imaginary part cancels.
// Comparison is by value.
class ExactScalar {
 public:
  enum class Ring { rational, gaussian };

  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}  // NOLINT(implicit)
  ExactScalar(int v) : re_(v) {}   // NOLINT(implicit)
  explicit ExactScalar(const mpq_class& re);
  ExactScalar(const mpq_class& re, const mpq_class& im);

  static ExactScalar rational(long p, long q = 1);
  static ExactScalar gaussian(const mpq_class& re, const mpq_class& im);
  static ExactScalar i();

  Ring ring() const noexcept { return gauss_ ? Ring::gaussian : Ring::rational; }
  bool is_gaussian() const noexcept { return gauss_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  ExactScalar conj() const;
  ExactScalar inverse() const;  // throws on zero
  ExactScalar pow(long e) const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  // "p/q" (integers print without "/1"); Gaussian values with nonzero
  // imaginary part print as "p/q+r/s*i".
  std::string str() const;
  static ExactScalar parse(std::string_view s);

  std::complex<double> to_complex() const;
  std::complex<long double> to_complex_ld() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
  bool gauss_ = false;
};

std::string to_string(const mpq_class& q);
long double to_long_double(const mpq_class& q);

}  // namespace resurgentia
