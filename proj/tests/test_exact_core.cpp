#include "doctest.h"

#include "resurgentia/error.hpp"
#include "resurgentia/exact/laurent.hpp"
#include "resurgentia/exact/scalar.hpp"
#include "resurgentia/exact/series.hpp"
#include "resurgentia/hae/family.hpp"

using namespace resurgentia;

namespace {

ExactScalar q(long p, long d = 1) { return ExactScalar::rational(p, d); }

PowerSeries poly(int order, std::vector<ExactScalar> c) { return PowerSeries(order, std::move(c)); }

}  // namespace

TEST_CASE("scalar arithmetic and printing") {
  CHECK((q(1, 2) + q(1, 3)) == q(5, 6));
  CHECK((q(2, 3) * q(3, 4)) == q(1, 2));
  CHECK(q(4, 2).str() == "2");
  CHECK(q(-5, 72).str() == "-5/72");
  const ExactScalar i = ExactScalar::i();
  CHECK((i * i) == q(-1));
  CHECK((i * i).is_gaussian());  // sticky tag
  CHECK(ExactScalar(mpq_class(1, 2), mpq_class(-3)).str() == "1/2-3*i");
  CHECK(ExactScalar::parse("1/2-3*i") == ExactScalar(mpq_class(1, 2), mpq_class(-3)));
  CHECK(ExactScalar::parse("-7/3") == q(-7, 3));
  CHECK((q(3) / ExactScalar(mpq_class(0), mpq_class(1))) == ExactScalar(mpq_class(0), mpq_class(-3)));
  CHECK_THROWS(ExactScalar(0).inverse());
}

TEST_CASE("difference of squares") {
  const auto a = poly(4, {1, 1});
  const auto b = poly(4, {1, -1});
  CHECK((a * b) == poly(4, {1, 0, -1}));
}

TEST_CASE("inverse of a unit is the geometric series") {
  const auto inv = ps_inv(poly(8, {1, 1}));
  for (int k = 0; k <= 8; ++k) CHECK(inv[k] == q(k % 2 ? -1 : 1));
  try {
    ps_inv(poly(4, {0, 1}));
    FAIL("expected not_a_unit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_unit);
    CHECK(std::string(e.what()) == "not a unit");
  }
}

TEST_CASE("psi times its reflection at order 2") {
  // c1 = 5/72, c2 = 385/10368 by hand; (sum c_n z^-n)(sum (-1)^n c_n z^-n)
  const auto psi = poly(2, {1, q(5, 72), q(385, 10368)});
  const auto prod = psi * ps_reflect(psi);
  CHECK(prod[1] == q(0));
  CHECK(prod[2] == q(2) * q(385, 10368) - q(5, 72) * q(5, 72));
}

TEST_CASE("log and exp") {
  const auto a = poly(10, {1, 1});
  CHECK(ps_exp(ps_log(a)) == a);
  // log(1 + z^-1) = sum (-1)^{k-1}/k z^-k
  const auto l = ps_log(a);
  for (int k = 1; k <= 10; ++k) CHECK(l[k] == q(k % 2 ? 1 : -1, k));
  CHECK_THROWS_AS(ps_log(poly(4, {2, 1})), Error);
  CHECK_THROWS_AS(ps_exp(poly(4, {1, 1})), Error);
  try {
    ps_exp(poly(4, {1}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wrong_constant_term);
  }
}

TEST_CASE("log of psi") {
  const auto c = hae::gen_c_coeffs(6);
  const auto g = ps_log(PowerSeries(6, c));
  CHECK(g[1] == q(5, 72));
  CHECK(g[1] == q(5, 24) / q(3));
  CHECK(g[2] == q(5, 144));
  CHECK(g[2] == q(5, 16) / q(9));
}

TEST_CASE("derivative") {
  CHECK(ps_diff(PowerSeries::constant(6, 1)).is_zero());
  const auto d = ps_diff(PowerSeries::monomial(6, 1, 1));
  CHECK(d == PowerSeries::monomial(6, 2, -1));
  CHECK(d.order() == 6);
  const auto g = ps_log(PowerSeries(8, hae::gen_c_coeffs(8)));
  CHECK(ps_diff(g)[3] == q(-5, 72));
}

TEST_CASE("composition") {
  const auto psi = PowerSeries(10, hae::gen_c_coeffs(10));
  CHECK(ps_compose(psi, PowerSeries(10)) == psi);
  // 1/(z + c) = z^-1 - c z^-2 + c^2 z^-3 - ...
  const ExactScalar c = q(2, 3);
  const auto r = ps_compose(PowerSeries::monomial(8, 1, 1), PowerSeries::constant(8, c));
  CHECK(r[0] == q(0));
  for (int k = 1; k <= 8; ++k) CHECK(r[k] == (k % 2 ? q(1) : q(-1)) * c.pow(k - 1));
}

TEST_CASE("series over Laurent polynomials in u") {
  const auto u = ULaurent::monomial(1, 1);
  const auto uinv = ULaurent::monomial(1, -1);
  CHECK((u * uinv) == ULaurent(1));
  CHECK(u.inverse() == uinv);
  const auto l = ULaurent::monomial(q(1, 2), 0, 1) - uinv;
  CHECK(l.str() == "1/2*log(u) - u^-1");
  CHECK(l.has_log());
  CHECK(l.diff_u() == ULaurent::monomial(q(1, 2), -1) + ULaurent::monomial(1, -2));
  Series<ULaurent> s(4);
  s[0] = 1;
  s[1] = u;
  const auto e = ps_exp(ps_log(s));
  CHECK(e == s);
}
