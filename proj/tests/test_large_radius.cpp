#include "doctest.h"

#include <cmath>
#include <complex>

#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"
#include "resurgentia/lr/large_radius.hpp"

using namespace resurgentia;
using namespace resurgentia::lr;
using C = std::complex<double>;

namespace {

ExactScalar q(long p, long d = 1) { return ExactScalar::rational(p, d); }
ULaurent mono(const ExactScalar& c, int k, int l = 0) { return ULaurent::monomial(c, k, l); }

int zero_through(const USeries& s) {
  int z = -1;
  for (int k = 0; k <= s.order() && s[k].is_zero(); ++k) z = k;
  return z;
}

}  // namespace

TEST_CASE("change of variable") {
  const auto phi = gen_phi_u(6);
  CHECK(phi.grading == Grading::z2);
  CHECK(phi.series[0] == mono(-1, -1));
  CHECK(phi.series[1] == mono(q(1, 6), -2));
  CHECK(phi.series[2] == mono(q(1, 54), -3));
  // binomial oracle: C(3/2, n) (-2/(3u))^n
  for (int n = 1; n <= 7; ++n) {
    const mpq_class c = binom(mpq_class(3, 2), n) * ExactScalar::rational(-2, 3).pow(n).re();
    CHECK(phi.series[n - 1] == mono(ExactScalar(c), -n));
  }
  CHECK(binom(mpq_class(3, 2), 2) == mpq_class(3, 8));
}

TEST_CASE("elementary term") {
  const auto R = gen_R(4);
  CHECK(R.series[0] == mono(-1, -1) + mono(q(1, 2), 0, 1));
  CHECK(R.log_u_coefficient() == q(1, 2));
  CHECK(R.series[1] == mono(q(1, 2), 2) + mono(q(1, 2), 1));
  CHECK(R.series[2] == mono(q(1, 2), 4) + mono(q(1, 6), 3));
  CHECK(gen_H0(4).log_u_coefficient() == q(1, 2));
  CHECK(gen_phi_u(4).log_u_coefficient() == q(0));
}

TEST_CASE("lambda_s^2 substitution") {
  const auto l = gen_lambda_sq(4);
  CHECK(l.series[1] == mono(1, 3));
  CHECK(l.series[2] == mono(3, 5));
  CHECK(l.series[3] == mono(q(15, 2), 7));  // 5!/(4 * 2!^2)
}

TEST_CASE("perturbative series H0") {
  const int N = 10;
  const auto a = gen_H0_route(N, H0Route::substitution);
  const auto b = gen_H0_route(N, H0Route::composition);
  CHECK(a.series == b.series);
  const auto H = gen_H0(N);
  CHECK(H.series[1] == mono(q(5, 24), 3) + mono(q(1, 2), 2) + mono(q(1, 2), 1));
  for (int g = 2; g <= N; ++g) {
    CAPTURE(g);
    CHECK(H.series[g].coeff(0).is_zero());
    CHECK(H.series[g].min_upow() >= 1);
    CHECK_FALSE(H.series[g].has_log());
  }
  // z_2 grading round trip
  CHECK(z2_to_gs2(gs2_to_z2(H.series)) == H.series);
}

TEST_CASE("u-equation") {
  const int N = 12;
  auto H = gen_H0(N);
  CHECK(zero_through(u_equation_residual(H).series) >= N - 1);
  auto shifted = H;
  shifted.series[0] += ULaurent(7);
  shifted.series[3] += ULaurent(q(-2, 5));
  CHECK(zero_through(u_equation_residual(shifted).series) >= N - 1);
  auto perturbed = H;
  perturbed.series[1] += mono(1, 1);
  CHECK(zero_through(u_equation_residual(perturbed).series) < N - 1);
}

TEST_CASE("transseries components") {
  const auto h1 = gen_Hn(1, 4);
  REQUIRE(h1.pols.size() == 4);
  CHECK(h1.pols[0] == mono(q(5, 12), 2) + ULaurent(1));
  CHECK(h1.pols[1] == mono(q(-25, 288), 4) + mono(q(5, 4), 3) + mono(q(-5, 12), 2) + mono(q(1, 3), 1) +
                          ULaurent(q(-1, 2)));
  CHECK_FALSE(h1.genus1_convention.empty());
  for (int n = 1; n <= 3; ++n) {
    const auto h = gen_Hn(n, 4);
    CHECK(h.series.exp_n == n);
    CHECK(h.series.series[0] == ULaurent(q(-1, n)));
    for (int g = 1; g <= 4; ++g) {
      const auto& p = h.pols[g - 1];
      CHECK(p.max_upow() == 2 * g);
      CHECK(p.min_upow() >= 0);
      for (const auto& [key, c] : p.terms()) CHECK(c.is_real());
    }
  }
  CHECK(gen_Hn_route(2, 3, HnRoute::c_pm).series.series == gen_Hn_route(2, 3, HnRoute::composition).series.series);
}

TEST_CASE("large-radius bridge and Stokes") {
  const alien::Caps caps44{4, 4};
  const auto r = lr_bridge_check(caps44, 8);
  CHECK(lr_is_zero(r.r1));
  CHECK(lr_is_zero(r.r2));
  CHECK(lr_is_zero(lr_stokes_check(alien::Direction::right, {5, 5}, 8)));
  CHECK(lr_is_zero(lr_stokes_check(alien::Direction::left, {5, 5}, 8)));
  // sigma_2 = 0 slice
  const auto seed = alien::gen_var(alien::Var::s1, caps44) + alien::gen_g(caps44);
  CHECK(alien::delta(seed, -2, alien::Frame::lr).is_zero());
  // H^u is the double-scaling formal integral with s2 -> -s2
  const auto ds = alien::formal_integral(caps44);
  CHECK(lr_formal_integral(caps44) == alien::substitute(ds, alien::Var::s2, -alien::Poly::var(alien::Var::s2)));
  // without the chain-rule factor the expansion differs
  const auto H = lr_formal_integral(caps44);
  CHECK_FALSE(lr_expand(alien::delta(H, 2, alien::Frame::ds), 6) ==
              lr_expand(alien::delta(H, 2, alien::Frame::lr), 6));
}

TEST_CASE("numeric large-radius sums") {
  borel::Settings<double> s;
  s.tol = 1e-12;
  const borel::SheetPoint<double> gs{0.4, 0};
  const C u = 1;
  const auto p = lr_point<double>(gs, u);
  CHECK(std::abs(p.t - 0.16) < 1e-15);
  CHECK(std::abs(p.z1.value() - std::pow(1 - 0.32, 1.5) / (3 * 0.16)) < 1e-13);
  const auto v = lr_sum<double>(-1, gs, u, 0.3, 0.0, s);
  const auto G = borel::G_pm<double>(-1, p.z1, 0.3, 0.0, s);
  CHECK(std::abs(v.value - (G.value + p.R)) < 1e-12);

  CHECK(lr_connection_check<double>(borel::Side::right, gs, u, 0.0, 1.0, s).residual <= 1e-5);
  CHECK(lr_connection_check<double>(borel::Side::right, gs, u, 0.0, 0.0, s).residual <= 1e-5);
  CHECK(lr_connection_check<double>(borel::Side::left, {0.6, M_PI / 2}, u, 0.0, C(0, 0.005), s).residual <= 1e-4);
  for (double a : {0.0, 1.0})
    for (double b : {0.0, 0.3}) {
      CHECK(lr_median_check<double>(-1, 0.3, 1.0, a, b, s).imag_residual <= 1e-8);
      CHECK(lr_median_check<double>(+1, 0.3, 1.0, a, b, s).imag_residual <= 1e-8);
    }
  try {
    lr_point<double>({1, 0}, u);
    FAIL("|t| >= 1/2 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain_violation);
  }
}

TEST_CASE("numeric sums approach the exact expansion") {
  borel::Settings<double> s;
  s.tol = 1e-13;
  const C u(1.3, 0);
  const double small[] = {0.05, 0.02};
  double prev = 1;
  for (double g : small) {
    const auto v = lr_sum<double>(-1, {g, 0}, u, 0.0, 0.0, s);
    const double d = std::abs(v.value - (-1.0 / u + 0.5 * std::log(u)));
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 1e-3);

  // partial sums of H0 at g_s = 0.1
  const double g = 0.1;
  const auto H = gen_H0(8);
  std::complex<long double> partial = 0;
  for (int k = 0; k <= 8; ++k) partial += H.series[k].eval({1.3L, 0}) * std::pow((long double)g, 2 * k);
  const auto v = lr_sum<double>(-1, {g, 0}, u, 0.0, 0.0, s);
  CHECK(std::abs(v.value - C(partial)) < 1e-8);
}
