#include "doctest.h"

#include "resurgentia/exact/series.hpp"
#include "resurgentia/hae/family.hpp"

using namespace resurgentia;
using namespace resurgentia::hae;

namespace {
ExactScalar q(long p, long d = 1) { return ExactScalar::rational(p, d); }
}  // namespace

TEST_CASE("Gamma-ratio coefficients") {
  const auto c = gen_c_coeffs(4);
  CHECK(c[0] == q(1));
  CHECK(c[1] == q(5, 72));
  CHECK(c[2] == q(385, 10368));
  // hand recurrence c_{n+1} = c_n (n+1/6)(n+5/6)/(2(n+1))
  CHECK(c[3] == c[2] * q(13, 6) * q(17, 6) / q(6));
}

TEST_CASE("ODE route agrees with the closed form") {
  const auto ode = airy_ode_coeffs(12, 2, q(5, 36));
  const auto closed = gen_c_coeffs(12);
  for (int k = 0; k <= 12; ++k) CHECK(ode[k] == closed[k]);
  CHECK(ode[2] == q(385, 10368));
}

TEST_CASE("psi and phi") {
  const auto [psi, phi] = gen_psi_phi(16);
  CHECK(psi.series[0] == q(1));
  CHECK(phi.series[1] == q(-5, 72));
  for (int k = 0; k <= 16; ++k) CHECK(phi.series[k] == (k % 2 ? -psi.series[k] : psi.series[k]));
}

TEST_CASE("free energy and g") {
  const auto fam = gen_g_f(8);
  REQUIRE(fam.free_energy.a_g.size() >= 3);
  CHECK(fam.free_energy.a_g[0] == q(5, 24));
  CHECK(fam.free_energy.a_g[1] == q(5, 16));
  CHECK(fam.free_energy.a_g[2] == q(1105, 1152));
  CHECK(fam.g.series[1] == q(5, 72));
  CHECK(fam.f.series[1] == q(-5, 72));
}

TEST_CASE("G_n") {
  const auto G = gen_Gn(10, 3);
  REQUIRE(G.size() == 3);
  CHECK(G[0].series[0] == q(1));
  CHECK(G[0].series[1] == q(-5, 36));
  const auto sq = G[0].series * G[0].series;
  CHECK(G[1].series == sq.scaled(q(-1, 2)));
  CHECK(G[1].series[0] == q(-1, 2));
}

TEST_CASE("ODE residuals") {
  const int N = 24;
  const auto [psi, phi] = gen_psi_phi(N);
  CHECK(zero_through(ode_residual(psi.series, Ode::airy_linear)) >= N - 2);
  CHECK(zero_through(ode_residual(phi.series, Ode::airy_linear)) < N - 2);  // phi solves the reflected equation
  const auto g = gen_g_f(N).g.series;
  CHECK(zero_through(ode_residual(g, Ode::hae_nonlinear)) >= N - 2);
  const auto perturbed = g + PowerSeries::monomial(N, 1, 1);
  CHECK(zero_through(ode_residual(perturbed, Ode::hae_nonlinear)) < N - 2);
  // the residual of g + z^-1 is nonzero at the first order the perturbation reaches
  CHECK_FALSE(ode_residual(perturbed, Ode::hae_nonlinear)[2].is_zero());
}

TEST_CASE("rationality") {
  const auto fam = gen_g_f(20);
  for (const auto& c : fam.g.series.coeffs()) CHECK(c.is_real());
  for (const auto& G : gen_Gn(20, 4))
    for (const auto& c : G.series.coeffs()) CHECK(c.is_real());
}
