// Property checks on fuzzed inputs; every generator is seeded.
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "resurgentia/alien/engine.hpp"
#include "resurgentia/borel/numeric.hpp"
#include "resurgentia/borel/quadrature.hpp"
#include "resurgentia/hae/family.hpp"

using namespace resurgentia;

namespace {

constexpr std::uint64_t kSeed = 20240611;

ExactScalar small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return ExactScalar::rational(num(rng), den(rng));
}

PowerSeries random_series(std::mt19937_64& rng, int N, bool unit) {
  PowerSeries s(N);
  for (int k = 0; k <= N; ++k) s[k] = small_rational(rng);
  s[0] = unit ? ExactScalar(1) : ExactScalar(0);
  return s;
}

using alien::Basis;
using alien::Lin;
using alien::Poly;
using alien::TransElement;
using alien::Var;

Poly random_poly(std::mt19937_64& rng, bool closure_vars) {
  std::uniform_int_distribution<int> deg(0, 2), terms(1, 3), coin(0, 1);
  Poly p;
  for (int t = terms(rng); t > 0; --t) {
    Poly m(small_rational(rng) * (coin(rng) ? ExactScalar(1) : ExactScalar::i()));
    m = m * Poly::var(Var::s1, deg(rng)) * Poly::var(Var::s2, deg(rng));
    if (closure_vars) m = m * Poly::var(Var::zi, deg(rng)) * Poly::var(coin(rng) ? Var::gp : Var::fp, deg(rng) / 2);
    p += m;
  }
  return p;
}

// linear: whether g~ / f~ / z slots may appear
TransElement random_element(std::mt19937_64& rng, alien::Caps caps, bool linear, bool closure_vars = true) {
  std::uniform_int_distribution<int> m(-2, 2), n(0, 2), lin(0, 3), terms(1, 4);
  TransElement x(caps);
  for (int t = terms(rng); t > 0; --t) {
    Basis b;
    b.lin = linear ? static_cast<Lin>(lin(rng)) : Lin::one;
    b.m = m(rng);
    b.n = n(rng);
    x.add(b, random_poly(rng, closure_vars));
  }
  return x;
}

}  // namespace

TEST_CASE("series: log and exp are inverse") {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 1 + trial % 16;
    const auto a = random_series(rng, N, true);
    CHECK(ps_exp(ps_log(a)) == a);
    const auto b = random_series(rng, N, false);
    CHECK(ps_log(ps_exp(b)) == b);
  }
}

TEST_CASE("series: ring laws") {
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < 20; ++trial) {
    const int N = 2 + trial % 12;
    const auto a = random_series(rng, N, trial % 2), b = random_series(rng, N, false), c = random_series(rng, N, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(ps_compose(a, PowerSeries(N)) == a);
    CHECK(ps_diff(a * b) == ps_diff(a) * b + a * ps_diff(b));
    CHECK(ps_inv(c) * c == PowerSeries::constant(N, 1));
  }
}

TEST_CASE("hae: shifted g solves the nonlinear ODE") {
  std::mt19937_64 rng(kSeed + 2);
  const int N = 20;
  const auto g = hae::gen_g_f(N).g.series;
  for (int trial = 0; trial < 5; ++trial) {
    auto s = g;
    s[0] += small_rational(rng);
    CHECK(hae::zero_through(hae::ode_residual(s, hae::Ode::hae_nonlinear)) >= N - 2);
  }
}

TEST_CASE("hae: large-order ratio") {
  const auto b = hae::gen_g_f(81).g.series;
  for (int n = 60; n <= 80; ++n) {
    const double r = (b[n + 1] / (b[n] * ExactScalar(n))).to_complex().real();
    CAPTURE(n);
    CHECK(std::abs(r - 0.5) <= 0.05);
  }
}

TEST_CASE("hae: G_n are powers of G_1") {
  const int N = 16, nmax = 5;
  const auto G = hae::gen_Gn(N, nmax);
  for (int n = 1; n <= nmax; ++n) {
    const ExactScalar f = ExactScalar(n) * ExactScalar(n % 2 ? 1 : -1);
    CHECK(G[n - 1].series.scaled(f) == ps_pow(G[0].series, n));
  }
}

TEST_CASE("alien: Leibniz rule") {
  std::mt19937_64 rng(kSeed + 3);
  const alien::Caps caps{4, 4};
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_element(rng, caps, true);
    const auto y = random_element(rng, caps, false);
    for (int w : {2, -2}) {
      CAPTURE(w);
      CHECK(alien::delta(x * y, w) == alien::delta(x, w) * y + x * alien::delta(y, w));
    }
  }
}

TEST_CASE("alien: d/dz commutes with the homogeneous operators") {
  std::mt19937_64 rng(kSeed + 4);
  const alien::Caps caps{4, 4};
  for (int trial = 0; trial < 25; ++trial) {
    const auto x = random_element(rng, caps, true);
    for (bool ge0 : {true, false}) {
      CAPTURE(ge0);
      CHECK(alien::d_dz(alien::dot(x, ge0)) == alien::dot(alien::d_dz(x), ge0));
    }
    // [d/dz, Delta_w] = w Delta_w
    CHECK(alien::d_dz(alien::delta(x, 2)) - alien::delta(alien::d_dz(x), 2) == alien::delta(x, 2) * Poly(2));
  }
}

TEST_CASE("alien: Delta+ relations") {
  std::mt19937_64 rng(kSeed + 5);
  const alien::Caps caps{4, 4};
  for (int trial = 0; trial < 15; ++trial) {
    const auto x = random_element(rng, caps, true);
    CHECK(alien::delta_plus(x, 2) == alien::delta(x, 2));
    CHECK(alien::delta_plus(x, 4) ==
          alien::delta(x, 4) + alien::delta(alien::delta(x, 2), 2) * Poly(ExactScalar::rational(1, 2)));
  }
}

TEST_CASE("alien: Stokes automorphism is a one-parameter group") {
  const alien::Caps caps{5, 5};
  const auto G = alien::formal_integral(caps);
  const Poly s = Poly::var(Var::s), t = Poly::var(Var::t);
  CHECK(alien::stokes(alien::stokes(G, true, s), true, t) == alien::stokes(G, true, s + t));
  CHECK(alien::stokes(alien::stokes(G, true, s), true, -s) == G);
}

TEST_CASE("alien: left flow") {
  const int K = 5;
  const alien::Caps caps{K, K};
  const ExactScalar I = ExactScalar::i();
  const Poly s1 = Poly::var(Var::s1), s2 = Poly::var(Var::s2), t = Poly::var(Var::t);
  // x2 = s2/(1 - i t s2), x1 = s1 + log(1 - i t s2)
  Poly x1 = s1, x2, p = s2;
  const Poly step = Poly(I) * t * s2;
  for (int k = 1; k <= K + 1; ++k) {
    x2 += p;
    x1 -= Poly(ExactScalar::rational(1, k)) * (p * Poly(I) * t).truncated(Var::s2, K);
    p = (p * step).truncated(Var::s2, K);
  }
  x2 = x2.truncated(Var::s2, K);
  x1 = x1.truncated(Var::s2, K);
  CHECK(x1.diff(Var::t) == (Poly(-I) * x2).truncated(Var::s2, K));
  CHECK(x2.diff(Var::t) == (Poly(I) * x2 * x2).truncated(Var::s2, K));

  const auto G = alien::formal_integral(caps);
  const auto lhs = alien::stokes(G, false, t);
  const auto rhs = alien::substitute(alien::substitute(G, Var::s2, x2), Var::s1, x1);
  CHECK(lhs == rhs);
}

namespace {

using C = std::complex<double>;
using borel::SheetPoint;

borel::Settings<double> settings(double tol = 1e-11) {
  borel::Settings<double> s;
  s.tol = tol;
  return s;
}

}  // namespace

TEST_CASE("borel: reflection symmetry") {
  std::mt19937_64 rng(kSeed + 6);
  std::uniform_real_distribution<double> mod(3, 6), arg(-0.4, 0.4), sig(-0.5, 0.5);
  for (int trial = 0; trial < 4; ++trial) {
    const SheetPoint<double> z{mod(rng), arg(rng)};
    const C s1(sig(rng), sig(rng)), s2(sig(rng), sig(rng));
    const auto minus = borel::G_pm<double>(-1, z, s1, s2, settings());
    const auto plus = borel::G_pm<double>(+1, {z.modulus, -z.arg}, std::conj(s1), std::conj(s2), settings());
    CHECK(std::abs(std::conj(minus.value) - plus.value) <= 1e-9);
  }
}

TEST_CASE("borel: direction independence") {
  std::mt19937_64 rng(kSeed + 7);
  std::uniform_real_distribution<double> th(-1.2, -0.2);
  const C z(4, -1);
  const auto f = [](C zeta) { return borel::eval_Bhat<double>(zeta, borel::BhatBranch::B, 1e-13).value; };
  for (int trial = 0; trial < 3; ++trial) {
    const double t1 = th(rng), t2 = th(rng);
    const auto a = borel::laplace_ray<double>(f, z, t1, 1e-11);
    const auto b = borel::laplace_ray<double>(f, z, t2, 1e-11);
    CHECK(std::abs(a.value - b.value) <= a.err + b.err + 1e-12);
  }
}

TEST_CASE("borel: summation respects products") {
  // S(psi phi) by Laplace of the exact Borel transform of the product, cut at
  // |zeta| = 3/2; the cut-off tail is below e^{-45} at |z| = 30.
  const int M = 140;
  const auto [psi, phi] = hae::gen_psi_phi(M + 1);
  const auto prod = psi.series * phi.series;
  std::vector<C> d(M);
  mpq_class fact(1);
  for (int n = 0; n < M; ++n) {
    if (n > 0) fact *= n;
    d[n] = (prod[n + 1] / ExactScalar(fact)).to_complex();
  }
  const double theta = -0.3;
  const SheetPoint<double> z{30, 0.1};
  const C zv = z.value(), dir = std::polar(1.0, theta);
  const auto integrand = [&](double r) {
    const C zeta = r * dir;
    C acc = 0;
    for (int n = M - 1; n >= 0; --n) acc = acc * zeta + d[n];
    return acc * std::exp(-zv * zeta) * dir;
  };
  const auto q = borel::adaptive_legendre<double>(integrand, 0.0, 1.5, 1e-14);
  const C lhs = prod[0].to_complex() + q.value;
  const auto sp = borel::sum_family<double>(borel::Family::psi, z, borel::Interval::Iplus, 0, settings());
  const auto sf = borel::sum_family<double>(borel::Family::phi, z, borel::Interval::Iplus, 0, settings());
  CHECK(std::abs(lhs - sp.value * sf.value) <= sp.err + sf.err + 1e-10);
}

TEST_CASE("borel: summation respects d/dz") {
  // S(g~') = S(psi~')/S(psi~) with psi~ = z L(Bhat) and psi~' = L(Bhat) - z L(zeta Bhat)
  const SheetPoint<double> z{6, -0.3};
  const double theta = -0.3;
  const auto bh = [](C zeta) { return borel::eval_Bhat<double>(zeta, borel::BhatBranch::B, 1e-13).value; };
  const auto L0 = borel::laplace_ray<double>(bh, z.value(), theta, 1e-12);
  const auto L1 = borel::laplace_ray<double>([&](C zeta) { return zeta * bh(zeta); }, z.value(), theta, 1e-12);
  const C zv = z.value();
  const C dg = (L0.value - zv * L1.value) / (zv * L0.value);

  const double h = 1e-3;
  const auto Sg = [&](C w) {
    return borel::sum_family<double>(borel::Family::g, SheetPoint<double>::principal(w), borel::Interval::Iplus, 0,
                                     settings(1e-13))
        .value;
  };
  const C fd = (-Sg(zv + 2 * h) + 8.0 * Sg(zv + h) - 8.0 * Sg(zv - h) + Sg(zv - 2 * h)) / (12 * h);
  CHECK(std::abs(fd - dg) <= 1e-8);
}

TEST_CASE("borel: sectorial solution solves the ODE") {
  using L = long double;
  using CL = std::complex<L>;
  borel::Settings<L> s;
  s.tol = 1e-16L;
  const CL z0(4, -2);
  const L h = 1e-3L;
  const auto G = [&](CL w) {
    return borel::G_pm<L>(+1, borel::SheetPoint<L>::principal(w), CL(1), CL(0, 1), s).value;
  };
  const CL gm2 = G(z0 - 2 * h), gm1 = G(z0 - h), g0 = G(z0), gp1 = G(z0 + h), gp2 = G(z0 + 2 * h);
  const CL d1 = (-gp2 + L(8) * gp1 - L(8) * gm1 + gm2) / (12 * h);
  const CL d2 = (-gp2 + L(16) * gp1 - L(30) * g0 + L(16) * gm1 - gm2) / (12 * h * h);
  const CL residual = d2 + d1 * d1 + L(2) * d1 + L(5) / L(36) / (z0 * z0);
  CHECK(std::abs(residual) <= 1e-6L);
}
