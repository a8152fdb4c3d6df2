#include "doctest.h"

#include "resurgentia/alien/engine.hpp"
#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"

using namespace resurgentia;
using namespace resurgentia::alien;

namespace {

const ExactScalar I = ExactScalar::i();
const Caps caps44{4, 4};
const Caps caps55{5, 5};

ExactScalar q(long p, long d = 1) { return ExactScalar::rational(p, d); }
Poly pv(Var v, int k = 1) { return Poly::var(v, k); }
TransElement E(int m, int n, const Poly& c, Caps caps) { return TransElement::monomial({Lin::one, m, n, 0}, c, caps); }

}  // namespace

TEST_CASE("alien derivatives of the generators") {
  const Caps c{};
  CHECK(delta(gen_g(c), 2) == E(1, 0, Poly(-I), c));
  CHECK(delta(gen_g(c), -2).is_zero());
  CHECK(delta(gen_E(3, c), 2) == E(4, 0, Poly(I * q(3)), c));
  CHECK(delta(gen_E(3, c), -2) == E(2, 0, Poly(-I * q(3)), c));
  CHECK(delta(E(3, 1, Poly(1), c), 4).is_zero());
  CHECK(delta(gen_g(c), -6).is_zero());
  // sigma_1, sigma_2 are constants for every alien derivation
  CHECK(delta(gen_var(Var::s1, c), 2).is_zero());
}

TEST_CASE("Delta+ of g") {
  const Caps c{};
  for (int m = 1; m <= 3; ++m) {
    const ExactScalar coef = -(I.pow(m) / q(m));
    CHECK(delta_plus(gen_g(c), 2 * m) == E(m, 0, Poly(coef), c));
  }
  CHECK(delta_plus(gen_g(c), 2) == delta(gen_g(c), 2));
  CHECK(delta_plus(gen_g(c), 4) == delta(delta(gen_g(c), 2), 2) * Poly(q(1, 2)));
  CHECK(delta_plus(gen_g(c), -2).is_zero());
}

TEST_CASE("formal integral") {
  const auto G = formal_integral(caps55);
  CHECK(G.coeff({Lin::one, 1, 1, 0}) == pv(Var::s2));
  CHECK(G.coeff({Lin::one, 2, 2, 0}) == pv(Var::s2, 2) * Poly(q(-1, 2)));
  CHECK(G.coeff({Lin::one, 0, 0, 0}) == pv(Var::s1));
  CHECK(G.coeff({Lin::g, 0, 0, 0}) == Poly(1));
  CHECK(formal_integral_direct(caps55) == formal_integral_exp(caps55));
  CHECK(G.max_n() == 5);
}

TEST_CASE("bridge equation") {
  const auto r = bridge_check(caps44);
  CHECK(r.r1.is_zero());
  CHECK(r.r2.is_zero());
  CHECK(bridge_check(caps55).zero());
  // sigma_1 + g alone: Delta_{-2} vanishes
  CHECK(delta(gen_var(Var::s1, caps44) + gen_g(caps44), -2).is_zero());
}

TEST_CASE("Stokes automorphisms") {
  CHECK(stokes_action_check(Direction::right, caps55).is_zero());
  CHECK(stokes_action_check(Direction::left, caps55).is_zero());
  CHECK(stokes_action_check(Direction::right, Caps{3, 6}).is_zero());
}

TEST_CASE("Delta+ on G_k") {
  const Caps c{};
  CHECK(delta_plus(gen_Gk(1, c), -4).is_zero());
  CHECK(delta_plus(gen_Gk(2, c), -2) == gen_Gk(1, c) * Poly(I));
  CHECK(delta_plus(gen_Gk(1, c), -2) == TransElement::scalar(Poly(-I), c));
  for (const auto& e : deltaplus_table(5, 5, caps55)) {
    CAPTURE(e.omega);
    CAPTURE(e.k);
    CHECK(e.match());
  }
}

TEST_CASE("companion F") {
  const auto F = companion_F(caps44);
  CHECK(F.coeff({Lin::one, -1, -1, 0}) == pv(Var::d2));
  CHECK(F.coeff({Lin::one, -2, -2, 0}) == pv(Var::d2, 2) * Poly(q(-1, 2)));
  CHECK(F.coeff({Lin::one, 0, 0, 0}) == pv(Var::d1));
  CHECK(F.coeff({Lin::z, 0, 0, 0}) == Poly(-2));
  CHECK(F.coeff({Lin::f, 0, 0, 0}) == Poly(1));
}

TEST_CASE("expansion to series") {
  const int N = 12;
  const auto [psi, phi] = hae::gen_psi_phi(N);
  const auto quotient = phi.series * ps_inv(psi.series);
  const auto e = expand_to_series(gen_E(1, Caps{}), N);
  REQUIRE(e.size() == 1);
  const auto& s = e.begin()->second;
  CHECK(s[0] == q(1));
  CHECK(s[1] == q(-5, 36));
  CHECK(s == quotient);

  const auto eg = expand_to_series(gen_g(Caps{}), N);
  CHECK(eg.begin()->second == hae::gen_g_f(N).g.series);

  const auto ed = expand_to_series(delta(gen_g(Caps{}), 2), N);
  CHECK(ed.begin()->second == quotient.scaled(-I));
}

TEST_CASE("errors") {
  const Caps c{};
  try {
    (void)(gen_g(c) * gen_g(c));
    FAIL("g squared accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::g_squared);
  }
  // D_{<=0} on E does not raise the sigma_2 degree
  try {
    (void)stokes(gen_E(1, c), false);
    FAIL("inadmissible input accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::admissibility);
  }
}

TEST_CASE("json dump") {
  const auto x = E(1, 1, pv(Var::s2), Caps{});
  CHECK(x.to_json() == R"({"terms":[{"g":0,"m":1,"n":1,"poly":"s2"}]})");
}
