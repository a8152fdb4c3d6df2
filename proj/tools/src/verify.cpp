#include "resurgentia/tools/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <sstream>

#include "resurgentia/alien/engine.hpp"
#include "resurgentia/borel/numeric.hpp"
#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"
#include "resurgentia/lr/large_radius.hpp"

namespace resurgentia::tools {

namespace {

using C = std::complex<double>;
using borel::SheetPoint;

struct Check {
  bool ok = true;
  std::ostringstream msg;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      msg << (msg.tellp() > 0 ? "; " : "") << what;
    }
  }
};

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << v;
  return os.str();
}

// 1. coefficient reproduction
void coefficients(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto fam = hae::gen_g_f(64);
  const auto psi = hae::gen_psi_phi(64);
  const double dt = elapsed(t0);
  const auto& a = fam.free_energy.a_g;
  c.require(a[0] == ExactScalar::rational(5, 24), "a2 = " + a[0].str());
  c.require(a[1] == ExactScalar::rational(5, 16), "a3 = " + a[1].str());
  c.require(a[2] == ExactScalar::rational(1105, 1152), "a4 = " + a[2].str());
  const auto gam = hae::gen_c_coeffs(4);
  const auto ode = hae::airy_ode_coeffs(4, ExactScalar(2), ExactScalar::rational(5, 36));
  for (int k = 0; k <= 4; ++k) c.require(gam[k] == ode[k], "c" + std::to_string(k) + " routes differ");
  c.require(fam.g.series[1] == ExactScalar::rational(5, 72) && gam[1] == ExactScalar::rational(5, 72),
            "b1/c1 != 5/72");
  c.require(dt < 1.0, "N = 64 took " + std::to_string(dt) + " s");
  if (c.ok) c.msg << "a2..a4 = 5/24, 5/16, 1105/1152; c0..c4 routes agree; b1 = c1 = 5/72; " << sci(dt) << " s";
}

// 2. formal-solution certificates
void certificates(Check& c) {
  const int N = 32;
  const auto t0 = std::chrono::steady_clock::now();
  const auto psi = hae::gen_psi_phi(N).first.series;
  const auto g = hae::gen_g_f(N).g.series;
  const int zp = hae::zero_through(hae::ode_residual(psi, hae::Ode::airy_linear));
  const int zg = hae::zero_through(hae::ode_residual(g, hae::Ode::hae_nonlinear));
  const auto ures = lr::u_equation_residual(lr::gen_H0(N)).series;
  int zu = -1;
  for (int k = 0; k <= ures.order() && ures[k].is_zero(); ++k) zu = k;
  const double dt = elapsed(t0);
  c.require(zp >= N - 2, "psi residual zero only through " + std::to_string(zp));
  c.require(zg >= N - 2, "g residual zero only through " + std::to_string(zg));
  c.require(zu >= N - 1, "u-equation residual zero only through " + std::to_string(zu));
  c.require(dt < 5.0, "N = 32 took " + std::to_string(dt) + " s");
  if (c.ok)
    c.msg << "zero through orders psi " << zp << ", g " << zg << ", H0 u-equation " << zu << " (N = 32); "
          << sci(dt) << " s";
}

// 3. symbolic resurgence identities
void symbolic(Check& c) {
  const alien::Caps caps{5, 5};
  c.require(alien::bridge_check(caps).zero(), "bridge residual");
  c.require(alien::stokes_action_check(alien::Direction::right, caps).is_zero(), "right Stokes action");
  c.require(alien::stokes_action_check(alien::Direction::left, caps).is_zero(), "left Stokes action");
  int bad = 0, total = 0;
  for (const auto& e : alien::deltaplus_table(5, 5, caps)) {
    ++total;
    bad += !e.match();
  }
  c.require(bad == 0, std::to_string(bad) + " Delta+ table mismatches");
  const ExactScalar i = ExactScalar::i();
  for (int m = 1; m <= 3; ++m) {
    const auto lhs = alien::delta_plus(alien::gen_g(caps), 2 * m);
    const auto rhs = alien::gen_E(m, caps) * alien::Poly(-i.pow(m) * ExactScalar::rational(1, m));
    c.require(lhs == rhs, "Delta+_" + std::to_string(2 * m) + " g");
  }
  c.require(lr::lr_bridge_check(caps, 8).zero(), "large-radius bridge residual");
  c.require(lr::lr_is_zero(lr::lr_stokes_check(alien::Direction::right, caps, 8)), "large-radius right Stokes");
  c.require(lr::lr_is_zero(lr::lr_stokes_check(alien::Direction::left, caps, 8)), "large-radius left Stokes");
  if (c.ok)
    c.msg << "bridge, Stokes (right/left), " << total
          << " Delta+ entries, Delta+_{2m} g for m <= 3, large-radius bridge/Stokes at z2-order 8; caps (5,5)";
}

// 4. large-radius polynomials
void polynomials(Check& c) {
  auto U = [](long p, long q, int k) { return ULaurent::monomial(ExactScalar::rational(p, q), k); };
  const auto h1 = lr::gen_Hn(1, 4);
  const ULaurent p2 = U(5, 12, 2) + U(1, 1, 0);
  const ULaurent p4 = U(-25, 288, 4) + U(5, 4, 3) + U(-5, 12, 2) + U(1, 3, 1) + U(-1, 2, 0);
  c.require(h1.pols[0] == p2, "Pol1(u,2) = " + h1.pols[0].str());
  c.require(h1.pols[1] == p4, "Pol1(u,4) = " + h1.pols[1].str());
  for (int n = 1; n <= 3; ++n) {
    const auto h = n == 1 ? h1 : lr::gen_Hn(n, 4);
    for (int g = 1; g <= 4; ++g) {
      const auto& p = h.pols[g - 1];
      c.require(!p.is_zero() && p.max_upow() == 2 * g && p.min_upow() >= 0 && !p.has_log(),
                "deg Pol" + std::to_string(n) + "(u," + std::to_string(2 * g) + ") != " + std::to_string(2 * g));
    }
  }
  if (c.ok) c.msg << "Pol1(u,2) = " << p2.str() << "; Pol1(u,4) = " << p4.str() << "; degrees 2g for n <= 3, g <= 4";
}

// 5. Airy identity
void airy(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  borel::Settings<double> s;
  s.tol = 1e-12;
  double worst = 0;
  for (double w : {1.0, 2.0, 4.0}) {
    const double z = 2.0 / 3.0 * std::pow(w, 1.5);
    const auto v = borel::sum_family<double>(borel::Family::phi, {z, 0}, borel::Interval::Ipi, 0, s);
    const C ai = borel::airy_oracle<double>(C(w)).ai;
    const C rhs = 2 * std::sqrt(M_PI) * std::pow(w, 0.25) * std::exp(z) * ai;
    const double rel = std::abs(v.value - rhs) / std::abs(v.value);
    worst = std::max(worst, rel);
    c.require(rel <= 1e-8, "w = " + std::to_string(w) + ": relative error " + sci(rel));
  }
  const double dt = elapsed(t0);
  c.require(dt < 10, "took " + std::to_string(dt) + " s");
  if (c.ok) c.msg << "max relative error " << sci(worst) << " at w in {1,2,4}; " << sci(dt) << " s";
}

// 6. numeric connection formulas
void connections(Check& c) {
  borel::Settings<double> s;
  s.tol = 1e-12;
  const C i(0, 1);
  double worst_right = 0;
  for (double z : {3.0, 4.0, 5.0})
    for (auto [s1, s2] : {std::pair<C, C>{0, 1}, std::pair<C, C>{1, -i}}) {
      const auto r = borel::connection_check<double>(borel::Side::right, {z, 0}, s1, s2, s);
      worst_right = std::max(worst_right, r.residual);
      c.require(r.residual <= 1e-6, "right residual " + sci(r.residual) + " at z = " + std::to_string(z));
    }
  const auto left = borel::connection_check<double>(borel::Side::left, {0.9, -M_PI}, 0.0, 0.05 * i, s);
  c.require(left.residual <= 1e-4, "left residual " + sci(left.residual));
  const auto lin = borel::linear_stokes_check<double>({3, 0}, s);
  c.require(lin.residual <= 1e-6, "linear Stokes residual " + sci(lin.residual));
  if (c.ok)
    c.msg << "right max " << sci(worst_right) << " (z = 3,4,5); left " << sci(left.residual)
          << " (z = 0.9e^{-i pi}, s2 = 0.05i); linear " << sci(lin.residual) << " (z = 3)";
}

// 7. median / real solutions
void median(Check& c) {
  borel::Settings<double> s;
  s.tol = 1e-12;
  double worst = 0, worst_lr = 0;
  for (double x : {3.0, 5.0})
    for (double a : {0.0, 1.0})
      for (double b : {0.0, 0.3}) {
        const auto m = borel::median_real_check<double>(x, a, b, borel::MedianRay::arg0, 0, s);
        worst = std::max(worst, m.imag_residual);
        c.require(m.imag_residual <= 1e-8, "Im G- = " + sci(m.imag_residual));
      }
  for (int sign : {-1, 1})
    for (double a : {0.0, 1.0})
      for (double b : {0.0, 0.3}) {
        const auto m = lr::lr_median_check<double>(sign, 0.3, 1.0, a, b, s);
        worst_lr = std::max(worst_lr, m.imag_residual);
        c.require(m.imag_residual <= 1e-8, "large-radius Im = " + sci(m.imag_residual));
      }
  if (c.ok) c.msg << "max |Im| " << sci(worst) << "; large-radius (u = 1, g_s = 0.3) " << sci(worst_lr);
}

// 8. singularity witness
void singularity(Check& c) {
  const auto g = hae::gen_g_f(80).g.series;
  std::vector<ExactScalar> d;
  mpz_class fact = 1;
  for (int n = 0; n < 80; ++n) {
    if (n > 0) fact *= n;
    d.push_back(g[n + 1] / ExactScalar(mpq_class(fact)));
  }
  const auto e = borel::singularity_locate(d, borel::SingMethod::ratio);
  const double est = std::abs(e.location);
  c.require(e.finite && std::abs(est - 2) <= 0.2, "ratio estimate " + std::to_string(est));
  if (c.ok) c.msg << "ratio estimate " << est << " from 80 coefficients";
}

// 9. Gevrey profile
void gevrey(Check& c) {
  borel::Settings<double> s;
  s.tol = 1e-14;
  const auto t = borel::gevrey_check<double>({10, -M_PI / 2}, borel::Interval::Iminus, 40, s);
  c.require(t.unimodal, "table is not unimodal");
  c.require(std::abs(t.argmin - 20) <= 6, "minimum at N = " + std::to_string(t.argmin));
  if (c.ok) c.msg << "unimodal, minimum " << sci(t.errors[t.argmin - 1]) << " at N = " << t.argmin;
}

struct Entry {
  const char* name;
  void (*fn)(Check&);
};
const Entry kCriteria[] = {
    {"coefficient reproduction", coefficients},
    {"formal-solution certificates", certificates},
    {"symbolic resurgence identities", symbolic},
    {"large-radius polynomials", polynomials},
    {"Airy oracle identity", airy},
    {"connection formulas", connections},
    {"median/real solutions", median},
    {"singularity witness", singularity},
    {"Gevrey profile", gevrey},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  if (id < 1 || id > criterion_count()) {
    r.detail = "no such criterion";
    return r;
  }
  const Entry& e = kCriteria[id - 1];
  r.name = e.name;
  const auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    e.fn(c);
  } catch (const std::exception& ex) {
    c.ok = false;
    c.msg << "exception: " << ex.what();
  }
  r.seconds = elapsed(t0);
  r.pass = c.ok;
  r.detail = c.msg.str();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace resurgentia::tools
