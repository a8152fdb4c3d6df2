#include "resurgentia/hae/family.hpp"

namespace resurgentia::hae {

std::string to_string(Name n) {
  switch (n) {
    case Name::psi: return "psi";
    case Name::phi: return "phi";
    case Name::g: return "g";
    case Name::f: return "f";
    case Name::G_n: return "G_n";
    case Name::free_energy: return "free_energy";
  }
  return "?";
}

std::vector<ExactScalar> gen_c_coeffs(int N) {
  std::vector<ExactScalar> c(static_cast<size_t>(std::max(N, 0)) + 1);
  c[0] = ExactScalar(1);
  for (int n = 0; n < N; ++n) {
    mpq_class a(6 * n + 1, 6), b(6 * n + 5, 6);
    mpq_class r = a * b / (2 * (n + 1));
    c[n + 1] = c[n] * ExactScalar(r);
  }
  return c;
}

std::vector<ExactScalar> airy_ode_coeffs(int N, const ExactScalar& p, const ExactScalar& q) {
  // coefficient of z^{-(n+2)}:  n(n+1) c_n - p (n+1) c_{n+1} + q c_n = 0
  std::vector<ExactScalar> c(static_cast<size_t>(std::max(N, 0)) + 1);
  c[0] = ExactScalar(1);
  for (int n = 0; n < N; ++n) {
    ExactScalar lhs = c[n] * (ExactScalar(n * (n + 1)) + q);
    c[n + 1] = lhs / (p * ExactScalar(n + 1));
  }
  return c;
}

std::pair<FamilySeries, FamilySeries> gen_psi_phi(int N) {
  auto a = gen_c_coeffs(N);
  auto b = airy_ode_coeffs(N, ExactScalar(2), ExactScalar::rational(5, 36));
  if (a != b) throw Error(ErrorKind::defect, "ODE/closed-form disagreement for psi coefficients");
  FamilySeries psi{Name::psi, 0, PowerSeries(N, a), {}};
  FamilySeries phi{Name::phi, 0, ps_reflect(psi.series), {}};
  return {psi, phi};
}

GFamily gen_g_f(int N) {
  auto [psi, phi] = gen_psi_phi(N);
  GFamily out;
  out.g = {Name::g, 0, ps_log(psi.series), {}};
  out.f = {Name::f, 0, ps_reflect(out.g.series), {}};
  out.free_energy.name = Name::free_energy;
  out.free_energy.series = out.g.series;
  ExactScalar three_pow(1);
  for (int n = 1; n <= N; ++n) {
    three_pow *= ExactScalar(3);
    out.free_energy.a_g.push_back(out.g.series[n] * three_pow);
  }
  return out;
}

std::vector<FamilySeries> gen_Gn(int N, int nmax) {
  auto [psi, phi] = gen_psi_phi(N);
  PowerSeries g = ps_log(psi.series);
  PowerSeries f = ps_reflect(g);
  PowerSeries g1 = ps_exp(f - g);
  if (!(g1 == phi.series * ps_inv(psi.series)))
    throw Error(ErrorKind::defect, "exp(f-g) and phi/psi disagree");
  std::vector<FamilySeries> out;
  PowerSeries pw = g1;
  for (int n = 1; n <= nmax; ++n) {
    if (n > 1) pw = pw * g1;
    ExactScalar s = ExactScalar::rational(n % 2 ? 1 : -1, n);
    out.push_back({Name::G_n, n, pw.scaled(s), {}});
  }
  return out;
}

PowerSeries ode_residual(const PowerSeries& s, Ode ode) {
  const int N = s.order();
  PowerSeries d1 = ps_diff(s), d2 = ps_diff(d1);
  PowerSeries zi2 = PowerSeries::monomial(N, 2, ExactScalar::rational(5, 36));
  if (ode == Ode::airy_linear) return d2 + d1.scaled(ExactScalar(2)) + zi2 * s;
  return d2 + d1 * d1 + d1.scaled(ExactScalar(2)) + zi2;
}

int zero_through(const PowerSeries& r) {
  int k = 0;
  while (k <= r.order() && r[k].is_zero()) ++k;
  return k - 1;
}

}  // namespace resurgentia::hae
