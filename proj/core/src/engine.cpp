#include "resurgentia/alien/engine.hpp"

#include <algorithm>

#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"

namespace resurgentia::alien {

namespace {

const ExactScalar I = ExactScalar::i();

Poly pvar(Var v, int k = 1) { return Poly::var(v, k); }

ExactScalar harmonic_sign(int n) { return ExactScalar::rational(n % 2 ? 1 : -1, n); }  // (-1)^{n-1}/n

TransElement lin_one(const Basis& b, const Poly& c, Caps caps) {
  return TransElement::monomial({Lin::one, b.m, b.n, b.p}, c, caps);
}

// Delta_{+-2} images of the closure variables gp = g~', fp = f~', obtained
// from [d/dz, Delta_omega] = omega Delta_omega.
TransElement delta_of_var(Var v, int omega, Caps caps) {
  const Poly fp = pvar(Var::fp), gp = pvar(Var::gp);
  if (omega == 2 && v == Var::gp)  // i E (2 - fp + gp)
    return TransElement::monomial({Lin::one, 1, 0, 0}, Poly(I) * (Poly(2) - fp + gp), caps);
  if (omega == -2 && v == Var::fp)  // i E^{-1} (fp - gp - 2)
    return TransElement::monomial({Lin::one, -1, 0, 0}, Poly(I) * (fp - gp - Poly(2)), caps);
  return TransElement(caps);
}

Poly d_dz_of_var(Var v) {
  const Poly zi = pvar(Var::zi), gp = pvar(Var::gp), fp = pvar(Var::fp);
  const Poly c = Poly(ExactScalar::rational(5, 36)) * zi * zi;
  switch (v) {
    case Var::zi: return -(zi * zi);
    case Var::gp: return -(gp * gp) - Poly(2) * gp - c;   // g'' from the ODE
    case Var::fp: return -(fp * fp) + Poly(2) * fp - c;   // f(z) = g(-z)
    default: return Poly();
  }
}

constexpr Var kClosureVars[] = {Var::zi, Var::gp, Var::fp};

}  // namespace

TransElement delta(const TransElement& x, int omega, Frame frame) {
  const Caps caps = x.caps();
  TransElement out(caps);
  if (omega != 2 && omega != -2) return out;
  for (const auto& [b, c] : x.terms()) {
    for (Var v : kClosureVars) {
      Poly dc = c.diff(v);
      if (dc.is_zero()) continue;
      TransElement dv = delta_of_var(v, omega, caps);
      if (!dv.is_zero()) out += TransElement::monomial(b, dc, caps) * dv;
    }
    if (b.lin == Lin::g && omega == 2) out += lin_one({b.lin, b.m + 1, b.n, b.p}, c * Poly(-I), caps);
    if (b.lin == Lin::f && omega == -2) out += lin_one({b.lin, b.m - 1, b.n, b.p}, c * Poly(-I), caps);
    if (b.m != 0) {
      const int dm = omega == 2 ? 1 : -1;
      out.add({b.lin, b.m + dm, b.n, b.p}, c * Poly(I * ExactScalar(dm * b.m)));
    }
  }
  return frame == Frame::lr ? out.shifted(0, omega / 2) : out;
}

TransElement delta_plus(const TransElement& x, int omega, Frame frame) {
  if (omega == 0 || omega % 2) return TransElement(x.caps());
  const int m = std::abs(omega) / 2;
  TransElement y = x;
  mpq_class fact(1);
  for (int r = 1; r <= m; ++r) {
    y = delta(y, omega > 0 ? 2 : -2, frame);
    fact *= r;
  }
  return y * Poly(ExactScalar(mpq_class(1) / fact));
}

TransElement d_dz(const TransElement& x) {
  const Caps caps = x.caps();
  TransElement out(caps);
  for (const auto& [b, c] : x.terms()) {
    if (b.p != 0) throw Error(ErrorKind::domain_violation, "d/dz is defined on double-scaling elements only");
    if (b.n != 0) out.add(b, c * Poly(ExactScalar(-2 * b.n)));
    for (Var v : kClosureVars) {
      Poly dc = c.diff(v);
      if (!dc.is_zero()) out.add(b, dc * d_dz_of_var(v));
    }
    if (b.lin == Lin::g) out += lin_one(b, c * pvar(Var::gp), caps);
    if (b.lin == Lin::f) out += lin_one(b, c * pvar(Var::fp), caps);
    if (b.lin == Lin::z) out += lin_one(b, c, caps);
    if (b.m != 0) out.add(b, c * Poly(ExactScalar(b.m)) * (pvar(Var::fp) - pvar(Var::gp)));
  }
  return out;
}

TransElement times_exp(const TransElement& x, int k, Frame frame) {
  return frame == Frame::lr ? x.shifted(k, -k) : x.shifted(k, 0);
}

TransElement dot(const TransElement& x, bool ge0, Frame frame) {
  return ge0 ? times_exp(delta(x, 2, frame), 1, frame) : times_exp(delta(x, -2, frame), -1, frame);
}

TransElement stokes(const TransElement& x, bool ge0, const Poly& c, Frame frame) {
  TransElement out = x, term = x;
  const int max_steps = 2 * x.caps().k_e + x.caps().k_sigma + 4;
  for (int r = 1;; ++r) {
    term = dot(term, ge0, frame) * (c * Poly(ExactScalar::rational(1, r)));
    if (term.is_zero()) break;
    if (!ge0 && term.min_degree(Var::s2) < r)
      throw Error(ErrorKind::admissibility,
                  "element outside the admissible subalgebra: D_{<=0}^r does not raise the s2-degree to r");
    if (r > max_steps) throw Error(ErrorKind::cap_inconsistency, "Stokes exponential did not terminate");
    out += term;
  }
  return out;
}

TransElement te_apply(const AlienOp& op, const TransElement& x) {
  switch (op.label) {
    case OpLabel::delta: return delta(x, op.omega, op.frame);
    case OpLabel::delta_plus: return delta_plus(x, op.omega, op.frame);
    case OpLabel::dot_ge0: return dot(x, true, op.frame);
    case OpLabel::dot_le0: return dot(x, false, op.frame);
    case OpLabel::stokes_ge0: return stokes(x, true, Poly(1), op.frame);
    case OpLabel::stokes_le0: return stokes(x, false, Poly(1), op.frame);
    case OpLabel::d_dz: return d_dz(x);
  }
  return x;
}

TransElement d_param(const TransElement& x, Var v) {
  return x.map_poly([v](const Poly& p) { return p.diff(v); });
}

TransElement substitute(const TransElement& x, Var v, const Poly& q) {
  const int cap = x.caps().k_sigma;
  return x.map_poly([&](const Poly& p) { return p.substitute(v, q, Var::s2, cap); });
}

TransElement gen_g(Caps caps) { return TransElement::monomial({Lin::g, 0, 0, 0}, Poly(1), caps); }
TransElement gen_E(int m, Caps caps) { return TransElement::monomial({Lin::one, m, 0, 0}, Poly(1), caps); }
TransElement gen_var(Var v, Caps caps) { return TransElement::scalar(pvar(v), caps); }

TransElement formal_integral_direct(Caps caps) {
  TransElement x = gen_var(Var::s1, caps) + gen_g(caps);
  for (int n = 1; n <= caps.k_e; ++n)
    x.add({Lin::one, n, n, 0}, pvar(Var::s2, n) * Poly(harmonic_sign(n)));
  return x;
}

TransElement formal_integral_exp(Caps caps) {
  TransElement seed = gen_var(Var::s1, caps) + gen_g(caps);
  return stokes(seed, true, Poly(I) * pvar(Var::s2));
}

TransElement formal_integral(Caps caps) {
  TransElement a = formal_integral_direct(caps), b = formal_integral_exp(caps);
  if (!(a == b)) throw Error(ErrorKind::defect, "formal integral: direct and exponential routes disagree");
  return a;
}

TransElement gen_Gk(int k, Caps caps) {
  if (k == 0) return gen_g(caps);
  return TransElement::monomial({Lin::one, k, 0, 0}, Poly(harmonic_sign(k)), caps);
}

TransElement companion_F(Caps caps) {
  TransElement x = TransElement::monomial({Lin::z, 0, 0, 0}, Poly(-2), caps);
  x += gen_var(Var::d1, caps);
  x += TransElement::monomial({Lin::f, 0, 0, 0}, Poly(1), caps);
  for (int n = 1; n <= caps.k_e; ++n)
    x.add({Lin::one, -n, -n, 0}, pvar(Var::d2, n) * Poly(harmonic_sign(n)));
  return x;
}

BridgeResidual bridge_check(Caps caps) {
  const Caps wide{caps.k_sigma + 1, caps.k_e + 1};
  const TransElement G = formal_integral(wide);
  const Poly s2 = pvar(Var::s2);
  BridgeResidual r;
  r.r1 = delta(G, 2) + times_exp(d_param(G, Var::s2), -1) * Poly(I);
  TransElement inner = d_param(G, Var::s1) * s2 - d_param(G, Var::s2) * (s2 * s2);
  r.r2 = delta(G, -2) + times_exp(inner, 1) * Poly(I);
  r.r1.set_caps(caps);
  r.r2.set_caps(caps);
  return r;
}

Poly log1p_s2(const ExactScalar& a, int cap, Var v) {
  Poly out;
  ExactScalar ak(1);
  for (int k = 1; k <= cap; ++k) {
    ak *= a;
    out += pvar(v, k) * Poly(ak * ExactScalar::rational(k % 2 ? 1 : -1, k));
  }
  return out;
}

Poly mobius_s2(const ExactScalar& a, int cap, Var v) {
  Poly out;
  ExactScalar ak(1);
  for (int k = 0; k + 1 <= cap; ++k) {
    out += pvar(v, k + 1) * Poly(ak);
    ak *= -a;
  }
  return out;
}

TransElement stokes_action_check(Direction dir, Caps caps) {
  const int k = std::max(caps.k_sigma, caps.k_e);
  TransElement res;
  if (dir == Direction::right) {
    const Caps wide{k, caps.k_e};
    const TransElement G = formal_integral(wide);
    TransElement lhs = stokes(G, true);
    TransElement rhs = substitute(G, Var::s2, pvar(Var::s2) - Poly(I));
    res = lhs - rhs;
  } else {
    const Caps wide{caps.k_sigma, k};
    const TransElement G = formal_integral(wide);
    TransElement lhs = stokes(G, false);
    TransElement rhs = substitute(G, Var::s2, mobius_s2(-I, caps.k_sigma));
    rhs = substitute(rhs, Var::s1, pvar(Var::s1) + log1p_s2(-I, caps.k_sigma));
    res = lhs - rhs;
  }
  res.set_caps(caps);
  return res;
}

std::vector<DeltaPlusEntry> deltaplus_table(int nmax, int kmax, Caps caps) {
  std::vector<DeltaPlusEntry> out;
  for (int n = 1; n <= nmax; ++n)
    for (int k = 0; k <= kmax; ++k) {
      const TransElement Gk = gen_Gk(k, caps);
      DeltaPlusEntry up{2 * n, k, delta_plus(Gk, 2 * n), {}};
      up.formula = gen_Gk(k + n, caps) *
                   Poly((-I).pow(n) * ExactScalar(mpq_class(mpz_class::factorial(k + n) /
                                                             (mpz_class::factorial(k) * mpz_class::factorial(n)))));
      out.push_back(std::move(up));

      DeltaPlusEntry down{-2 * n, k, delta_plus(Gk, -2 * n), TransElement(caps)};
      if (n == k && k >= 1) {
        down.formula = TransElement::scalar(Poly(-I.pow(k) * ExactScalar::rational(1, k)), caps);
      } else if (n < k) {
        mpz_class binom = mpz_class::factorial(k - 1) / (mpz_class::factorial(n) * mpz_class::factorial(k - 1 - n));
        down.formula = gen_Gk(k - n, caps) * Poly(I.pow(n) * ExactScalar(mpq_class(binom)));
      }
      out.push_back(std::move(down));
    }
  return out;
}

namespace {

struct SeriesBank {
  explicit SeriesBank(int N) {
    auto [psi, phi] = hae::gen_psi_phi(N);
    g = ps_log(psi.series);
    f = ps_reflect(g);
    gp = ps_diff(g);
    fp = ps_diff(f);
    E = phi.series * ps_inv(psi.series);
    Einv = psi.series * ps_inv(phi.series);
    zi = PowerSeries::monomial(N, 1, ExactScalar(1));
    order = N;
  }
  PowerSeries g, f, gp, fp, E, Einv, zi;
  int order;
};

PowerSeries expand_with(const SeriesBank& bank, Lin lin, int m, const Poly& rest) {
  const int N = bank.order;
  PowerSeries s;
  switch (lin) {
    case Lin::one: s = PowerSeries::constant(N, ExactScalar(1)); break;
    case Lin::g: s = bank.g; break;
    case Lin::f: s = bank.f; break;
    case Lin::z: throw Error(ErrorKind::domain_violation, "the z-generator has no series image");
  }
  if (m > 0) s = s * ps_pow(bank.E, m);
  if (m < 0) s = s * ps_pow(bank.Einv, -m);
  PowerSeries r(N);
  for (const auto& [mono, c] : rest.terms()) {
    PowerSeries t = PowerSeries::constant(N, c);
    const int izi = static_cast<int>(Var::zi), igp = static_cast<int>(Var::gp), ifp = static_cast<int>(Var::fp);
    if (mono[izi]) t = t * ps_pow(bank.zi, mono[izi]);
    if (mono[igp]) t = t * ps_pow(bank.gp, mono[igp]);
    if (mono[ifp]) t = t * ps_pow(bank.fp, mono[ifp]);
    r += t;
  }
  return s * r;
}

}  // namespace

PowerSeries expand_term(Lin lin, int m, const Poly& rest, int N) {
  return expand_with(SeriesBank(N), lin, m, rest);
}

Expanded expand_to_series(const TransElement& x, int N) {
  const SeriesBank bank(N);
  Expanded out;
  for (const auto& [b, c] : x.terms())
    for (const auto& [params, rest] : c.by_parameters()) {
      ExpandKey key{params, b.n, b.p};
      auto s = expand_with(bank, b.lin, b.m, rest);
      auto it = out.find(key);
      if (it == out.end()) out.emplace(key, std::move(s));
      else it->second += s;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Expanded graded_diff(const Expanded& e) {
  Expanded out;
  for (const auto& [k, s] : e) {
    PowerSeries d = ps_diff(s) - s.scaled(ExactScalar(2 * k.n));
    if (!d.is_zero()) out.emplace(k, std::move(d));
  }
  return out;
}

}  // namespace resurgentia::alien
