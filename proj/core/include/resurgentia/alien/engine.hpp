#pragma once

#include <map>
#include <optional>
#include <vector>

#include "resurgentia/alien/trans.hpp"
#include "resurgentia/exact/series.hpp"

namespace resurgentia::alien {

// ds: plain double-scaling algebra.  lr: elements are read as composed with
// id + phi_u; alien derivations then pick up e^{-omega phi_u} (the chain rule)
// and e^{-2z_2} = (e^{-2z} o (id+phi_u)) * Phi^{-1}.
enum class Frame { ds, lr };

enum class OpLabel {
  delta,        // Delta_omega
  delta_plus,   // Delta^+_omega
  dot_ge0,      // D_{>=0} = e^{-2z} Delta_2
  dot_le0,      // D_{<=0} = e^{2z} Delta_{-2}
  stokes_ge0,   // D^+_{>=0} = exp(D_{>=0})
  stokes_le0,   // D^+_{<=0} = exp(D_{<=0})
  d_dz,
};

struct AlienOp {
  OpLabel label = OpLabel::delta;
  int omega = 2;   // delta / delta_plus only
  Frame frame = Frame::ds;
};

TransElement delta(const TransElement& x, int omega, Frame frame = Frame::ds);
TransElement delta_plus(const TransElement& x, int omega, Frame frame = Frame::ds);
TransElement d_dz(const TransElement& x);
// multiply by e^{-2kz} in the given frame
TransElement times_exp(const TransElement& x, int k, Frame frame = Frame::ds);
TransElement dot(const TransElement& x, bool ge0, Frame frame = Frame::ds);
// exp(c * D) with D = D_{>=0} or D_{<=0}; c is a parameter polynomial (1 for
// the automorphism itself, a symbolic s for its s-th power).  For D_{<=0} each
// application must raise the minimum s2-degree by one (checked).
TransElement stokes(const TransElement& x, bool ge0, const Poly& c = Poly(1), Frame frame = Frame::ds);
TransElement te_apply(const AlienOp& op, const TransElement& x);

TransElement d_param(const TransElement& x, Var v);
// Substitute parameters: v -> q, truncated at the element's s2 cap.
TransElement substitute(const TransElement& x, Var v, const Poly& q);

// Generators.
TransElement gen_g(Caps caps);
TransElement gen_E(int m, Caps caps);
TransElement gen_var(Var v, Caps caps);

// G~ = s1 + g~ + sum_{n>=1} ((-1)^{n-1}/n) s2^n e^{-2nz} E^n.
TransElement formal_integral_direct(Caps caps);
// exp(i s2 e^{-2z} Delta_2)(s1 + g~)
TransElement formal_integral_exp(Caps caps);
// Both routes; throws ErrorKind::defect on mismatch.
TransElement formal_integral(Caps caps);
// G~_k as an element (k = 0 gives g~)
TransElement gen_Gk(int k, Caps caps);

// F~ = -2z + d1 + f~ + sum ((-1)^{n-1}/n) d2^n e^{2nz} E^{-n}
TransElement companion_F(Caps caps);

struct BridgeResidual {
  TransElement r1, r2;
  bool zero() const { return r1.is_zero() && r2.is_zero(); }
};
BridgeResidual bridge_check(Caps caps);

enum class Direction { right, left };
// right: exp(D_{>=0}) G~ - G~(s1, s2 - i)
// left:  exp(D_{<=0}) G~ - G~(s1 + log(1 - i s2), s2/(1 - i s2))
TransElement stokes_action_check(Direction dir, Caps caps);

// log(1 + a s2) and s2/(1 + a s2) truncated at s2-degree cap
Poly log1p_s2(const ExactScalar& a, int cap, Var v = Var::s2);
Poly mobius_s2(const ExactScalar& a, int cap, Var v = Var::s2);

struct DeltaPlusEntry {
  int omega = 0;  // +-2n
  int k = 0;
  TransElement engine, formula;
  bool match() const { return engine == formula; }
};
std::vector<DeltaPlusEntry> deltaplus_table(int nmax, int kmax, Caps caps = {});

// Key of an expanded component: parameter monomial, e^{-2nz} power, Phi power.
struct ExpandKey {
  Mono params{};
  int n = 0;
  int p = 0;
  friend bool operator<(const ExpandKey& a, const ExpandKey& b) {
    return std::tie(a.params, a.n, a.p) < std::tie(b.params, b.n, b.p);
  }
};
using Expanded = std::map<ExpandKey, PowerSeries>;

// E -> phi~/psi~, g~ -> log psi~, f~ -> log phi~, zi -> z^{-1},
// gp -> g~', fp -> f~'.  Zero components are omitted.
Expanded expand_to_series(const TransElement& x, int N);
// Image of the non-parameter part of a single basis term.
PowerSeries expand_term(Lin lin, int m, const Poly& rest, int N);
// d/dz acting on e^{-2nz} S(z) componentwise.
Expanded graded_diff(const Expanded& e);

}  // namespace resurgentia::alien
