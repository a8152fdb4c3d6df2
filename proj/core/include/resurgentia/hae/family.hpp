#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resurgentia/exact/series.hpp"

namespace resurgentia::hae {

enum class Name { psi, phi, g, f, G_n, free_energy };

struct FamilySeries {
  Name name = Name::psi;
  int index = 0;                    // n for G_n
  PowerSeries series;
  std::vector<ExactScalar> a_g;     // free_energy only: a_2 ... a_{N+1}
};

std::string to_string(Name n);

// c_0..c_N from c_{n+1}/c_n = (n+1/6)(n+5/6)/(2(n+1)).
std::vector<ExactScalar> gen_c_coeffs(int N);

// c_0..c_N by matching powers in  y'' + p y' + q z^{-2} y = 0,  y(inf) = 1.
std::vector<ExactScalar> airy_ode_coeffs(int N, const ExactScalar& p, const ExactScalar& q);

// psi~ and phi~(z) = psi~(-z); throws ErrorKind::defect if the two routes differ.
std::pair<FamilySeries, FamilySeries> gen_psi_phi(int N);

struct GFamily {
  FamilySeries g, f, free_energy;
};
// g~ = log psi~, f~(z) = g~(-z), a_{n+1} = 3^n b_n.
GFamily gen_g_f(int N);

// G~_1 .. G~_nmax; G~_1 = exp(f~ - g~) checked against phi~/psi~.
std::vector<FamilySeries> gen_Gn(int N, int nmax);

enum class Ode { airy_linear, hae_nonlinear };

// airy_linear:   s'' + 2 s' + (5/36) z^{-2} s
// hae_nonlinear: s'' + (s')^2 + 2 s' + (5/36) z^{-2}
PowerSeries ode_residual(const PowerSeries& s, Ode ode);

// Highest k such that residual coefficients 0..k all vanish (-1 if c_0 != 0).
int zero_through(const PowerSeries& r);

}  // namespace resurgentia::hae
