#include "resurgentia/borel/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "resurgentia/borel/quadrature.hpp"
#include "resurgentia/error.hpp"
#include "resurgentia/hae/family.hpp"

namespace resurgentia::borel {

namespace {

template <class T>
constexpr T kPi = T(3.141592653589793238462643383279502884L);

template <class T>
std::string fmt(cplx<T> v) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << double(v.real()) << "," << double(v.imag()) << ")";
  return os.str();
}

// distance from p to the segment [a,b] of the real axis
template <class T>
T dist_to_segment(cplx<T> p, T a, T b) {
  const T x = std::clamp(p.real(), a, b);
  return std::abs(p - cplx<T>(x, 0));
}

}  // namespace

const char* to_string(Interval i) {
  switch (i) {
    case Interval::I0: return "I0";
    case Interval::Ipi: return "Ipi";
    case Interval::Iplus: return "I+";
    case Interval::Iminus: return "I-";
  }
  return "?";
}

void interval_bounds(Interval i, double& lo, double& hi) {
  const double pi = kPi<double>;
  switch (i) {
    case Interval::I0: lo = -2 * pi, hi = 0; break;
    case Interval::Ipi: lo = -pi, hi = pi; break;
    case Interval::Iplus: lo = -pi, hi = 0; break;
    case Interval::Iminus: lo = 0, hi = pi; break;
  }
}

const char* to_string(Family f) {
  switch (f) {
    case Family::psi: return "psi";
    case Family::phi: return "phi";
    case Family::g: return "g";
    case Family::f: return "f";
  }
  return "?";
}

template <class T>
cplx<T> eval_Ahat(SheetPoint<T> zeta, AhatBranch branch) {
  const T pi = kPi<T>;
  const T sing = branch == AhatBranch::A ? T(0) : pi;
  const T turns = (zeta.arg - sing) / (2 * pi);
  if (zeta.modulus >= 2 && std::abs(turns - std::round(turns)) < T(1e-15))
    throw Error(ErrorKind::branch_cut, "Ahat evaluated on its cut");
  if (zeta.modulus == 0) throw Error(ErrorKind::branch_cut, "Ahat is singular at 0");
  const cplx<T> z = zeta.value();
  const cplx<T> lead = std::polar(std::pow(zeta.modulus, T(-1) / 6), -zeta.arg / 6);
  const cplx<T> second = branch == AhatBranch::A ? T(1) - z / T(2) : T(1) + z / T(2);
  return lead * std::pow(second, T(-1) / 6) / std::tgamma(T(5) / 6);
}

template <class T>
SumValue<T> eval_Bhat(cplx<T> zeta, BhatBranch branch, T tol) {
  tol = std::max(tol, 32 * std::numeric_limits<T>::epsilon());
  if (branch == BhatBranch::B_plus) zeta = -zeta;
  if (zeta.imag() == 0 && zeta.real() >= 2)
    throw Error(ErrorKind::branch_cut, "Bhat evaluated on its cut");
  SumValue<T> out;
  if (zeta == cplx<T>(0)) {
    out.value = 1;
    return out;
  }
  const auto& bank = RuleBank<T>::get();
  const cplx<T> w = zeta / T(2);
  const cplx<T> sstar = T(1) / w;  // singular point of (1 - s w)^{-1/6}
  auto f = [&](T s) { return std::pow(T(1) - s * w, T(-1) / 6); };

  T L = T(0.25), R = T(0.75);
  while (dist_to_segment(sstar, T(0), L) < 2 * L && L > T(1e-12)) L /= 2;
  while (dist_to_segment(sstar, R, T(1)) < 2 * (1 - R) && 1 - R > T(1e-12)) R = 1 - (1 - R) / 2;

  // int_0^L s^{-1/6} (1-s)^{-5/6} f(s) ds
  auto left = [&](const Rule<T>& r) {
    cplx<T> s = 0;
    for (size_t i = 0; i < r.x.size(); ++i) {
      const T x = L * r.x[i];
      s += r.w[i] * std::pow(1 - x, T(-5) / 6) * f(x);
    }
    out.nodes += static_cast<long>(r.x.size());
    return s * std::pow(L, T(5) / 6);
  };
  // int_R^1 ... with 1 - s = (1-R) x
  auto right = [&](const Rule<T>& r) {
    cplx<T> s = 0;
    const T h = 1 - R;
    for (size_t i = 0; i < r.x.size(); ++i) {
      const T x = 1 - h * r.x[i];
      s += r.w[i] * std::pow(x, T(-1) / 6) * f(x);
    }
    out.nodes += static_cast<long>(r.x.size());
    return s * std::pow(h, T(1) / 6);
  };
  const cplx<T> l1 = left(bank.jac_a_lo), l2 = left(bank.jac_a_hi);
  const cplx<T> r1 = right(bank.jac_b_lo), r2 = right(bank.jac_b_hi);
  const T norm = 2 * kPi<T>;
  auto mid = adaptive_legendre<T>(
      [&](T s) { return std::pow(s, T(-1) / 6) * std::pow(1 - s, T(-5) / 6) * f(s); }, L, R,
      tol * norm / 3);
  out.nodes += mid.nodes;
  out.value = (l2 + r2 + mid.value) / norm;
  out.err = (std::abs(l2 - l1) + std::abs(r2 - r1) + mid.err) / norm;
  if (!mid.converged || out.err > tol) {
    std::ostringstream os;
    os << "Bhat quadrature did not reach tolerance at zeta=" << fmt(zeta)
       << ": best value " << fmt(out.value) << ", error estimate " << double(out.err);
    throw Error(ErrorKind::quadrature_failure, os.str());
  }
  return out;
}

template <class T>
cplx<T> bhat_maclaurin(cplx<T> zeta, int nterms) {
  cplx<T> term = 1, sum = 0;
  for (int n = 0; n < nterms; ++n) {
    sum += term;
    const T k = n;
    term *= zeta * ((k + T(1) / 6) * (k + T(5) / 6) / (2 * (k + 1) * (k + 1)));
  }
  return sum;
}

template <class T>
SumValue<T> laplace_ray(const std::function<cplx<T>(cplx<T>)>& fhat, cplx<T> z, T theta, T tol,
                        T growth) {
  tol = std::max(tol, 64 * std::numeric_limits<T>::epsilon());
  const cplx<T> e = std::polar(T(1), theta);
  const cplx<T> ze = z * e;
  const T lambda = ze.real();
  if (!(lambda > 0))
    throw Error(ErrorKind::outside_half_plane, "Re(z e^{i theta}) must be positive");
  SumValue<T> out;
  out.theta = theta;
  T radius = (std::log(1 / tol) + growth + std::log1p(1 / lambda)) / lambda;
  T a = 0;
  for (int ext = 0; ext < 8; ++ext) {
    const T span = radius - a;
    const int panels = std::max(2, static_cast<int>(std::ceil(span * std::abs(ze) / kPi<T>)));
    const T h = span / panels;
    for (int p = 0; p < panels; ++p) {
      auto q = adaptive_legendre<T>(
          [&](T r) { return fhat(r * e) * std::exp(-ze * r); }, a + p * h, a + (p + 1) * h,
          tol / (2 * panels) / (ext + 1));
      out.value += q.value;
      out.err += q.err;
      out.nodes += q.nodes;
      if (!q.converged)
        throw Error(ErrorKind::quadrature_failure,
                    "Laplace integral did not converge; best value " + fmt<T>(e * out.value));
    }
    const T tail = std::abs(fhat(radius * e)) * std::exp(-lambda * radius) / lambda;
    a = radius;
    if (tail <= tol / 4 || ext == 7) {
      out.err += tail;
      break;
    }
    radius *= T(1.5);
  }
  out.value *= e;
  out.radius = radius;
  return out;
}

template <class T>
T choose_theta(SheetPoint<T> z, Interval interval, int shift, T margin) {
  double lo, hi;
  interval_bounds(interval, lo, hi);
  const T two_pi = 2 * kPi<T>;
  const T a = std::max(T(lo) + two_pi * shift, -kPi<T> / 2 - z.arg);
  const T b = std::min(T(hi) + two_pi * shift, kPi<T> / 2 - z.arg);
  if (!(b - a > 2 * margin)) {
    std::ostringstream os;
    os << "arg z = " << double(z.arg) << " is outside the summation domain of " << to_string(interval)
       << (shift ? " shifted by " + std::to_string(shift) + " turns" : std::string());
    throw Error(ErrorKind::outside_half_plane, os.str());
  }
  return (a + b) / 2;
}

template <class T>
SumValue<T> sum_family(Family fam, SheetPoint<T> z, Interval interval, int shift, const Settings<T>& s) {
  const bool plus = fam == Family::phi || fam == Family::f;
  double lo, hi;
  interval_bounds(interval, lo, hi);
  // singular directions: 2 pi k for psi/g, pi + 2 pi k for phi/f
  const double off = plus ? kPi<double> : 0.0;
  const double k = std::floor((lo - off) / (2 * kPi<double>)) + 1;
  if (off + 2 * kPi<double> * k < hi - 1e-12)
    throw Error(ErrorKind::domain_violation, std::string("interval ") + to_string(interval) +
                                                 " contains a Stokes ray of " + to_string(fam));
  const T theta = choose_theta(z, interval, shift, s.ray_margin);
  const cplx<T> zv = z.value();
  const BhatBranch br = plus ? BhatBranch::B_plus : BhatBranch::B;
  T quad_err = 0;
  auto fhat = [&](cplx<T> zeta) {
    auto b = eval_Bhat<T>(zeta, br, s.tol / 10);
    quad_err = std::max(quad_err, b.err);
    return b.value;
  };
  auto lap = laplace_ray<T>(fhat, zv, theta, s.tol / (4 * std::max(T(1), std::abs(zv))));
  SumValue<T> out = lap;
  out.value = zv * lap.value;
  out.err = std::abs(zv) * (lap.err + quad_err / (zv * std::polar(T(1), theta)).real());
  if (fam == Family::g || fam == Family::f) {
    out.err /= std::abs(out.value);
    out.value = std::log(out.value);
  }
  return out;
}

template <class T>
GValue<T> G_pm(int sign, SheetPoint<T> z, cplx<T> s1, cplx<T> s2, const Settings<T>& s) {
  const cplx<T> zv = z.value();
  const cplx<T> trans = s2 * std::exp(T(-2) * zv);
  if (!(std::abs(trans) < T(0.5))) {
    std::ostringstream os;
    os << "|sigma2 e^{-2z}| = " << double(std::abs(trans)) << " is not below 1/2";
    throw Error(ErrorKind::domain_violation, os.str());
  }
  const Interval iv = sign > 0 ? Interval::Iplus : Interval::Iminus;
  const auto psi = sum_family<T>(Family::psi, z, iv, 0, s);
  const auto phi = sum_family<T>(Family::phi, z, iv, 0, s);
  const cplx<T> x = trans * phi.value / psi.value;
  GValue<T> out;
  out.theta = psi.theta;
  const cplx<T> base = s1 + std::log(psi.value);
  out.value = base + std::log(T(1) + x);
  cplx<T> acc = 0, p = 1;
  const T eps = std::numeric_limits<T>::epsilon();
  for (int n = 1; n <= 400; ++n) {
    p *= x;
    const cplx<T> term = p / T(n);
    acc += (n % 2 ? T(1) : T(-1)) * term;
    out.terms = n;
    if (std::abs(term) < eps * std::max(T(1), std::abs(acc))) break;
  }
  out.series_value = base + acc;
  const T rel = psi.err / std::abs(psi.value);
  out.err = rel + std::abs(trans) * (phi.err + std::abs(phi.value) * rel) /
                      std::abs(psi.value) / std::abs(T(1) + x);
  return out;
}

template <class T>
Residual<T> connection_check(Side which, SheetPoint<T> z, cplx<T> s1, cplx<T> s2, const Settings<T>& s) {
  const cplx<T> I(0, 1);
  Residual<T> r;
  try {
    GValue<T> lhs, rhs;
    if (which == Side::right) {
      lhs = G_pm<T>(+1, z, s1, s2, s);
      rhs = G_pm<T>(-1, z, s1, s2 - I, s);
    } else {
      lhs = G_pm<T>(+1, z.rotated(2 * kPi<T>), s1, s2, s);
      const cplx<T> d = T(1) + I * s2;
      rhs = G_pm<T>(-1, z, s1 + std::log(d), s2 / d, s);
    }
    r.lhs = lhs.value;
    r.rhs = rhs.value;
    r.err = lhs.err + rhs.err;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::domain_violation) throw;
    throw Error(ErrorKind::domain_empty,
                std::string("no common domain for both sides of the connection: ") + e.what());
  }
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

template <class T>
Residual<T> linear_stokes_check(SheetPoint<T> z, const Settings<T>& s) {
  const cplx<T> I(0, 1);
  const auto lhs = sum_family<T>(Family::psi, z, Interval::I0, 0, s);
  const auto up = sum_family<T>(Family::psi, z.rotated(2 * kPi<T>), Interval::I0, 0, s);
  const auto phi = sum_family<T>(Family::phi, z, Interval::Ipi, 0, s);
  const cplx<T> ez = std::exp(T(-2) * z.value());
  Residual<T> r;
  r.lhs = lhs.value;
  r.rhs = up.value - I * ez * phi.value;
  r.err = lhs.err + up.err + std::abs(ez) * phi.err;
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

template <class T>
MedianValue<T> median_real_check(T x, T a, T b, MedianRay ray, T theta, const Settings<T>& s) {
  const cplx<T> I(0, 1);
  GValue<T> g;
  if (ray == MedianRay::arg0) {
    if (!(x > std::log(1 + 4 * b * b) / 4))
      throw Error(ErrorKind::domain_violation, "x must exceed log(1 + 4 b^2)/4");
    g = G_pm<T>(-1, SheetPoint<T>{x, 0}, cplx<T>(a), cplx<T>(b) - I / T(2), s);
  } else {
    if (!(std::abs(theta) < kPi<T> / 4))
      throw Error(ErrorKind::domain_violation, "|theta| must be below pi/4");
    g = G_pm<T>(-1, SheetPoint<T>{x, -kPi<T>}, cplx<T>(a) - I * theta / T(2),
                -I * (T(1) - std::polar(T(1), theta)), s);
  }
  return {g.value, std::abs(g.value.imag())};
}

template <class T>
AiryValue<T> airy_oracle(cplx<T> w) {
  using L = long double;
  using C = std::complex<L>;
  const C wl(w.real(), w.imag());
  const L c1 = std::pow(3.0L, -2.0L / 3) / std::tgamma(2.0L / 3);
  const L c2 = std::pow(3.0L, -1.0L / 3) / std::tgamma(1.0L / 3);
  // Ai = sum al_n w^n with al_{n+3} = al_n / ((n+2)(n+3)); Ai', Ai'' termwise
  std::vector<L> al{c1, -c2, 0};
  C ai = 0, dai = 0, d2ai = 0, p = 1;
  for (int n = 0; n < 600; ++n) {
    while (static_cast<int>(al.size()) < n + 3) {
      const int m = static_cast<int>(al.size()) - 3;
      al.push_back(al[m] / (L(m + 2) * L(m + 3)));
    }
    const C t0 = al[n] * p, t1 = L(n + 1) * al[n + 1] * p, t2 = L(n + 2) * L(n + 1) * al[n + 2] * p;
    ai += t0;
    dai += t1;
    d2ai += t2;
    if (n > 8 && std::abs(t0) + std::abs(t1) + std::abs(t2) < 1e-22L * (std::abs(ai) + std::abs(dai) + 1e-300L) &&
        n % 3 == 2)
      break;
    p *= wl;
  }
  auto cast = [](C v) { return cplx<T>(T(v.real()), T(v.imag())); };
  return {cast(ai), cast(dai), cast(d2ai)};
}

namespace {

std::complex<double> smallest_root(const std::vector<ExactScalar>& q) {
  // q[0] + q[1] x + ... + q[M] x^M, q[0] = 1
  int M = static_cast<int>(q.size()) - 1;
  while (M > 0 && q[M].is_zero()) --M;
  if (M == 0) return {std::numeric_limits<double>::infinity(), 0};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(M, M);
  const std::complex<double> lead = q[M].to_complex();
  for (int i = 1; i < M; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < M; ++i) C(i, M - 1) = -q[i].to_complex() / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
  std::complex<double> best = es.eigenvalues()(0);
  for (int i = 1; i < M; ++i)
    if (std::abs(es.eigenvalues()(i)) < std::abs(best)) best = es.eigenvalues()(i);
  return best;
}

// denominator of the [L/M] Pade approximant from d_0..d_{L+M}; empty if singular
std::vector<ExactScalar> pade_denominator(const std::vector<ExactScalar>& d, int M) {
  const int L = static_cast<int>(d.size()) - 1 - M;
  auto coef = [&](int k) { return k < 0 ? ExactScalar(0) : d[k]; };
  // sum_{j=1}^M q_j d_{k-j} = -d_k, k = L+1..L+M
  std::vector<std::vector<ExactScalar>> A(M, std::vector<ExactScalar>(M + 1));
  for (int r = 0; r < M; ++r) {
    const int k = L + 1 + r;
    for (int j = 1; j <= M; ++j) A[r][j - 1] = coef(k - j);
    A[r][M] = -coef(k);
  }
  for (int c = 0; c < M; ++c) {
    int piv = -1;
    for (int r = c; r < M; ++r)
      if (!A[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    std::swap(A[c], A[piv]);
    const ExactScalar inv = A[c][c].inverse();
    for (int j = c; j <= M; ++j) A[c][j] *= inv;
    for (int r = 0; r < M; ++r) {
      if (r == c || A[r][c].is_zero()) continue;
      const ExactScalar fct = A[r][c];
      for (int j = c; j <= M; ++j) A[r][j] -= fct * A[c][j];
    }
  }
  std::vector<ExactScalar> q(M + 1);
  q[0] = 1;
  for (int j = 1; j <= M; ++j) q[j] = A[j - 1][M];
  return q;
}

std::complex<double> pade_pole(const std::vector<ExactScalar>& d) {
  const int n = static_cast<int>(d.size());
  for (int M = std::min(12, (n - 1) / 2); M >= 1; --M) {
    auto q = pade_denominator(d, M);
    if (!q.empty()) return smallest_root(q);
  }
  return {std::numeric_limits<double>::infinity(), 0};
}

}  // namespace

SingularityEstimate singularity_locate(const std::vector<ExactScalar>& coeffs, SingMethod method) {
  const int n = static_cast<int>(coeffs.size());
  if (n < 8) throw Error(ErrorKind::insufficient_data, "need at least 8 coefficients");
  SingularityEstimate out;
  if (method == SingMethod::ratio) {
    std::vector<std::complex<double>> r;
    for (int k = 0; k + 1 < n; ++k) {
      if (coeffs[k + 1].is_zero()) continue;
      r.push_back((coeffs[k] / coeffs[k + 1]).to_complex());
      out.ratios.push_back(std::abs(r.back()));
    }
    if (r.size() < 4) throw Error(ErrorKind::insufficient_data, "too few nonzero coefficients");
    const size_t m = r.size() - 1;
    out.location = r[m];
    out.richardson = std::abs(double(m + 1) * r[m] - double(m) * r[m - 1]);
    out.finite = std::abs(r[m]) <= 1.5 * std::abs(r[m / 2]);
  } else {
    const auto full = pade_pole(coeffs);
    const auto half = pade_pole(std::vector<ExactScalar>(coeffs.begin(), coeffs.begin() + n / 2));
    out.location = full;
    out.finite = std::isfinite(std::abs(full)) && std::abs(full) <= 1.5 * std::abs(half);
  }
  return out;
}

template <class T>
GevreyTable<T> gevrey_table(cplx<T> value, const std::vector<ExactScalar>& coeffs, cplx<T> z, int nmax) {
  if (static_cast<int>(coeffs.size()) < nmax)
    throw Error(ErrorKind::insufficient_data, "not enough coefficients for the table");
  GevreyTable<T> t;
  cplx<T> partial = 0, zp = 1;
  const cplx<T> zi = T(1) / z;
  for (int n = 0; n < nmax; ++n) {
    const auto c = coeffs[n].to_complex_ld();
    partial += cplx<T>(T(c.real()), T(c.imag())) * zp;
    zp *= zi;
    t.errors.push_back(std::abs(value - partial));  // N = n + 1
  }
  t.argmin = static_cast<int>(std::min_element(t.errors.begin(), t.errors.end()) - t.errors.begin()) + 1;
  const int m = t.argmin - 1;
  bool dec = true, inc = true;
  for (int k = 0; k < m; ++k) dec = dec && t.errors[k + 1] <= t.errors[k];
  for (size_t k = m; k + 1 < t.errors.size(); ++k) inc = inc && t.errors[k + 1] >= t.errors[k];
  t.unimodal = dec && inc && m > 0 && m + 1 < static_cast<int>(t.errors.size());
  t.monotone = dec && m + 1 == static_cast<int>(t.errors.size());
  return t;
}

template <class T>
GevreyTable<T> gevrey_check(SheetPoint<T> z, Interval interval, int nmax, const Settings<T>& s) {
  const auto fam = hae::gen_g_f(nmax + 1);
  const auto sg = sum_family<T>(Family::g, z, interval, 0, s);
  return gevrey_table<T>(sg.value, fam.g.series.coeffs(), z.value(), nmax);
}

#define RESURGENTIA_NUMERIC(T)                                                                   \
  template cplx<T> eval_Ahat<T>(SheetPoint<T>, AhatBranch);                                      \
  template SumValue<T> eval_Bhat<T>(cplx<T>, BhatBranch, T);                                      \
  template cplx<T> bhat_maclaurin<T>(cplx<T>, int);                                               \
  template SumValue<T> laplace_ray<T>(const std::function<cplx<T>(cplx<T>)>&, cplx<T>, T, T, T); \
  template T choose_theta<T>(SheetPoint<T>, Interval, int, T);                                    \
  template SumValue<T> sum_family<T>(Family, SheetPoint<T>, Interval, int, const Settings<T>&);   \
  template GValue<T> G_pm<T>(int, SheetPoint<T>, cplx<T>, cplx<T>, const Settings<T>&);          \
  template Residual<T> connection_check<T>(Side, SheetPoint<T>, cplx<T>, cplx<T>,                 \
                                           const Settings<T>&);                                   \
  template Residual<T> linear_stokes_check<T>(SheetPoint<T>, const Settings<T>&);                 \
  template MedianValue<T> median_real_check<T>(T, T, T, MedianRay, T, const Settings<T>&);        \
  template AiryValue<T> airy_oracle<T>(cplx<T>);                                                  \
  template GevreyTable<T> gevrey_table<T>(cplx<T>, const std::vector<ExactScalar>&, cplx<T>, int); \
  template GevreyTable<T> gevrey_check<T>(SheetPoint<T>, Interval, int, const Settings<T>&);
RESURGENTIA_NUMERIC(double)
RESURGENTIA_NUMERIC(long double)
#undef RESURGENTIA_NUMERIC

}  // namespace resurgentia::borel
