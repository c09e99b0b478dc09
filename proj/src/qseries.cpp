#include "paramod/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace paramod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> nome(std::complex<double> tau) {
  if (tau.imag() <= 0.0)
    throw std::invalid_argument("evaluate: tau must lie in the upper half plane");
  return std::exp(std::complex<double>(0.0, kTwoPi) * tau);
}

template <typename C>
EvalResult evaluate_impl(const Series<C>& s, std::complex<double> tau) {
  if (s.is_zero()) return {0.0, 0.0};
  std::complex<double> q = nome(tau);
  std::complex<double> qpow =
      std::exp(std::complex<double>(0.0, kTwoPi) * tau * s.offset.to_double());
  std::complex<double> acc = 0.0;
  double maxc = 0.0;
  for (const auto& c : s.coeffs) {
    std::complex<double> cd;
    if constexpr (std::is_same_v<C, Rational>)
      cd = c.to_double();
    else
      cd = c;
    acc += cd * qpow;
    qpow *= q;
    maxc = std::max(maxc, std::abs(cd));
  }
  double aq = std::abs(q);
  double tail = maxc * std::pow(aq, s.offset.to_double() + s.depth() + 1) / (1.0 - aq);
  return {acc, tail};
}

}  // namespace

std::complex<double> expi2pi(const Rational& r) {
  double m = r.mod1().to_double();
  return {std::cos(kTwoPi * m), std::sin(kTwoPi * m)};
}

QSeries eta_series(int depth) {
  if (depth < 0) throw std::invalid_argument("eta_series: negative depth");
  std::vector<Rational> p((size_t)depth + 1, Rational(0));
  p[0] = Rational(1);
  for (int n = 1; n <= depth; ++n)  // multiply by (1 - q^n)
    for (int j = depth; j >= n; --j) p[(size_t)j] -= p[(size_t)(j - n)];
  return QSeries(Rational(1, 24), std::move(p));
}

EvalResult evaluate(const QSeries& s, std::complex<double> tau) { return evaluate_impl(s, tau); }
EvalResult evaluate(const CSeries& s, std::complex<double> tau) { return evaluate_impl(s, tau); }

// ---- lattice point enumeration ----------------------------------------------

namespace {

// Forward elimination of a positive definite Gram matrix:
// Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2, exact in rationals.
struct QuadForm {
  std::vector<Rational> d;
  QMatrix u;
};

QuadForm decompose(const QMatrix& gram) {
  size_t n = gram.rows();
  QMatrix q = gram;
  for (size_t i = 0; i < n; ++i) {
    if (q.at(i, i).sign() <= 0)
      throw std::invalid_argument("coset_points: Gram matrix is not positive definite");
    for (size_t j = i + 1; j < n; ++j) q.at(i, j) /= q.at(i, i);
    for (size_t k = i + 1; k < n; ++k)
      for (size_t j = k; j < n; ++j) q.at(k, j) -= q.at(i, k) * q.at(i, j) * q.at(i, i);
  }
  QuadForm f;
  f.d.resize(n);
  f.u = QMatrix::identity(n);
  for (size_t i = 0; i < n; ++i) {
    f.d[i] = q.at(i, i);
    for (size_t j = i + 1; j < n; ++j) f.u.at(i, j) = q.at(i, j);
  }
  return f;
}

struct SweepState {
  const QuadForm* form;
  const std::vector<Rational>* shift;  // fractional coordinates t of x0
  Rational max_norm;
  std::vector<long long> x;
  std::vector<std::vector<long long>> found;
};

void sweep(SweepState& st, size_t level, const Rational& used) {
  const auto& f = *st.form;
  size_t i = level - 1;
  // Inner coordinate y_i = x_i + t_i + sum_{j>i} u_ij (x_j + t_j).
  Rational offs = (*st.shift)[i];
  for (size_t j = level; j < f.d.size(); ++j)
    offs += f.u.at(i, j) * (Rational(st.x[j]) + (*st.shift)[j]);
  Rational budget = st.max_norm - used;
  if (budget.sign() < 0) return;
  double s = std::sqrt(std::max(0.0, (budget / f.d[i]).to_double()));
  long long lo = (long long)std::floor(-s - offs.to_double()) - 2;
  long long hi = (long long)std::ceil(s - offs.to_double()) + 2;
  for (long long xi = lo; xi <= hi; ++xi) {
    Rational y = Rational(xi) + offs;
    Rational contrib = f.d[i] * y * y;
    if (contrib > budget) continue;  // exact check; the double bounds only seed the range
    st.x[i] = xi;
    if (i == 0)
      st.found.push_back(st.x);
    else
      sweep(st, level - 1, used + contrib);
  }
}

}  // namespace

std::vector<WeightVec> coset_points(const Lattice& l, const WeightVec& x0,
                                    const Rational& max_norm) {
  size_t n = (size_t)l.rank();
  QuadForm f = decompose(l.gram());
  WeightVec t = l.coords_of(x0);
  std::vector<Rational> shift(t.c.begin(), t.c.end());

  SweepState st{&f, &shift, max_norm, std::vector<long long>(n, 0), {}};
  if (max_norm.sign() >= 0) sweep(st, n, Rational(0));

  std::vector<WeightVec> out;
  out.reserve(st.found.size());
  for (const auto& x : st.found) {
    WeightVec coords(n);
    for (size_t i = 0; i < n; ++i) coords[i] = Rational(x[i]) + shift[i];
    out.push_back(mul_row(coords, l.basis));
  }
  return out;
}

EvalResult theta_eval(const Lattice& l, const WeightVec& x0, const WeightVec& h,
                      std::complex<double> tau, const Rational& radius,
                      std::complex<double> h_scale) {
  std::complex<double> q = nome(tau);
  std::complex<double> acc = 0.0;
  double max_phase_mag = 1.0;
  size_t count = 0;
  for (const auto& v : coset_points(l, x0, radius * Rational(2))) {
    Rational e = l.pair(v, v) * Rational(1, 2);
    Rational hp = l.pair(h, v);
    std::complex<double> term = std::exp(
        std::complex<double>(0.0, kTwoPi) * (tau * e.to_double() + h_scale * hp.to_double()));
    acc += term;
    max_phase_mag = std::max(max_phase_mag, std::abs(std::exp(std::complex<double>(0.0, kTwoPi) *
                                                              h_scale * hp.to_double())));
    ++count;
  }
  double aq = std::abs(q);
  double tail =
      (double)(count + 1) * max_phase_mag * std::pow(aq, radius.to_double()) / (1.0 - aq);
  return {acc, tail};
}

CSeries theta_series(const Lattice& l, const WeightVec& x0, const WeightVec& h,
                     const Rational& radius) {
  auto points = coset_points(l, x0, radius * Rational(2));
  if (points.empty()) return CSeries();
  Rational emin = l.pair(points[0], points[0]) * Rational(1, 2);
  std::vector<Rational> exps;
  exps.reserve(points.size());
  for (const auto& v : points) {
    Rational e = l.pair(v, v) * Rational(1, 2);
    exps.push_back(e);
    if (e < emin) emin = e;
  }
  long long depth = (radius - emin).floor();
  CSeries s(emin, std::vector<std::complex<double>>((size_t)depth + 1, 0.0));
  for (size_t i = 0; i < points.size(); ++i) {
    Rational step = exps[i] - emin;
    if (!step.is_integer())
      throw std::invalid_argument("theta_series: exponents are not integrally spaced");
    s.coeffs[(size_t)step.num()] += expi2pi(l.pair(h, points[i]));
  }
  return s;
}

double theta_transform_residual(const Lattice& l, const WeightVec& h,
                                std::complex<double> tau, const Rational& radius) {
  LatticeSMatrix sm = lattice_S_matrix(l);
  const auto& reps = sm.cosets.reps;
  std::complex<double> stau = -1.0 / tau;
  std::complex<double> pref = std::pow(std::complex<double>(tau.imag(), -tau.real()),
                                       (double)l.rank() / 2.0);  // (-i tau)^{l/2}
  pref *= std::exp(std::complex<double>(0.0, std::numbers::pi) * l.pair(h, h).to_double() / tau);

  std::vector<std::complex<double>> at_tau(reps.size());
  for (size_t j = 0; j < reps.size(); ++j)
    at_tau[j] = theta_eval(l, reps[j], h, tau, radius).value;

  double worst = 0.0;
  for (size_t i = 0; i < reps.size(); ++i) {
    std::complex<double> lhs = theta_eval(l, reps[i], h, stau, radius, 1.0 / tau).value;
    std::complex<double> rhs = 0.0;
    for (size_t j = 0; j < reps.size(); ++j) rhs += sm.entries[i][j] * at_tau[j];
    worst = std::max(worst, std::abs(lhs - pref * rhs));
  }
  return worst;
}

LatticeSMatrix lattice_S_matrix(const Lattice& l) {
  if (!is_even(l)) throw std::invalid_argument("lattice_S_matrix: lattice must be even");
  LatticeSMatrix sm;
  sm.cosets = quotient(dual_lattice(l), l);
  size_t n = (size_t)sm.cosets.order;
  sm.scale = 1.0 / std::sqrt((double)n);
  sm.exponents.assign(n, std::vector<Rational>(n));
  sm.entries.assign(n, std::vector<std::complex<double>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational e = (-l.pair(sm.cosets.reps[i], sm.cosets.reps[j])).mod1();
      sm.exponents[i][j] = e;
      sm.entries[i][j] = expi2pi(e) * sm.scale;
    }
  return sm;
}

}  // namespace paramod
