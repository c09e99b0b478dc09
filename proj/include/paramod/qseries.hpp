#pragma once

#include <complex>
#include <vector>

#include "paramod/latticekit.hpp"
#include "paramod/rational.hpp"

namespace paramod {

// Truncated q-expansion c_0 q^{offset} + c_1 q^{offset+1} + ... + c_d q^{offset+d}
// with an exact rational leading exponent and integer exponent steps. An empty
// coefficient vector is the designated zero series. Arithmetic tracks the
// window of exponents on which the truncation is valid and narrows it under
// addition and multiplication.
template <typename C>
struct Series {
  Rational offset;
  std::vector<C> coeffs;

  Series() = default;
  Series(Rational off, std::vector<C> cs) : offset(off), coeffs(std::move(cs)) {}

  bool is_zero() const { return coeffs.empty(); }
  int depth() const { return (int)coeffs.size() - 1; }  // -1 for the zero series

  // Strip exactly-zero leading coefficients so offset is the true leading
  // exponent. Fully zero input collapses to the designated zero series.
  Series normalized() const {
    size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == C(0)) ++i;
    if (i == coeffs.size()) return Series();
    return Series(offset + Rational((long long)i),
                  std::vector<C>(coeffs.begin() + i, coeffs.end()));
  }

  Series operator+(const Series& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Rational diff = o.offset - offset;
    if (!diff.is_integer())
      throw std::invalid_argument("Series: offsets differ by a non-integer");
    long long shift = diff.num();  // o starts `shift` steps after *this
    Rational lo = shift >= 0 ? offset : o.offset;
    Rational hi_a = offset + Rational(depth());
    Rational hi_b = o.offset + Rational(o.depth());
    Rational hi = hi_a < hi_b ? hi_a : hi_b;
    if (hi < lo) throw std::invalid_argument("Series: truncation windows do not overlap");
    long long n = (hi - lo).num() + 1;
    Series r(lo, std::vector<C>((size_t)n, C(0)));
    long long da = (lo - offset).num(), db = (lo - o.offset).num();
    for (long long i = 0; i < n; ++i)
      r.coeffs[(size_t)i] = coeffs[(size_t)(i + da)] + o.coeffs[(size_t)(i + db)];
    return r;
  }

  Series operator-() const {
    Series r(*this);
    for (auto& c : r.coeffs) c = -c;
    return r;
  }
  Series operator-(const Series& o) const { return *this + (-o); }

  Series operator*(const C& s) const {
    Series r(*this);
    for (auto& c : r.coeffs) c = c * s;
    return r;
  }

  // Truncated Cauchy product; valid through min(d_a, d_b) steps.
  Series operator*(const Series& o) const {
    if (is_zero() || o.is_zero()) return Series();
    int d = std::min(depth(), o.depth());
    Series r(offset + o.offset, std::vector<C>((size_t)d + 1, C(0)));
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j)
        r.coeffs[(size_t)(i + j)] += coeffs[(size_t)i] * o.coeffs[(size_t)j];
    return r;
  }

  // Multiplicative inverse of a series with invertible leading coefficient,
  // to the same depth.
  Series reciprocal() const {
    if (is_zero()) throw std::domain_error("Series: reciprocal of zero");
    if (coeffs[0] == C(0))
      throw std::domain_error("Series: reciprocal needs nonzero leading coefficient");
    std::vector<C> r(coeffs.size(), C(0));
    r[0] = C(1) / coeffs[0];
    for (size_t n = 1; n < coeffs.size(); ++n) {
      C acc(0);
      for (size_t j = 1; j <= n; ++j) acc += coeffs[j] * r[n - j];
      r[n] = -acc / coeffs[0];
    }
    return Series(-offset, std::move(r));
  }

  Series pow(long long e) const {
    if (e < 0) return reciprocal().pow(-e);
    if (is_zero()) {
      if (e == 0) throw std::domain_error("Series: 0^0");
      return Series();
    }
    Series acc(Rational(0), std::vector<C>(coeffs.size(), C(0)));
    acc.coeffs[0] = C(1);
    Series base(*this);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
};

using QSeries = Series<Rational>;
using CSeries = Series<std::complex<double>>;

inline CSeries to_complex(const QSeries& s) {
  std::vector<std::complex<double>> c;
  c.reserve(s.coeffs.size());
  for (const auto& x : s.coeffs) c.emplace_back(x.to_double(), 0.0);
  return CSeries(s.offset, std::move(c));
}

// Dedekind eta q^{1/24} * prod_{n>=1} (1 - q^n), truncated at q^{1/24 + depth}.
QSeries eta_series(int depth);

struct EvalResult {
  std::complex<double> value;
  double tail_bound;  // geometric estimate for the dropped tail
};

// exp(2 pi i r) for exact rational r.
std::complex<double> expi2pi(const Rational& r);

// Sum the truncated series at q = exp(2 pi i tau), Im tau > 0.
EvalResult evaluate(const QSeries& s, std::complex<double> tau);
EvalResult evaluate(const CSeries& s, std::complex<double> tau);

// All lattice points v in x0 + L with pair(v, v) <= max_norm, found by exact
// rational forward elimination of the Gram form (complete Fincke-Pohst sweep;
// no floating-point bound can miss a point).
std::vector<WeightVec> coset_points(const Lattice& l, const WeightVec& x0,
                                    const Rational& max_norm);

// theta_{L+x0}(h, tau) = sum_v exp(2 pi i h_scale <h,v>) q^{<v,v>/2} truncated
// at <v,v>/2 <= radius. h_scale carries the 1/tau of transformed arguments.
EvalResult theta_eval(const Lattice& l, const WeightVec& x0, const WeightVec& h,
                      std::complex<double> tau, const Rational& radius,
                      std::complex<double> h_scale = 1.0);

// Same sum organized as a q-expansion (exponent steps must be integral, which
// holds for even L and x0 in the dual).
CSeries theta_series(const Lattice& l, const WeightVec& x0, const WeightVec& h,
                     const Rational& radius);

// S-matrix of the theta system of an even lattice over the discriminant group
// L*/L: S_{xy} = |L*/L|^{-1/2} exp(-2 pi i <x,y>), with exact exponents.
struct LatticeSMatrix {
  CosetSystem cosets;  // dual(L) / L
  double scale = 1.0;  // |L*/L|^{-1/2}
  std::vector<std::vector<Rational>> exponents;  // -<x,y> mod 1
  std::vector<std::vector<std::complex<double>>> entries;
};
LatticeSMatrix lattice_S_matrix(const Lattice& l);

// Max residual over dual cosets x of
//   theta_{L+x}(h/tau, -1/tau)
//     - (-i tau)^{l/2} e^{pi i (h,h)/tau} sum_y S_{xy} theta_{L+y}(h, tau).
double theta_transform_residual(const Lattice& l, const WeightVec& h,
                                std::complex<double> tau, const Rational& radius);

}  // namespace paramod
