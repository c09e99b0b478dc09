#include "paramod/affinekit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace paramod {

std::vector<long long> comarks(const AlgebraDescriptor& alg) {
  std::vector<long long> c(alg.rank);
  for (int i = 0; i < alg.rank; ++i) {
    WeightVec ei(alg.rank);
    ei[i] = Rational(1);
    Rational v = alg.inner(ei, alg.theta);
    if (!v.is_integer()) throw std::logic_error("comarks: non-integral comark");
    c[i] = v.num();
  }
  return c;
}

std::vector<WeightVec> dominant_weights(const AlgebraDescriptor& alg, long long k) {
  if (k <= 0) throw std::invalid_argument("dominant_weights: level must be positive");
  std::vector<long long> cm = comarks(alg);
  std::vector<WeightVec> out;
  std::vector<long long> m(alg.rank, 0);
  // Lexicographic enumeration of coordinates with sum m_i c_i <= k.
  auto rec = [&](auto&& self, int i, long long used) -> void {
    if (i == alg.rank) {
      out.push_back(WeightVec::from_integers(m));
      return;
    }
    for (long long v = 0; v * cm[i] <= k - used; ++v) {
      m[i] = v;
      self(self, i + 1, used + v * cm[i]);
    }
    m[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

Rational central_charge(const AlgebraDescriptor& alg, long long k) {
  return Rational(k * alg.dim_g, 1) / Rational(k + alg.dual_coxeter);
}

Rational conformal_weight(const AlgebraDescriptor& alg, long long k, const WeightVec& lambda) {
  Rational num = alg.inner(lambda + alg.rho * Rational(2), lambda);
  return num / Rational(2 * (k + alg.dual_coxeter));
}

KacPetersonS kac_peterson_S(const AlgebraDescriptor& alg, long long k,
                            unsigned long long weyl_cap) {
  const long long kk = k + alg.dual_coxeter;
  auto w = weyl_group(alg, weyl_cap);
  KacPetersonS out;
  out.labels = dominant_weights(alg, k);
  const size_t n = out.labels.size();

  StandardLattices lat = standard_lattices(alg);
  CosetSystem disc = quotient(lat.weight, dilate(lat.long_root, Rational(kk)));
  double norm = 1.0 / std::sqrt((double)disc.order);
  std::complex<double> phase =
      expi2pi(Rational((long long)alg.positive_roots.size(), 4));  // i^{|roots+|}

  std::vector<std::vector<WeightVec>> orbits(n);
  for (size_t a = 0; a < n; ++a) {
    orbits[a].reserve(w.size());
    for (const auto& el : w) orbits[a].push_back(weyl_apply(el, out.labels[a] + alg.rho));
  }

  out.s.assign(n, std::vector<std::complex<double>>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      WeightVec mu = out.labels[b] + alg.rho;
      std::complex<double> acc = 0.0;
      for (size_t wi = 0; wi < w.size(); ++wi) {
        Rational e = -(alg.inner(orbits[a][wi], mu) / Rational(kk));
        acc += (double)w[wi].sign * expi2pi(e);
      }
      out.s[a][b] = phase * norm * acc;
    }
  return out;
}

// ---- affine Freudenthal ------------------------------------------------------

namespace {

using Coords = std::vector<long long>;

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

struct IntGeometry {
  const AlgebraDescriptor* alg;
  long long scale;           // all inner products below carry this factor
  std::vector<Coords> fi;    // scale * Gram matrix, integer
  std::vector<Coords> roots;             // positive roots, weight coords
  std::vector<long long> root_norms;     // scale * <a,a>
  Coords rho;

  explicit IntGeometry(const AlgebraDescriptor& a) : alg(&a) {
    scale = 1;
    for (size_t i = 0; i < a.gram.rows(); ++i)
      for (size_t j = 0; j < a.gram.cols(); ++j) scale = lcm_ll(scale, a.gram.at(i, j).den());
    fi.assign(a.rank, Coords(a.rank));
    for (int i = 0; i < a.rank; ++i)
      for (int j = 0; j < a.rank; ++j) {
        Rational v = a.gram.at(i, j) * Rational(scale);
        fi[i][j] = v.num();
      }
    for (const auto& r : a.positive_roots) roots.push_back(r.as_integers());
    for (const auto& r : roots) root_norms.push_back(inner(r, r));
    rho.assign(a.rank, 1);
  }

  long long inner(const Coords& u, const Coords& v) const {
    __int128 acc = 0;
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      __int128 row = 0;
      for (size_t j = 0; j < v.size(); ++j) row += (__int128)fi[i][j] * v[j];
      acc += (__int128)u[i] * row;
    }
    if (acc > INT64_MAX || acc < -INT64_MAX) throw std::overflow_error("inner: overflow");
    return (long long)acc;
  }

  Coords add_mul(const Coords& u, const Coords& v, long long j) const {
    Coords r(u);
    for (size_t i = 0; i < r.size(); ++i) r[i] += j * v[i];
    return r;
  }

  void reflect_dominant(Coords& v) const {
    const auto& cart = alg->cartan;
    while (true) {
      int neg = -1;
      for (int i = 0; i < alg->rank; ++i)
        if (v[i] < 0) {
          neg = i;
          break;
        }
      if (neg < 0) return;
      long long c = v[neg];
      for (int j = 0; j < alg->rank; ++j) v[j] -= c * cart[neg][j];
    }
  }
};

// Largest j >= 0 with a j^2 + 2 b j + c <= 0 given a > 0, seeded from the
// closed form and fixed up exactly.
long long quad_max_j(long long a, long long b, long long c) {
  double disc = (double)b * b - (double)a * c;
  if (disc < 0) return 0;
  long long j = (long long)((-(double)b + std::sqrt(disc)) / (double)a) + 2;
  auto ok = [&](long long x) {
    __int128 v = (__int128)a * x * x + 2 * (__int128)b * x + c;
    return v <= 0;
  };
  while (j > 0 && !ok(j)) --j;
  return j;
}

}  // namespace

MultTable::MultTable(const AlgebraDescriptor& alg, long long k, WeightVec lambda, int max_depth)
    : alg_(&alg), k_(k), lambda_(std::move(lambda)), max_depth_(max_depth) {
  if (k <= 0) throw std::invalid_argument("MultTable: level must be positive");
  if (max_depth < 0) throw std::invalid_argument("MultTable: negative depth");
  if (!lambda_.is_integral()) throw std::invalid_argument("MultTable: non-integral weight");
  Coords hw = lambda_.as_integers();
  for (long long c : hw)
    if (c < 0) throw std::invalid_argument("MultTable: highest weight must be dominant");
  if (alg.inner(lambda_, alg.theta) > Rational(k))
    throw std::invalid_argument("MultTable: weight is not level-" + std::to_string(k) +
                                " dominant");

  const int l = alg.rank;
  const long long kk = k + alg.dual_coxeter;
  IntGeometry g(alg);
  norm_lr_ = alg.inner(lambda_ + alg.rho, lambda_ + alg.rho);

  Coords lr = g.add_mul(hw, g.rho, 1);
  const long long norm_lr_i = g.inner(lr, lr);
  const long long max_bound = norm_lr_i + 2 * (long long)max_depth * kk * g.scale;

  // Memory guard: candidate count is bounded by the ball volume; refuse absurd
  // requests up front rather than thrashing.
  {
    double radius = std::sqrt((double)max_bound / g.scale);
    double est = std::pow(radius + 2.0, l);
    if (est * (max_depth + 1.0) > 5e8)
      throw resource_error("MultTable: depth " + std::to_string(max_depth) +
                           " exceeds the memory budget for rank " + std::to_string(l));
  }

  // All dominant coordinate vectors mu with <mu+rho, mu+rho> <= max_bound,
  // by BFS on coordinate increments (the norm is strictly increasing).
  std::set<Coords> cand_set;
  {
    std::vector<Coords> frontier{Coords(l, 0)};
    cand_set.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Coords> next;
      for (const auto& c : frontier) {
        for (int i = 0; i < l; ++i) {
          Coords c2(c);
          ++c2[i];
          if (cand_set.count(c2)) continue;
          Coords c2r = g.add_mul(c2, g.rho, 1);
          if (g.inner(c2r, c2r) > max_bound) continue;
          cand_set.insert(c2);
          next.push_back(std::move(c2));
        }
      }
      frontier = std::move(next);
    }
  }

  struct Cand {
    Coords mu;
    long long norm_i;  // scale * <mu+rho, mu+rho>
    long long drop;    // height of Lambda - mu in root coordinates
  };
  std::vector<Cand> cands;
  for (const auto& c : cand_set) {
    WeightVec diff = lambda_ - WeightVec::from_integers(c);
    WeightVec rc = alg.root_coords(diff);
    if (!rc.is_integral()) continue;  // not in Lambda + Q
    long long drop = 0;
    for (size_t i = 0; i < rc.size(); ++i) drop += rc[i].num();
    Coords cr = g.add_mul(c, g.rho, 1);
    cands.push_back({c, g.inner(cr, cr), drop});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.drop != b.drop ? a.drop < b.drop : a.mu < b.mu;
  });

  dominant_.assign((size_t)max_depth + 1, {});
  dominant_[0][hw] = 1;

  auto lookup = [&](Coords v, int depth) -> long long {
    if (depth < 0) return 0;
    g.reflect_dominant(v);
    const auto& m = dominant_[(size_t)depth];
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
  };

  const size_t nroots = g.roots.size();
  for (int n = 0; n <= max_depth; ++n) {
    const long long bound_n = norm_lr_i + 2LL * n * kk * g.scale;
    for (const auto& cand : cands) {
      if (n == 0 && cand.mu == hw) continue;  // seed
      long long denom = norm_lr_i - cand.norm_i + 2LL * n * kk * g.scale;
      if (denom <= 0) continue;  // outside the weight cone at this depth

      Coords mur = g.add_mul(cand.mu, g.rho, 1);
      __int128 acc = 0;

      // m = 0: positive roots at the same depth. Referenced weights have
      // strictly smaller drop, hence are already final in this pass.
      for (size_t r = 0; r < nroots; ++r) {
        long long a = g.root_norms[r];
        long long b = g.inner(mur, g.roots[r]);
        long long mua = g.inner(cand.mu, g.roots[r]);
        long long jmax = quad_max_j(a, b, cand.norm_i - bound_n);
        for (long long j = 1; j <= jmax; ++j) {
          long long m1 = lookup(g.add_mul(cand.mu, g.roots[r], j), n);
          if (m1) acc += (__int128)(mua + j * a) * m1;
        }
      }

      // m >= 1: every real root paired with imaginary shifts.
      for (long long m = 1; m <= n; ++m) {
        for (size_t r = 0; r < nroots; ++r) {
          for (int sgn = 1; sgn >= -1; sgn -= 2) {
            long long a = g.root_norms[r];
            long long b = sgn * g.inner(mur, g.roots[r]) + m * kk * g.scale;
            long long mua = sgn * g.inner(cand.mu, g.roots[r]);
            long long jmax = std::min(n / m, quad_max_j(a, b, cand.norm_i - bound_n));
            for (long long j = 1; j <= jmax; ++j) {
              long long m1 = lookup(g.add_mul(cand.mu, g.roots[r], sgn * j), n - (int)(j * m));
              if (m1) acc += (__int128)(mua + j * a + m * k * g.scale) * m1;
            }
          }
        }
        // Imaginary roots with multiplicity rank.
        for (long long j = 1; j * m <= n; ++j) {
          long long m1 = lookup(cand.mu, n - (int)(j * m));
          if (m1) acc += (__int128)l * m * k * g.scale * m1;
        }
      }

      __int128 num = 2 * acc;
      if (num == 0) continue;
      if (num % denom != 0 || num / denom < 0)
        throw std::logic_error("MultTable: Freudenthal recursion produced a non-integer");
      long long val = (long long)(num / denom);
      if (val) dominant_[(size_t)n][cand.mu] = val;
    }
  }

  // Unfold Weyl orbits per depth.
  unfolded_.assign((size_t)max_depth + 1, {});
  totals_.assign((size_t)max_depth + 1, 0);
  for (int n = 0; n <= max_depth; ++n) {
    for (const auto& [mu, m] : dominant_[(size_t)n]) {
      for (const auto& x : weyl_orbit(alg, WeightVec::from_integers(mu))) {
        unfolded_[(size_t)n].push_back({x, m});
        totals_[(size_t)n] += m;
      }
    }
  }
}

long long MultTable::mult(const WeightVec& mu, int depth) const {
  if (depth < 0 || depth > max_depth_) return 0;
  if (!mu.is_integral()) return 0;
  WeightVec dom = dominant_representative(*alg_, mu);
  auto it = dominant_[(size_t)depth].find(dom.as_integers());
  return it == dominant_[(size_t)depth].end() ? 0 : it->second;
}

const std::vector<MultTable::Entry>& MultTable::weights_at(int depth) const {
  if (depth < 0 || depth > max_depth_)
    throw std::out_of_range("MultTable: depth outside the table");
  return unfolded_[(size_t)depth];
}

long long MultTable::total_dim_at(int depth) const {
  if (depth < 0 || depth > max_depth_)
    throw std::out_of_range("MultTable: depth outside the table");
  return totals_[(size_t)depth];
}

EvalResult affine_character_eval(const MultTable& table, const WeightVec& h,
                                 std::complex<double> tau, std::complex<double> h_scale) {
  if (tau.imag() <= 0.0)
    throw std::invalid_argument("affine_character_eval: tau must be in the upper half plane");
  const auto& alg = table.algebra();
  const std::complex<double> i2pi(0.0, 2.0 * 3.14159265358979323846);
  Rational e0 = conformal_weight(alg, table.level(), table.highest_weight()) -
                central_charge(alg, table.level()) * Rational(1, 24);
  std::complex<double> q = std::exp(i2pi * tau);
  std::complex<double> acc = 0.0;
  double max_layer = 0.0;
  std::complex<double> qpow = std::exp(i2pi * tau * e0.to_double());
  for (int n = 0; n <= table.max_depth(); ++n) {
    std::complex<double> layer = 0.0;
    for (const auto& e : table.weights_at(n)) {
      Rational p = alg.inner(e.weight, h);
      layer += (double)e.mult * std::exp(i2pi * h_scale * p.to_double());
    }
    acc += layer * qpow;
    qpow *= q;
    max_layer = std::max(max_layer, std::abs(layer));
  }
  double aq = std::abs(q);
  double tail = max_layer * std::pow(aq, e0.to_double() + table.max_depth() + 1) / (1.0 - aq);
  return {acc, tail};
}

QSeries affine_character_series(const MultTable& table) {
  const auto& alg = table.algebra();
  Rational e0 = conformal_weight(alg, table.level(), table.highest_weight()) -
                central_charge(alg, table.level()) * Rational(1, 24);
  std::vector<Rational> coeffs;
  for (int n = 0; n <= table.max_depth(); ++n) coeffs.push_back(Rational(table.total_dim_at(n)));
  return QSeries(e0, std::move(coeffs));
}

}  // namespace paramod
