#include "paramod/parafermion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace paramod {

namespace {

using CMat = std::vector<std::vector<std::complex<double>>>;

std::complex<double> s_dual(std::complex<double> tau) {
  return -1.0 / tau;
}

// Equality of two normalized series on their common window; requires at
// least `min_terms` shared coefficients to count as a verdict.
enum class SeriesMatch { kEqual, kDiffer, kTooShallow };

SeriesMatch compare_series(const QSeries& a, const QSeries& b, int min_terms) {
  if (a.is_zero() || b.is_zero())
    return (a.is_zero() && b.is_zero()) ? SeriesMatch::kEqual : SeriesMatch::kDiffer;
  if (a.offset != b.offset) return SeriesMatch::kDiffer;
  int common = std::min(a.depth(), b.depth());
  for (int i = 0; i <= common; ++i)
    if (a.coeffs[(size_t)i] != b.coeffs[(size_t)i]) return SeriesMatch::kDiffer;
  return common + 1 >= min_terms ? SeriesMatch::kEqual : SeriesMatch::kTooShallow;
}

}  // namespace

ParafermionSystem::ParafermionSystem(AlgebraDescriptor alg, long long k,
                                     unsigned long long weyl_cap)
    : alg_(std::move(alg)), k_(k), weyl_cap_(weyl_cap), lattices_(standard_lattices(alg_)) {
  if (k <= 0) throw std::invalid_argument("ParafermionSystem: level must be positive");
  q_mod_kql_ = quotient(lattices_.root, dilate(lattices_.long_root, Rational(k_)));
  p_mod_q_ = quotient(lattices_.weight, lattices_.root);
  dominants_ = dominant_weights(alg_, k_);
  tables_.resize(dominants_.size());
}

Rational ParafermionSystem::central_charge_parafermion() const {
  return central_charge(alg_, k_) - Rational(alg_.rank);
}

ParafermionLabel ParafermionSystem::raw_label(size_t raw) const {
  if (raw >= raw_count()) throw std::out_of_range("ParafermionSystem: raw index");
  size_t q = (size_t)q_mod_kql_.order;
  return {raw / q, raw % q};
}

size_t ParafermionSystem::raw_index(size_t lambda_index, size_t beta_index) const {
  return lambda_index * (size_t)q_mod_kql_.order + beta_index;
}

const MultTable& ParafermionSystem::table(size_t lambda_index, int depth) {
  if (lambda_index >= dominants_.size())
    throw std::out_of_range("ParafermionSystem: dominant index");
  auto& slot = tables_[lambda_index];
  if (!slot || slot->max_depth() < depth)
    slot = std::make_unique<MultTable>(alg_, k_, dominants_[lambda_index],
                                       std::max(depth, depth_));
  return *slot;
}

void ParafermionSystem::ensure_depth(int depth) {
  depth_ = std::max(depth_, depth);
  for (size_t i = 0; i < dominants_.size(); ++i) table(i, depth_);
}

QSeries ParafermionSystem::branching_function(const WeightVec& lambda_hw,
                                              const WeightVec& lambda, int depth) {
  size_t idx = dominants_.size();
  for (size_t i = 0; i < dominants_.size(); ++i)
    if (dominants_[i] == lambda_hw) {
      idx = i;
      break;
    }
  if (idx == dominants_.size())
    throw std::invalid_argument("branching_function: " + lambda_hw.str() +
                                " is not a level-" + std::to_string(k_) + " dominant weight");
  if (!alg_.in_root_lattice(lambda - lambda_hw)) return QSeries();

  const MultTable& tbl = table(idx, depth);
  std::vector<Rational> coeffs((size_t)depth + 1);
  bool any = false;
  for (int n = 0; n <= depth; ++n) {
    long long m = tbl.mult(lambda, n);
    coeffs[(size_t)n] = Rational(m);
    any = any || m != 0;
  }
  if (!any) return QSeries();

  Rational off = conformal_weight(alg_, k_, lambda_hw) -
                 central_charge(alg_, k_) * Rational(1, 24) -
                 alg_.inner(lambda, lambda) / Rational(2 * k_);
  QSeries mult_string(off, std::move(coeffs));
  return (mult_string * eta_series(depth).pow(alg_.rank)).normalized();
}

QSeries ParafermionSystem::branching_by_index(size_t raw, int depth) {
  ParafermionLabel lb = raw_label(raw);
  return branching_function(dominants_[lb.lambda_index],
                            dominants_[lb.lambda_index] + q_mod_kql_.reps[lb.beta_index], depth);
}

Rational ParafermionSystem::t_phase(const WeightVec& lambda_hw, const WeightVec& beta) const {
  WeightVec lambda = lambda_hw + q_mod_kql_.reduce(beta);
  Rational t = conformal_weight(alg_, k_, lambda_hw) -
               alg_.inner(lambda, lambda) / Rational(2 * k_) -
               central_charge(alg_, k_) * Rational(1, 24) + Rational(alg_.rank, 24);
  return t.mod1();
}

const CMat& ParafermionSystem::raw_S() {
  if (raw_s_) return *raw_s_;
  if (!kp_) kp_ = kac_peterson_S(alg_, k_, weyl_cap_);
  CosetSystem disc = quotient(lattices_.weight, dilate(lattices_.long_root, Rational(k_)));
  double norm = 1.0 / std::sqrt((double)disc.order);

  size_t n = raw_count();
  CMat s(n, std::vector<std::complex<double>>(n));
  for (size_t r = 0; r < n; ++r) {
    ParafermionLabel a = raw_label(r);
    WeightVec la = dominants_[a.lambda_index] + q_mod_kql_.reps[a.beta_index];
    for (size_t r2 = 0; r2 < n; ++r2) {
      ParafermionLabel b = raw_label(r2);
      WeightVec mu = dominants_[b.lambda_index] + q_mod_kql_.reps[b.beta_index];
      Rational e = (alg_.inner(la, mu) / Rational(k_)).mod1();
      s[r][r2] = norm * kp_->s[a.lambda_index][b.lambda_index] * expi2pi(e);
    }
  }
  raw_s_ = std::move(s);
  return *raw_s_;
}

const CanonicalLabels& ParafermionSystem::canonical_labels(int fingerprint_depth) {
  if (canon_ && canon_->fingerprint_depth >= fingerprint_depth) return *canon_;

  std::vector<size_t> currents;
  for (int i = 0; i < alg_.rank; ++i)
    if (alg_.marks[(size_t)i] == 1) currents.push_back((size_t)i);

  const size_t qn = (size_t)q_mod_kql_.order;
  const size_t dn = dominants_.size();

  for (int fp = fingerprint_depth; fp <= 160; fp *= 2) {
    if (!currents.empty()) ensure_depth(fp + 10);  // no currents: classes are singletons

    // Per current node: the permutation Lambda -> Lambda' matched by equality
    // of branching fingerprints under lambda -> lambda + k Lambda_i.
    bool ambiguous = false;
    std::vector<std::vector<size_t>> maps;  // one per current
    for (size_t ci : currents) {
      WeightVec shift(alg_.rank);
      shift[ci] = Rational(k_);
      std::vector<size_t> map(dn, dn);
      for (size_t a = 0; a < dn && !ambiguous; ++a) {
        std::vector<size_t> hits;
        for (size_t b = 0; b < dn; ++b) {
          bool ok = true;
          bool shallow = false;
          for (size_t j = 0; j < qn && ok; ++j) {
            WeightVec la = dominants_[a] + q_mod_kql_.reps[j];
            WeightVec la2 = la + shift;
            if (!alg_.in_root_lattice(la2 - dominants_[b])) {
              ok = false;
              break;
            }
            if (t_phase(dominants_[a], q_mod_kql_.reps[j]) !=
                t_phase(dominants_[b], la2 - dominants_[b])) {
              ok = false;
              break;
            }
            // The window fp+10 escalates until every string carries at least
            // `fingerprint_depth` certified terms; the certification strength
            // itself stays fixed.
            SeriesMatch m =
                compare_series(branching_function(dominants_[a], la, fp + 10),
                               branching_function(dominants_[b], la2, fp + 10),
                               fingerprint_depth);
            if (m == SeriesMatch::kDiffer) ok = false;
            if (m == SeriesMatch::kTooShallow) shallow = true;
          }
          if (ok && shallow) {
            ambiguous = true;  // cannot certify at this depth
            break;
          }
          if (ok) hits.push_back(b);
        }
        if (ambiguous) break;
        if (hits.empty())
          throw std::logic_error("canonical_labels: no image under the simple current at node " +
                                 std::to_string(ci + 1));
        if (hits.size() > 1) {
          ambiguous = true;
          break;
        }
        map[a] = hits[0];
      }
      if (ambiguous) break;
      maps.push_back(std::move(map));
    }
    if (ambiguous) continue;

    // Close the raw labels under all current permutations (union-find).
    size_t n = raw_count();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t m = 0; m < currents.size(); ++m) {
      WeightVec shift(alg_.rank);
      shift[currents[m]] = Rational(k_);
      for (size_t r = 0; r < n; ++r) {
        ParafermionLabel lb = raw_label(r);
        WeightVec la2 = dominants_[lb.lambda_index] + q_mod_kql_.reps[lb.beta_index] + shift;
        size_t b = maps[m][lb.lambda_index];
        size_t bj = q_mod_kql_.index_of(la2 - dominants_[b]);
        size_t r2 = raw_index(b, bj);
        size_t ra = find(r), rb = find(r2);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }

    CanonicalLabels canon;
    canon.fingerprint_depth = fp;
    canon.class_of.assign(n, 0);
    std::map<size_t, size_t> root_to_class;
    for (size_t r = 0; r < n; ++r) {
      size_t root = find(r);
      auto [it, fresh] = root_to_class.try_emplace(root, canon.classes.size());
      if (fresh) {
        canon.classes.emplace_back();
        canon.reps.push_back(root);
      }
      canon.class_of[r] = it->second;
      canon.classes[it->second].push_back(r);
    }

    long long expected_num = (long long)dn * (long long)qn;
    if (expected_num % p_mod_q_.order != 0 ||
        (long long)canon.classes.size() != expected_num / p_mod_q_.order)
      throw std::logic_error(
          "canonical_labels: class count " + std::to_string(canon.classes.size()) +
          " does not match |P+^k| |Q/kQL| / |P/Q| = " +
          std::to_string(expected_num / p_mod_q_.order));

    canon_ = std::move(canon);
    return *canon_;
  }
  throw std::runtime_error("canonical_labels: fingerprint depth exhausted without resolving"
                           " the simple-current maps");
}

ParafermionData ParafermionSystem::parafermion_S(int fingerprint_depth, double tol) {
  const CanonicalLabels& canon = canonical_labels(fingerprint_depth);
  const CMat& raw = raw_S();
  const size_t nc = canon.classes.size();

  // S must descend to classes: entries constant across each class pair.
  for (size_t c1 = 0; c1 < nc; ++c1)
    for (size_t c2 = 0; c2 < nc; ++c2) {
      std::complex<double> ref = raw[canon.reps[c1]][canon.reps[c2]];
      for (size_t r1 : canon.classes[c1])
        for (size_t r2 : canon.classes[c2])
          if (std::abs(raw[r1][r2] - ref) > tol)
            throw std::logic_error("parafermion_S: raw S-matrix is not constant on class pair (" +
                                   std::to_string(c1) + "," + std::to_string(c2) + ")");
    }

  ParafermionData data;
  data.canon = canon;
  data.central_charge = central_charge_parafermion();
  data.s.assign(nc, std::vector<std::complex<double>>(nc));
  double proj = (double)p_mod_q_.order;
  for (size_t c1 = 0; c1 < nc; ++c1)
    for (size_t c2 = 0; c2 < nc; ++c2)
      data.s[c1][c2] = proj * raw[canon.reps[c1]][canon.reps[c2]];

  Rational cp24 = central_charge_parafermion() * Rational(1, 24);
  for (size_t c = 0; c < nc; ++c) {
    ParafermionLabel lb = raw_label(canon.reps[c]);
    data.labels.push_back(lb);
    data.t_phases.push_back(
        t_phase(dominants_[lb.lambda_index], q_mod_kql_.reps[lb.beta_index]));
    QSeries b = branching_by_index(canon.reps[c], std::max(depth_, fingerprint_depth + 10));
    if (b.is_zero()) throw std::logic_error("parafermion_S: empty branching function");
    data.weights.push_back(b.offset + cp24);
  }
  return data;
}

TransformReport ParafermionSystem::verify_S_transform(std::complex<double> tau, int depth) {
  ensure_depth(depth);
  const CMat& s = raw_S();
  const size_t n = raw_count();

  std::vector<QSeries> series(n);
  std::vector<EvalResult> at_tau(n);
  for (size_t r = 0; r < n; ++r) {
    series[r] = branching_by_index(r, depth);
    at_tau[r] = evaluate(series[r], tau);
  }

  TransformReport rep;
  for (size_t r = 0; r < n; ++r) {
    EvalResult lhs = evaluate(series[r], s_dual(tau));
    std::complex<double> rhs = 0.0;
    double tail = lhs.tail_bound;
    for (size_t r2 = 0; r2 < n; ++r2) {
      rhs += s[r][r2] * at_tau[r2].value;
      tail += std::abs(s[r][r2]) * at_tau[r2].tail_bound;
    }
    double resid = std::abs(lhs.value - rhs);
    rep.rows.push_back({r, resid, tail});
    rep.max_residual = std::max(rep.max_residual, resid);
  }
  return rep;
}

double ParafermionSystem::verify_orbifold_identity(const WeightVec& lambda_hw,
                                                   const WeightVec& beta,
                                                   std::complex<double> tau, int depth) {
  size_t idx = dominants_.size();
  for (size_t i = 0; i < dominants_.size(); ++i)
    if (dominants_[i] == lambda_hw) idx = i;
  if (idx == dominants_.size())
    throw std::invalid_argument("verify_orbifold_identity: not a dominant weight");

  WeightVec lambda = lambda_hw + q_mod_kql_.reduce(beta);
  std::complex<double> lhs = evaluate(branching_function(lambda_hw, lambda, depth), tau).value;

  // Denominator theta over sqrt(k) Q_L shifted by lambda/sqrt(k).
  Lattice scaled = scale_form(lattices_.long_root, Rational(k_));
  Rational radius = alg_.inner(lambda, lambda) / Rational(2 * k_) + Rational(12);
  std::complex<double> theta =
      theta_eval(scaled, lambda * Rational(1, k_), WeightVec(alg_.rank), tau, radius).value;

  std::complex<double> eta_l = evaluate(eta_series(depth).pow(alg_.rank), tau).value;

  CosetSystem g = quotient(dilate(lattices_.weight, Rational(1, k_)), lattices_.root_dual);
  const MultTable& tbl = table(idx, depth);
  std::complex<double> acc = 0.0;
  for (const auto& a : g.reps) {
    Rational phase = (-alg_.inner(a, lambda)).mod1();
    acc += expi2pi(phase) * affine_character_eval(tbl, a, tau).value;
  }
  std::complex<double> rhs = eta_l / theta * acc / (double)q_mod_kql_.order;
  return std::abs(lhs - rhs);
}

std::vector<std::vector<std::vector<long long>>> verlinde_fusion(const ParafermionData& data,
                                                                 double tol) {
  const size_t n = data.labels.size();
  const auto& s = data.s;
  for (size_t m = 0; m < n; ++m)
    if (std::abs(s[0][m]) < 1e-12)
      throw std::runtime_error("verlinde_fusion: vanishing vacuum S-entry");

  std::vector<std::vector<std::vector<long long>>> fus(
      n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        std::complex<double> acc = 0.0;
        for (size_t m = 0; m < n; ++m)
          acc += s[a][m] * s[b][m] * std::conj(s[c][m]) / s[0][m];
        double rounded = std::round(acc.real());
        if (std::abs(acc.real() - rounded) > tol || std::abs(acc.imag()) > tol ||
            rounded < 0.0)
          throw std::runtime_error("verlinde_fusion: non-integral coefficient at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ")");
        fus[a][b][c] = (long long)rounded;
      }
  return fus;
}

}  // namespace paramod
