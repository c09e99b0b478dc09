#pragma once

#include <complex>
#include <map>
#include <vector>

#include "paramod/latticekit.hpp"
#include "paramod/qseries.hpp"
#include "paramod/rootsys.hpp"

namespace paramod {

// Level-k dominant integral weights <Lambda, theta> <= k, as finite parts in
// the fundamental-weight basis, lexicographically ordered by coordinates.
std::vector<WeightVec> dominant_weights(const AlgebraDescriptor& alg, long long k);

// Comarks <Lambda_i, theta>.
std::vector<long long> comarks(const AlgebraDescriptor& alg);

Rational central_charge(const AlgebraDescriptor& alg, long long k);

// n_Lambda = <Lambda + 2 rho, Lambda> / (2 (k + h_vee)).
Rational conformal_weight(const AlgebraDescriptor& alg, long long k, const WeightVec& lambda);

// Kac-Peterson matrix over the level-k dominant weights:
//   S_{L,M} = i^{|roots+|} |P/(k+h) Q_L|^{-1/2}
//             sum_w sign(w) exp(-2 pi i <w(L+rho), M+rho> / (k+h)).
struct KacPetersonS {
  std::vector<WeightVec> labels;
  std::vector<std::vector<std::complex<double>>> s;
};
KacPetersonS kac_peterson_S(const AlgebraDescriptor& alg, long long k,
                            unsigned long long weyl_cap = kDefaultWeylCap);

// Graded weight multiplicities of the level-k module L(k, Lambda), computed by
// the affine Freudenthal recursion on dominant representatives and unfolded to
// full Weyl orbits per depth. Frozen after construction.
class MultTable {
public:
  MultTable(const AlgebraDescriptor& alg, long long k, WeightVec lambda, int max_depth);

  const AlgebraDescriptor& algebra() const { return *alg_; }
  long long level() const { return k_; }
  const WeightVec& highest_weight() const { return lambda_; }
  int max_depth() const { return max_depth_; }

  // Multiplicity of weight mu at energy depth n (0 for anything outside).
  long long mult(const WeightVec& mu, int depth) const;

  struct Entry {
    WeightVec weight;
    long long mult;
  };
  // All weights (full orbits, not just dominant) with nonzero multiplicity.
  const std::vector<Entry>& weights_at(int depth) const;
  long long total_dim_at(int depth) const;

private:
  const AlgebraDescriptor* alg_;
  long long k_;
  WeightVec lambda_;
  int max_depth_;
  Rational norm_lr_;  // <Lambda+rho, Lambda+rho>
  std::vector<std::map<std::vector<long long>, long long>> dominant_;  // per depth
  std::vector<std::vector<Entry>> unfolded_;
  std::vector<long long> totals_;
};

// chi_{L(k,Lambda)}(h, tau) = sum_{n, mu} mult(mu, n)
//     exp(2 pi i h_scale <mu, h>) q^{n_Lambda - c/24 + n}.
EvalResult affine_character_eval(const MultTable& table, const WeightVec& h,
                                 std::complex<double> tau, std::complex<double> h_scale = 1.0);

// Normalized character as a q-expansion (h = 0 grading only).
QSeries affine_character_series(const MultTable& table);

}  // namespace paramod
