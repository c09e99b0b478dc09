#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "paramod/affinekit.hpp"

namespace paramod {

// Modular data of the parafermion vertex algebra K(g, k): the commutant of
// the Heisenberg subalgebra inside the level-k affine vacuum module. Raw
// sectors are pairs (Lambda, beta) with Lambda level-k dominant and beta a
// coset representative of Q / k Q_L; distinct raw pairs can present the same
// simple module, and the identifications are generated by the simple
// currents (fundamental weights with mark 1), detected here by matching
// branching-function fingerprints.
struct ParafermionLabel {
  size_t lambda_index;  // into dominants
  size_t beta_index;    // into q_mod_kql reps
};

struct CanonicalLabels {
  std::vector<std::vector<size_t>> classes;  // raw indices, each sorted
  std::vector<size_t> reps;                  // lex-least raw index per class
  std::vector<size_t> class_of;              // raw index -> class
  int fingerprint_depth = 0;                 // depth that resolved all matches
};

struct ParafermionData {
  std::vector<ParafermionLabel> labels;  // canonical representatives
  std::vector<Rational> t_phases;        // T exponents mod 1
  std::vector<Rational> weights;         // conformal weights h
  std::vector<std::vector<std::complex<double>>> s;
  Rational central_charge;
  CanonicalLabels canon;
};

struct TransformReport {
  struct Row {
    size_t raw_index;
    double residual;
    double tail_bound;
  };
  std::vector<Row> rows;
  double max_residual = 0.0;
};

class ParafermionSystem {
public:
  ParafermionSystem(AlgebraDescriptor alg, long long k,
                    unsigned long long weyl_cap = kDefaultWeylCap);

  const AlgebraDescriptor& algebra() const { return alg_; }
  long long level() const { return k_; }
  const std::vector<WeightVec>& dominants() const { return dominants_; }
  const CosetSystem& q_mod_kql() const { return q_mod_kql_; }
  long long center_order() const { return p_mod_q_.order; }  // |P/Q|
  Rational central_charge_parafermion() const;

  size_t raw_count() const { return dominants_.size() * (size_t)q_mod_kql_.order; }
  ParafermionLabel raw_label(size_t raw) const;
  size_t raw_index(size_t lambda_index, size_t beta_index) const;

  // chi of the sector (Lambda, lambda): eta^l q^{-<la,la>/2k} times the
  // depth-graded multiplicity string of weight lambda in L(k, Lambda),
  // normalized so the offset is h - c/24. Zero series if lambda is not in
  // Lambda + Q.
  QSeries branching_function(const WeightVec& lambda_hw, const WeightVec& lambda, int depth);
  QSeries branching_by_index(size_t raw, int depth);

  // T-phase n_Lambda - <Lambda+beta, Lambda+beta>/2k - c_affine/24 + l/24
  // mod 1; beta may be any vector of Q and is reduced mod k Q_L.
  Rational t_phase(const WeightVec& lambda_hw, const WeightVec& beta) const;

  // Raw-sector S-matrix |P/kQ_L|^{-1/2} S^{KP}_{Lambda,Lambda'}
  // exp(2 pi i <Lambda+beta, Lambda'+beta'>/k).
  const std::vector<std::vector<std::complex<double>>>& raw_S();

  // Simple-current identifications via branching fingerprints; validates the
  // class count |P_+^k| |Q/kQ_L| / |P/Q|.
  const CanonicalLabels& canonical_labels(int fingerprint_depth = 20);

  // Canonical modular data: one label per class, S projected by |P/Q| after
  // checking raw entries are constant on class pairs (tolerance `tol`).
  ParafermionData parafermion_S(int fingerprint_depth = 20, double tol = 1e-10);

  // Residuals of chi(-1/tau) = S * chi(tau) over all raw sectors.
  TransformReport verify_S_transform(std::complex<double> tau, int depth);

  // Residual of the orbifold-style character identity for the sector
  // (Lambda, Lambda+beta): chi_M * theta / eta^l averaged against the dual
  // group (1/k)P / Q*.
  double verify_orbifold_identity(const WeightVec& lambda_hw, const WeightVec& beta,
                                  std::complex<double> tau, int depth);

  const MultTable& table(size_t lambda_index, int depth);

private:
  void ensure_depth(int depth);

  AlgebraDescriptor alg_;
  long long k_;
  unsigned long long weyl_cap_;
  StandardLattices lattices_;
  CosetSystem q_mod_kql_;  // Q / k Q_L
  CosetSystem p_mod_q_;    // P / Q
  std::vector<WeightVec> dominants_;
  int depth_ = -1;
  std::vector<std::unique_ptr<MultTable>> tables_;
  std::optional<KacPetersonS> kp_;
  std::optional<std::vector<std::vector<std::complex<double>>>> raw_s_;
  std::optional<CanonicalLabels> canon_;
};

// Verlinde fusion rules N_{ab}^c = sum_m S_am S_bm conj(S_cm) / S_0m rounded
// from the canonical S-matrix; throws if any coefficient is farther than
// `tol` from a nonnegative integer.
std::vector<std::vector<std::vector<long long>>> verlinde_fusion(const ParafermionData& data,
                                                                 double tol = 1e-6);

}  // namespace paramod
