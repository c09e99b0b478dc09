#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramod/linalg.hpp"
#include "paramod/rational.hpp"

namespace paramod {

// Simple Lie algebra data in Bourbaki conventions, normalized so the long
// roots have squared length 2. All vectors carry coordinates in the
// fundamental-weight basis, where the i-th simple root is the i-th row of the
// Cartan matrix and inner products go through the exact Gram matrix
// F_ij = <Lambda_i, Lambda_j> = d_j (A^{-1})_ij.
enum class Family { A, B, C, D, E, F, G };

struct AlgebraDescriptor {
  Family family;
  int rank;
  IMat cartan;              // A_ij = 2<a_i,a_j>/<a_j,a_j>
  QMatrix cartan_inv;
  QMatrix gram;             // F_ij = <Lambda_i, Lambda_j>
  std::vector<Rational> symmetrizers;  // d_i = <a_i,a_i>/2
  std::vector<WeightVec> simple_roots;
  std::vector<WeightVec> positive_roots;  // by increasing height; last is theta
  WeightVec theta;
  WeightVec rho;            // (1,...,1)
  std::vector<long long> marks;  // theta = sum marks_i * a_i
  long long dual_coxeter = 0;
  long long dim_g = 0;

  Rational inner(const WeightVec& u, const WeightVec& v) const { return bilinear(u, gram, v); }

  std::string name() const;

  // Coefficients c with v = sum c_i a_i (solves v = c * A).
  WeightVec root_coords(const WeightVec& v) const { return mul_row(v, cartan_inv); }
  bool in_root_lattice(const WeightVec& v) const { return root_coords(v).is_integral(); }

  // |W| from the product-of-degrees closed form.
  unsigned long long weyl_order() const;
};

AlgebraDescriptor build_algebra(Family s, int rank);
AlgebraDescriptor build_algebra(const std::string& name);  // "A1", "G2", ...

inline constexpr unsigned long long kDefaultWeylCap = 10'000'000ULL;

// Deliberate refusal to start a computation that exceeds a resource cap.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct weyl_cap_error : resource_error {
  unsigned long long required;
  explicit weyl_cap_error(unsigned long long req)
      : resource_error("Weyl group has " + std::to_string(req) +
                       " elements; raise the enumeration cap to at least this"),
        required(req) {}
};

struct WeylElement {
  IMat mat;  // acts on weight-basis row vectors from the right: v -> v * mat
  int sign;  // det = (-1)^length
};

// Full Weyl group by closure under simple reflections; throws weyl_cap_error
// if the closed-form order exceeds `cap`.
std::vector<WeylElement> weyl_group(const AlgebraDescriptor& alg,
                                    unsigned long long cap = kDefaultWeylCap);

WeightVec weyl_apply(const WeylElement& w, const WeightVec& v);

// Reflect into the dominant chamber (coordinates >= 0).
WeightVec dominant_representative(const AlgebraDescriptor& alg, WeightVec v);

// Images of v under the full orbit {w(v)} without enumerating W.
std::vector<WeightVec> weyl_orbit(const AlgebraDescriptor& alg, const WeightVec& v);

}  // namespace paramod
