#pragma once

#include <string>
#include <vector>

#include "paramod/rootsys.hpp"

namespace paramod {

// A full-rank lattice given by basis rows in weight-basis coordinates together
// with the ambient bilinear form. Rescaled lattices such as sqrt(k) Q_L are
// modeled by scaling the form, so coordinates stay exact rationals.
struct Lattice {
  QMatrix basis;  // rows are basis vectors
  QMatrix form;   // ambient symmetric form on weight space
  std::string label;

  int rank() const { return (int)basis.rows(); }
  Rational pair(const WeightVec& u, const WeightVec& v) const { return bilinear(u, form, v); }
  QMatrix gram() const { return basis * form * basis.transpose(); }
  WeightVec from_coords(const WeightVec& coords) const { return mul_row(coords, basis); }
  // Basis coordinates of an ambient vector (rational in general).
  WeightVec coords_of(const WeightVec& v) const;
  bool contains(const WeightVec& v) const { return coords_of(v).is_integral(); }
};

Lattice make_lattice(QMatrix basis, QMatrix form, std::string label);

// Dual basis rows gram^{-1} * basis, same ambient form.
Lattice dual_lattice(const Lattice& l);

// Scale the bilinear form by s (models sqrt(s)-rescaling of the lattice).
Lattice scale_form(const Lattice& l, const Rational& s);

// Scale the basis vectors by m (the sublattice m*L when m is an integer).
Lattice dilate(const Lattice& l, const Rational& m);

bool is_even(const Lattice& l);
Rational discriminant(const Lattice& l);  // det of the Gram matrix

// Standard lattices of a simple algebra: root lattice Q, long-root lattice
// Q_L, weight lattice P, and the dual Q* of the root lattice.
struct StandardLattices {
  Lattice root;       // Q
  Lattice long_root;  // Q_L
  Lattice weight;     // P
  Lattice root_dual;  // Q*
};
StandardLattices standard_lattices(const AlgebraDescriptor& alg);

// Finite quotient sup/sub with canonical coset representatives obtained from
// a Smith-adapted basis: sup = span{b_i}, sub = span{d_i b_i}; representatives
// are sum t_i b_i with t_i in [0, d_i), ordered lexicographically by tuple.
struct CosetSystem {
  Lattice sup, sub;
  QMatrix adapted;  // rows b_i
  QMatrix adapted_inv;
  std::vector<long long> divisors;  // elementary divisors d_i
  long long order = 1;
  std::vector<WeightVec> reps;
  std::vector<std::vector<long long>> tuples;

  std::vector<long long> tuple_of(const WeightVec& v) const;  // throws if v not in sup
  WeightVec reduce(const WeightVec& v) const;
  size_t index_of(const WeightVec& v) const;
};

CosetSystem quotient(const Lattice& sup, const Lattice& sub);

// Checks that (beta, alpha) -> exp(2 pi i <beta,alpha>) puts Q/kQ_L and
// (1/k)P/Q* in perfect duality: the pairing table mod 1 has pairwise distinct
// rows and the two groups have equal order.
bool duality_pairing_check(const AlgebraDescriptor& alg, long long k);

}  // namespace paramod
