#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paramod/latticekit.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace paramod;

namespace {

WeightVec root_combo(const AlgebraDescriptor& alg, const std::vector<long long>& coeff) {
  WeightVec v((size_t)alg.rank);
  for (size_t i = 0; i < coeff.size(); ++i)
    v = v + alg.simple_roots[i] * Rational(coeff[i]);
  return v;
}

}  // namespace

TEST_CASE("standard lattices: containments and discriminants") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "F4", "G2"}) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    StandardLattices L = standard_lattices(alg);

    // Q subset P, Q_L subset Q, Q* subset P (dual of Q contains... is inside P).
    for (size_t i = 0; i < (size_t)alg.rank; ++i) {
      CHECK(L.weight.contains(L.root.basis.row(i)));
      CHECK(L.root.contains(L.long_root.basis.row(i)));
      CHECK(L.weight.contains(L.root_dual.basis.row(i)));
    }
    // |P/Q| = det(Cartan) and disc(Q) = |P/Q|^2 * disc(P).
    Rational detA = to_qmatrix(alg.cartan).determinant().abs();
    CHECK(discriminant(L.root) == detA * detA * discriminant(L.weight));
    // Q_L is always even; Q is even exactly in the simply-laced cases.
    // <P, Q_L> is integral (the dual of Q_L is P).
    CHECK(is_even(L.long_root));
    bool simply_laced = (name[0] == 'A' || name[0] == 'D' || name[0] == 'E');
    CHECK(is_even(L.root) == simply_laced);
    for (size_t i = 0; i < (size_t)alg.rank; ++i)
      for (size_t j = 0; j < (size_t)alg.rank; ++j)
        CHECK(L.root.pair(L.weight.basis.row(i), L.long_root.basis.row(j)).is_integer());
  }
}

TEST_CASE("dual of the dual returns the lattice") {
  for (const char* name : {"A2", "B2", "C3", "G2"}) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    StandardLattices L = standard_lattices(alg);
    Lattice dd = dual_lattice(dual_lattice(L.root));
    // same lattice: mutual containment
    for (size_t i = 0; i < (size_t)alg.rank; ++i) {
      CHECK(dd.contains(L.root.basis.row(i)));
      CHECK(L.root.contains(dd.basis.row(i)));
    }
    // dual pairing is integral: <Q, Q*> in Z
    for (size_t i = 0; i < (size_t)alg.rank; ++i)
      for (size_t j = 0; j < (size_t)alg.rank; ++j)
        CHECK(L.root.pair(L.root.basis.row(i), L.root_dual.basis.row(j)).is_integer());
  }
}

TEST_CASE("scale_form and dilate model sqrt(k)L and mL") {
  AlgebraDescriptor alg = build_algebra("A2");
  StandardLattices L = standard_lattices(alg);
  Lattice k3 = scale_form(L.root, Rational(3));
  CHECK(discriminant(k3) == discriminant(L.root) * Rational(9));
  WeightVec a = L.root.basis.row(0);
  CHECK(k3.pair(a, a) == L.root.pair(a, a) * Rational(3));
  Lattice twoQ = dilate(L.root, Rational(2));
  CHECK(L.root.contains(twoQ.basis.row(0)));
  CHECK(!twoQ.contains(L.root.basis.row(0)));
  CHECK(discriminant(twoQ) == discriminant(L.root) * Rational(16));  // 2^(2*rank)
}

TEST_CASE("quotient order table |P/Q°|") {
  // P over the dual lattice of Q: 1 for A,D,E; 2 for B; 2^(l-1) for C;
  // 4 for F4; 3 for G2.
  const std::map<std::string, long long> want = {
      {"A1", 1}, {"A2", 1}, {"A3", 1}, {"A4", 1}, {"A5", 1}, {"A6", 1},
      {"D4", 1}, {"D5", 1}, {"E6", 1},
      {"B2", 2}, {"B3", 2}, {"B4", 2}, {"B5", 2},
      {"C2", 2}, {"C3", 4}, {"C4", 8}, {"C5", 16},
      {"F4", 4}, {"G2", 3},
  };
  for (const auto& [name, order] : want) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    StandardLattices L = standard_lattices(alg);
    CosetSystem cs = quotient(L.weight, L.root_dual);
    CHECK(cs.order == order);
    CHECK(cs.reps.size() == (size_t)order);
  }
}

TEST_CASE("quotient reps are canonical and reduce consistently") {
  AlgebraDescriptor alg = build_algebra("A2");
  StandardLattices L = standard_lattices(alg);
  CosetSystem cs = quotient(L.weight, L.root);
  REQUIRE(cs.order == 3);
  // reduce(rep + sub element) = rep, index_of matches
  for (size_t i = 0; i < cs.reps.size(); ++i) {
    WeightVec shifted = cs.reps[i] + cs.sub.basis.row(0) - cs.sub.basis.row(1);
    CHECK(cs.reduce(shifted) == cs.reps[i]);
    CHECK(cs.index_of(shifted) == i);
  }
  // rep 0 is the zero coset
  CHECK(cs.reps[0].is_zero());
  CHECK_THROWS_AS(cs.tuple_of(L.weight.basis.row(0) * Rational(1, 2)), std::exception);
}

TEST_CASE("long-root cosets match the tabulated representatives") {
  // Q/Q_L representative sets, expressed in simple-root coefficients.
  struct Case {
    std::string name;
    std::vector<std::vector<long long>> reps;
  };
  const std::vector<Case> cases = {
      // B2: {0, eps_1} with eps_1 = a_1 + a_2
      {"B2", {{0, 0}, {1, 1}}},
      // C3: {sum a_i alpha_i, a_i in {0,1}, i < l}
      {"C3", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}},
      // F4: {a (a_2 + a_3) + b a_4}, eps_3 = a_2 + a_3
      {"F4", {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}}},
      // G2: {0, a_1, 2 a_1} (short simple root)
      {"G2", {{0, 0}, {1, 0}, {2, 0}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    AlgebraDescriptor alg = build_algebra(c.name);
    StandardLattices L = standard_lattices(alg);
    CosetSystem cs = quotient(L.root, L.long_root);
    REQUIRE(cs.reps.size() == c.reps.size());
    // The listed representatives hit every coset exactly once.
    std::set<size_t> hit;
    for (const auto& coeff : c.reps) {
      WeightVec v = root_combo(alg, coeff);
      hit.insert(cs.index_of(v));
    }
    CHECK(hit.size() == c.reps.size());
  }
}

TEST_CASE("duality pairing between Q/kQ_L and (1/k)P/Q*") {
  for (const char* name : {"A1", "A2", "B2", "C3", "F4", "G2"}) {
    for (long long k = 1; k <= 3; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      CHECK(duality_pairing_check(build_algebra(name), k));
    }
  }
}

TEST_CASE("quotient rejects a non-sublattice") {
  AlgebraDescriptor alg = build_algebra("A2");
  StandardLattices L = standard_lattices(alg);
  CHECK_THROWS_AS(quotient(L.root, L.weight), std::exception);  // P is not inside Q
}
