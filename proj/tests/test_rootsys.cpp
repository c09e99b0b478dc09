#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <paramod/rootsys.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace paramod;

namespace {

// Independent |W| values (orders of the classical/exceptional Weyl groups).
const std::map<std::string, unsigned long long> kWeylOrders = {
    {"A1", 2},      {"A2", 6},      {"A3", 24},      {"A4", 120},
    {"B2", 8},      {"B3", 48},     {"C3", 48},      {"C4", 384},
    {"D4", 192},    {"F4", 1152},   {"G2", 12},      {"E6", 51840},
};

// Independent (h_dual, dim) table.
struct AlgFacts {
  long long dual_coxeter, dim, n_pos_roots;
};
const std::map<std::string, AlgFacts> kFacts = {
    {"A1", {2, 3, 1}},     {"A2", {3, 8, 3}},      {"A3", {4, 15, 6}},
    {"B2", {3, 10, 4}},    {"B3", {5, 21, 9}},     {"C3", {4, 21, 9}},
    {"C4", {5, 36, 16}},   {"D4", {6, 28, 12}},    {"F4", {9, 52, 24}},
    {"G2", {4, 14, 6}},    {"E6", {12, 78, 36}},
};

}  // namespace

TEST_CASE("Cartan matrices are the Bourbaki ones") {
  AlgebraDescriptor a2 = build_algebra("A2");
  CHECK(a2.cartan == IMat{{2, -1}, {-1, 2}});

  AlgebraDescriptor b2 = build_algebra("B2");
  // alpha_1 long, alpha_2 short: A_12 = -2 appears in row 1? Bourbaki B_l has
  // A_{l-1,l} = -2: the long root sees the short one twice.
  CHECK(b2.cartan == IMat{{2, -2}, {-1, 2}});
  CHECK(b2.symmetrizers[0] == Rational(1));
  CHECK(b2.symmetrizers[1] == Rational(1, 2));

  AlgebraDescriptor c3 = build_algebra("C3");
  CHECK(c3.cartan == IMat{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(c3.symmetrizers == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1)});

  AlgebraDescriptor g2 = build_algebra("G2");
  CHECK(g2.cartan == IMat{{2, -1}, {-3, 2}});
  CHECK(g2.symmetrizers == std::vector<Rational>{Rational(1, 3), Rational(1)});

  AlgebraDescriptor f4 = build_algebra("F4");
  CHECK(f4.cartan ==
        IMat{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}});
}

TEST_CASE("long roots have norm 2 and the Gram matrix matches the Cartan pairing") {
  for (const char* name : {"A1", "A2", "B2", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    CHECK(alg.inner(alg.theta, alg.theta) == Rational(2));
    // <Lambda_i, alpha_j> = delta_ij d_j ties the Gram matrix to coweights.
    for (int i = 0; i < alg.rank; ++i)
      for (int j = 0; j < alg.rank; ++j) {
        WeightVec li((size_t)alg.rank);
        li[(size_t)i] = Rational(1);
        Rational want = (i == j) ? alg.symmetrizers[(size_t)j] : Rational(0);
        CHECK(alg.inner(li, alg.simple_roots[(size_t)j]) == want);
      }
    // simple root norms are 2 d_i
    for (int i = 0; i < alg.rank; ++i)
      CHECK(alg.inner(alg.simple_roots[(size_t)i], alg.simple_roots[(size_t)i]) ==
            alg.symmetrizers[(size_t)i] * Rational(2));
  }
}

TEST_CASE("positive root counts, dual Coxeter numbers, dimensions") {
  for (const auto& [name, facts] : kFacts) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    CHECK((long long)alg.positive_roots.size() == facts.n_pos_roots);
    CHECK(alg.dual_coxeter == facts.dual_coxeter);
    CHECK(alg.dim_g == facts.dim);
    // theta is the last positive root and dominant
    CHECK(alg.positive_roots.back() == alg.theta);
    for (const auto& x : alg.theta.c) CHECK(x >= Rational(0));
    // all positive roots distinct
    std::set<std::vector<long long>> seen;
    for (const auto& r : alg.positive_roots) {
      WeightVec rc = alg.root_coords(r);
      CHECK(rc.is_integral());
      for (const auto& x : rc.c) CHECK(x >= Rational(0));
      seen.insert(rc.as_integers());
    }
    CHECK(seen.size() == alg.positive_roots.size());
  }
}

TEST_CASE("A3 equals D3") {
  AlgebraDescriptor a3 = build_algebra("A3");
  AlgebraDescriptor d3 = build_algebra("D3");
  CHECK(a3.positive_roots.size() == d3.positive_roots.size());
  CHECK(a3.dual_coxeter == d3.dual_coxeter);
  CHECK(a3.dim_g == d3.dim_g);
  CHECK(a3.weyl_order() == d3.weyl_order());
}

TEST_CASE("marks reconstruct theta") {
  for (const char* name : {"A2", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    WeightVec sum((size_t)alg.rank);
    for (int i = 0; i < alg.rank; ++i)
      sum = sum + alg.simple_roots[(size_t)i] * Rational(alg.marks[(size_t)i]);
    CHECK(sum == alg.theta);
  }
}

TEST_CASE("Weyl group enumeration matches the closed-form order") {
  for (const auto& [name, order] : kWeylOrders) {
    CAPTURE(name);
    AlgebraDescriptor alg = build_algebra(name);
    CHECK(alg.weyl_order() == order);
    if (order > 2000) continue;  // enumerate only the small ones here
    auto w = weyl_group(alg);
    CHECK(w.size() == order);
    // signs: half the elements are even, half odd (|W| > 1)
    long long plus = 0;
    for (const auto& e : w) plus += (e.sign == 1);
    CHECK(plus * 2 == (long long)order);
  }
}

TEST_CASE("Weyl action preserves the form and permutes the roots") {
  AlgebraDescriptor alg = build_algebra("G2");
  auto w = weyl_group(alg);
  std::set<std::vector<long long>> roots;
  for (const auto& r : alg.positive_roots) {
    roots.insert(alg.root_coords(r).as_integers());
    roots.insert(alg.root_coords(-r).as_integers());
  }
  for (const auto& e : w) {
    for (const auto& r : alg.positive_roots) {
      WeightVec img = weyl_apply(e, r);
      CHECK(alg.inner(img, img) == alg.inner(r, r));
      CHECK(roots.count(alg.root_coords(img).as_integers()) == 1);
    }
    // the form itself is invariant: <w u, w v> = <u, v> on a basis
    for (int i = 0; i < alg.rank; ++i)
      for (int j = 0; j < alg.rank; ++j) {
        WeightVec u((size_t)alg.rank), v((size_t)alg.rank);
        u[(size_t)i] = Rational(1);
        v[(size_t)j] = Rational(1);
        CHECK(alg.inner(weyl_apply(e, u), weyl_apply(e, v)) == alg.inner(u, v));
      }
  }
}

TEST_CASE("dominant representative and orbits") {
  AlgebraDescriptor alg = build_algebra("B2");
  auto w = weyl_group(alg);
  // Orbit of rho has |W| elements (regular weight), orbit of Lambda_1 fewer.
  CHECK(weyl_orbit(alg, alg.rho).size() == w.size());
  WeightVec l1{Rational(1), Rational(0)};
  auto orb = weyl_orbit(alg, l1);
  CHECK(orb.size() == 4);  // B2: Lambda_1 is the vector weight, orbit {+-e1, +-e2}
  for (const auto& v : orb) {
    CHECK(dominant_representative(alg, v) == l1);
  }
  // dominant representative of anything is dominant and in the same orbit
  for (const auto& e : w) {
    WeightVec img = weyl_apply(e, alg.rho);
    WeightVec dom = dominant_representative(alg, img);
    CHECK(dom == alg.rho);
  }
}

TEST_CASE("enumeration cap refuses early for E8") {
  AlgebraDescriptor e8 = build_algebra("E8");
  CHECK(e8.weyl_order() == 696729600ULL);
  CHECK_THROWS_AS(weyl_group(e8, 1000000), weyl_cap_error);
  try {
    weyl_group(e8, 1000000);
  } catch (const weyl_cap_error& e) {
    CHECK(e.required == 696729600ULL);
  }
}

TEST_CASE("invalid descriptors are rejected") {
  CHECK_THROWS_AS(build_algebra("F3"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("G3"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("E9"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("D2"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("H2"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("A0"), std::invalid_argument);
}
