#include "paramod/latticekit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace paramod {

WeightVec Lattice::coords_of(const WeightVec& v) const {
  return mul_row(v, basis.inverse());
}

Lattice make_lattice(QMatrix basis, QMatrix form, std::string label) {
  if (basis.rows() != basis.cols() || form.rows() != basis.cols())
    throw std::invalid_argument("make_lattice: need square full-rank basis matching the form");
  Lattice l{std::move(basis), std::move(form), std::move(label)};
  if (l.basis.determinant().is_zero())
    throw std::invalid_argument("make_lattice: basis rows are linearly dependent");
  return l;
}

Lattice dual_lattice(const Lattice& l) {
  return make_lattice(l.gram().inverse() * l.basis, l.form, l.label + "*");
}

Lattice scale_form(const Lattice& l, const Rational& s) {
  if (s.sign() <= 0) throw std::invalid_argument("scale_form: scale must be positive");
  return make_lattice(l.basis, l.form * s, l.label + "(form x " + s.str() + ")");
}

Lattice dilate(const Lattice& l, const Rational& m) {
  if (m.is_zero()) throw std::invalid_argument("dilate: zero scale");
  return make_lattice(l.basis * m, l.form, m.str() + l.label);
}

bool is_even(const Lattice& l) {
  QMatrix g = l.gram();
  for (size_t i = 0; i < g.rows(); ++i) {
    for (size_t j = 0; j < g.cols(); ++j)
      if (!g.at(i, j).is_integer()) return false;
    if (g.at(i, i).num() % 2 != 0) return false;
  }
  return true;
}

Rational discriminant(const Lattice& l) { return l.gram().determinant(); }

StandardLattices standard_lattices(const AlgebraDescriptor& alg) {
  const int l = alg.rank;
  QMatrix qb(l, l);
  for (int i = 0; i < l; ++i) qb.set_row(i, alg.simple_roots[i]);

  IMat long_rows;
  for (const auto& r : alg.positive_roots)
    if (alg.inner(r, r) == Rational(2)) long_rows.push_back(r.as_integers());
  QMatrix qlb = to_qmatrix(integer_row_basis(long_rows));

  StandardLattices s{make_lattice(qb, alg.gram, "Q"),
                     make_lattice(qlb, alg.gram, "QL"),
                     make_lattice(QMatrix::identity(l), alg.gram, "P"),
                     Lattice{}};
  s.root_dual = dual_lattice(s.root);
  return s;
}

std::vector<long long> CosetSystem::tuple_of(const WeightVec& v) const {
  WeightVec coords = mul_row(v, adapted_inv);
  if (!coords.is_integral())
    throw std::invalid_argument("CosetSystem: " + v.str() + " is not in " + sup.label);
  std::vector<long long> t(coords.size());
  for (size_t i = 0; i < t.size(); ++i) {
    long long d = divisors[i];
    long long r = coords[i].num() % d;
    if (r < 0) r += d;
    t[i] = r;
  }
  return t;
}

WeightVec CosetSystem::reduce(const WeightVec& v) const {
  auto t = tuple_of(v);
  WeightVec coords(t.size());
  for (size_t i = 0; i < t.size(); ++i) coords[i] = Rational(t[i]);
  return mul_row(coords, adapted);
}

size_t CosetSystem::index_of(const WeightVec& v) const {
  auto t = tuple_of(v);
  size_t idx = 0;
  for (size_t i = 0; i < t.size(); ++i) idx = idx * (size_t)divisors[i] + (size_t)t[i];
  return idx;
}

CosetSystem quotient(const Lattice& sup, const Lattice& sub) {
  if (sup.rank() != sub.rank()) throw std::invalid_argument("quotient: rank mismatch");
  // Transition matrix M with sub = M * sup (rows), required integral.
  QMatrix m = sub.basis * sup.basis.inverse();
  IMat mi(m.rows(), std::vector<long long>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_integer())
        throw std::invalid_argument("quotient: " + sub.label + " is not a sublattice of " +
                                    sup.label);
      mi[i][j] = m.at(i, j).num();
    }

  SmithResult snf = smith_normal_form(mi);
  // U M V = D, so with adapted basis rows B~ = V^{-1} * B_sup the sublattice
  // is spanned by d_i * b~_i.
  QMatrix vinv = to_qmatrix(snf.v).inverse();
  CosetSystem cs;
  cs.sup = sup;
  cs.sub = sub;
  cs.adapted = vinv * sup.basis;
  cs.adapted_inv = cs.adapted.inverse();
  cs.divisors.assign(snf.diag.begin(), snf.diag.end());
  for (long long d : cs.divisors) {
    if (d <= 0) throw std::logic_error("quotient: degenerate elementary divisor");
    cs.order *= d;
  }

  // Mixed-radix enumeration, lexicographic in the tuple.
  std::vector<long long> t(cs.divisors.size(), 0);
  for (long long n = 0; n < cs.order; ++n) {
    cs.tuples.push_back(t);
    WeightVec coords(t.size());
    for (size_t i = 0; i < t.size(); ++i) coords[i] = Rational(t[i]);
    cs.reps.push_back(mul_row(coords, cs.adapted));
    for (size_t i = t.size(); i-- > 0;) {
      if (++t[i] < cs.divisors[i]) break;
      t[i] = 0;
    }
  }
  return cs;
}

bool duality_pairing_check(const AlgebraDescriptor& alg, long long k) {
  if (k <= 0) throw std::invalid_argument("duality_pairing_check: level must be positive");
  StandardLattices std_lat = standard_lattices(alg);
  CosetSystem a = quotient(std_lat.root, dilate(std_lat.long_root, Rational(k)));
  CosetSystem b = quotient(dilate(std_lat.weight, Rational(1, k)), std_lat.root_dual);
  if (a.order != b.order) return false;
  std::set<std::vector<Rational>> rows;
  for (const auto& beta : a.reps) {
    std::vector<Rational> row;
    row.reserve(b.reps.size());
    for (const auto& alpha : b.reps) row.push_back(alg.inner(beta, alpha).mod1());
    if (!rows.insert(row).second) return false;  // two cosets pair identically
  }
  return true;
}

}  // namespace paramod
