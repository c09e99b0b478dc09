#include "paramod/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <set>

namespace paramod {

namespace {

const char* series_letter = "ABCDEFG";

void validate(Family s, int rank) {
  bool ok = false;
  switch (s) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("unsupported algebra " +
                                std::string(1, series_letter[int(s)]) + std::to_string(rank));
}

IMat cartan_matrix(Family s, int l) {
  IMat a(l, std::vector<long long>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (s) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case Family::B:  // a_l short
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      a[l - 2][l - 1] = -2;
      break;
    case Family::C:  // a_l long
      for (int i = 0; i + 1 < l; ++i) edge(i, i + 1);
      a[l - 1][l - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < l - 1; ++i) edge(i, i + 1);
      edge(l - 3, l - 1);
      break;
    case Family::E:  // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-...
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < l; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(0, 1);
      edge(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case Family::G:  // a_1 short
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<Rational> symmetrizer_diag(Family s, int l) {
  // d_i = <a_i,a_i>/2 with long roots normalized to norm 2.
  std::vector<Rational> d(l, Rational(1));
  switch (s) {
    case Family::B:
      d[l - 1] = Rational(1, 2);
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) d[i] = Rational(1, 2);
      break;
    case Family::F:
      d[2] = Rational(1, 2);
      d[3] = Rational(1, 2);
      break;
    case Family::G:
      d[0] = Rational(1, 3);
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

std::string AlgebraDescriptor::name() const {
  return std::string(1, series_letter[int(family)]) + std::to_string(rank);
}

unsigned long long AlgebraDescriptor::weyl_order() const {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (family) {
    case Family::A: return fact(rank + 1);
    case Family::B:
    case Family::C: return (1ULL << rank) * fact(rank);
    case Family::D: return (1ULL << (rank - 1)) * fact(rank);
    case Family::E: return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152ULL;
    case Family::G: return 12ULL;
  }
  throw std::logic_error("weyl_order: bad series");
}

AlgebraDescriptor build_algebra(Family s, int rank) {
  validate(s, rank);
  AlgebraDescriptor alg;
  alg.family = s;
  alg.rank = rank;
  alg.cartan = cartan_matrix(s, rank);
  alg.symmetrizers = symmetrizer_diag(s, rank);

  QMatrix a = to_qmatrix(alg.cartan);
  alg.cartan_inv = a.inverse();
  QMatrix d(rank, rank);
  for (int i = 0; i < rank; ++i) d.at(i, i) = alg.symmetrizers[i];
  alg.gram = alg.cartan_inv * d;

  for (int i = 0; i < rank; ++i) {
    WeightVec r(rank);
    for (int j = 0; j < rank; ++j) r[j] = Rational(alg.cartan[i][j]);
    alg.simple_roots.push_back(r);
  }

  // Positive roots by height via root strings: b + a_i is a root iff
  // p - b_i > 0 where p is the length of the string below b in direction a_i.
  std::set<std::vector<long long>> seen;
  std::vector<WeightVec> frontier = alg.simple_roots;
  for (const auto& r : frontier) seen.insert(r.as_integers());
  alg.positive_roots = frontier;
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < rank; ++i) {
        long long p = 0;
        WeightVec down = b - alg.simple_roots[i];
        while (seen.count(down.as_integers())) {
          ++p;
          down = down - alg.simple_roots[i];
        }
        if (p - b[i].num() > 0) {
          WeightVec up = b + alg.simple_roots[i];
          auto key = up.as_integers();
          if (seen.insert(key).second) next.push_back(up);
        }
      }
    }
    for (const auto& r : next) alg.positive_roots.push_back(r);
    frontier = std::move(next);
  }

  alg.theta = alg.positive_roots.back();
  if (alg.inner(alg.theta, alg.theta) != Rational(2))
    throw std::logic_error("build_algebra: highest root is not long");

  alg.rho = WeightVec(rank);
  for (int i = 0; i < rank; ++i) alg.rho[i] = Rational(1);

  WeightVec mk = alg.root_coords(alg.theta);
  alg.marks = mk.as_integers();

  Rational hv = alg.inner(alg.rho, alg.theta) + Rational(1);
  if (!hv.is_integer()) throw std::logic_error("build_algebra: dual Coxeter not integral");
  alg.dual_coxeter = hv.num();
  alg.dim_g = rank + 2 * (long long)alg.positive_roots.size();
  return alg;
}

AlgebraDescriptor build_algebra(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("algebra name too short: " + name);
  char c = name[0];
  const char* pos = std::strchr(series_letter, std::toupper(c));
  if (!pos || *pos == '\0') throw std::invalid_argument("unknown series in: " + name);
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rank in algebra name: " + name);
  }
  return build_algebra(Family(pos - series_letter), rank);
}

std::vector<WeylElement> weyl_group(const AlgebraDescriptor& alg, unsigned long long cap) {
  unsigned long long order = alg.weyl_order();
  if (order > cap) throw weyl_cap_error(order);

  const int l = alg.rank;
  // Simple reflection s_i as a matrix acting on row vectors from the right:
  // row i of the identity replaced by e_i - (row i of the Cartan matrix).
  std::vector<IMat> gens;
  for (int i = 0; i < l; ++i) {
    IMat m(l, std::vector<long long>(l, 0));
    for (int j = 0; j < l; ++j) m[j][j] = 1;
    for (int j = 0; j < l; ++j) m[i][j] -= alg.cartan[i][j];
    gens.push_back(m);
  }

  auto flatten = [l](const IMat& m) {
    std::vector<long long> f;
    f.reserve(l * l);
    for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
    return f;
  };
  auto rmul = [l](const IMat& x, const IMat& y) {
    IMat r(l, std::vector<long long>(l, 0));
    for (int i = 0; i < l; ++i)
      for (int k = 0; k < l; ++k) {
        if (x[i][k] == 0) continue;
        for (int j = 0; j < l; ++j) r[i][j] = checked_addmul(r[i][j], x[i][k], y[k][j]);
      }
    return r;
  };

  IMat id(l, std::vector<long long>(l, 0));
  for (int i = 0; i < l; ++i) id[i][i] = 1;

  std::vector<WeylElement> out;
  std::set<std::vector<long long>> seen;
  std::vector<WeylElement> frontier{{id, 1}};
  seen.insert(flatten(id));
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        WeylElement nw{rmul(w.mat, g), -w.sign};
        if (seen.insert(flatten(nw.mat)).second) {
          out.push_back(nw);
          next.push_back(std::move(nw));
        }
      }
    }
    frontier = std::move(next);
  }
  if (out.size() != order)
    throw std::logic_error("weyl_group: closure size " + std::to_string(out.size()) +
                           " != order " + std::to_string(order));
  return out;
}

WeightVec weyl_apply(const WeylElement& w, const WeightVec& v) {
  const size_t l = v.size();
  if (w.mat.size() != l) throw std::invalid_argument("weyl_apply: rank mismatch");
  WeightVec r(l);
  for (size_t i = 0; i < l; ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < l; ++j) r[j] += v[i] * Rational(w.mat[i][j]);
  }
  return r;
}

WeightVec dominant_representative(const AlgebraDescriptor& alg, WeightVec v) {
  const int l = alg.rank;
  while (true) {
    int neg = -1;
    for (int i = 0; i < l; ++i)
      if (v[i].sign() < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    v = v - alg.simple_roots[neg] * v[neg];  // s_i(v) = v - v_i a_i
  }
}

std::vector<WeightVec> weyl_orbit(const AlgebraDescriptor& alg, const WeightVec& v) {
  std::set<WeightVec> seen;
  std::vector<WeightVec> frontier{dominant_representative(alg, v)};
  seen.insert(frontier[0]);
  std::vector<WeightVec> out = frontier;
  while (!frontier.empty()) {
    std::vector<WeightVec> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < alg.rank; ++i) {
        WeightVec y = x - alg.simple_roots[i] * x[i];
        if (seen.insert(y).second) {
          out.push_back(y);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace paramod
