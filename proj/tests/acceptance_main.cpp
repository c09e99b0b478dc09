// Acceptance gate: one self-contained check per numbered criterion, each
// printing a single [PASS]/[FAIL] line with its runtime.  Exit code 0 iff
// every criterion passes within its time budget.
#include <paramod/parafermion.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using namespace paramod;
using C = std::complex<double>;
using CMat = std::vector<std::vector<C>>;

namespace {

constexpr double kPi = 3.14159265358979323846;

WeightVec wv(std::vector<long long> v) { return WeightVec::from_integers(v); }

CMat mat_mul(const CMat& a, const CMat& b) {
  size_t n = a.size();
  CMat r(n, std::vector<C>(n, C(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t m = 0; m < n; ++m)
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][m] * b[m][j];
  return r;
}

double mat_dist(const CMat& a, const CMat& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double unitarity_residual(const CMat& s) {
  size_t n = s.size();
  double d = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      C dot = 0;
      for (size_t m = 0; m < n; ++m) dot += s[i][m] * std::conj(s[j][m]);
      d = std::max(d, std::abs(dot - C(i == j ? 1 : 0)));
    }
  return d;
}

// Entries all ~0 or ~1, exactly one 1 per row and per column.
bool is_permutation(const CMat& s, double tol) {
  size_t n = s.size();
  std::vector<int> row_ones(n, 0), col_ones(n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      double m = std::abs(s[i][j]);
      if (std::abs(m - 1.0) < tol) {
        ++row_ones[i];
        ++col_ones[j];
      } else if (m > tol) {
        return false;
      }
    }
  for (size_t i = 0; i < n; ++i)
    if (row_ones[i] != 1 || col_ones[i] != 1) return false;
  return true;
}

struct Gate {
  int failures = 0;

  void criterion(int num, const std::string& label, double budget_seconds,
                 const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_seconds > 0 && secs > budget_seconds) {
      ok = false;
      detail = "time budget exceeded";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num, label.c_str(),
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

}  // namespace

int main() {
  Gate gate;

  gate.criterion(1, "quotient-order table |P/Q*|", 1.0, [](std::string& detail) {
    struct Case {
      const char* name;
      long long order;
    };
    const std::vector<Case> cases = {
        {"A1", 1}, {"A2", 1}, {"A3", 1}, {"A4", 1}, {"A5", 1}, {"A6", 1},
        {"D4", 1}, {"D5", 1}, {"E6", 1},
        {"B2", 2}, {"B3", 2}, {"B4", 2}, {"B5", 2},
        {"C2", 2}, {"C3", 4}, {"C4", 8}, {"C5", 16},
        {"F4", 4}, {"G2", 3}};
    for (const Case& c : cases) {
      StandardLattices lat = standard_lattices(build_algebra(c.name));
      long long got = quotient(lat.weight, lat.root_dual).order;
      if (got != c.order) {
        detail = std::string(c.name) + ": |P/Q*| = " + std::to_string(got) + ", want " +
                 std::to_string(c.order);
        return false;
      }
    }
    return true;
  });

  gate.criterion(2, "Q/Q_L coset representatives (non-simply-laced)", 1.0,
                 [](std::string& detail) {
    struct Case {
      const char* name;
      std::vector<std::vector<long long>> reps;  // simple-root coordinates
    };
    const std::vector<Case> cases = {
        {"B2", {{0, 0}, {1, 1}}},
        {"C3", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}},
        {"F4", {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}, {0, 1, 1, 1}}},
        {"G2", {{0, 0}, {1, 0}, {2, 0}}}};
    for (const Case& c : cases) {
      AlgebraDescriptor alg = build_algebra(c.name);
      StandardLattices lat = standard_lattices(alg);
      CosetSystem cs = quotient(lat.root, lat.long_root);
      if (cs.order != (long long)c.reps.size()) {
        detail = std::string(c.name) + ": |Q/Q_L| = " + std::to_string(cs.order);
        return false;
      }
      std::set<size_t> classes;
      for (const auto& coords : c.reps) {
        WeightVec rep(alg.rank);
        for (int i = 0; i < alg.rank; ++i)
          rep = rep + alg.simple_roots[(size_t)i] * Rational(coords[(size_t)i]);
        classes.insert(cs.index_of(rep));
      }
      if (classes.size() != c.reps.size()) {
        detail = std::string(c.name) + ": listed representatives collide modulo Q_L";
        return false;
      }
    }
    return true;
  });

  gate.criterion(3, "Kac-Peterson S unitary/symmetric + sine oracle", 10.0,
                 [](std::string& detail) {
    struct Case {
      const char* name;
      long long kmax;
    };
    for (const Case& c : {Case{"A1", 6}, Case{"A2", 3}, Case{"B2", 2}, Case{"G2", 2}}) {
      AlgebraDescriptor alg = build_algebra(c.name);
      for (long long k = 1; k <= c.kmax; ++k) {
        KacPetersonS S = kac_peterson_S(alg, k);
        double uni = unitarity_residual(S.s);
        double sym = 0;
        for (size_t a = 0; a < S.s.size(); ++a)
          for (size_t b = 0; b < S.s.size(); ++b)
            sym = std::max(sym, std::abs(S.s[a][b] - S.s[b][a]));
        if (uni > 1e-10 || sym > 1e-10) {
          detail = std::string(c.name) + " k=" + std::to_string(k) +
                   ": unitarity " + std::to_string(uni) + ", symmetry " + std::to_string(sym);
          return false;
        }
      }
    }
    AlgebraDescriptor a1 = build_algebra("A1");
    for (long long k = 1; k <= 6; ++k) {
      KacPetersonS S = kac_peterson_S(a1, k);
      auto want = oracles::a1_sine_S(k);
      for (size_t a = 0; a < S.s.size(); ++a)
        for (size_t b = 0; b < S.s.size(); ++b)
          if (std::abs(S.s[a][b] - C(want[a][b], 0)) > 1e-12) {
            detail = "A1 k=" + std::to_string(k) + " differs from the sine closed form";
            return false;
          }
    }
    return true;
  });

  gate.criterion(4, "affine character S-transform (A1, k=1,2; depth 60)", 30.0,
                 [](std::string& detail) {
    AlgebraDescriptor a1 = build_algebra("A1");
    const C tau(0.1, 1.05);
    const C minus_inv = -1.0 / tau;
    double worst = 0;
    for (long long k = 1; k <= 2; ++k) {
      KacPetersonS S = kac_peterson_S(a1, k);
      std::vector<MultTable> tables;
      for (const auto& lam : S.labels) tables.emplace_back(a1, k, lam, 60);
      for (const WeightVec& h : {WeightVec{Rational(0)}, WeightVec{Rational(1, 2)}}) {
        Rational hh = a1.inner(h, h);
        C pref = std::exp(C(0, kPi) * (double)k * hh.to_double() / tau);
        for (size_t i = 0; i < S.labels.size(); ++i) {
          C lhs = affine_character_eval(tables[i], h, minus_inv, 1.0 / tau).value;
          C rhs = 0;
          for (size_t j = 0; j < S.labels.size(); ++j)
            rhs += S.s[i][j] * affine_character_eval(tables[j], h, tau).value;
          worst = std::max(worst, std::abs(lhs - pref * rhs));
        }
      }
    }
    detail = "max residual " + std::to_string(worst);
    return worst < 1e-5;
  });

  gate.criterion(5, "canonical class count = |P+^k||Q/kQ_L|/|P/Q|", 60.0,
                 [](std::string& detail) {
    struct Case {
      const char* name;
      long long k;
      long long classes;
    };
    const std::vector<Case> cases = {{"A1", 1, 1}, {"A1", 2, 3},  {"A1", 3, 6}, {"A1", 4, 10},
                                     {"A2", 1, 1}, {"A2", 2, 8},  {"B2", 1, 3}, {"G2", 1, 6}};
    for (const Case& c : cases) {
      ParafermionSystem sys(build_algebra(c.name), c.k);
      long long formula =
          (long long)sys.dominants().size() * sys.q_mod_kql().order / sys.center_order();
      long long got = (long long)sys.canonical_labels().classes.size();
      if (got != formula || got != c.classes) {
        detail = std::string(c.name) + " k=" + std::to_string(c.k) + ": " +
                 std::to_string(got) + " classes, formula " + std::to_string(formula) +
                 ", want " + std::to_string(c.classes);
        return false;
      }
    }
    return true;
  });

  gate.criterion(6, "parafermion S-transform + exact T-phases (A1 k=2,3)", 60.0,
                 [](std::string& detail) {
    const C tau(0.1, 1.05);
    for (long long k : {2LL, 3LL}) {
      ParafermionSystem sys(build_algebra("A1"), k);
      TransformReport rep = sys.verify_S_transform(tau, 60);
      double tol = (k == 2) ? 1e-6 : 1e-5;
      if (rep.max_residual > tol) {
        detail = "k=" + std::to_string(k) + ": max residual " +
                 std::to_string(rep.max_residual);
        return false;
      }
      for (size_t r = 0; r < sys.raw_count(); ++r) {
        ParafermionLabel lb = sys.raw_label(r);
        QSeries b = sys.branching_by_index(r, 20);
        if (b.is_zero()) continue;
        Rational t = sys.t_phase(sys.dominants()[lb.lambda_index],
                                 sys.q_mod_kql().reps[lb.beta_index]);
        if (!(b.offset - t).mod1().is_zero()) {
          detail = "k=" + std::to_string(k) + ": T-phase of raw label " + std::to_string(r) +
                   " disagrees with the series exponent";
          return false;
        }
      }
    }
    return true;
  });

  gate.criterion(7, "K(sl2,2) = Ising: S matrix and Verlinde ring", 10.0,
                 [](std::string& detail) {
    ParafermionSystem sys(build_algebra("A1"), 2);
    ParafermionData data = sys.parafermion_S();
    if (data.labels.size() != 3) {
      detail = std::to_string(data.labels.size()) + " sectors";
      return false;
    }
    auto want = oracles::ising_S();
    std::vector<size_t> perm = {0, 1, 2};
    double best = 1e9;
    std::vector<size_t> p = perm;
    std::sort(p.begin(), p.end());
    do {
      double d = 0;
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = 0; b < 3; ++b)
          d = std::max(d, std::abs(data.s[p[a]][p[b]] - C(want[a][b], 0)));
      if (d < best) {
        best = d;
        perm = p;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    if (best > 1e-8) {
      detail = "best S residual over label permutations: " + std::to_string(best);
      return false;
    }
    // Fusion ring in the oracle's (vacuum, epsilon, sigma) order.
    auto fus = verlinde_fusion(data, 1e-6);  // throws if integrality > 1e-6
    size_t v = perm[0], e = perm[1], s = perm[2];
    bool ring = fus[s][s][v] == 1 && fus[s][s][e] == 1 && fus[s][s][s] == 0 &&
                fus[e][e][v] == 1 && fus[e][e][e] == 0 && fus[e][e][s] == 0 &&
                fus[e][s][s] == 1 && fus[e][s][v] == 0 && fus[e][s][e] == 0;
    for (size_t a = 0; a < 3; ++a)
      for (size_t b = 0; b < 3; ++b) ring = ring && fus[v][a][b] == (a == b ? 1 : 0);
    if (!ring) detail = "fusion coefficients differ from the Ising ring";
    return ring;
  });

  gate.criterion(8, "modular axioms (ST)^3 = S^2, S^2 permutation, S unitary", 0.0,
                 [](std::string& detail) {
    struct Case {
      const char* name;
      long long k;
    };
    const std::vector<Case> cases = {{"A1", 1}, {"A1", 2}, {"A1", 3}, {"A1", 4},
                                     {"A2", 1}, {"A2", 2}, {"B2", 1}, {"G2", 1}};
    for (const Case& c : cases) {
      ParafermionSystem sys(build_algebra(c.name), c.k);
      ParafermionData data = sys.parafermion_S();
      size_t n = data.labels.size();
      CMat st(n, std::vector<C>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          st[i][j] = data.s[i][j] * std::exp(C(0, 2 * kPi * data.t_phases[j].to_double()));
      CMat s2 = mat_mul(data.s, data.s);
      double resid = mat_dist(mat_mul(mat_mul(st, st), st), s2);
      double uni = unitarity_residual(data.s);
      if (resid > 1e-8 || uni > 1e-8 || !is_permutation(s2, 1e-8)) {
        detail = std::string(c.name) + " k=" + std::to_string(c.k) + ": (ST)^3 vs S^2 " +
                 std::to_string(resid) + ", unitarity " + std::to_string(uni);
        return false;
      }
    }
    return true;
  });

  gate.criterion(9, "orbifold character identity (A1 k=2, all sectors)", 30.0,
                 [](std::string& detail) {
    ParafermionSystem sys(build_algebra("A1"), 2);
    double worst = 0;
    for (size_t r = 0; r < sys.raw_count(); ++r) {
      ParafermionLabel lb = sys.raw_label(r);
      worst = std::max(worst, sys.verify_orbifold_identity(
                                  sys.dominants()[lb.lambda_index],
                                  sys.q_mod_kql().reps[lb.beta_index], C(0.0, 1.1), 60));
    }
    detail = "max residual " + std::to_string(worst);
    return worst < 1e-6;
  });

  gate.criterion(10, "Freudenthal multiplicities = rank-1 Weyl-Kac numerator", 60.0,
                  [](std::string& detail) {
    AlgebraDescriptor a1 = build_algebra("A1");
    const int depth = 30;
    for (long long k = 1; k <= 3; ++k)
      for (long long a = 0; a <= k; ++a) {
        auto want = oracles::a1_weyl_kac_mults(k, a, depth);
        MultTable t(a1, k, wv({a}), depth);
        for (const auto& [key, m] : want) {
          if (t.mult(wv({a + 2 * key.first}), key.second) != m) {
            detail = "k=" + std::to_string(k) + " a=" + std::to_string(a) + ": weight " +
                     std::to_string(key.first) + " depth " + std::to_string(key.second);
            return false;
          }
        }
        for (int n = 0; n <= depth; ++n) {
          long long total = 0;
          for (const auto& entry : t.weights_at(n)) total += entry.mult;
          long long oracle_total = 0;
          for (const auto& [key, m] : want)
            if (key.second == n) oracle_total += m;
          if (total != oracle_total) {
            detail = "k=" + std::to_string(k) + " a=" + std::to_string(a) +
                     ": totals differ at depth " + std::to_string(n);
            return false;
          }
        }
      }
    return true;
  });

  if (gate.failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criterion(s) FAILED\n", gate.failures);
  return 1;
}
