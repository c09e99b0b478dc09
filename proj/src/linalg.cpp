#include "paramod/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace paramod {

namespace {

void row_swap(IMat& m, size_t i, size_t j) { std::swap(m[i], m[j]); }

void row_addmul(IMat& m, size_t dst, size_t src, long long q) {
  for (size_t j = 0; j < m[dst].size(); ++j)
    m[dst][j] = checked_addmul(m[dst][j], q, m[src][j]);
}

void row_negate(IMat& m, size_t i) {
  for (auto& x : m[i]) x = -x;
}

void col_swap(IMat& m, size_t i, size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

void col_addmul(IMat& m, size_t dst, size_t src, long long q) {
  for (auto& row : m) row[dst] = checked_addmul(row[dst], q, row[src]);
}

IMat identity_imat(size_t n) {
  IMat m(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

SmithResult smith_normal_form(IMat m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  SmithResult res;
  res.u = identity_imat(rows);
  res.v = identity_imat(cols);

  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot with minimal absolute value in the trailing block.
    size_t pi = t, pj = t;
    long long best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        long long v = std::llabs(m[i][j]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;  // trailing block is zero

    if (pi != t) {
      row_swap(m, pi, t);
      row_swap(res.u, pi, t);
    }
    if (pj != t) {
      col_swap(m, pj, t);
      col_swap(res.v, pj, t);
    }

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0) continue;
      long long q = m[i][t] / m[t][t];
      row_addmul(m, i, t, -q);
      row_addmul(res.u, i, t, -q);
      if (m[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0) continue;
      long long q = m[t][j] / m[t][t];
      col_addmul(m, j, t, -q);
      col_addmul(res.v, j, t, -q);
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left; pick a smaller pivot again

    // Enforce the divisibility chain d_t | m[i][j].
    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols && divides_all; ++j)
        if (m[i][j] % m[t][t] != 0) {
          row_addmul(m, t, i, 1);
          row_addmul(res.u, t, i, 1);
          divides_all = false;
        }
    if (!divides_all) continue;

    if (m[t][t] < 0) {
      row_negate(m, t);
      row_negate(res.u, t);
    }
    ++t;
  }

  res.diag.assign(std::min(rows, cols), 0);
  for (size_t i = 0; i < res.diag.size(); ++i) res.diag[i] = m[i][i];
  return res;
}

IMat integer_row_basis(const IMat& rows) {
  if (rows.empty()) throw std::invalid_argument("integer_row_basis: empty input");
  IMat m = rows;
  const size_t cols = m[0].size();
  size_t r = 0;  // next basis row slot
  for (size_t col = 0; col < cols; ++col) {
    // Euclid on column `col` among rows r..end until one nonzero entry remains.
    while (true) {
      size_t piv = r;
      long long best = 0;
      for (size_t i = r; i < m.size(); ++i) {
        long long v = std::llabs(m[i][col]);
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          piv = i;
        }
      }
      if (best == 0) break;
      row_swap(m, piv, r);
      bool reduced = true;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        long long q = m[i][col] / m[r][col];
        row_addmul(m, i, r, -q);
        if (m[i][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (r < m.size() && m[r][col] != 0) {
      if (m[r][col] < 0) row_negate(m, r);
      ++r;
    }
    if (r == m.size()) break;
  }
  if (r != cols)
    throw std::runtime_error("integer_row_basis: rows do not span full rank " +
                             std::to_string(cols));
  m.resize(cols);
  return m;
}

}  // namespace paramod
