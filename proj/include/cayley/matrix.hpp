#pragma once

#include <cstdlib>
#include <vector>

#include "cayley/common.hpp"

namespace cayley {

/// Dense integer matrix, row-major. Sizes here stay small (at most ~101),
/// but determinants must be exact, so all elimination is fraction-free and
/// runs in 128-bit intermediates.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

namespace detail {

using i128 = __int128;

// Bareiss fraction-free elimination; returns the determinant of the dense
// n x n buffer (row-major), destroying it.
inline i128 bareiss_det(std::vector<i128>& m, int n) {
  if (n == 0) return 1;
  int sign = 1;
  i128 prev = 1;
  for (int col = 0; col < n - 1; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<std::size_t>(r) * n + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c)
        std::swap(m[static_cast<std::size_t>(pivot) * n + c], m[static_cast<std::size_t>(col) * n + c]);
      sign = -sign;
    }
    i128 pv = m[static_cast<std::size_t>(col) * n + col];
    for (int r = col + 1; r < n; ++r) {
      i128 head = m[static_cast<std::size_t>(r) * n + col];
      for (int c = col + 1; c < n; ++c) {
        i128& cell = m[static_cast<std::size_t>(r) * n + c];
        cell = (cell * pv - head * m[static_cast<std::size_t>(col) * n + c]) / prev;
      }
      m[static_cast<std::size_t>(r) * n + col] = 0;
    }
    prev = pv;
  }
  return sign * m[static_cast<std::size_t>(n - 1) * n + n - 1];
}

}  // namespace detail

/// Exact determinant. Rows containing a single nonzero entry are struck off
/// first; the mapping matrices of long generator strings are mostly such rows,
/// which keeps the remaining Bareiss step tiny.
inline long long det(const IntMat& m) {
  require(m.rows == m.cols, errc::invalid_input, "det: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;

  std::vector<char> row_alive(static_cast<std::size_t>(n), 1), col_alive(static_cast<std::size_t>(n), 1);
  std::vector<int> nnz(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m.at(r, c) != 0) ++nnz[r];

  detail::i128 acc = 1;
  int alive = n;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < n && alive > 0; ++r) {
      if (!row_alive[r]) continue;
      if (nnz[r] == 0) return 0;
      if (nnz[r] != 1) continue;
      int col = -1;
      for (int c = 0; c < n; ++c)
        if (col_alive[c] && m.at(r, c) != 0) {
          col = c;
          break;
        }
      // position parity within the surviving submatrix
      int ri = 0, ci = 0;
      for (int i = 0; i < r; ++i) ri += row_alive[i];
      for (int i = 0; i < col; ++i) ci += col_alive[i];
      if ((ri + ci) & 1) acc = -acc;
      acc *= m.at(r, col);
      row_alive[r] = 0;
      col_alive[col] = 0;
      --alive;
      for (int rr = 0; rr < n; ++rr)
        if (row_alive[rr] && m.at(rr, col) != 0) --nnz[rr];
      progress = true;
    }
  }
  if (alive > 0) {
    std::vector<detail::i128> sub;
    sub.reserve(static_cast<std::size_t>(alive) * alive);
    for (int r = 0; r < n; ++r) {
      if (!row_alive[r]) continue;
      for (int c = 0; c < n; ++c)
        if (col_alive[c]) sub.push_back(m.at(r, c));
    }
    acc *= detail::bareiss_det(sub, alive);
  }
  constexpr detail::i128 limit = (detail::i128(1) << 62);
  require(acc < limit && acc > -limit, errc::invalid_input, "det: value out of range");
  return static_cast<long long>(acc);
}

inline bool is_unimodular(const IntMat& m) {
  long long d = det(m);
  return d == 1 || d == -1;
}

namespace detail {

inline long long minor_det(const IntMat& m, int skip_row, int skip_col) {
  IntMat sub(m.rows - 1, m.cols - 1);
  int rr = 0;
  for (int r = 0; r < m.rows; ++r) {
    if (r == skip_row) continue;
    int cc = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (c == skip_col) continue;
      sub.at(rr, cc) = m.at(r, c);
      ++cc;
    }
    ++rr;
  }
  return det(sub);
}

}  // namespace detail

/// Exact inverse of a matrix with determinant +-1, via the adjugate.
inline IntMat inverse_unimodular(const IntMat& m) {
  require(m.rows == m.cols, errc::invalid_input, "inverse: matrix not square");
  long long d = det(m);
  require(d == 1 || d == -1, errc::invalid_input, "inverse: determinant is not +-1");
  int n = m.rows;
  IntMat inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      long long cof = detail::minor_det(m, c, r);
      if ((r + c) & 1) cof = -cof;
      inv.at(r, c) = d * cof;  // 1/d == d when d is +-1
    }
  return inv;
}

/// Rank over the rationals (fraction-free elimination).
inline int rank_q(const IntMat& m) {
  int nr = m.rows, nc = m.cols;
  std::vector<detail::i128> w(m.a.begin(), m.a.end());
  auto cell = [&](int r, int c) -> detail::i128& { return w[static_cast<std::size_t>(r) * nc + c]; };
  int rank = 0;
  detail::i128 prev = 1;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int pivot = -1;
    for (int r = rank; r < nr; ++r)
      if (cell(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < nc; ++c) std::swap(cell(pivot, c), cell(rank, c));
    detail::i128 pv = cell(rank, col);
    for (int r = rank + 1; r < nr; ++r) {
      detail::i128 head = cell(r, col);
      for (int c = col; c < nc; ++c) cell(r, c) = (cell(r, c) * pv - head * cell(rank, c)) / prev;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

}  // namespace cayley
