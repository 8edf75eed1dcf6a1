#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sunisb/errors.hpp"
#include "sunisb/rational.hpp"

namespace sunisb::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
// division is exact; a nonzero remainder means the input was corrupted
// and raises algebra_violation.
inline std::size_t bareiss_rank(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Integer& p = m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer f = m[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        Integer v = p * m[r][c] - f * m[rank][c];
        Integer q, rem;
        boost::multiprecision::divide_qr(v, prev, q, rem);
        if (rem != 0) throw algebra_violation("inexact Bareiss division");
        m[r][c] = std::move(q);
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Scales a rational row to a primitive integer row with the same span.
inline std::vector<Integer> clear_denominators(const RatVector& row) {
  Integer l = 1;
  for (const auto& q : row) l = boost::multiprecision::lcm(l, denominator_of(q));
  std::vector<Integer> out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& q : row) {
    out.push_back(numerator_of(q) * (l / denominator_of(q)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

inline std::size_t rational_rank(const RatMatrix& m) {
  IntMatrix im;
  im.reserve(m.size());
  for (const auto& row : m) im.push_back(clear_denominators(row));
  return bareiss_rank(std::move(im));
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    const std::size_t width = m[row].size();
    for (std::size_t c = col; c < width; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < width; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of {x : m x = 0}, one vector per free column (free entry = 1).
inline std::vector<RatVector> nullspace(RatMatrix m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves a x = b for square nonsingular a.
inline RatVector solve(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = rref(a, n);
  if (pivots.size() != n) throw algebra_violation("singular linear system");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

}  // namespace sunisb::linalg
