#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "sunisb/errors.hpp"
#include "sunisb/ket.hpp"
#include "sunisb/rational.hpp"

namespace sunisb {

// Row totals (n_1, ..., n_{N-1}), i.e. eigenvalues of the number operators.
using Totals = std::vector<int>;

inline void require_rank(int n) {
  if (n < 2) throw invalid_rank("group rank N must be >= 2, got " + std::to_string(n));
}

// Occupation numbers of the (N-1) x N oscillators a^dagger[i]^alpha.
// Rows are oscillator types i = 1..N-1, columns colors alpha = 1..N.
// Ordering is lexicographic on the row-major flattened matrix.
class FockState {
 public:
  FockState() = default;

  explicit FockState(int n) : n_(n), occ_(static_cast<std::size_t>((n - 1) * n), 0) {
    require_rank(n);
  }

  // `rows` must be an (N-1) x N matrix of non-negative integers.
  static FockState from_matrix(int n, const std::vector<std::vector<int>>& rows) {
    FockState s(n);
    if (static_cast<int>(rows.size()) != n - 1)
      throw shape_mismatch("occupation matrix must have N-1 rows");
    for (int i = 0; i < n - 1; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw shape_mismatch("occupation matrix rows must have N entries");
      for (int a = 0; a < n; ++a) {
        if (rows[i][a] < 0) throw shape_mismatch("negative occupation");
        s.occ_[s.slot(i, a)] = rows[i][a];
      }
    }
    return s;
  }

  int rank() const noexcept { return n_; }
  int rows() const noexcept { return n_ - 1; }
  int colors() const noexcept { return n_; }

  // 0-based access; the public operations below take 1-based indices.
  int at(int row, int color) const { return occ_[slot(row, color)]; }
  int& at(int row, int color) { return occ_[slot(row, color)]; }
  const std::vector<int>& flat() const noexcept { return occ_; }

  int row_total(int row) const {
    int t = 0;
    for (int a = 0; a < n_; ++a) t += at(row, a);
    return t;
  }

  std::vector<std::vector<int>> matrix() const {
    std::vector<std::vector<int>> m(n_ - 1, std::vector<int>(n_));
    for (int i = 0; i < n_ - 1; ++i)
      for (int a = 0; a < n_; ++a) m[i][a] = at(i, a);
    return m;
  }

  friend auto operator<=>(const FockState&, const FockState&) = default;
  friend bool operator==(const FockState&, const FockState&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FockState& s) {
    os << "|";
    for (int i = 0; i < s.rows(); ++i) {
      if (i) os << ";";
      for (int a = 0; a < s.colors(); ++a) os << (a ? "," : "") << s.at(i, a);
    }
    return os << ">";
  }

 private:
  std::size_t slot(int row, int color) const {
    return static_cast<std::size_t>(row * n_ + color);
  }

  int n_ = 0;
  std::vector<int> occ_;
};

inline Integer factorial_weight(const FockState& s) {
  Integer w = 1;
  for (int v : s.flat()) w *= factorial(static_cast<unsigned>(v));
  return w;
}

using Ket = SparseKet<FockState>;

namespace detail {

inline void check_row(int n, int i) {
  if (i < 1 || i > n - 1)
    throw index_out_of_range("row index " + std::to_string(i) + " outside 1.." +
                             std::to_string(n - 1));
}
inline void check_color(int n, int alpha) {
  if (alpha < 1 || alpha > n)
    throw index_out_of_range("color index " + std::to_string(alpha) + " outside 1.." +
                             std::to_string(n));
}

}  // namespace detail

inline Ket vacuum(int n) {
  require_rank(n);
  return Ket(FockState(n), Rational(1));
}

inline Ket zero_ket(int n) {
  require_rank(n);
  return Ket(n);
}

// a^dagger[i]^alpha with unit coefficient: a^dagger |k>_u = |k+1>_u.
inline Ket apply_create(int i, int alpha, const Ket& psi) {
  const int n = psi.rank();
  detail::check_row(n, i);
  detail::check_color(n, alpha);
  Ket out(n);
  for (const auto& [s, c] : psi) {
    FockState t = s;
    ++t.at(i - 1, alpha - 1);
    out.add(t, c);
  }
  return out;
}

// a[i]_alpha: a |k>_u = k |k-1>_u.
inline Ket apply_annihilate(int i, int alpha, const Ket& psi) {
  const int n = psi.rank();
  detail::check_row(n, i);
  detail::check_color(n, alpha);
  Ket out(n);
  for (const auto& [s, c] : psi) {
    int k = s.at(i - 1, alpha - 1);
    if (k == 0) continue;
    FockState t = s;
    --t.at(i - 1, alpha - 1);
    out.add(t, c * k);
  }
  return out;
}

inline Totals total_occupations(const FockState& s) {
  Totals t(static_cast<std::size_t>(s.rows()));
  for (int i = 0; i < s.rows(); ++i) t[i] = s.row_total(i);
  return t;
}

// Column sums: the weight under the diagonal su(N) generators. Every
// U(N-1) invariant L_ij preserves it.
inline std::vector<int> color_content(const FockState& s) {
  std::vector<int> w(static_cast<std::size_t>(s.colors()), 0);
  for (int i = 0; i < s.rows(); ++i)
    for (int a = 0; a < s.colors(); ++a) w[a] += s.at(i, a);
  return w;
}

namespace detail {

// All compositions of `total` into `parts` non-negative parts, ascending
// lexicographic order.
inline void compositions(int total, int parts, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// Every basis state with the given row totals, in lexicographic order of
// the flattened occupation matrix.
inline std::vector<FockState> enumerate_sector(int n, const Totals& totals) {
  require_rank(n);
  if (static_cast<int>(totals.size()) != n - 1)
    throw shape_mismatch("totals must have N-1 entries");
  for (int t : totals)
    if (t < 0) throw shape_mismatch("negative row total");

  std::vector<std::vector<std::vector<int>>> per_row(totals.size());
  for (std::size_t i = 0; i < totals.size(); ++i) {
    std::vector<int> cur;
    detail::compositions(totals[i], n, cur, per_row[i]);
  }

  std::vector<FockState> out;
  FockState s(n);
  std::function<void(std::size_t)> rec = [&](std::size_t row) {
    if (row == per_row.size()) {
      out.push_back(s);
      return;
    }
    for (const auto& comp : per_row[row]) {
      for (int a = 0; a < n; ++a) s.at(static_cast<int>(row), a) = comp[a];
      rec(row + 1);
    }
  };
  rec(0);
  return out;
}

inline Integer sector_size(int n, const Totals& totals) {
  Integer count = 1;
  for (int t : totals) count *= binomial(static_cast<unsigned>(t + n - 1), static_cast<unsigned>(n - 1));
  return count;
}

}  // namespace sunisb
