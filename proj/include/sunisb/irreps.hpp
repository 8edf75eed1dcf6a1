#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "sunisb/algebra.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/linalg.hpp"

namespace sunisb {

// Young diagram [n_1 >= n_2 >= ... >= n_{N-1} >= 0] of an SU(N) irrep.
class IrrepLabel {
 public:
  IrrepLabel(int n, std::vector<int> rows) : n_(n), rows_(std::move(rows)) {
    require_rank(n);
    if (static_cast<int>(rows_.size()) != n - 1)
      throw shape_mismatch("SU(" + std::to_string(n) + ") label needs " + std::to_string(n - 1) +
                           " rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] < 0) throw shape_mismatch("negative row length");
      if (i > 0 && rows_[i] > rows_[i - 1]) throw shape_mismatch("row lengths must be weakly decreasing");
    }
  }

  int rank() const noexcept { return n_; }
  const std::vector<int>& rows() const noexcept { return rows_; }
  int row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  int boxes() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IrrepLabel& l) {
    os << "SU(" << l.n_ << ")[";
    for (std::size_t i = 0; i < l.rows_.size(); ++i) os << (i ? "," : "") << l.rows_[i];
    return os << "]";
  }

 private:
  int n_;
  std::vector<int> rows_;
};

// Per-row color lists (1-based colors); row i holds n_i entries.
using MultiIndex = std::vector<std::vector<int>>;

inline void check_multi_index(const IrrepLabel& label, const MultiIndex& idx) {
  if (idx.size() != label.rows().size()) throw shape_mismatch("multi-index has wrong number of rows");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (static_cast<int>(idx[i].size()) != label.rows()[i])
      throw shape_mismatch("multi-index row " + std::to_string(i + 1) + " has " +
                           std::to_string(idx[i].size()) + " entries, label wants " +
                           std::to_string(label.rows()[i]));
    for (int c : idx[i]) detail::check_color(label.rank(), c);
  }
}

// All labels of SU(N) with at most `max_boxes` boxes.
inline std::vector<IrrepLabel> enumerate_labels(int n, int max_boxes) {
  require_rank(n);
  std::vector<IrrepLabel> out;
  std::vector<int> rows;
  std::function<void(int, int)> rec = [&](int bound, int left) {
    if (static_cast<int>(rows.size()) == n - 1) {
      out.emplace_back(n, rows);
      return;
    }
    for (int v = std::min(bound, left); v >= 0; --v) {
      rows.push_back(v);
      rec(v, left - v);
      rows.pop_back();
    }
  };
  rec(max_boxes, max_boxes);
  return out;
}

// Applies the ordered ISB monomial to the vacuum: all A^dagger[1] factors
// act first, then A^dagger[2], ..., A^dagger[N-1] last.
inline Ket build_monomial(const IrrepLabel& label, const MultiIndex& idx) {
  check_multi_index(label, idx);
  Ket psi = vacuum(label.rank());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int c : idx[i]) psi = apply_isb_create(static_cast<int>(i) + 1, c, psi);
  return psi;
}

// Visits the monomial of every multi-index of the label. With
// `all_orderings` false only weakly increasing rows are visited (one
// representative per row permutation class). Shared prefixes are built
// once.
inline void for_each_monomial(const IrrepLabel& label,
                              const std::function<void(const MultiIndex&, const Ket&)>& visit,
                              bool all_orderings = false) {
  const int n = label.rank();
  const auto& rows = label.rows();
  MultiIndex idx(rows.size());
  std::function<void(std::size_t, const Ket&)> rec = [&](std::size_t row, const Ket& psi) {
    while (row < rows.size() && static_cast<int>(idx[row].size()) == rows[row]) ++row;
    if (row == rows.size()) {
      visit(idx, psi);
      return;
    }
    int first = 1;
    if (!all_orderings && !idx[row].empty()) first = idx[row].back();
    for (int c = first; c <= n; ++c) {
      idx[row].push_back(c);
      rec(row, apply_isb_create(static_cast<int>(row) + 1, c, psi));
      idx[row].pop_back();
    }
  };
  rec(0, vacuum(n));
}

// Weyl dimension formula with lambda_i = n_i, lambda_N = 0.
inline Integer weyl_dimension(const IrrepLabel& label) {
  const int n = label.rank();
  std::vector<int> lam(label.rows());
  lam.push_back(0);
  Rational d = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= make_rational(lam[i] - lam[j] + j - i, j - i);
  return numerator_of(d);
}

struct ConstraintReport {
  bool annihilated = true;
  // (i, j) for every constraint L_ij with L_ij psi != 0.
  std::vector<std::pair<int, int>> offending;
};

// Checks the fundamental constraints L_{i,i+1} psi = 0, i = 1..N-2.
inline ConstraintReport constraint_residual(const Ket& psi) {
  ConstraintReport rep;
  if (psi.is_zero()) return rep;
  for (int i = 1; i + 1 <= psi.rank() - 1; ++i)
    if (!apply_L(i, i + 1, psi).is_zero()) {
      rep.annihilated = false;
      rep.offending.emplace_back(i, i + 1);
    }
  return rep;
}

// Checks every L_ij with i < j.
inline ConstraintReport full_constraint_residual(const Ket& psi) {
  ConstraintReport rep;
  if (psi.is_zero()) return rep;
  for (int i = 1; i <= psi.rank() - 1; ++i)
    for (int j = i + 1; j <= psi.rank() - 1; ++j)
      if (!apply_L(i, j, psi).is_zero()) {
        rep.annihilated = false;
        rep.offending.emplace_back(i, j);
      }
  return rep;
}

namespace detail {

using Weight = std::vector<int>;

// Sector states grouped by color content. The constraints commute with the
// diagonal generators, so each group is an independent block.
inline std::map<Weight, std::vector<FockState>> weight_blocks(const IrrepLabel& label) {
  std::map<Weight, std::vector<FockState>> blocks;
  for (auto& s : enumerate_sector(label.rank(), label.rows())) blocks[color_content(s)].push_back(s);
  return blocks;
}

// Stacked matrix of L_{i,i+1} (i = 1..N-2) restricted to one block.
inline linalg::IntMatrix constraint_block_matrix(int n, const std::vector<FockState>& cols) {
  std::vector<std::map<FockState, std::size_t>> row_index(static_cast<std::size_t>(std::max(0, n - 2)));
  std::vector<std::vector<std::pair<std::size_t, Ket>>> images(row_index.size());
  for (int i = 1; i + 1 <= n - 1; ++i) {
    auto& rix = row_index[static_cast<std::size_t>(i - 1)];
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Ket img = apply_L(i, i + 1, Ket(cols[c], Rational(1)));
      for (const auto& [s, v] : img) rix.try_emplace(s, rix.size());
      images[static_cast<std::size_t>(i - 1)].emplace_back(c, std::move(img));
    }
  }
  linalg::IntMatrix m;
  for (std::size_t con = 0; con < row_index.size(); ++con) {
    const std::size_t base = m.size();
    m.resize(base + row_index[con].size(), std::vector<Integer>(cols.size(), Integer(0)));
    for (const auto& [c, img] : images[con])
      for (const auto& [s, v] : img) m[base + row_index[con].at(s)][c] = numerator_of(v);
  }
  return m;
}

}  // namespace detail

// Dimension of the common kernel of the fundamental constraints inside
// the sector with totals = label rows, by exact fraction-free elimination.
inline Integer nullspace_dimension(const IrrepLabel& label) {
  Integer dim = 0;
  for (const auto& [w, cols] : detail::weight_blocks(label)) {
    auto m = detail::constraint_block_matrix(label.rank(), cols);
    dim += Integer(cols.size() - linalg::bareiss_rank(std::move(m)));
  }
  return dim;
}

// Exact kernel basis, grouped by color content.
inline std::map<std::vector<int>, std::vector<Ket>> nullspace_basis_by_weight(const IrrepLabel& label) {
  const int n = label.rank();
  std::map<std::vector<int>, std::vector<Ket>> out;
  for (const auto& [w, cols] : detail::weight_blocks(label)) {
    auto im = detail::constraint_block_matrix(n, cols);
    linalg::RatMatrix rm;
    rm.reserve(im.size());
    for (const auto& row : im) rm.emplace_back(row.begin(), row.end());
    auto& kets = out[w];
    for (const auto& v : linalg::nullspace(std::move(rm), cols.size())) {
      Ket k(n);
      for (std::size_t c = 0; c < cols.size(); ++c) k.add(cols[c], v[c]);
      kets.push_back(std::move(k));
    }
    if (kets.empty()) out.erase(w);
  }
  return out;
}

inline std::vector<Ket> nullspace_basis(const IrrepLabel& label) {
  std::vector<Ket> all;
  for (auto& [w, kets] : nullspace_basis_by_weight(label))
    for (auto& k : kets) all.push_back(std::move(k));
  return all;
}

// psi minus its orthogonal projection (factorial inner product) onto
// span(basis). The basis must be linearly independent.
inline Ket residual_after_projection(const std::vector<Ket>& basis, const Ket& psi) {
  if (basis.empty() || psi.is_zero()) return psi;
  const std::size_t m = basis.size();
  linalg::RatMatrix gram(m, linalg::RatVector(m));
  linalg::RatVector rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    rhs[i] = inner_product(basis[i], psi);
    for (std::size_t j = i; j < m; ++j) gram[i][j] = gram[j][i] = inner_product(basis[i], basis[j]);
  }
  const auto x = linalg::solve(std::move(gram), std::move(rhs));
  Ket r = psi;
  for (std::size_t i = 0; i < m; ++i) r.add_scaled(basis[i], -x[i]);
  return r;
}

// Rank of a set of kets by fraction-free elimination on their coefficient
// vectors, block by color content.
inline std::size_t ket_rank(const std::vector<Ket>& kets) {
  std::map<std::vector<int>, std::vector<const Ket*>> groups;
  for (const auto& k : kets) {
    if (k.is_zero()) continue;
    // Kets without definite color content go to a shared catch-all block.
    auto w = color_content(k.begin()->first);
    for (const auto& [s, c] : k)
      if (color_content(s) != w) {
        w.assign(1, -1);
        break;
      }
    groups[w].push_back(&k);
  }
  std::size_t rank = 0;
  for (const auto& [w, members] : groups) {
    std::map<FockState, std::size_t> col;
    for (const Ket* k : members)
      for (const auto& [s, c] : *k) col.try_emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, i] : col) i = next++;
    linalg::IntMatrix m;
    m.reserve(members.size());
    for (const Ket* k : members) {
      linalg::RatVector row(col.size(), Rational(0));
      for (const auto& [s, c] : *k) row[col.at(s)] = c;
      m.push_back(linalg::clear_denominators(row));
    }
    rank += linalg::bareiss_rank(std::move(m));
  }
  return rank;
}

// Rank of the span of all ISB monomials of the label.
inline std::size_t monomial_rank(const IrrepLabel& label) {
  std::vector<Ket> monomials;
  for_each_monomial(label, [&](const MultiIndex&, const Ket& k) {
    if (!k.is_zero()) monomials.push_back(k);
  });
  return ket_rank(monomials);
}

// If image == lambda * psi for some rational lambda, returns lambda.
inline std::optional<Rational> proportionality(const Ket& psi, const Ket& image) {
  if (psi.is_zero()) return std::nullopt;
  const auto& [s0, c0] = *psi.begin();
  const Rational lambda = image.coefficient(s0) / c0;
  if (image != psi * lambda) return std::nullopt;
  return lambda;
}

// Quadratic Casimir scalar of the label, checked to be the same exact
// multiple on every nonzero monomial.
inline Rational casimir_eigenvalue(const IrrepLabel& label) {
  const auto c2 = op_casimir2(label.rank());
  std::optional<Rational> value;
  for_each_monomial(label, [&](const MultiIndex& idx, const Ket& k) {
    if (k.is_zero()) return;
    auto lambda = proportionality(k, c2(k));
    if (!lambda) throw algebra_violation("C2 image of a monomial is not proportional to it");
    if (value && *value != *lambda) {
      std::string where;
      for (const auto& row : idx) {
        where += "{";
        for (int c : row) where += std::to_string(c);
        where += "}";
      }
      throw algebra_violation("C2 eigenvalue differs across monomials at " + where);
    }
    value = lambda;
  });
  if (!value) throw shape_mismatch("label admits no nonzero monomial");
  return *value;
}

}  // namespace sunisb
