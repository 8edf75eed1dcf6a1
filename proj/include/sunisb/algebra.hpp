#pragma once

#include <string>
#include <vector>

#include "sunisb/fock.hpp"
#include "sunisb/operator.hpp"

namespace sunisb {

using LinearOp = LinearOperator<FockState>;

// L_ij psi = sum_alpha a^dagger[i]^alpha a[j]_alpha psi (1-based rows).
// Moves one quantum from row j to row i in every color; L_ii = N_i.
inline Ket apply_L(int i, int j, const Ket& psi) {
  const int n = psi.rank();
  detail::check_row(n, i);
  detail::check_row(n, j);
  Ket out(n);
  if (i == j) {
    for (const auto& [s, c] : psi) {
      int t = s.row_total(i - 1);
      if (t) out.add(s, c * t);
    }
    return out;
  }
  for (const auto& [s, c] : psi) {
    for (int a = 0; a < n; ++a) {
      int k = s.at(j - 1, a);
      if (k == 0) continue;
      FockState t = s;
      --t.at(j - 1, a);
      ++t.at(i - 1, a);
      out.add(t, c * k);
    }
  }
  return out;
}

inline LinearOp op_L(int i, int j, int n) {
  require_rank(n);
  detail::check_row(n, i);
  detail::check_row(n, j);
  return LinearOp::from_ket_action(
      n, [i, j](const Ket& psi) { return apply_L(i, j, psi); },
      "L" + std::to_string(i) + std::to_string(j));
}

// Number operator N_i.
inline LinearOp op_number(int i, int n) { return op_L(i, i, n); }

// Traceless Weyl-basis generator
//   Q_ab = sum_i a^dagger[i]^a a[i]_b - delta_ab (1/N) sum_i N_i.
inline LinearOp op_generator(int alpha, int beta, int n) {
  require_rank(n);
  detail::check_color(n, alpha);
  detail::check_color(n, beta);
  const int a = alpha - 1, b = beta - 1;
  return LinearOp(
      n,
      [n, a, b](const FockState& s) {
        Ket out(n);
        int total = 0;
        for (int i = 0; i < s.rows(); ++i) {
          total += s.row_total(i);
          int k = s.at(i, b);
          if (k == 0) continue;
          FockState t = s;
          --t.at(i, b);
          ++t.at(i, a);
          out.add(t, Rational(k));
        }
        if (a == b && total) out.add(s, make_rational(-total, n));
        return out;
      },
      "Q" + std::to_string(alpha) + std::to_string(beta));
}

// C2 = 1/2 sum_{a,b} Q_ab Q_ba. On SU(2) this is j(j+1) with j = n/2.
inline LinearOp op_casimir2(int n) {
  require_rank(n);
  std::vector<std::pair<LinearOp, LinearOp>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) pairs.emplace_back(op_generator(a, b, n), op_generator(b, a, n));
  return LinearOp::from_ket_action(
      n,
      [n, pairs](const Ket& psi) {
        Ket acc(n);
        for (const auto& [qab, qba] : pairs) acc += qab(qba(psi));
        return acc * make_rational(1, 2);
      },
      "C2");
}

// True iff [Q_ab, L] annihilates every sample, for all colors a, b.
inline bool check_invariance(const LinearOp& invariant, const std::vector<Ket>& samples) {
  const int n = invariant.rank();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      auto comm = op_commutator(op_generator(a, b, n), invariant);
      for (const auto& psi : samples)
        if (!comm(psi).is_zero()) return false;
    }
  return true;
}

inline bool check_invariance(int i, int j, const std::vector<Ket>& samples) {
  if (samples.empty()) return true;
  return check_invariance(op_L(i, j, samples.front().rank()), samples);
}

}  // namespace sunisb
