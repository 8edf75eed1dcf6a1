#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sunisb/algebra.hpp"
#include "sunisb/fock.hpp"

namespace sunisb {

// F^k_i = -1 / (N_i - N_k + 1 + k - i) for i < k, evaluated at the given
// number-operator eigenvalues (1-based rows).
inline Rational coeff_F(int k, int i, const Totals& totals) {
  const int rows = static_cast<int>(totals.size());
  if (k < 1 || k > rows || i < 1 || i > rows)
    throw index_out_of_range("F^" + std::to_string(k) + "_" + std::to_string(i) +
                             " outside the available rows");
  if (i >= k) throw index_out_of_range("F^k_i requires i < k");
  const int den = totals[i - 1] - totals[k - 1] + 1 + k - i;
  if (den == 0)
    throw singular_coefficient("F^" + std::to_string(k) + "_" + std::to_string(i) +
                               " has a vanishing denominator");
  return make_rational(-1, den);
}

// Annihilation-chain coefficient for the row pair k < i:
//   H^i_k = 1 / (N_k - N_i + 1 + i - k) = -F^i_k.
inline Rational coeff_H(int i, int k, const Totals& totals) {
  if (i <= k) throw index_out_of_range("H^i_k requires i > k");
  return -coeff_F(i, k, totals);
}

// Coefficient table F^k_i as a function of the totals. The default is the
// closed form; tests swap in perturbed tables as negative controls.
struct IsbCoeffs {
  int group_rank = 0;
  std::function<Rational(int k, int i, const Totals&)> evaluate;

  static IsbCoeffs closed_form(int n) {
    require_rank(n);
    return {n, [](int k, int i, const Totals& t) { return coeff_F(k, i, t); }};
  }
  Rational F(int k, int i, const Totals& t) const { return evaluate(k, i, t); }
  Rational H(int i, int k, const Totals& t) const { return -evaluate(i, k, t); }
};

namespace detail {

inline std::map<Totals, Ket> split_by_sector(const Ket& psi) {
  std::map<Totals, Ket> sectors;
  for (const auto& [s, c] : psi) {
    auto t = total_occupations(s);
    auto it = sectors.try_emplace(t, psi.rank()).first;
    it->second.add(s, c);
  }
  return sectors;
}

// Every strictly decreasing chain k > i_1 > ... > i_r >= 1 (r >= 1).
inline std::vector<std::vector<int>> descending_chains(int k) {
  std::vector<std::vector<int>> chains;
  const int m = k - 1;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> c;
    for (int i = m; i >= 1; --i)
      if (mask & (1u << (i - 1))) c.push_back(i);
    chains.push_back(std::move(c));
  }
  return chains;
}

// Every strictly increasing chain k < i_1 < ... < i_r <= top (r >= 1).
inline std::vector<std::vector<int>> ascending_chains(int k, int top) {
  std::vector<std::vector<int>> chains;
  const int m = top - k;
  for (unsigned mask = 1; m > 0 && mask < (1u << m); ++mask) {
    std::vector<int> c;
    for (int i = k + 1; i <= top; ++i)
      if (mask & (1u << (i - k - 1))) c.push_back(i);
    chains.push_back(std::move(c));
  }
  return chains;
}

}  // namespace detail

// A^dagger[k]^alpha psi = a^dagger[k]^alpha psi
//   + sum_{k > i_1 > ... > i_r} F^k_{i_1}...F^k_{i_r}
//       L_{k i_1} L_{i_1 i_2} ... L_{i_{r-1} i_r} a^dagger[i_r]^alpha psi.
// The F product stands to the left of the chain, so it is evaluated on the
// totals of the output sector (input totals + e_k).
inline Ket apply_isb_create(int k, int alpha, const Ket& psi, const IsbCoeffs& coeffs) {
  const int n = psi.rank();
  if (psi.is_zero()) return psi;
  detail::check_row(n, k);
  detail::check_color(n, alpha);
  const auto chains = detail::descending_chains(k);
  Ket out = apply_create(k, alpha, psi);
  for (const auto& [totals, phi] : detail::split_by_sector(psi)) {
    Totals after = totals;
    ++after[k - 1];
    for (const auto& chain : chains) {
      Rational coeff = 1;
      for (int i : chain) coeff *= coeffs.F(k, i, after);
      Ket term = apply_create(chain.back(), alpha, phi);
      for (std::size_t s = chain.size() - 1; s > 0 && !term.is_zero(); --s)
        term = apply_L(chain[s - 1], chain[s], term);
      if (!term.is_zero()) term = apply_L(k, chain.front(), term);
      out.add_scaled(term, coeff);
    }
  }
  return out;
}

inline Ket apply_isb_create(int k, int alpha, const Ket& psi) {
  if (psi.is_zero()) return psi;
  return apply_isb_create(k, alpha, psi, IsbCoeffs::closed_form(psi.rank()));
}

// A[k]_alpha psi = a[k]_alpha psi
//   + sum_{k < i_1 < ... < i_r <= top} H^{i_1}_k...H^{i_r}_k
//       L_{i_1 k} L_{i_2 i_1} ... L_{i_r i_{r-1}} a[i_r]_alpha psi,
// with H evaluated on the output totals (input totals - e_k). `top` is the
// highest row taking part: N-1 for the SU(N) operator, smaller for the
// embedded SU(top+1) operator used by the iterative construction.
inline Ket apply_isb_annihilate(int k, int alpha, const Ket& psi, int top, const IsbCoeffs& coeffs) {
  const int n = psi.rank();
  if (psi.is_zero()) return psi;
  detail::check_row(n, k);
  detail::check_row(n, top);
  detail::check_color(n, alpha);
  if (top < k) throw index_out_of_range("annihilation chain top row below k");
  const auto chains = detail::ascending_chains(k, top);
  Ket out = apply_annihilate(k, alpha, psi);
  for (const auto& [totals, phi] : detail::split_by_sector(psi)) {
    Totals after = totals;
    --after[k - 1];
    for (const auto& chain : chains) {
      Rational coeff = 1;
      for (int i : chain) coeff *= coeffs.H(i, k, after);
      Ket term = apply_annihilate(chain.back(), alpha, phi);
      for (std::size_t s = chain.size() - 1; s > 0 && !term.is_zero(); --s)
        term = apply_L(chain[s], chain[s - 1], term);
      if (!term.is_zero()) term = apply_L(chain.front(), k, term);
      out.add_scaled(term, coeff);
    }
  }
  return out;
}

inline Ket apply_isb_annihilate(int k, int alpha, const Ket& psi, int top) {
  if (psi.is_zero()) return psi;
  return apply_isb_annihilate(k, alpha, psi, top, IsbCoeffs::closed_form(psi.rank()));
}

inline Ket apply_isb_annihilate(int k, int alpha, const Ket& psi) {
  if (psi.is_zero()) return psi;
  return apply_isb_annihilate(k, alpha, psi, psi.rank() - 1);
}

inline LinearOp op_isb_create(int k, int alpha, int n) {
  require_rank(n);
  detail::check_row(n, k);
  detail::check_color(n, alpha);
  return LinearOp::from_ket_action(
      n, [k, alpha](const Ket& psi) { return apply_isb_create(k, alpha, psi); },
      "Ad" + std::to_string(k) + "^" + std::to_string(alpha));
}

inline LinearOp op_isb_annihilate(int k, int alpha, int n) {
  require_rank(n);
  detail::check_row(n, k);
  detail::check_color(n, alpha);
  return LinearOp::from_ket_action(
      n, [k, alpha](const Ket& psi) { return apply_isb_annihilate(k, alpha, psi); },
      "A" + std::to_string(k) + "_" + std::to_string(alpha));
}

// SU(4) coefficients of the iterative construction of A^dagger[3].
inline Rational coeff_G32(const Totals& t) {
  const int den = t[1] - t[2] + 2;
  if (den == 0) throw singular_coefficient("G^3_2 has a vanishing denominator");
  return make_rational(-1, den);
}

inline Rational coeff_G31(const Totals& t) {
  const int d1 = t[0] - t[1] + 1;
  const int d2 = t[0] - t[2] + 3;
  if (d1 == 0 || d2 == 0) throw singular_coefficient("G^3_1 has a vanishing denominator");
  return make_rational(-(t[0] - t[1] + 2), static_cast<long long>(d1) * d2);
}

// A^dagger[3]^alpha for SU(4), assembled from SU(3) irreducible operators:
//   a^dagger[3] + G^3_2 (a^dagger[3].A[2]) A^dagger[2] + G^3_1 (a^dagger[3].A[1]) A^dagger[1],
// where A[1], A[2] are the SU(3) annihilators (chains stop at row 2).
inline Ket apply_isb_create_iterative(int k, int alpha, const Ket& psi) {
  if (psi.is_zero()) return psi;
  if (psi.rank() != 4) throw invalid_rank("iterative construction is only available for SU(4)");
  if (k != 3) throw index_out_of_range("iterative construction builds A^dagger[3] only");
  detail::check_color(4, alpha);
  Ket out = apply_create(3, alpha, psi);
  for (const auto& [totals, phi] : detail::split_by_sector(psi)) {
    Totals after = totals;
    ++after[2];
    const Rational g32 = coeff_G32(after);
    const Rational g31 = coeff_G31(after);

    const Ket via2 = apply_isb_create(2, alpha, phi);
    const Ket via1 = apply_isb_create(1, alpha, phi);
    Ket dot2(4), dot1(4);
    for (int g = 1; g <= 4; ++g) {
      dot2 += apply_create(3, g, apply_isb_annihilate(2, g, via2, 2));
      dot1 += apply_create(3, g, apply_isb_annihilate(1, g, via1, 2));
    }
    out.add_scaled(dot2, g32);
    out.add_scaled(dot1, g31);
  }
  return out;
}

// sum_alpha A^dagger[i]^alpha A[j]_alpha psi
inline Ket isb_dot_create_annihilate(int i, int j, const Ket& psi) {
  Ket out(psi.rank());
  for (int a = 1; a <= psi.rank(); ++a) out += apply_isb_create(i, a, apply_isb_annihilate(j, a, psi));
  return out;
}

// sum_alpha A[i]_alpha A^dagger[j]^alpha psi
inline Ket isb_dot_annihilate_create(int i, int j, const Ket& psi) {
  Ket out(psi.rank());
  for (int a = 1; a <= psi.rank(); ++a) out += apply_isb_annihilate(i, a, apply_isb_create(j, a, psi));
  return out;
}

// Scalar by which A^dagger[i].A[i] acts on a constrained state with row
// totals l (weak identity; exact on the constraint kernel):
//   (l_i + N - i - 1) prod_{j=i+1}^{N-1} (l_i - l_j + j - i - 1) / (l_i - l_j + j - i).
// It reduces to l_i only for the top row i = N-1.
inline Rational diagonal_invariant_value(int i, const Totals& totals) {
  const int n = static_cast<int>(totals.size()) + 1;
  detail::check_row(n, i);
  Rational v(totals[i - 1] + n - i - 1);
  for (int j = i + 1; j <= n - 1; ++j) {
    const int d = totals[i - 1] - totals[j - 1] + j - i;
    if (d == 0) throw singular_coefficient("diagonal invariant outside the ordered regime");
    v *= make_rational(d - 1, d);
  }
  return v;
}

// Checks the recurrence
//   F^k_p = F^k_{p+1} / (1 - (N_p - N_{p+1} + 1) F^k_{p+1})
// together with its boundary F^k_{k-1} = -1/(N_{k-1} - N_k + 2) at every
// grid point, for 2 <= k <= k_max.
inline bool verify_recurrence(const IsbCoeffs& coeffs, int k_max, const std::vector<Totals>& grid) {
  try {
    for (const auto& t : grid) {
      if (static_cast<int>(t.size()) < k_max) return false;
      for (int k = 2; k <= k_max; ++k) {
        const int bden = t[k - 2] - t[k - 1] + 2;
        if (bden == 0 || coeffs.F(k, k - 1, t) != make_rational(-1, bden)) return false;
        for (int p = 1; p <= k - 2; ++p) {
          const Rational next = coeffs.F(k, p + 1, t);
          const Rational den = Rational(1) - Rational(t[p - 1] - t[p] + 1) * next;
          if (den == 0) return false;
          if (coeffs.F(k, p, t) != next / den) return false;
        }
      }
    }
  } catch (const singular_coefficient&) {
    return false;
  }
  return true;
}

inline bool verify_recurrence(int k_max, const std::vector<Totals>& grid) {
  return verify_recurrence(IsbCoeffs::closed_form(std::max(2, k_max + 1)), k_max, grid);
}

}  // namespace sunisb
