#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "sunisb/fock.hpp"
#include "sunisb/irreps.hpp"
#include "sunisb/ket.hpp"
#include "sunisb/linalg.hpp"
#include "sunisb/operator.hpp"

// SU(3) in the triplet/antitriplet language: oscillators a^dagger^alpha
// (upper index, 3) and b^dagger_alpha (lower index, 3*).
namespace sunisb::su3x {

struct ABFockState {
  std::array<int, 3> a{};
  std::array<int, 3> b{};

  int rank() const noexcept { return 3; }
  int total_a() const noexcept { return a[0] + a[1] + a[2]; }
  int total_b() const noexcept { return b[0] + b[1] + b[2]; }

  friend auto operator<=>(const ABFockState&, const ABFockState&) = default;
  friend bool operator==(const ABFockState&, const ABFockState&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ABFockState& s) {
    return os << "|" << s.a[0] << "," << s.a[1] << "," << s.a[2] << ";" << s.b[0] << "," << s.b[1]
              << "," << s.b[2] << ">";
  }
};

inline Integer factorial_weight(const ABFockState& s) {
  Integer w = 1;
  for (int v : s.a) w *= factorial(static_cast<unsigned>(v));
  for (int v : s.b) w *= factorial(static_cast<unsigned>(v));
  return w;
}

using ABKet = SparseKet<ABFockState>;
using ABOp = LinearOperator<ABFockState>;

enum class Species { a, b };

namespace detail {
inline int& slot(ABFockState& s, Species sp, int color) {
  if (color < 1 || color > 3) throw index_out_of_range("SU(3) color must be 1..3");
  return sp == Species::a ? s.a[color - 1] : s.b[color - 1];
}
}  // namespace detail

inline ABKet ab_vacuum() { return ABKet(ABFockState{}, Rational(1)); }

inline ABKet ab_create(Species sp, int color, const ABKet& psi) {
  ABKet out(3);
  for (const auto& [s, c] : psi) {
    ABFockState t = s;
    ++detail::slot(t, sp, color);
    out.add(t, c);
  }
  return out;
}

inline ABKet ab_annihilate(Species sp, int color, const ABKet& psi) {
  ABKet out(3);
  for (const auto& [s, c] : psi) {
    ABFockState t = s;
    int& k = detail::slot(t, sp, color);
    if (k == 0) continue;
    const int was = k--;
    out.add(t, c * was);
  }
  return out;
}

// a^dagger . b^dagger
inline ABKet apply_k_plus(const ABKet& psi) {
  ABKet out(3);
  for (int g = 1; g <= 3; ++g) out += ab_create(Species::a, g, ab_create(Species::b, g, psi));
  return out;
}

// a . b
inline ABKet apply_k_minus(const ABKet& psi) {
  ABKet out(3);
  for (int g = 1; g <= 3; ++g) out += ab_annihilate(Species::a, g, ab_annihilate(Species::b, g, psi));
  return out;
}

struct Sp2rOps {
  ABOp k_plus;
  ABOp k_minus;
  ABOp k_zero;
};

// k+ = a^dagger.b^dagger, k- = a.b, k0 = (N_a + N_b + 3)/2.
inline Sp2rOps sp2r_ops() {
  return {
      ABOp::from_ket_action(3, apply_k_plus, "k+"),
      ABOp::from_ket_action(3, apply_k_minus, "k-"),
      ABOp(3,
           [](const ABFockState& s) {
             return ABKet(s, make_rational(s.total_a() + s.total_b() + 3, 2));
           },
           "k0"),
  };
}

// Scalar part of L_r: (-1)^r / [(n+m+1)(n+m)...(n+m+2-r)].
inline Rational coeff_Lr(int n, int m, int r) {
  if (r < 1 || r > std::min(n, m))
    throw index_out_of_range("L_r needs 1 <= r <= min(n,m), got r=" + std::to_string(r));
  Integer den = 1;
  for (int j = 0; j < r; ++j) den *= (n + m + 1 - j);
  return Rational(Integer(r % 2 ? -1 : 1), den);
}

// O^{alphas}_{betas}|0>
inline ABKet monomial_state(const std::vector<int>& alphas, const std::vector<int>& betas) {
  ABFockState s;
  for (int a : alphas) ++detail::slot(s, Species::a, a);
  for (int b : betas) ++detail::slot(s, Species::b, b);
  return ABKet(s, Rational(1));
}

// The traceless polynomial state
//   [O + sum_{r=1}^{min(n,m)} L_r sum_{r delta-pairings} delta...delta O_reduced]|0>.
// A pairing matches r distinct upper positions (taken as a set) with r
// distinct lower positions (taken in order), so each set of r
// (upper, lower) pairs is counted once.
inline ABKet build_bv_state(const std::vector<int>& alphas, const std::vector<int>& betas) {
  const int n = static_cast<int>(alphas.size());
  const int m = static_cast<int>(betas.size());
  ABKet out = monomial_state(alphas, betas);
  const int q = std::min(n, m);
  for (int r = 1; r <= q; ++r) {
    ABKet reduced(3);
    std::vector<int> ls;
    std::vector<bool> used_l(n, false), used_k(m, false);
    std::function<void(int)> pick = [&](int next_l) {
      if (static_cast<int>(ls.size()) == r) {
        std::vector<int> ra, rb;
        for (int l = 0; l < n; ++l)
          if (!used_l[l]) ra.push_back(alphas[l]);
        for (int k = 0; k < m; ++k)
          if (!used_k[k]) rb.push_back(betas[k]);
        reduced += monomial_state(ra, rb);
        return;
      }
      for (int l = next_l; l < n; ++l) {
        for (int k = 0; k < m; ++k) {
          if (used_k[k] || alphas[l] != betas[k]) continue;
          used_l[l] = used_k[k] = true;
          ls.push_back(l);
          pick(l + 1);
          ls.pop_back();
          used_l[l] = used_k[k] = false;
        }
      }
    };
    pick(0);
    for (int j = 0; j < r; ++j) reduced = apply_k_plus(reduced);
    out.add_scaled(reduced, coeff_Lr(n, m, r));
  }
  return out;
}

inline ABKet build_bv_state(int n, int m, const std::vector<int>& alphas, const std::vector<int>& betas) {
  if (static_cast<int>(alphas.size()) != n || static_cast<int>(betas.size()) != m)
    throw shape_mismatch("index lists do not match (n, m)");
  return build_bv_state(alphas, betas);
}

using BvBuilder = std::function<ABKet(const std::vector<int>&, const std::vector<int>&)>;

inline BvBuilder traceless_builder() {
  return [](const std::vector<int>& a, const std::vector<int>& b) { return build_bv_state(a, b); };
}

// sum_gamma psi^{.. alpha_l = gamma ..}_{.. beta_k = gamma ..} (1-based l, k).
inline ABKet trace_contract(const BvBuilder& builder, std::vector<int> alphas, std::vector<int> betas,
                            int l, int k) {
  if (l < 1 || l > static_cast<int>(alphas.size()) || k < 1 || k > static_cast<int>(betas.size()))
    throw index_out_of_range("trace position outside the index lists");
  ABKet out(3);
  for (int g = 1; g <= 3; ++g) {
    alphas[l - 1] = g;
    betas[k - 1] = g;
    out += builder(alphas, betas);
  }
  return out;
}

namespace detail {

// c (a^dagger.b^dagger) x psi with c = 1/(N_a + N_b + 1) on the output.
inline ABKet dressing_term(const ABKet& lowered) {
  ABKet raised = apply_k_plus(lowered);
  ABKet out(3);
  for (const auto& [s, c] : raised) out.add(s, c * make_rational(1, s.total_a() + s.total_b() + 1));
  return out;
}

}  // namespace detail

// A^dagger^alpha = a^dagger^alpha - 1/(N_a+N_b+1) (a^dagger.b^dagger) b^alpha
inline ABKet isb3_create_A(int alpha, const ABKet& psi) {
  return ab_create(Species::a, alpha, psi) -
         detail::dressing_term(ab_annihilate(Species::b, alpha, psi));
}

// B^dagger_alpha = b^dagger_alpha - 1/(N_a+N_b+1) (a^dagger.b^dagger) a_alpha
inline ABKet isb3_create_B(int alpha, const ABKet& psi) {
  return ab_create(Species::b, alpha, psi) -
         detail::dressing_term(ab_annihilate(Species::a, alpha, psi));
}

// A^dagger^{alpha_1}...A^dagger^{alpha_n} B^dagger_{beta_1}...B^dagger_{beta_m}|0>
inline ABKet isb3_monomial(const std::vector<int>& alphas, const std::vector<int>& betas) {
  ABKet psi = ab_vacuum();
  for (auto it = betas.rbegin(); it != betas.rend(); ++it) psi = isb3_create_B(*it, psi);
  for (auto it = alphas.rbegin(); it != alphas.rend(); ++it) psi = isb3_create_A(*it, psi);
  return psi;
}

// All basis states with N_a = n and N_b = m, in lexicographic order.
inline std::vector<ABFockState> enumerate_ab_sector(int n, int m) {
  std::vector<ABFockState> out;
  for (int a0 = n; a0 >= 0; --a0)
    for (int a1 = n - a0; a1 >= 0; --a1)
      for (int b0 = m; b0 >= 0; --b0)
        for (int b1 = m - b0; b1 >= 0; --b1)
          out.push_back({{a0, a1, n - a0 - a1}, {b0, b1, m - b0 - b1}});
  std::sort(out.begin(), out.end());
  return out;
}

// All basis states with N_a + N_b <= max_total.
inline std::vector<ABFockState> enumerate_ab_states(int max_total) {
  std::vector<ABFockState> out;
  for (int t = 0; t <= max_total; ++t)
    for (int n = 0; n <= t; ++n) {
      auto sec = enumerate_ab_sector(n, t - n);
      out.insert(out.end(), sec.begin(), sec.end());
    }
  return out;
}

// Q_ab = a^dagger^a a_b - b^dagger_b b^a - delta_ab (N_a - N_b)/3
inline ABOp ab_generator(int alpha, int beta) {
  return ABOp::from_ket_action(
      3,
      [alpha, beta](const ABKet& psi) {
        ABKet out = ab_create(Species::a, alpha, ab_annihilate(Species::a, beta, psi)) -
                    ab_create(Species::b, beta, ab_annihilate(Species::b, alpha, psi));
        if (alpha == beta)
          for (const auto& [s, c] : psi) out.add(s, c * make_rational(-(s.total_a() - s.total_b()), 3));
        return out;
      },
      "Q" + std::to_string(alpha) + std::to_string(beta));
}

inline ABOp ab_casimir2() {
  return ABOp::from_ket_action(
      3,
      [](const ABKet& psi) {
        ABKet acc(3);
        for (int a = 1; a <= 3; ++a)
          for (int b = 1; b <= 3; ++b) acc += ab_generator(a, b)(ab_generator(b, a)(psi));
        return acc * make_rational(1, 2);
      },
      "C2");
}

// Dimension of ker(k-) inside the (n, m) sector.
inline Integer ab_constrained_dimension(int n, int m) {
  const auto cols = enumerate_ab_sector(n, m);
  std::map<ABFockState, std::size_t> row;
  std::vector<ABKet> images;
  for (const auto& s : cols) {
    images.push_back(apply_k_minus(ABKet(s, Rational(1))));
    for (const auto& [t, v] : images.back()) row.try_emplace(t, row.size());
  }
  linalg::IntMatrix mat(row.size(), std::vector<Integer>(cols.size(), Integer(0)));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [t, v] : images[c]) mat[row.at(t)][c] = numerator_of(v);
  return Integer(cols.size() - linalg::bareiss_rank(std::move(mat)));
}

struct LanguageComparison {
  IrrepLabel label;
  int n = 0, m = 0;
  Integer two_triplet_dimension;
  Integer antitriplet_dimension;
  Rational two_triplet_casimir;
  Rational antitriplet_casimir;
  bool agree() const {
    return two_triplet_dimension == antitriplet_dimension && two_triplet_casimir == antitriplet_casimir;
  }
};

// Dimension and C2 of [n1, n2] computed with two triplets against (n, m) =
// (n1 - n2, n2) computed with a triplet and an antitriplet.
inline LanguageComparison compare_languages(const IrrepLabel& label) {
  if (label.rank() != 3) throw invalid_rank("language comparison is defined for SU(3) labels");
  LanguageComparison cmp{label, 0, 0, {}, {}, {}, {}};
  cmp.n = label.row(1) - label.row(2);
  cmp.m = label.row(2);
  cmp.two_triplet_dimension = nullspace_dimension(label);
  cmp.two_triplet_casimir = casimir_eigenvalue(label);
  cmp.antitriplet_dimension = ab_constrained_dimension(cmp.n, cmp.m);

  const auto c2 = ab_casimir2();
  const ABKet probe = build_bv_state(std::vector<int>(cmp.n, 1), std::vector<int>(cmp.m, 2));
  const auto& [s0, v0] = *probe.begin();
  const ABKet img = c2(probe);
  cmp.antitriplet_casimir = img.coefficient(s0) / v0;
  if (img != probe * cmp.antitriplet_casimir)
    throw algebra_violation("C2 image of the antitriplet state is not proportional to it");
  return cmp;
}

}  // namespace sunisb::su3x
