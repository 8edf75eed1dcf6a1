#include <gtest/gtest.h>

#include "sunisb/linalg.hpp"
#include "sunisb/su3x.hpp"

using namespace sunisb;
using namespace sunisb::su3x;

namespace {

ABFockState ab(std::array<int, 3> a, std::array<int, 3> b) { return ABFockState{a, b}; }

template <class F>
void for_each_assignment(int n, int m, F f) {
  std::vector<int> al(n), be(m);
  int total = 1;
  for (int i = 0; i < n + m; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    int x = code;
    for (auto& v : al) v = x % 3 + 1, x /= 3;
    for (auto& v : be) v = x % 3 + 1, x /= 3;
    f(al, be);
  }
}

// Rank of a set of AB kets over the rationals.
std::size_t ab_rank(const std::vector<ABKet>& kets) {
  std::map<ABFockState, std::size_t> col;
  for (const auto& k : kets)
    for (const auto& [s, c] : k) col.try_emplace(s, col.size());
  linalg::RatMatrix m;
  for (const auto& k : kets) {
    linalg::RatVector row(col.size(), Rational(0));
    for (const auto& [s, c] : k) row[col.at(s)] = c;
    m.push_back(row);
  }
  return m.empty() ? 0 : linalg::rational_rank(m);
}

}  // namespace

TEST(Su3x, LrValues) {
  EXPECT_EQ(coeff_Lr(1, 1, 1), make_rational(-1, 3));
  EXPECT_EQ(coeff_Lr(2, 1, 1), make_rational(-1, 4));
  EXPECT_EQ(coeff_Lr(2, 2, 2), make_rational(1, 20));
  EXPECT_EQ(coeff_Lr(3, 3, 3), make_rational(-1, 7 * 6 * 5));
  EXPECT_THROW(coeff_Lr(1, 1, 2), index_out_of_range);
  EXPECT_THROW(coeff_Lr(2, 0, 1), index_out_of_range);
  EXPECT_THROW(coeff_Lr(2, 2, 0), index_out_of_range);
}

TEST(Su3x, OctetPolynomialState) {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      ABKet want = monomial_state({a}, {b});
      if (a == b) want.add_scaled(apply_k_plus(ab_vacuum()), make_rational(-1, 3));
      EXPECT_EQ(build_bv_state(1, 1, {a}, {b}), want);
    }
  EXPECT_EQ(build_bv_state(1, 0, {2}, {}), ab_create(Species::a, 2, ab_vacuum()));
  EXPECT_THROW(build_bv_state(2, 1, {1}, {1}), shape_mismatch);
}

TEST(Su3x, TraceRemoval) {
  EXPECT_TRUE(trace_contract(traceless_builder(), {1}, {1}, 1, 1).is_zero());
  EXPECT_TRUE(trace_contract(traceless_builder(), {2, 3}, {1}, 1, 1).is_zero());
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}})
    for_each_assignment(n, m, [&](const std::vector<int>& al, const std::vector<int>& be) {
      for (int l = 1; l <= n; ++l)
        for (int k = 1; k <= m; ++k) ASSERT_TRUE(trace_contract(traceless_builder(), al, be, l, k).is_zero());
    });
  EXPECT_FALSE(trace_contract(BvBuilder(monomial_state), {1}, {1}, 1, 1).is_zero());
  EXPECT_FALSE(trace_contract(BvBuilder(monomial_state), {1, 2}, {3}, 2, 1).is_zero());
  EXPECT_THROW(trace_contract(traceless_builder(), {1}, {1}, 2, 1), index_out_of_range);
}

// Independent characterization: the polynomial state is the unique element
// of monomial + image(k+) that k- annihilates.
TEST(Su3x, PolynomialStateIsHarmonicProjection) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}})
    for_each_assignment(n, m, [&](const std::vector<int>& al, const std::vector<int>& be) {
      const ABKet psi = build_bv_state(al, be);
      ASSERT_TRUE(apply_k_minus(psi).is_zero());
      std::vector<ABKet> image;
      for (const auto& s : enumerate_ab_sector(n - 1, m - 1)) image.push_back(apply_k_plus(ABKet(s, Rational(1))));
      const std::size_t base = ab_rank(image);
      image.push_back(psi - monomial_state(al, be));
      ASSERT_EQ(ab_rank(image), base);
    });
}

TEST(Su3x, Sp2rExamples) {
  const auto ops = sp2r_ops();
  EXPECT_EQ(op_commutator(ops.k_minus, ops.k_plus)(ab_vacuum()), ab_vacuum() * Rational(3));
  for (const auto& s : enumerate_ab_states(1)) {
    const ABKet psi(s, Rational(1));
    EXPECT_EQ(op_commutator(ops.k_zero, ops.k_plus)(psi), ops.k_plus(psi));
  }
  for (const auto& s : enumerate_ab_states(6)) {
    const ABKet psi(s, Rational(1));
    ASSERT_EQ(op_commutator(ops.k_minus, ops.k_plus)(psi), ops.k_zero(psi) * Rational(2));
    ASSERT_EQ(op_commutator(ops.k_zero, ops.k_minus)(psi), -ops.k_minus(psi));
  }
  EXPECT_EQ(apply_k_plus(ab_vacuum()),
            ABKet(ab({1, 0, 0}, {1, 0, 0}), Rational(1)) + ABKet(ab({0, 1, 0}, {0, 1, 0}), Rational(1)) +
                ABKet(ab({0, 0, 1}, {0, 0, 1}), Rational(1)));
}

TEST(Su3x, TowerStateFailsLowestWeight) {
  for_each_assignment(1, 1, [&](const std::vector<int>& al, const std::vector<int>& be) {
    const ABKet psi = build_bv_state(al, be);
    const ABKet tower = apply_k_plus(psi);
    EXPECT_FALSE(apply_k_minus(tower).is_zero());
    // it still carries the same C2 as the lowest-weight state
    const auto c2 = ab_casimir2();
    EXPECT_EQ(c2(tower), tower * Rational(3));
  });
}

TEST(Su3x, IsbExamples) {
  for (int a = 1; a <= 3; ++a) {
    EXPECT_EQ(isb3_create_A(a, ab_vacuum()), ab_create(Species::a, a, ab_vacuum()));
    EXPECT_EQ(isb3_create_B(a, ab_vacuum()), ab_create(Species::b, a, ab_vacuum()));
  }
  for_each_assignment(2, 1, [&](const std::vector<int>& al, const std::vector<int>& be) {
    const ABKet want = build_bv_state(2, 1, al, be);
    EXPECT_EQ(isb3_create_A(al[0], isb3_create_A(al[1], isb3_create_B(be[0], ab_vacuum()))), want);
    EXPECT_EQ(isb3_create_B(be[0], isb3_create_A(al[0], isb3_create_A(al[1], ab_vacuum()))), want);
    EXPECT_EQ(isb3_create_A(al[1], isb3_create_B(be[0], isb3_create_A(al[0], ab_vacuum()))), want);
  });
}

TEST(Su3x, IsbMonomialsEqualPolynomialStates) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}})
    for_each_assignment(n, m, [&](const std::vector<int>& al, const std::vector<int>& be) {
      ASSERT_EQ(isb3_monomial(al, be), build_bv_state(al, be));
    });
}

TEST(Su3x, InvariantDotVanishesOnConstrainedStates) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {1, 2}})
    for_each_assignment(n, m, [&](const std::vector<int>& al, const std::vector<int>& be) {
      const ABKet psi = build_bv_state(al, be);
      ABKet dot(3);
      for (int g = 1; g <= 3; ++g) dot += isb3_create_A(g, isb3_create_B(g, psi));
      ASSERT_TRUE(dot.is_zero());
    });
}

TEST(Su3x, CrossCommutatorsOnConstrainedStates) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}})
    for_each_assignment(n, m, [&](const std::vector<int>& al, const std::vector<int>& be) {
      const ABKet psi = build_bv_state(al, be);
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          ASSERT_EQ(isb3_create_A(a, isb3_create_A(b, psi)), isb3_create_A(b, isb3_create_A(a, psi)));
          ASSERT_EQ(isb3_create_B(a, isb3_create_B(b, psi)), isb3_create_B(b, isb3_create_B(a, psi)));
          ASSERT_EQ(isb3_create_A(a, isb3_create_B(b, psi)), isb3_create_B(b, isb3_create_A(a, psi)));
        }
    });
}

TEST(Su3x, ConstrainedDimensionMatchesWeyl) {
  // (n, m) carries the SU(3) irrep [n + m, m]: dim = (n+1)(m+1)(n+m+2)/2
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m + n <= 4; ++m) EXPECT_EQ(ab_constrained_dimension(n, m), (n + 1) * (m + 1) * (n + m + 2) / 2);
}

TEST(Su3x, LanguageComparison) {
  const auto octet = compare_languages(IrrepLabel(3, {2, 1}));
  EXPECT_EQ(octet.n, 1);
  EXPECT_EQ(octet.m, 1);
  EXPECT_EQ(octet.two_triplet_dimension, 8);
  EXPECT_EQ(octet.antitriplet_dimension, 8);
  EXPECT_EQ(octet.antitriplet_casimir, 3);
  EXPECT_TRUE(octet.agree());
  EXPECT_EQ(compare_languages(IrrepLabel(3, {1, 0})).antitriplet_dimension, 3);
  const auto anti = compare_languages(IrrepLabel(3, {1, 1}));
  EXPECT_EQ(anti.n, 0);
  EXPECT_EQ(anti.m, 1);
  EXPECT_EQ(anti.antitriplet_dimension, 3);
  EXPECT_EQ(anti.two_triplet_casimir, make_rational(4, 3));
  for (const auto& l : enumerate_labels(3, 4)) EXPECT_TRUE(compare_languages(l).agree()) << l;
  EXPECT_THROW(compare_languages(IrrepLabel(4, {1, 0, 0})), invalid_rank);
}

TEST(Su3x, Generators) {
  // sum_a Q_aa = 0 and the fundamental C2 is 4/3
  const auto c2 = ab_casimir2();
  for (const auto& s : enumerate_ab_states(2)) {
    ABKet trace(3);
    const ABKet psi(s, Rational(1));
    for (int a = 1; a <= 3; ++a) trace += ab_generator(a, a)(psi);
    EXPECT_TRUE(trace.is_zero());
  }
  const ABKet b1 = ab_create(Species::b, 1, ab_vacuum());
  EXPECT_EQ(c2(b1), b1 * make_rational(4, 3));
}
