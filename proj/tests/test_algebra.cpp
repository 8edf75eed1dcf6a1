#include <gtest/gtest.h>

#include "sunisb/algebra.hpp"

using namespace sunisb;

namespace {

FockState state(int n, std::vector<std::vector<int>> rows) { return FockState::from_matrix(n, rows); }

std::vector<Ket> sector_kets(int n, const Totals& t) {
  std::vector<Ket> out;
  for (const auto& s : enumerate_sector(n, t)) out.emplace_back(s, Rational(1));
  return out;
}

std::vector<Ket> kets_up_to(int n, int quanta) {
  std::vector<Ket> out;
  std::function<void(Totals&, int)> rec = [&](Totals& t, int left) {
    if (static_cast<int>(t.size()) == n - 1) {
      for (auto& k : sector_kets(n, t)) out.push_back(std::move(k));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      t.push_back(v);
      rec(t, left - v);
      t.pop_back();
    }
  };
  Totals t;
  rec(t, quanta);
  return out;
}

// C2 = (1/2)(sum_i l_i (l_i + N + 1 - 2i) - n^2/N), n = sum of row lengths.
Rational casimir_closed_form(int n, const std::vector<int>& rows) {
  Rational acc = 0;
  int boxes = 0;
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    const int l = rows[i - 1];
    acc += Rational(l * (l + n + 1 - 2 * i));
    boxes += l;
  }
  return (acc - make_rational(boxes * boxes, n)) / 2;
}

}  // namespace

TEST(Algebra, LExamples) {
  const Ket one_row1(state(3, {{0, 1, 0}, {0, 0, 0}}), Rational(1));
  EXPECT_EQ(op_L(1, 1, 3)(one_row1), one_row1);
  EXPECT_TRUE(op_L(1, 2, 3)(vacuum(3)).is_zero());
  const Ket row2(state(3, {{0, 0, 0}, {0, 0, 1}}), Rational(1));
  EXPECT_EQ(op_L(1, 2, 3)(row2), Ket(state(3, {{0, 0, 1}, {0, 0, 0}}), Rational(1)));
  EXPECT_THROW(op_L(3, 1, 3), index_out_of_range);
}

TEST(Algebra, L12L21CommutatorIsNumberDifference) {
  const auto comm = op_commutator(op_L(1, 2, 3), op_L(2, 1, 3));
  for (const Totals& t : std::vector<Totals>{{2, 1}, {3, 0}, {1, 2}, {2, 2}})
    for (const auto& psi : sector_kets(3, t)) EXPECT_EQ(comm(psi), psi * Rational(t[0] - t[1]));
}

TEST(Algebra, SelfCommutatorVanishes) {
  const auto a = op_L(1, 2, 3);
  for (const auto& psi : kets_up_to(3, 3)) EXPECT_TRUE(op_commutator(a, a)(psi).is_zero());
}

TEST(Algebra, L13IsCommutatorOfFundamentals) {
  const auto comm = op_commutator(op_L(1, 2, 4), op_L(2, 3, 4));
  const auto l13 = op_L(1, 3, 4);
  for (const auto& psi : kets_up_to(4, 3)) EXPECT_EQ(comm(psi), l13(psi));
}

TEST(Algebra, CombinatorsAreLinear) {
  const auto l = op_L(1, 2, 3);
  const auto n1 = op_number(1, 3);
  const auto sum = op_sum(op_scale(make_rational(2, 3), l), n1);
  const auto composed = op_compose(l, n1);
  for (const auto& psi : kets_up_to(3, 2)) {
    EXPECT_EQ(sum(psi), l(psi) * make_rational(2, 3) + n1(psi));
    EXPECT_EQ(composed(psi), l(n1(psi)));
    EXPECT_EQ(op_identity<FockState>(3)(psi), psi);
  }
  EXPECT_THROW(op_sum(op_L(1, 2, 3), op_L(1, 2, 4)), rank_mismatch);
  EXPECT_THROW(op_L(1, 2, 3)(vacuum(4) + apply_create(1, 1, vacuum(4))), rank_mismatch);
}

TEST(Algebra, GeneratorExamples) {
  EXPECT_TRUE(op_generator(1, 2, 3)(vacuum(3)).is_zero());
  for (const auto& psi : kets_up_to(3, 3)) {
    Ket trace(3);
    for (int a = 1; a <= 3; ++a) trace += op_generator(a, a, 3)(psi);
    EXPECT_TRUE(trace.is_zero());
  }
}

// [Q_ab, Q_cd] = d_bc Q_ad - d_da Q_cb: the traceless shift cancels, so the
// oracle is the plain gl(N) relation built from raw oscillator bilinears.
TEST(Algebra, GeneratorsSatisfyGlRelations) {
  for (int n : {2, 3}) {
    auto e = [n](int a, int b) {
      return LinearOp::from_ket_action(n, [n, a, b](const Ket& psi) {
        Ket out(n);
        for (int i = 1; i < n; ++i) out += apply_create(i, a, apply_annihilate(i, b, psi));
        return out;
      });
    };
    const auto samples = kets_up_to(n, n == 3 ? 2 : 3);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            const auto lhs = op_commutator(op_generator(a, b, n), op_generator(c, d, n));
            for (const auto& psi : samples) {
              Ket rhs(n);
              if (b == c) rhs += e(a, d)(psi);
              if (d == a) rhs -= e(c, b)(psi);
              ASSERT_EQ(lhs(psi), rhs) << "N=" << n << " Q" << a << b << " Q" << c << d;
            }
          }
  }
}

TEST(Algebra, CasimirSu2Values) {
  const auto c2 = op_casimir2(2);
  const Ket one = apply_create(1, 1, vacuum(2));
  EXPECT_EQ(c2(one), one * make_rational(3, 4));
  const Ket two = apply_create(1, 2, one);
  EXPECT_EQ(c2(two), two * Rational(2));
  EXPECT_TRUE(c2(vacuum(2)).is_zero());
  for (int n = 0; n <= 6; ++n)
    for (const auto& psi : sector_kets(2, {n})) {
      const Rational j = make_rational(n, 2);
      EXPECT_EQ(c2(psi), psi * (j * (j + 1)));
    }
}

TEST(Algebra, CasimirOnFundamentalsMatchesClosedForm) {
  for (int n : {3, 4, 5}) {
    const auto c2 = op_casimir2(n);
    Totals t(n - 1, 0);
    t[0] = 1;
    const Rational want = casimir_closed_form(n, {1});
    EXPECT_EQ(want, make_rational(n * n - 1, 2 * n));
    for (const auto& psi : sector_kets(n, t)) EXPECT_EQ(c2(psi), psi * want);
  }
}

TEST(Algebra, InvarianceExamples) {
  EXPECT_TRUE(check_invariance(1, 2, sector_kets(3, {1, 0})));
  EXPECT_TRUE(check_invariance(1, 2, sector_kets(3, {0, 1})));
  EXPECT_TRUE(check_invariance(2, 1, sector_kets(3, {2, 1})));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_TRUE(check_invariance(i, j, kets_up_to(4, 2)));
}

TEST(Algebra, CorruptedInvariantIsDetected) {
  // L_12 with the sign of its color-1 term flipped is no longer invariant.
  const auto corrupted = LinearOp::from_ket_action(3, [](const Ket& psi) {
    return apply_L(1, 2, psi) - apply_create(1, 1, apply_annihilate(2, 1, psi)) * Rational(2);
  });
  EXPECT_FALSE(check_invariance(corrupted, sector_kets(3, {0, 1})));
  // an overall sign flip is still invariant
  EXPECT_TRUE(check_invariance(op_scale(Rational(-1), op_L(1, 2, 3)), sector_kets(3, {0, 1})));
}

TEST(Algebra, UnRelationsOnSmallSectors) {
  const int n = 3;
  const auto samples = kets_up_to(n, 3);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k)
        for (int l = 1; l < n; ++l) {
          const auto lhs = op_commutator(op_L(i, j, n), op_L(k, l, n));
          for (const auto& psi : samples) {
            Ket rhs(n);
            if (j == k) rhs += apply_L(i, l, psi);
            if (i == l) rhs -= apply_L(k, j, psi);
            ASSERT_EQ(lhs(psi), rhs);
          }
        }
}
