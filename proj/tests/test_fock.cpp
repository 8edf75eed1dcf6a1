#include <gtest/gtest.h>

#include <set>

#include "sunisb/fock.hpp"

using namespace sunisb;

namespace {

FockState state(int n, std::vector<std::vector<int>> rows) { return FockState::from_matrix(n, rows); }

// Brute force: every (N-1) x N matrix with entries <= max row total, kept
// when its row sums match.
std::vector<FockState> brute_sector(int n, const Totals& totals) {
  const int rows = n - 1;
  const int cells = rows * n;
  const int base = *std::max_element(totals.begin(), totals.end()) + 1;
  long long count = 1;
  for (int c = 0; c < cells; ++c) count *= base;
  std::vector<FockState> out;
  for (long long code = 0; code < count; ++code) {
    FockState s(n);
    long long x = code;
    for (int c = 0; c < cells; ++c, x /= base) s.at(c / n, c % n) = static_cast<int>(x % base);
    if (total_occupations(s) == totals) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Fock, VacuumShapes) {
  const Ket v3 = vacuum(3);
  ASSERT_EQ(v3.size(), 1u);
  const auto& [s, c] = *v3.begin();
  EXPECT_EQ(s.matrix(), (std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(c, 1);
  EXPECT_EQ(vacuum(2).begin()->first.matrix(), (std::vector<std::vector<int>>{{0, 0}}));
  EXPECT_THROW(vacuum(1), invalid_rank);
  EXPECT_THROW(vacuum(0), invalid_rank);
}

TEST(Fock, CreateConvention) {
  const Ket one = apply_create(1, 2, vacuum(3));
  EXPECT_EQ(one, Ket(state(3, {{0, 1, 0}, {0, 0, 0}}), Rational(1)));
  const Ket two = apply_create(1, 2, one);
  EXPECT_EQ(two, Ket(state(3, {{0, 2, 0}, {0, 0, 0}}), Rational(1)));

  Ket pair = Ket(state(3, {{1, 0, 0}, {0, 0, 0}}), Rational(2)) + Ket(state(3, {{0, 0, 0}, {0, 1, 0}}), Rational(-1));
  const Ket shifted = apply_create(2, 3, pair);
  EXPECT_EQ(shifted.size(), 2u);
  EXPECT_EQ(shifted.coefficient(state(3, {{1, 0, 0}, {0, 0, 1}})), 2);
  EXPECT_EQ(shifted.coefficient(state(3, {{0, 0, 0}, {0, 1, 1}})), -1);
}

TEST(Fock, AnnihilateConvention) {
  EXPECT_TRUE(apply_annihilate(1, 1, vacuum(3)).is_zero());
  EXPECT_EQ(apply_annihilate(1, 1, apply_create(1, 1, vacuum(3))), vacuum(3));
  const Ket two(state(3, {{2, 0, 0}, {0, 0, 0}}), Rational(1));
  EXPECT_EQ(apply_annihilate(1, 1, two), Ket(state(3, {{1, 0, 0}, {0, 0, 0}}), Rational(2)));
}

TEST(Fock, IndexErrors) {
  EXPECT_THROW(apply_create(0, 1, vacuum(3)), index_out_of_range);
  EXPECT_THROW(apply_create(3, 1, vacuum(3)), index_out_of_range);
  EXPECT_THROW(apply_create(1, 4, vacuum(3)), index_out_of_range);
  EXPECT_THROW(apply_annihilate(1, 0, vacuum(3)), index_out_of_range);
}

TEST(Fock, RankMismatchOnAddition) {
  Ket a = vacuum(3);
  EXPECT_THROW(a += vacuum(4), rank_mismatch);
  EXPECT_THROW(inner_product(vacuum(3), vacuum(2)), rank_mismatch);
}

TEST(Fock, FromMatrixValidates) {
  EXPECT_THROW(FockState::from_matrix(3, {{0, 0, 0}}), shape_mismatch);
  EXPECT_THROW(FockState::from_matrix(3, {{0, 0}, {0, 0}}), shape_mismatch);
  EXPECT_THROW(FockState::from_matrix(3, {{0, -1, 0}, {0, 0, 0}}), shape_mismatch);
}

TEST(Fock, InnerProductFactorialWeight) {
  EXPECT_EQ(inner_product(vacuum(3), vacuum(3)), 1);
  const Ket two = apply_create(1, 1, apply_create(1, 1, vacuum(3)));
  EXPECT_EQ(inner_product(two, two), 2);
  EXPECT_EQ(inner_product(two, apply_create(1, 2, apply_create(1, 1, vacuum(3)))), 0);
  const Ket mixed = Ket(state(2, {{2, 1}}), make_rational(1, 2)) + Ket(state(2, {{0, 3}}), Rational(3));
  // (1/2)^2 * 2!1! + 3^2 * 3!
  EXPECT_EQ(inner_product(mixed, mixed), make_rational(1, 2) + 54);
}

TEST(Fock, TotalOccupations) {
  EXPECT_EQ(total_occupations(FockState(4)), (Totals{0, 0, 0}));
  EXPECT_EQ(total_occupations(state(3, {{0, 1, 0}, {0, 0, 0}})), (Totals{1, 0}));
  EXPECT_EQ(total_occupations(state(4, {{2, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}})), (Totals{2, 1, 0}));
}

TEST(Fock, SectorExamples) {
  EXPECT_EQ(enumerate_sector(3, {1, 0}).size(), 3u);
  EXPECT_EQ(enumerate_sector(3, {2, 1}).size(), 18u);
  EXPECT_EQ(enumerate_sector(2, {2}).size(), 3u);
  EXPECT_THROW(enumerate_sector(3, {1}), shape_mismatch);
  EXPECT_THROW(enumerate_sector(3, {1, -1}), shape_mismatch);
}

TEST(Fock, SectorMatchesBruteForceAndBinomials) {
  const std::vector<std::pair<int, Totals>> cases{
      {2, {0}}, {2, {4}}, {3, {2, 1}}, {3, {3, 0}}, {3, {2, 2}}, {4, {1, 1, 0}}, {4, {2, 1, 1}}, {5, {1, 1, 1, 0}}};
  for (const auto& [n, t] : cases) {
    const auto sec = enumerate_sector(n, t);
    EXPECT_EQ(sec, brute_sector(n, t)) << "N=" << n;
    EXPECT_EQ(Integer(sec.size()), sector_size(n, t));
    EXPECT_TRUE(std::is_sorted(sec.begin(), sec.end()));
    EXPECT_EQ(std::set<FockState>(sec.begin(), sec.end()).size(), sec.size());
  }
}

TEST(Fock, CanonicalCommutatorOnMixedKets) {
  Ket psi = Ket(state(3, {{1, 0, 2}, {0, 1, 0}}), make_rational(3, 7)) +
            Ket(state(3, {{0, 0, 0}, {2, 0, 1}}), Rational(-5)) + vacuum(3);
  for (int i = 1; i <= 2; ++i)
    for (int a = 1; a <= 3; ++a) {
      const Ket lhs = apply_annihilate(i, a, apply_create(i, a, psi)) - apply_create(i, a, apply_annihilate(i, a, psi));
      EXPECT_EQ(lhs, psi);
      for (int j = 1; j <= 2; ++j)
        for (int b = 1; b <= 3; ++b) {
          if (i == j && a == b) continue;
          const Ket cross =
              apply_annihilate(i, a, apply_create(j, b, psi)) - apply_create(j, b, apply_annihilate(i, a, psi));
          EXPECT_TRUE(cross.is_zero());
        }
    }
}

TEST(Fock, AdjointnessUnderFactorialWeight) {
  const auto lower = enumerate_sector(3, {1, 1});
  const auto upper = enumerate_sector(3, {2, 1});
  for (const auto& l : lower)
    for (const auto& u : upper)
      for (int a = 1; a <= 3; ++a) {
        const Ket phi(l, Rational(1)), psi(u, Rational(1));
        EXPECT_EQ(inner_product(apply_create(1, a, phi), psi), inner_product(phi, apply_annihilate(1, a, psi)));
      }
}

TEST(Fock, ColorContent) {
  EXPECT_EQ(color_content(state(3, {{1, 0, 2}, {0, 1, 1}})), (std::vector<int>{1, 1, 3}));
}

TEST(Ket, ZeroPruningAndEquality) {
  Ket k = vacuum(3);
  k -= vacuum(3);
  EXPECT_TRUE(k.is_zero());
  EXPECT_EQ(k.size(), 0u);
  EXPECT_EQ(k, zero_ket(3));
  EXPECT_EQ(vacuum(3) * Rational(0), zero_ket(3));
}
