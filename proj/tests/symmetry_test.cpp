#include <vector>

#include <gtest/gtest.h>

#include "asm_census/enumerate.hpp"
#include "asm_census/matrix.hpp"
#include "asm_census/symmetry.hpp"

namespace asm_census {
namespace {

const AsmMatrix kMinusCentered = AsmMatrix::validate({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
const AsmMatrix kAntiIdentity3 = AsmMatrix::permutation({3, 2, 1});
const AsmMatrix kQuarterTurnPerm5 = AsmMatrix::permutation({2, 5, 3, 1, 4});

std::vector<AsmMatrix> all_of_order(int n) {
  std::vector<AsmMatrix> out;
  enumerate_all(n, [&](const AsmMatrix& a) { out.push_back(a); });
  return out;
}

bool valid(const AsmMatrix& a) { return !detail::first_violation(a.entries(), a.order()); }

TEST(GroupActions, Examples) {
  const auto id3 = AsmMatrix::identity(3);
  EXPECT_EQ(half_turn(id3), id3);
  EXPECT_EQ(half_turn(kMinusCentered), kMinusCentered);
  const auto swap2 = AsmMatrix::permutation({2, 1});
  EXPECT_EQ(half_turn(swap2), swap2);

  EXPECT_EQ(quarter_turn(kMinusCentered), kMinusCentered);
  EXPECT_EQ(quarter_turn(id3), kAntiIdentity3);

  EXPECT_EQ(transpose(id3), id3);
  EXPECT_EQ(antitranspose(id3), id3);
  EXPECT_EQ(transpose(kMinusCentered), kMinusCentered);
  EXPECT_EQ(antitranspose(kMinusCentered), kMinusCentered);
}

TEST(GroupActions, QuarterTurnMapsEntryToRotatedCell) {
  // r(j, n-1-i) = a(i, j) for a non-symmetric matrix.
  const auto a = AsmMatrix::permutation({2, 3, 1});
  const auto r = quarter_turn(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(r.at(j, 2 - i), a.at(i, j));
  const auto at = antitranspose(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(at.at(i, j), a.at(2 - j, 2 - i));
}

// Round trips and compositions on every ASM of order <= 5.
TEST(GroupActions, AlgebraHoldsExhaustively) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_of_order(n)) {
      const auto q = quarter_turn(a);
      EXPECT_EQ(quarter_turn(quarter_turn(quarter_turn(q))), a);
      EXPECT_EQ(quarter_turn(q), half_turn(a));
      EXPECT_EQ(antitranspose(transpose(a)), half_turn(a));
      EXPECT_EQ(transpose(transpose(a)), a);
      EXPECT_EQ(antitranspose(antitranspose(a)), a);
      EXPECT_TRUE(valid(q) && valid(half_turn(a)) && valid(transpose(a)) && valid(antitranspose(a)));
    }
  }
}

TEST(IsSymmetric, OrderThreeCounts) {
  const auto all = all_of_order(3);
  ASSERT_EQ(all.size(), 7u);
  std::vector<AsmMatrix> ht;
  int qt = 0, dd = 0;
  for (const auto& a : all) {
    EXPECT_TRUE(is_symmetric(a, SymmetryClass::kPlain));
    if (is_symmetric(a, SymmetryClass::kHalfTurn)) ht.push_back(a);
    qt += is_symmetric(a, SymmetryClass::kQuarterTurn);
    dd += is_symmetric(a, SymmetryClass::kDoubleDiagonal);
  }
  EXPECT_EQ(ht.size(), 3u);
  EXPECT_NE(std::find(ht.begin(), ht.end(), AsmMatrix::identity(3)), ht.end());
  EXPECT_NE(std::find(ht.begin(), ht.end(), kAntiIdentity3), ht.end());
  EXPECT_NE(std::find(ht.begin(), ht.end(), kMinusCentered), ht.end());
  EXPECT_EQ(qt, 1);
  EXPECT_EQ(dd, 3);
}

TEST(IsSymmetric, PredicatesMatchGroupActionsAndNest) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_of_order(n)) {
      const bool ht = is_symmetric(a, SymmetryClass::kHalfTurn);
      const bool qt = is_symmetric(a, SymmetryClass::kQuarterTurn);
      const bool dd = is_symmetric(a, SymmetryClass::kDoubleDiagonal);
      EXPECT_EQ(ht, a == half_turn(a));
      EXPECT_EQ(qt, a == quarter_turn(a));
      EXPECT_EQ(dd, a == transpose(a) && a == antitranspose(a));
      if (qt || dd) {
        EXPECT_TRUE(ht);
      }
    }
  }
}

TEST(ForcedCenterSign, FollowsParityOfHalfOrder) {
  EXPECT_EQ(forced_center_sign(1), 1);
  EXPECT_EQ(forced_center_sign(3), -1);
  EXPECT_EQ(forced_center_sign(5), 1);
  EXPECT_EQ(forced_center_sign(7), -1);
  EXPECT_EQ(forced_center_sign(9), 1);
  try {
    forced_center_sign(4);
    FAIL();
  } catch (const AsmError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEvenOrder);
  }
}

TEST(NoncentralCounts, Examples) {
  EXPECT_EQ(noncentral_counts(AsmMatrix::identity(3)), (NoncentralCounts{2, 0}));
  EXPECT_EQ(noncentral_counts(kMinusCentered), (NoncentralCounts{4, 0}));
  ASSERT_TRUE(is_symmetric(kQuarterTurnPerm5, SymmetryClass::kQuarterTurn));
  EXPECT_EQ(noncentral_counts(kQuarterTurnPerm5), (NoncentralCounts{4, 0}));
  EXPECT_THROW(noncentral_counts(AsmMatrix::identity(2)), AsmError);
}

// Entries sum to n, so the -1 count enters with a minus sign. The unsigned
// form k+ + k- + center = n only holds when there is no noncentral -1.
TEST(NoncentralCounts, ConservationOnAllOddOrdersUpToSeven) {
  for (int n = 1; n <= 7; n += 2) {
    enumerate_all(n, [n](const AsmMatrix& a) {
      const auto k = noncentral_counts(a);
      const int center = a.at(n / 2, n / 2);
      ASSERT_EQ(k.kplus - k.kminus + center, n);
      if (k.kminus == 0) {
        ASSERT_EQ(k.kplus + k.kminus + center, n);
      }
    });
  }
}

TEST(NoncentralCounts, UnsignedSumFailsWithNoncentralMinusOne) {
  const auto a = AsmMatrix::validate(
      {{0, 1, 0, 0, 0}, {1, -1, 1, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}});
  const auto k = noncentral_counts(a);
  EXPECT_EQ(k, (NoncentralCounts{6, 1}));
  EXPECT_EQ(k.kplus - k.kminus + a.at(2, 2), 5);
  EXPECT_NE(k.kplus + k.kminus + a.at(2, 2), 5);
}

TEST(NoncentralCounts, DivisibleByFourUnderQuarterTurnUpToNine) {
  for (int n = 1; n <= 9; n += 2) {
    enumerate_symmetric(n, SymmetryClass::kQuarterTurn, [](const AsmMatrix& a) {
      const auto k = noncentral_counts(a);
      ASSERT_EQ(k.kplus % 4, 0);
      ASSERT_EQ(k.kminus % 4, 0);
    });
  }
}

TEST(CenterStructure, Examples) {
  EXPECT_EQ(center_structure(AsmMatrix::identity(3), SymmetryClass::kHalfTurn), (CenterStructure{1, std::nullopt}));
  EXPECT_EQ(center_structure(kMinusCentered, SymmetryClass::kQuarterTurn), (CenterStructure{-1, 1}));
  EXPECT_EQ(center_structure(kQuarterTurnPerm5, SymmetryClass::kQuarterTurn), (CenterStructure{1, 0}));
  EXPECT_EQ(center_structure(kMinusCentered, SymmetryClass::kDoubleDiagonal), (CenterStructure{-1, std::nullopt}));
}

TEST(CenterStructure, OrderOneIsDegenerate) {
  const auto one = AsmMatrix::identity(1);
  for (auto c : {SymmetryClass::kHalfTurn, SymmetryClass::kQuarterTurn, SymmetryClass::kDoubleDiagonal}) {
    EXPECT_TRUE(is_symmetric(one, c));
    EXPECT_EQ(center_structure(one, c), (CenterStructure{1, std::nullopt}));
  }
}

TEST(CenterStructure, Errors) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const AsmError& e) {
      return e.kind();
    }
    return ErrorKind::kNotApplicable;
  };
  EXPECT_EQ(kind([] { center_structure(AsmMatrix::permutation({2, 3, 1}), SymmetryClass::kHalfTurn); }),
            ErrorKind::kNotSymmetric);
  EXPECT_EQ(kind([] { center_structure(AsmMatrix::identity(3), SymmetryClass::kQuarterTurn); }),
            ErrorKind::kNotSymmetric);
  EXPECT_EQ(kind([] { center_structure(AsmMatrix::identity(4), SymmetryClass::kHalfTurn); }), ErrorKind::kEvenOrder);
  EXPECT_EQ(kind([] { center_structure(AsmMatrix::identity(3), SymmetryClass::kPlain); }),
            ErrorKind::kUnsupportedClass);
}

// Totality: classification never fails on symmetric matrices of odd order <= 7, and
// the quarter-turn pairs are the admissible ones for the order.
TEST(CenterStructure, TotalOnSymmetricMatricesUpToSeven) {
  for (int n = 1; n <= 7; n += 2) {
    for (auto c : {SymmetryClass::kHalfTurn, SymmetryClass::kQuarterTurn, SymmetryClass::kDoubleDiagonal}) {
      enumerate_symmetric(n, c, [&](const AsmMatrix& a) {
        const auto s = center_structure(a, c);
        const int mid = n / 2;
        ASSERT_EQ(s.center, a.at(mid, mid));
        if (c == SymmetryClass::kQuarterTurn && n > 1) {
          ASSERT_TRUE(s.neighbor.has_value());
          ASSERT_EQ(s.center, forced_center_sign(n));
          for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
            ASSERT_EQ(a.at(mid + di, mid + dj), *s.neighbor);
          }
          if (s.center == 1) {
            ASSERT_TRUE(*s.neighbor == 0 || *s.neighbor == -1);
          } else {
            ASSERT_TRUE(*s.neighbor == 1 || *s.neighbor == 0);
          }
        } else {
          ASSERT_FALSE(s.neighbor.has_value());
        }
      });
    }
  }
}

}  // namespace
}  // namespace asm_census
