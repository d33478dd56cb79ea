#include "neighborly/chessboard.hpp"

#include <gtest/gtest.h>

#include "neighborly/family.hpp"
#include "neighborly/sign_matrix.hpp"

namespace neighborly {
namespace {

TEST(ChessboardOf, AllPlusIsAllWhite) {
  Chessboard b = chessboard_of(SignMatrix::constant(3, 4));
  EXPECT_EQ(b.rows(), 2);
  EXPECT_EQ(b.cols(), 3);
  EXPECT_EQ(b.black_count(), 0);
}

TEST(ChessboardOf, SingleNegativeEntryMakesOneBlackCell) {
  Chessboard b = chessboard_of(parse_sign_matrix("+-\n++"));
  EXPECT_EQ(b.black_count(), 1);
  EXPECT_TRUE(b.black(1, 1));
}

TEST(ChessboardOf, RejectsTooSmallMatrices) {
  EXPECT_THROW(chessboard_of(SignMatrix::constant(1, 4)), input_error);
  EXPECT_THROW(chessboard_of(SignMatrix::constant(3, 1)), input_error);
}

TEST(ChessboardOf, InvariantUnderEveryColumnReorientation) {
  // Exhaustive at 3x4: all matrices, all column subsets.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 12); ++code) {
    SignMatrix a = SignMatrix::from_code(3, 4, code);
    Chessboard base = chessboard_of(a);
    for (int mask = 0; mask < 16; ++mask) {
      std::vector<int> cols;
      for (int j = 0; j < 4; ++j)
        if (mask >> j & 1) cols.push_back(j + 1);
      ASSERT_EQ(chessboard_of(reorient(a, ReorientationSet(cols))), base);
    }
  }
}

TEST(ChessboardOf, InvariantUnderRowNegation) {
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << 8); ++code) {
    SignMatrix a = SignMatrix::from_code(2, 4, code);
    for (int row = 1; row <= 2; ++row) {
      std::vector<std::int8_t> e;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 4; ++j)
          e.push_back(static_cast<std::int8_t>(i == row ? -a.at(i, j) : a.at(i, j)));
      SignMatrix negated(2, 4, std::move(e));
      ASSERT_EQ(chessboard_of(negated), chessboard_of(a));
    }
  }
}

TEST(DiagonalSets, ExpansionOnTheRankThreeFamilyBoard) {
  // CB(3,5,2): board black cells (1,1),(1,2),(2,3),(2,4).
  FamilyBoard fb = build_board(FamilyParams{3, 2, 0});
  DiagonalSets ds = diagonal_sets(fb.board);
  std::set<std::pair<int, int>> expected_ud = {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}};
  std::set<std::pair<int, int>> expected_ld = {{2, 1}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}};
  EXPECT_EQ(ds.upper, expected_ud);
  EXPECT_EQ(ds.lower, expected_ld);
}

TEST(DiagonalSets, AllWhiteBoardIsRejected) {
  Chessboard b = chessboard_of(SignMatrix::constant(3, 4));
  EXPECT_THROW(diagonal_sets(b), contract_violation);
}

TEST(DiagonalSets, NonStaircaseBoardIsRejected) {
  // Two black cells in the same column stack, not a staircase.
  Chessboard b = Chessboard::from_black_cells(2, 2, {{1, 1}, {2, 1}});
  EXPECT_THROW(diagonal_sets(b), contract_violation);
}

}  // namespace
}  // namespace neighborly
