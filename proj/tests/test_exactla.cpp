#include <brieskorn/exactla.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <random>

using namespace brieskorn;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST(Rank, ZeroAndEmpty) {
  EXPECT_EQ(rank(RationalMatrix(4, 3)), 0u);
  EXPECT_EQ(rank(RationalMatrix(0, 5)), 0u);
  EXPECT_EQ(rank(RationalMatrix(5, 0)), 0u);
}

TEST(Rank, RationalEntries) {
  auto m = from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}});
  EXPECT_EQ(rank(m), 1u);
  m(1, 1) = Rational(2, 3);
  EXPECT_EQ(rank(m), 2u);
}

TEST(Solve, IdentityReturnsRhs) {
  std::vector<Rational> b{Rational(1, 3), -2, 0, Rational(7, 5)};
  auto out = solve(RationalMatrix::identity(4), b);
  ASSERT_TRUE(out.solvable);
  EXPECT_EQ(*out.particular, b);
  EXPECT_EQ(out.rank, 4u);
  EXPECT_EQ(out.kernel_dim, 0u);
}

TEST(Solve, InconsistentSystem) {
  auto a = from_rows({{1, 1}, {2, 2}});
  std::vector<Rational> b{1, 3};
  auto out = solve(a, b);
  EXPECT_FALSE(out.solvable);
  EXPECT_FALSE(out.particular.has_value());
  EXPECT_EQ(out.rank, 1u);
  EXPECT_EQ(out.kernel_dim, 1u);
}

TEST(Solve, CanonicalSolutionZeroesFreeColumns) {
  // column 1 is a multiple of column 0, so it is free
  auto a = from_rows({{1, 2, 0}, {0, 0, 1}, {1, 2, 1}});
  std::vector<Rational> b{3, 4, 7};
  auto out = solve(a, b);
  ASSERT_TRUE(out.solvable);
  EXPECT_EQ(*out.particular, (std::vector<Rational>{3, 0, 4}));
}

TEST(Solve, DimensionMismatch) {
  std::vector<Rational> b{1, 2};
  EXPECT_THROW(solve(RationalMatrix(3, 3), b), ShapeError);
  EXPECT_THROW(in_column_space(RationalMatrix(3, 3), b), ShapeError);
}

TEST(Solve, EmptyDomain) {
  std::vector<Rational> zero(3), nonzero{0, 1, 0};
  EXPECT_TRUE(solve(RationalMatrix(3, 0), zero).solvable);
  EXPECT_FALSE(solve(RationalMatrix(3, 0), nonzero).solvable);
}

TEST(InColumnSpace, ZeroAndColumns) {
  std::mt19937 rng(5);
  auto a = oracle::random_matrix(rng, 5, 4, 6);
  EXPECT_TRUE(in_column_space(a, std::vector<Rational>(5)));
  for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_TRUE(in_column_space(a, a.column(j)));
}

TEST(ColumnSpacesEqual, Examples) {
  std::mt19937 rng(11);
  auto a = oracle::random_matrix(rng, 4, 3, 5);
  EXPECT_TRUE(column_spaces_equal(a, a));
  EXPECT_TRUE(column_spaces_equal(a, hconcat(a, a)));
  auto e1 = from_rows({{1}, {0}}), e2 = from_rows({{0}, {1}});
  EXPECT_FALSE(column_spaces_equal(e1, e2));
  EXPECT_THROW(column_spaces_equal(e1, RationalMatrix(3, 1)), ShapeError);
}

TEST(PreimageDim, Examples) {
  std::mt19937 rng(3);
  auto m = oracle::random_matrix(rng, 4, 6, 5);
  EXPECT_EQ(preimage_dim(m, RationalMatrix::identity(4)), 6u);
  EXPECT_EQ(preimage_dim(RationalMatrix::identity(4), RationalMatrix(4, 2)), 0u);
  EXPECT_EQ(preimage_dim(m, RationalMatrix(4, 0)), 6u - rank(m));
  EXPECT_THROW(preimage_dim(m, RationalMatrix(3, 1)), ShapeError);
}

TEST(DebugDump, PlainGrid) {
  auto m = from_rows({{Rational(1, 2), 0}, {-3, 4}});
  EXPECT_EQ(debug_dump(m), "2x2\n1/2 0\n-3 4\n");
}

class LinalgProperties : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperties, RankOfTransposeAndAgainstNaive) {
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = oracle::random_matrix(rng, dim(rng), dim(rng), 10, 0.4);
    const auto r = rank(a);
    EXPECT_EQ(r, rank(a.transpose()));
    EXPECT_EQ(r, oracle::naive_rank(a));
  }
}

TEST_P(LinalgProperties, SolveIsExactAndCanonical) {
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    auto a = oracle::random_matrix(rng, rows, cols, 10, 0.5);
    // half the right-hand sides are in the column space by construction
    std::vector<Rational> b(rows);
    if (trial % 2 == 0) {
      auto x = oracle::random_matrix(rng, cols, 1, 4).column(0);
      b = a * std::span<const Rational>(x);
    } else {
      b = oracle::random_matrix(rng, rows, 1, 9, 0.0).column(0);
    }
    auto out = solve(a, b);
    auto naive = oracle::naive_solve(a, b);
    ASSERT_EQ(out.solvable, naive.has_value());
    EXPECT_EQ(out.kernel_dim, cols - out.rank);
    if (out.solvable) {
      EXPECT_EQ(a * std::span<const Rational>(*out.particular), b);
      EXPECT_EQ(*out.particular, *naive);  // same pivot columns, free variables zero
    }
  }
}

TEST_P(LinalgProperties, PreimageDimAgainstKernelEnumeration) {
  std::mt19937 rng(GetParam());
  for (int trial = 0; trial < 5; ++trial) {
    auto m = oracle::random_matrix(rng, 5, 7, 4, 0.5);
    auto w = oracle::random_matrix(rng, 5, 1 + trial % 3, 4, 0.5);
    EXPECT_EQ(preimage_dim(m, w), oracle::brute_preimage_dim(m, w));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperties, ::testing::Range(1, 11));
