#include <polyadj/error.hpp>
#include <polyadj/exactmath.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace polyadj {
namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  IntMatrix m(rows, IntVector(cols));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

TEST(Rational, ParsesAndPrintsLowestTerms) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890/2")), "61728394506172839450617283945");
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "--1", "/3"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse);
    }
  }
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor_of(fraction(-3, 2)), -2);
  EXPECT_EQ(ceil_of(fraction(-3, 2)), -1);
  EXPECT_EQ(floor_of(fraction(7, 7)), 1);
  EXPECT_EQ(ceil_of(fraction(1, 3)), 1);
}

TEST(Vectors, PrimitiveAndContent) {
  EXPECT_EQ(primitive(make_int_vector({4, -6, 0})), make_int_vector({2, -3, 0}));
  EXPECT_EQ(content(make_int_vector({0, 0})), 0);
  EXPECT_EQ(lattice_length(make_int_vector({0, 0}), make_int_vector({3, 6})), 3);
  EXPECT_THROW(primitive(make_int_vector({0, 0})), Error);
  RatVector v{fraction(1, 2), fraction(-1, 3)};
  EXPECT_EQ(clear_denominators(v), make_int_vector({3, -2}));
}

TEST(Determinant, MatchesCofactorExpansionOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3, 5);
    Integer cofactor = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    EXPECT_EQ(determinant(m), cofactor);
    EXPECT_EQ(determinant(to_rational(m)), Rational(cofactor));
  }
}

TEST(Inverse, RoundTripsAndRejectsSingular) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 4, 4);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(to_rational(m)), Error);
      continue;
    }
    RatMatrix inv = inverse(to_rational(m));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        Rational s = 0;
        for (std::size_t t = 0; t < 4; ++t) s += m[i][t] * inv[t][j];
        EXPECT_EQ(s, Rational(i == j ? 1 : 0));
      }
  }
}

TEST(DualBasis, PairsToIdentity) {
  std::vector<IntVector> rows{make_int_vector({1, 0, 0}), make_int_vector({1, 1, 0}), make_int_vector({0, 1, 2})};
  auto u = dual_basis(rows);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(dot(rows[i], u[j]), Rational(i == j ? 1 : 0));
}

TEST(Smith, FactorsMatchMinorOracleAndDecompositionHolds) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
    IntMatrix m = random_matrix(rng, rows, cols, 6);
    auto snf = smith_decomposition(m);
    EXPECT_EQ(snf.invariant_factors, testing::invariant_factors_by_minors(m));
    EXPECT_EQ(multiply(multiply(snf.left, m), snf.right), snf.diagonal);
    EXPECT_EQ(abs(determinant(snf.left)), 1);
    EXPECT_EQ(abs(determinant(snf.right)), 1);
    for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
      EXPECT_EQ(snf.invariant_factors[i] % snf.invariant_factors[i - 1], 0);
  }
}

TEST(Hermite, IsEchelonAndEquivalent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 4, 5);
    auto h = hermite_normal_form(m);
    EXPECT_EQ(multiply(h.transform, m), h.form);
    EXPECT_EQ(abs(determinant(h.transform)), 1);
    EXPECT_EQ(h.rank, rank(m));
    std::size_t last_pivot = 0;
    for (std::size_t r = 0; r < h.rank; ++r) {
      std::size_t c = 0;
      while (h.form[r][c] == 0) ++c;
      EXPECT_GT(h.form[r][c], 0);
      if (r > 0) EXPECT_GT(c, last_pivot);
      for (std::size_t above = 0; above < r; ++above) {
        EXPECT_GE(h.form[above][c], 0);
        EXPECT_LT(h.form[above][c], h.form[r][c]);
      }
      last_pivot = c;
    }
  }
}

TEST(Kernel, IsSaturatedBasisIndependentOfRowOrder) {
  IntMatrix n{make_int_vector({1, 1, 0, 0}), make_int_vector({0, 2, 2, 0})};
  auto k = integer_kernel_basis(n, 4);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    EXPECT_EQ(multiply(n, v), IntVector(2, 0));
  }
  // swapping and combining the rows of n does not change the canonical basis
  IntMatrix n2{make_int_vector({1, 3, 2, 0}), make_int_vector({1, 1, 0, 0})};
  EXPECT_EQ(integer_kernel_basis(n2, 4), k);
  // saturated: the basis extends to a basis of Z^4
  IntMatrix cols = from_columns(k);
  EXPECT_EQ(smith_decomposition(cols).invariant_factors, std::vector<Integer>(2, 1));
}

TEST(LeftInverse, InvertsSaturatedColumnsOnly) {
  IntMatrix cols = from_columns(std::vector<IntVector>{make_int_vector({1, 2, 3}), make_int_vector({0, 1, 4})});
  IntMatrix left = integer_left_inverse(cols);
  EXPECT_EQ(multiply(left, cols), identity_matrix(2));
  IntMatrix not_saturated = from_columns(std::vector<IntVector>{make_int_vector({2, 0, 0}), make_int_vector({0, 1, 0})});
  EXPECT_THROW(integer_left_inverse(not_saturated), Error);
}

TEST(Unimodular, Certificate) {
  std::vector<IntVector> basis{make_int_vector({1, 1}), make_int_vector({0, 1})};
  EXPECT_EQ(abs(unimodular_certificate(basis)), 1);
  std::vector<IntVector> index2{make_int_vector({1, 1}), make_int_vector({1, -1})};
  EXPECT_EQ(abs(unimodular_certificate(index2)), 2);
}

}  // namespace
}  // namespace polyadj
