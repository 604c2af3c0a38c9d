#include <polyadj/ehrhart.hpp>
#include <polyadj/error.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace polyadj {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(HStar, NamedPolytopes) {
  EXPECT_EQ(h_star(standard_simplex(2)).coefficients, ints({1, 0, 0}));
  EXPECT_EQ(h_star(standard_simplex(3, 2)).coefficients, ints({1, 6, 1, 0}));
  EXPECT_EQ(h_star(box(std::vector<long>{1, 1})).coefficients, ints({1, 1, 0}));
  EXPECT_EQ(h_star(box(std::vector<long>{1, 1, 1})).coefficients, ints({1, 4, 1, 0}));
  for (long r = 2; r <= 4; ++r) EXPECT_EQ(h_star(testing::reeve(r)).coefficients, ints({1, 0, r - 1, 0}));
}

TEST(Degree, NamedValues) {
  auto d = degree_and_codegree(standard_simplex(4, 2));
  EXPECT_EQ(d.degree, 2u);
  for (std::size_t n = 2; n <= 6; ++n)
    EXPECT_EQ(codegree_by_interior_points(standard_simplex(n, 2)), (n + 2) / 2) << n;
  EXPECT_EQ(degree_and_codegree(standard_simplex(3, 3)).codegree, 2u);
  EXPECT_EQ(degree_and_codegree(standard_simplex(4, 3)).codegree, 2u);
  auto simplex = degree_and_codegree(standard_simplex(2));
  EXPECT_EQ(simplex.degree, 0u);
  EXPECT_EQ(simplex.codegree, 3u);
}

TEST(EhrhartPolynomial, SimplexIsBinomial) {
  auto e = ehrhart_polynomial(standard_simplex(3));
  // (m+1)(m+2)(m+3)/6
  EXPECT_EQ(e.coefficients, (RatVector{1, fraction(11, 6), 1, fraction(1, 6)}));
  EXPECT_EQ(e(Rational(10)), 286);
}

TEST(EhrhartPolynomial, LeadingCoefficientIsVolume) {
  EXPECT_EQ(ehrhart_polynomial(box(std::vector<long>{2, 3, 1})).coefficients.back(), 6);
  EXPECT_EQ(ehrhart_polynomial(standard_simplex(4, 2)).coefficients.back(), fraction(16, 24));
}

TEST(Corpus, HStarMatchesBruteForceAndReciprocityHolds) {
  for (const auto& [name, p] : testing::degree_corpus(60)) {
    const std::size_t n = p.ambient_dim();
    std::vector<Integer> counts{1};
    for (long m = 1; m <= static_cast<long>(n); ++m) counts.push_back(testing::brute_force_count(p, m));
    auto h = h_star(p);
    EXPECT_EQ(h.coefficients, testing::h_star_by_binomials(counts, n)) << name;
    auto e = ehrhart_polynomial(p);
    for (long k = 1; k <= 3; ++k) {
      Rational at_minus = e(Rational(-k));
      Integer interior = testing::brute_force_count(p, k, true);
      EXPECT_EQ(at_minus, Rational(n % 2 == 0 ? interior : Integer(-interior))) << name << " k=" << k;
    }
    auto d = degree_and_codegree(p);
    EXPECT_EQ(d.codegree, testing::brute_force_codegree(p)) << name;
    EXPECT_EQ(d.degree + d.codegree, n + 1) << name;
  }
}

TEST(Counter, ThreadedCountsAgree) {
  testing::Rng rng(5);
  Polytope p = testing::random_lattice_polytope(rng, 4, 4, 9);
  EhrhartCounter serial(p), parallel(p, EhrhartOptions{4});
  EXPECT_EQ(serial.counts(6), parallel.counts(6));
}

TEST(Counter, RejectsNonLattice) {
  Polytope half = Polytope::hull(1, {RatVector{0}, RatVector{fraction(1, 2)}});
  EXPECT_THROW(h_star(half), Error);
  EXPECT_THROW(count(half, 2), Error);
  EXPECT_EQ(count(standard_simplex(2), 0), 1);
  EXPECT_EQ(count(standard_simplex(2), 4), 15);
}

}  // namespace
}  // namespace polyadj
