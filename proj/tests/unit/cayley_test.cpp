#include <polyadj/adjunction.hpp>
#include <polyadj/cayley.hpp>
#include <polyadj/error.hpp>
#include <polyadj/toricdict.hpp>

#include "support/corpus.hpp"

#include <gtest/gtest.h>

namespace polyadj {
namespace {

using testing::lattice_hull;

Polytope seg(long a) { return standard_simplex(1, a); }

CayleySpec spec_of(long s, std::vector<Polytope> factors) { return CayleySpec{std::move(factors), s}; }

bool same_factors_up_to_order(const std::vector<Polytope>& a, const std::vector<Polytope>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j)
      if (!used[j] && unimodular_equivalent(f, b[j])) used[j] = matched = true;
    if (!matched) return false;
  }
  return true;
}

TEST(Construct, NamedExamples) {
  EXPECT_EQ(cayley_construct(spec_of(1, {seg(1), seg(1)})), box(std::vector<long>{1, 1}));
  EXPECT_EQ(cayley_construct(spec_of(2, {seg(1), seg(3)})), lattice_hull(2, {{0, 0}, {1, 0}, {0, 2}, {3, 2}}));
  EXPECT_EQ(cayley_construct(spec_of(1, {standard_simplex(2), standard_simplex(2)})),
            product(standard_simplex(2), standard_simplex(1)));
  EXPECT_THROW(cayley_construct(spec_of(1, {seg(1)})), Error);
  EXPECT_THROW(cayley_construct(spec_of(1, {seg(1), standard_simplex(2)})), Error);
  EXPECT_THROW(cayley_construct(spec_of(0, {seg(1), seg(1)})), Error);
}

TEST(Construct, DimensionAndProjectionOntoSimplex) {
  testing::Rng rng(41);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t k = 1; k <= 3; ++k)
      for (long s = 1; s <= 3; ++s) {
        CayleySpec spec = testing::random_smooth_cayley(rng, m, k, s, 3);
        Polytope p = cayley_construct(spec);
        EXPECT_EQ(p.dim(), static_cast<int>(m + k));
        std::vector<RatVector> proj;
        for (const auto& v : p.vertices()) proj.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
        EXPECT_EQ(Polytope::hull(k, std::move(proj)), standard_simplex(k, s));
      }
}

TEST(Strict, NamedExamples) {
  EXPECT_TRUE(is_strict(spec_of(2, {seg(1), seg(3)})));
  EXPECT_FALSE(is_strict(spec_of(1, {standard_simplex(2), box(std::vector<long>{1, 1})})));
  EXPECT_TRUE(is_strict(spec_of(1, {standard_simplex(2, 2), standard_simplex(2, 5)})));
}

TEST(Smooth, DivisibilityCriterion) {
  EXPECT_TRUE(cayley_smooth(spec_of(2, {seg(1), seg(3)})));
  EXPECT_FALSE(cayley_smooth(spec_of(2, {seg(1), seg(2)})));
  EXPECT_TRUE(cayley_smooth(spec_of(1, {box(std::vector<long>{1, 2}), box(std::vector<long>{3, 1})})));
  try {
    cayley_smooth(spec_of(1, {standard_simplex(2), box(std::vector<long>{1, 1})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStrict);
  }
}

TEST(Smooth, CriterionMatchesSmoothnessOfConstruction) {
  // strict specs with arbitrary offsets, over smooth and non-smooth fans
  testing::Rng rng(7);
  std::vector<Fan> fans = testing::smooth_fans(1);
  for (const auto& f : testing::smooth_fans(2)) fans.push_back(f);
  fans.push_back(normal_fan(testing::cross_polytope(2)));
  fans.push_back(normal_fan(lattice_hull(2, {{0, 0}, {2, 0}, {0, 1}})));
  int smooth_count = 0, total = 0;
  for (const auto& fan : fans)
    for (std::size_t k = 1; k <= 3; ++k)
      for (long s = 1; s <= 3; ++s)
        for (int trial = 0; trial < 3; ++trial) {
          CayleySpec spec;
          spec.s = s;
          // integral offsets on a singular fan need not give lattice vertices
          while (spec.factors.size() < k + 1) {
            Polytope f = testing::random_ample_polytope(rng, fan, 5);
            if (f.is_lattice() && (spec.factors.empty() || same_normal_fan(f, spec.factors[0])))
              spec.factors.push_back(f);
          }
          const bool criterion = cayley_smooth(spec);
          EXPECT_EQ(criterion, is_smooth(cayley_construct(spec)));
          smooth_count += criterion;
          ++total;
        }
  EXPECT_GT(smooth_count, 0);
  EXPECT_LT(smooth_count, total);
}

TEST(ClosedForm, NamedExamples) {
  auto a = closed_form_invariants(spec_of(1, {seg(1), seg(2)}));
  EXPECT_EQ(a.case_tag, CayleyCase::Case1);
  EXPECT_EQ(*a.q_codegree, 2);
  EXPECT_EQ(sigma(cayley_construct(spec_of(1, {seg(1), seg(2)}))), fraction(1, 2));

  auto b = closed_form_invariants(spec_of(1, {standard_simplex(2), standard_simplex(2)}));
  EXPECT_EQ(b.case_tag, CayleyCase::Case2a);
  EXPECT_EQ(*b.q_codegree, 3);

  auto c = closed_form_invariants(spec_of(2, {seg(1), seg(1), seg(3)}));
  EXPECT_EQ(c.case_tag, CayleyCase::Case1);
  EXPECT_EQ(*c.q_codegree, fraction(3, 2));
  EXPECT_EQ(sigma(cayley_construct(spec_of(2, {seg(1), seg(1), seg(3)}))), fraction(2, 3));

  // (k+1)/s < m
  auto d = closed_form_invariants(spec_of(1, {standard_simplex(3), standard_simplex(3)}));
  EXPECT_EQ(d.case_tag, CayleyCase::HypothesisFails);
  EXPECT_FALSE(d.q_codegree);
  // not smooth
  EXPECT_EQ(closed_form_invariants(spec_of(2, {seg(1), seg(2)})).case_tag, CayleyCase::HypothesisFails);
}

TEST(ClosedForm, AgreesWithLinearProgramming) {
  testing::Rng rng(2024);
  int checked = 0;
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t k = 1; k <= 4; ++k)
      for (long s = 1; s <= 3; ++s) {
        if (Rational(static_cast<long>(k + 1), s) < static_cast<long>(m)) continue;
        for (int trial = 0; trial < 2; ++trial) {
          CayleySpec spec = testing::random_smooth_cayley(rng, m, k, s, 3);
          auto a = closed_form_invariants(spec);
          ASSERT_NE(a.case_tag, CayleyCase::HypothesisFails);
          auto r = adjunction_report(cayley_construct(spec));
          EXPECT_EQ(*a.q_codegree, r.q_codegree);
          EXPECT_EQ(*a.nef_value, *r.nef_value);
          EXPECT_EQ(r.q_normal, a.case_tag != CayleyCase::Case2b);
          ++checked;
        }
      }
  EXPECT_GE(checked, 20);
}

TEST(Recognize, NamedExamples) {
  auto sq = recognize_cayley(box(std::vector<long>{1, 1}), 1, 1);
  ASSERT_TRUE(sq);
  EXPECT_TRUE(same_factors_up_to_order(sq->spec.factors, {seg(1), seg(1)}));

  Polytope q = lattice_hull(2, {{0, 0}, {1, 0}, {0, 2}, {3, 2}});
  auto r = recognize_cayley(q, 2, 1);
  ASSERT_TRUE(r);
  EXPECT_TRUE(same_factors_up_to_order(r->spec.factors, {seg(1), seg(3)}));
  EXPECT_EQ(apply(r->map, q), cayley_construct(r->spec));

  EXPECT_FALSE(recognize_cayley(standard_simplex(2, 2), 1, 1));
  Polytope blowup = example_3_6_polytope(2);
  for (long s = 1; s <= 3; ++s)
    for (std::size_t k = 1; k <= 2; ++k) EXPECT_FALSE(recognize_cayley(blowup, s, k)) << s << " " << k;
  EXPECT_THROW(recognize_cayley(q, 1, 2), Error);
}

TEST(Recognize, RoundTripsThroughRandomLatticeChanges) {
  testing::Rng rng(77);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t k = 1; k <= 3; ++k)
      for (long s = 1; s <= 3; ++s) {
        CayleySpec spec = testing::random_smooth_cayley(rng, m, k, s, 3);
        Polytope p = apply(testing::random_unimodular(rng, m + k), cayley_construct(spec));
        auto found = recognize_cayley(p, s, k);
        ASSERT_TRUE(found) << "m=" << m << " k=" << k << " s=" << s;
        EXPECT_EQ(apply(found->map, p), cayley_construct(found->spec));
        EXPECT_TRUE(same_factors_up_to_order(found->spec.factors, spec.factors)) << "m=" << m << " k=" << k << " s=" << s;
      }
}

}  // namespace
}  // namespace polyadj
