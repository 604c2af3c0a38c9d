#include <polyadj/adjunction.hpp>
#include <polyadj/classify.hpp>
#include <polyadj/ehrhart.hpp>
#include <polyadj/error.hpp>

#include <algorithm>

namespace polyadj {

namespace {

std::vector<std::string> failed_hypotheses(const Polytope& p) {
  std::vector<std::string> failed;
  const bool smooth = is_smooth(p);
  if (!smooth) failed.emplace_back("smooth");
  if (is_simple(p)) {
    if (!adjunction_report(p).q_normal) failed.emplace_back("q_normal");
  } else if (smooth) {
    throw Error(ErrorKind::InternalInconsistency, "smooth polytope that is not simple");
  }
  if (2 * codegree_by_interior_points(p) < p.ambient_dim() + 1) failed.emplace_back("codegree");
  return failed;
}

std::optional<Integer> common_parity_length(const CayleySpec& spec) {
  std::optional<Integer> parity;
  for (const auto& f : spec.factors) {
    if (f.ambient_dim() != 1) return std::nullopt;
    const auto& v = f.vertices();
    Integer len = Rational(v.back()[0] - v.front()[0]).get_num();
    Integer r = len % 2;
    if (parity && *parity != r) return std::nullopt;
    parity = r;
  }
  return parity;
}

bool is_type_v(std::size_t n, const CayleyStructure& c) {
  return n % 2 == 1 && c.spec.s == 2 && c.spec.k() == n - 1 && common_parity_length(c.spec).has_value();
}

Polytope segment(const Integer& s) { return Polytope::hull(1, {RatVector{0}, RatVector{Rational(s)}}); }

bool reconstructs(const Polytope& p, const CayleyStructure& c) {
  if (abs(determinant(c.map.matrix)) != 1) return false;
  if (!is_strict(c.spec)) return false;
  return apply(c.map, p) == cayley_construct(c.spec);
}

}  // namespace

std::string_view to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::TypeI_sSegment: return "TypeI_sSegment";
    case VerdictTag::TypeII_3Delta3: return "TypeII_3Delta3";
    case VerdictTag::TypeIII_2DeltaN: return "TypeIII_2DeltaN";
    case VerdictTag::TypeIV_Cayley1: return "TypeIV_Cayley1";
    case VerdictTag::TypeV_Cayley2Segments: return "TypeV_Cayley2Segments";
    case VerdictTag::OutsideHypotheses: return "OutsideHypotheses";
    case VerdictTag::Unclassified: return "Unclassified";
  }
  return "?";
}

ClassificationVerdict classify(const Polytope& p) {
  if (!p.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "classification needs a full-dimensional polytope");
  if (!p.is_lattice()) throw Error(ErrorKind::NotLattice, "classification needs a lattice polytope");
  const std::size_t n = p.ambient_dim();
  ClassificationVerdict v;
  v.failed = failed_hypotheses(p);
  if (!v.failed.empty()) {
    v.tag = VerdictTag::OutsideHypotheses;
    return v;
  }

  if (n == 1) {
    const auto& vs = p.vertices();
    AffineUnimodularMap shift{{{Integer(1)}}, {-vs.front()[0].get_num()}};
    v.tag = VerdictTag::TypeI_sSegment;
    v.map = std::move(shift);
    v.segment_length = Rational(vs.back()[0] - vs.front()[0]).get_num();
    return v;
  }
  if (n == 3)
    if (auto map = unimodular_equivalent(p, standard_simplex(3, 3))) {
      v.tag = VerdictTag::TypeII_3Delta3;
      v.map = std::move(map);
      return v;
    }
  if (auto map = unimodular_equivalent(p, standard_simplex(n, 2))) {
    v.tag = VerdictTag::TypeIII_2DeltaN;
    v.map = std::move(map);
    return v;
  }
  if (auto map = unimodular_equivalent(p, standard_simplex(n))) {
    v.tag = VerdictTag::TypeIV_Cayley1;
    v.map = std::move(map);
    return v;
  }
  // k >= (n-1)/2
  for (std::size_t k = std::max<std::size_t>(1, n / 2); k < n; ++k) {
    if (auto c = recognize_cayley(p, 1, k)) {
      v.tag = VerdictTag::TypeIV_Cayley1;
      v.cayley = std::move(c);
      return v;
    }
  }
  if (n % 2 == 1 && n > 1)
    if (auto c = recognize_cayley(p, 2, n - 1); c && is_type_v(n, *c)) {
      v.tag = VerdictTag::TypeV_Cayley2Segments;
      v.cayley = std::move(c);
      return v;
    }
  v.tag = VerdictTag::Unclassified;
  return v;
}

bool verify_verdict(const Polytope& p, const ClassificationVerdict& verdict) {
  const std::size_t n = p.ambient_dim();
  auto model_is = [&](const Polytope& model) {
    return verdict.map && abs(determinant(verdict.map->matrix)) == 1 && apply(*verdict.map, p) == model;
  };
  switch (verdict.tag) {
    case VerdictTag::TypeI_sSegment:
      return n == 1 && verdict.segment_length && *verdict.segment_length > 0 &&
             model_is(segment(*verdict.segment_length));
    case VerdictTag::TypeII_3Delta3:
      return n == 3 && model_is(standard_simplex(3, 3));
    case VerdictTag::TypeIII_2DeltaN:
      return model_is(standard_simplex(n, 2));
    case VerdictTag::TypeIV_Cayley1:
      if (!verdict.cayley) return n > 1 && model_is(standard_simplex(n));
      return verdict.cayley && verdict.cayley->spec.s == 1 && 2 * verdict.cayley->spec.k() + 1 >= n &&
             verdict.cayley->spec.m() + verdict.cayley->spec.k() == n && reconstructs(p, *verdict.cayley);
    case VerdictTag::TypeV_Cayley2Segments:
      return verdict.cayley && is_type_v(n, *verdict.cayley) && reconstructs(p, *verdict.cayley);
    case VerdictTag::OutsideHypotheses: {
      if (verdict.failed.empty()) return false;
      auto again = failed_hypotheses(p);
      return again == verdict.failed;
    }
    case VerdictTag::Unclassified:
      return failed_hypotheses(p).empty();
  }
  return false;
}

}  // namespace polyadj
