#include <polyadj/error.hpp>
#include <polyadj/toricdict.hpp>

#include "double_description.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace polyadj {

namespace {

// Walls of a full-dimensional maximal cone, each as a sorted ray-index set.
std::vector<std::vector<std::size_t>> walls(const Fan& fan, const std::vector<std::size_t>& cone) {
  const std::size_t n = fan.dim();
  std::vector<std::vector<std::size_t>> out;
  IntMatrix gens;
  for (std::size_t r : cone) gens.push_back(fan.rays[r]);
  if (gens.size() == n && rank(gens) == n) {
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      std::vector<std::size_t> w;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != skip) w.push_back(cone[i]);
      out.push_back(std::move(w));
    }
  } else {
    // facet normals of the cone are the extreme rays of its dual
    for (const auto& y : detail::cone_extreme_rays(gens, n)) {
      std::vector<std::size_t> w;
      for (std::size_t r : cone)
        if (dot(fan.rays[r], y) == 0) w.push_back(r);
      out.push_back(std::move(w));
    }
  }
  for (auto& w : out) std::sort(w.begin(), w.end());
  return out;
}

void check_divisor(const FanDivisor& d) {
  if (d.coefficients.size() != d.fan.rays.size())
    throw Error(ErrorKind::DimensionMismatch, "divisor needs one coefficient per ray");
  for (const auto& r : d.fan.rays)
    if (r.size() != d.fan.dim()) throw Error(ErrorKind::DimensionMismatch, "fan rays have different lengths");
  if (!is_complete(d.fan)) throw Error(ErrorKind::IncompleteFan, "the fan is not complete");
}

FacetPresentation system_of(const FanDivisor& d) { return FacetPresentation{d.fan.rays, d.coefficients}; }

}  // namespace

bool is_complete(const Fan& fan) {
  const std::size_t n = fan.dim();
  if (n == 0 || fan.maximal_cones.empty()) return false;
  std::map<std::vector<std::size_t>, std::size_t> wall_count;
  for (const auto& cone : fan.maximal_cones) {
    IntMatrix gens;
    for (std::size_t r : cone) {
      if (r >= fan.rays.size()) return false;
      gens.push_back(fan.rays[r]);
    }
    if (rank(gens) != n) return false;
    for (auto& w : walls(fan, cone)) ++wall_count[w];
  }
  return std::all_of(wall_count.begin(), wall_count.end(), [](const auto& e) { return e.second == 2; });
}

Polytope polytope_from_divisor(const FanDivisor& d) {
  check_divisor(d);
  return Polytope::from_inequalities(d.fan.dim(), system_of(d));
}

bool is_ample(const FanDivisor& d) {
  Polytope p = polytope_from_divisor(d);
  return p.full_dimensional() && same_fan(normal_fan(p), d.fan);
}

bool is_nef(const FanDivisor& d) {
  check_divisor(d);
  const std::size_t n = d.fan.dim();
  if (!is_simplicial(d.fan)) throw Error(ErrorKind::NonSimplicial, "nef test needs a simplicial fan");
  for (const auto& cone : d.fan.maximal_cones) {
    if (cone.size() != n) throw Error(ErrorKind::NonSimplicial, "nef test needs full-dimensional simplicial cones");
    RatMatrix a;
    RatVector rhs;
    for (std::size_t r : cone) {
      a.push_back(to_rational(d.fan.rays[r]));
      rhs.push_back(-d.coefficients[r]);
    }
    RatVector m = solve(a, rhs);
    for (std::size_t r = 0; r < d.fan.rays.size(); ++r)
      if (dot(d.fan.rays[r], m) < -d.coefficients[r]) return false;
  }
  return true;
}

bool is_big(const FanDivisor& d) { return polytope_from_divisor(d).full_dimensional(); }

bool is_effective(const FanDivisor& d) { return !polytope_from_divisor(d).is_empty(); }

FanDivisor divisor_of(const Polytope& p) { return FanDivisor{normal_fan(p), p.facets().offsets}; }

Fan projective_space_fan(std::size_t m) {
  Fan f;
  f.rays.push_back(IntVector(m, -1));
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, 0);
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  for (std::size_t skip = 0; skip <= m; ++skip) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i <= m; ++i)
      if (i != skip) cone.push_back(i);
    f.maximal_cones.push_back(std::move(cone));
  }
  return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Fan f;
  for (const auto& r : a.rays) {
    IntVector x = r;
    x.resize(na + nb, 0);
    f.rays.push_back(std::move(x));
  }
  for (const auto& r : b.rays) {
    IntVector x(na, 0);
    x.insert(x.end(), r.begin(), r.end());
    f.rays.push_back(std::move(x));
  }
  for (const auto& ca : a.maximal_cones)
    for (const auto& cb : b.maximal_cones) {
      std::vector<std::size_t> cone = ca;
      for (std::size_t r : cb) cone.push_back(r + a.rays.size());
      f.maximal_cones.push_back(std::move(cone));
    }
  return f;
}

Fan star_subdivision(const Fan& fan, const IntVector& v) {
  const std::size_t n = fan.dim();
  if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "subdivision vector has the wrong length");
  IntVector ray = primitive(v);
  if (!is_simplicial(fan)) throw Error(ErrorKind::NonSimplicial, "star subdivision needs a simplicial fan");

  // The smallest cone containing v: rays with positive coefficient in any
  // maximal cone that contains v.
  std::optional<std::vector<std::size_t>> tau;
  for (const auto& cone : fan.maximal_cones) {
    if (cone.size() != n) continue;
    RatMatrix cols(n, RatVector(n));
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) cols[r][c] = fan.rays[cone[c]][r];
    RatVector coef = solve(cols, to_rational(ray));
    if (std::any_of(coef.begin(), coef.end(), [](const Rational& x) { return x < 0; })) continue;
    std::vector<std::size_t> t;
    for (std::size_t c = 0; c < n; ++c)
      if (coef[c] > 0) t.push_back(cone[c]);
    std::sort(t.begin(), t.end());
    tau = std::move(t);
    break;
  }
  if (!tau) throw Error(ErrorKind::IncompleteFan, "subdivision vector lies outside the fan");

  Fan out;
  out.rays = fan.rays;
  out.rays.push_back(ray);
  const std::size_t new_ray = fan.rays.size();
  for (const auto& cone : fan.maximal_cones) {
    std::vector<std::size_t> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (!std::includes(sorted.begin(), sorted.end(), tau->begin(), tau->end())) {
      out.maximal_cones.push_back(cone);
      continue;
    }
    for (std::size_t drop : *tau) {
      std::vector<std::size_t> c;
      for (std::size_t r : sorted)
        if (r != drop) c.push_back(r);
      c.push_back(new_ray);
      out.maximal_cones.push_back(std::move(c));
    }
  }
  return out;
}

Fan example_3_6_fan(std::size_t m) {
  Fan f = product_fan(projective_space_fan(m), projective_space_fan(1));
  // rays so far: e_0, e_1..e_m, -e, e
  IntVector fvec(m + 1, 0);
  fvec[0] = 1;
  fvec[m] = 1;
  return star_subdivision(f, fvec);
}

FanDivisor example_3_6_divisor(std::size_t m) {
  FanDivisor d{example_3_6_fan(m), RatVector(m + 4, 0)};
  d.coefficients[1] = 2;      // D_1
  d.coefficients[m + 2] = 2;  // D_e
  d.coefficients[m + 3] = 3;  // E
  return d;
}

Polytope example_3_6_polytope(std::size_t m) {
  if (m < 1) throw Error(ErrorKind::NegativeParameter, "m must be positive");
  const std::size_t n = m + 1;
  FacetPresentation sys;
  auto add = [&](IntVector normal, long offset) {
    sys.normals.push_back(std::move(normal));
    sys.offsets.push_back(offset);
  };
  IntVector e(n, 0);
  e[0] = 1;
  add(e, 2);
  for (std::size_t i = 1; i < m; ++i) {
    IntVector x(n, 0);
    x[i] = 1;
    add(std::move(x), 0);
  }
  IntVector sum(n, -1);
  sum[m] = 0;
  add(std::move(sum), 0);
  IntVector y(n, 0);
  y[m] = 1;
  add(y, 2);
  y[m] = -1;
  add(y, 0);
  IntVector diag(n, 0);
  diag[0] = 1;
  diag[m] = 1;
  add(std::move(diag), 3);
  return Polytope::from_inequalities(n, sys);
}

}  // namespace polyadj
