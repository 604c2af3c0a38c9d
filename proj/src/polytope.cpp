#include <polyadj/error.hpp>
#include <polyadj/linear_program.hpp>
#include <polyadj/polytope.hpp>

#include "double_description.hpp"

#include <algorithm>
#include <numeric>

namespace polyadj {

namespace {

RatMatrix differences(const std::vector<RatVector>& points) {
  RatMatrix d;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RatVector v(points[i].size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = points[i][j] - points[0][j];
    d.push_back(std::move(v));
  }
  return d;
}

// Coordinates onto which the span of `diffs` (rank d) projects injectively.
std::vector<std::size_t> chart_coordinates(const RatMatrix& diffs, std::size_t n, std::size_t d) {
  std::vector<std::size_t> chosen;
  for (std::size_t c = 0; c < n && chosen.size() < d; ++c) {
    auto trial = chosen;
    trial.push_back(c);
    RatMatrix sub;
    for (const auto& row : diffs) {
      RatVector r;
      for (std::size_t k : trial) r.push_back(row[k]);
      sub.push_back(std::move(r));
    }
    if (rank(sub) == trial.size()) chosen = std::move(trial);
  }
  return chosen;
}

RatVector project(const RatVector& x, const std::vector<std::size_t>& coords) {
  RatVector y;
  y.reserve(coords.size());
  for (std::size_t c : coords) y.push_back(x[c]);
  return y;
}

}  // namespace

Polytope Polytope::empty(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  p.dim_ = -1;
  return p;
}

Polytope Polytope::hull(std::size_t ambient_dim, std::vector<RatVector> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of no points");
  for (const auto& pt : points)
    if (pt.size() != ambient_dim) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension in hull");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope p;
  p.ambient_dim_ = ambient_dim;
  const std::size_t n = ambient_dim;
  if (points.size() == 1) {
    p.dim_ = 0;
    p.vertices_ = std::move(points);
    return p;
  }
  RatMatrix diffs = differences(points);
  const std::size_t d = rank(diffs);
  if (d < n) {
    auto coords = chart_coordinates(diffs, n, d);
    std::vector<RatVector> images;
    for (const auto& pt : points) images.push_back(project(pt, coords));
    Polytope image = hull(d, images);
    for (const auto& pt : points)
      if (std::binary_search(image.vertices_.begin(), image.vertices_.end(), project(pt, coords)))
        p.vertices_.push_back(pt);
    p.dim_ = static_cast<int>(d);
    p.chart_ = std::move(coords);
    p.chart_image_.push_back(std::move(image));
    return p;
  }

  std::vector<IntVector> rows;
  rows.reserve(points.size());
  for (const auto& pt : points) {
    RatVector h = pt;
    h.push_back(1);
    rows.push_back(clear_denominators(h));
  }
  auto rays = detail::cone_extreme_rays(rows, n + 1);

  std::vector<std::pair<IntVector, Rational>> facets;
  for (const auto& ray : rays) {
    IntVector eta(ray.begin(), ray.end() - 1);
    Integer g = content(eta);
    if (g == 0) continue;
    facets.emplace_back(primitive(eta), Rational(ray.back(), g));
    facets.back().second.canonicalize();
  }
  std::sort(facets.begin(), facets.end());
  FacetPresentation fp;
  for (auto& [eta, a] : facets) {
    fp.normals.push_back(std::move(eta));
    fp.offsets.push_back(std::move(a));
  }

  for (const auto& pt : points) {
    std::vector<std::size_t> tight;
    IntMatrix tight_normals;
    for (std::size_t j = 0; j < fp.size(); ++j)
      if (dot(std::span<const Integer>(fp.normals[j]), std::span<const Rational>(pt)) + fp.offsets[j] == 0) {
        tight.push_back(j);
        tight_normals.push_back(fp.normals[j]);
      }
    if (tight.size() >= n && rank(tight_normals) == n) {
      p.vertices_.push_back(pt);
      p.vertex_facets_.push_back(std::move(tight));
    }
  }
  p.dim_ = static_cast<int>(n);
  p.facets_ = std::move(fp);
  return p;
}

Polytope Polytope::from_inequalities(std::size_t ambient_dim, const FacetPresentation& system) {
  auto verts = vertex_enumeration(ambient_dim, system);
  if (verts.empty()) return empty(ambient_dim);
  return hull(ambient_dim, std::move(verts));
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVector& v) { return is_integral(v); });
}

std::vector<IntVector> Polytope::lattice_vertices() const {
  std::vector<IntVector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(to_integer(v));
  return out;
}

const FacetPresentation& Polytope::facets() const {
  if (!facets_)
    throw Error(ErrorKind::NotFullDimensional,
                "polytope of dimension " + std::to_string(dim_) + " in R^" + std::to_string(ambient_dim_) +
                    " has no facet presentation");
  return *facets_;
}

const std::vector<std::vector<std::size_t>>& Polytope::vertex_facets() const {
  facets();
  return vertex_facets_;
}

bool Polytope::contains(std::span<const Rational> point) const {
  if (point.size() != ambient_dim_) throw Error(ErrorKind::DimensionMismatch, "point of wrong dimension");
  if (vertices_.empty()) return false;
  if (facets_) {
    for (std::size_t j = 0; j < facets_->size(); ++j)
      if (dot(std::span<const Integer>(facets_->normals[j]), point) + facets_->offsets[j] < 0) return false;
    return true;
  }
  RatVector x(point.begin(), point.end());
  if (dim_ == 0) return x == vertices_.front();
  std::vector<RatVector> with_point = vertices_;
  with_point.push_back(x);
  std::swap(with_point.front(), with_point.back());
  // affine rank with the point first must not grow
  if (rank(differences(with_point)) != static_cast<std::size_t>(dim_)) return false;
  return chart_image_.front().contains(project(x, chart_));
}

Polytope hull_from_points(std::span<const IntVector> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of no points");
  std::vector<RatVector> pts;
  for (const auto& p : points) pts.push_back(to_rational(p));
  return Polytope::hull(points.front().size(), std::move(pts));
}

Polytope hull_from_points(std::span<const RatVector> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of no points");
  return Polytope::hull(points.front().size(), std::vector<RatVector>(points.begin(), points.end()));
}

const FacetPresentation& facet_presentation(const Polytope& p) { return p.facets(); }

std::vector<RatVector> vertex_enumeration(std::size_t n, const FacetPresentation& system) {
  if (system.offsets.size() != system.normals.size())
    throw Error(ErrorKind::DimensionMismatch, "normals and offsets differ in count");
  for (const auto& eta : system.normals)
    if (eta.size() != n) throw Error(ErrorKind::DimensionMismatch, "normal of wrong dimension");
  if (n == 0) {
    bool feasible = std::all_of(system.offsets.begin(), system.offsets.end(), [](const Rational& a) { return a >= 0; });
    return feasible ? std::vector<RatVector>{RatVector{}} : std::vector<RatVector>{};
  }
  if (rank(IntMatrix(system.normals.begin(), system.normals.end())) < n) {
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < system.size(); ++i) cons.push_back({system.normals[i], -system.offsets[i]});
    RatVector zero(n, 0);
    if (lp_feasible_max(cons, zero).status == LpStatus::Infeasible) return {};
    throw Error(ErrorKind::UnboundedPolyhedron, "inequality normals do not span the ambient space");
  }
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < system.size(); ++i) {
    RatVector h = to_rational(system.normals[i]);
    h.push_back(system.offsets[i]);
    rows.push_back(clear_denominators(h));
  }
  IntVector last(n + 1, 0);
  last[n] = 1;
  rows.push_back(std::move(last));
  auto rays = detail::cone_extreme_rays(rows, n + 1);
  std::vector<RatVector> points;
  bool recession = false;
  for (const auto& ray : rays) {
    if (ray.back() == 0) {
      recession = true;
      continue;
    }
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = Rational(ray[j], ray.back());
      x[j].canonicalize();
    }
    points.push_back(std::move(x));
  }
  if (!points.empty() && recession) throw Error(ErrorKind::UnboundedPolyhedron, "inequality system is unbounded");
  std::sort(points.begin(), points.end());
  return points;
}

Polytope dilate(const Polytope& p, const Integer& k) {
  if (k <= 0) throw Error(ErrorKind::NegativeParameter, "dilation factor must be positive");
  if (p.is_empty()) return p;
  std::vector<RatVector> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= k;
  return Polytope::hull(p.ambient_dim(), std::move(pts));
}

Polytope translate(const Polytope& p, std::span<const Rational> offset) {
  if (offset.size() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "translation vector length");
  if (p.is_empty()) return p;
  std::vector<RatVector> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += offset[j];
  return Polytope::hull(p.ambient_dim(), std::move(pts));
}

Polytope product(const Polytope& p, const Polytope& q) {
  const std::size_t n = p.ambient_dim() + q.ambient_dim();
  if (p.is_empty() || q.is_empty()) return Polytope::empty(n);
  std::vector<RatVector> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      pts.push_back(std::move(v));
    }
  return Polytope::hull(n, std::move(pts));
}

NormalFan normal_fan(const Polytope& p) {
  const auto& f = p.facets();
  return NormalFan{f.normals, p.vertex_facets()};
}

bool same_normal_fan(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) return false;
  return same_fan(normal_fan(p), normal_fan(q));
}

bool is_simple(const Polytope& p) {
  const auto& vf = p.vertex_facets();
  return std::all_of(vf.begin(), vf.end(), [&](const auto& fs) { return fs.size() == p.ambient_dim(); });
}

bool is_smooth(const Polytope& p) {
  if (!is_simple(p)) return false;
  const auto& f = p.facets();
  for (const auto& fs : p.vertex_facets()) {
    std::vector<IntVector> gens;
    for (std::size_t j : fs) gens.push_back(f.normals[j]);
    if (abs(unimodular_certificate(gens)) != 1) return false;
  }
  return true;
}

RatVector AffineUnimodularMap::apply(std::span<const Rational> x) const {
  RatVector y = multiply(matrix, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

IntVector AffineUnimodularMap::apply(std::span<const Integer> x) const {
  IntVector y = multiply(matrix, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
  return y;
}

AffineUnimodularMap identity_map(std::size_t n) { return {identity_matrix(n), IntVector(n, 0)}; }

Polytope apply(const AffineUnimodularMap& map, const Polytope& p) {
  if (map.matrix.size() != p.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "map and polytope dimensions");
  if (p.is_empty()) return p;
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(map.apply(v));
  return Polytope::hull(p.ambient_dim(), std::move(pts));
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p) {
  const auto& vf = p.vertex_facets();
  const std::size_t n = p.ambient_dim();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vf.size(); ++i) {
    for (std::size_t j = i + 1; j < vf.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(vf[i].begin(), vf[i].end(), vf[j].begin(), vf[j].end(), std::back_inserter(common));
      if (common.size() + 1 < n) continue;
      bool edge = true;
      for (std::size_t l = 0; l < vf.size() && edge; ++l) {
        if (l == i || l == j) continue;
        if (std::includes(vf[l].begin(), vf[l].end(), common.begin(), common.end())) edge = false;
      }
      if (edge) out.emplace_back(i, j);
    }
  }
  return out;
}

Polytope standard_simplex(std::size_t n, long k) {
  std::vector<RatVector> pts;
  pts.emplace_back(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(n, 0);
    v[i] = k;
    pts.push_back(std::move(v));
  }
  return Polytope::hull(n, std::move(pts));
}

Polytope box(std::span<const long> sides) {
  const std::size_t n = sides.size();
  std::vector<RatVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector v(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) v[i] = sides[i];
    pts.push_back(std::move(v));
  }
  return Polytope::hull(n, std::move(pts));
}

}  // namespace polyadj
