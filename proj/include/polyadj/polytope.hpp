#pragma once

#include <polyadj/exactmath.hpp>
#include <polyadj/fan.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polyadj {

/// Irredundant inequality description P = {x : <normals[i], x> >= -offsets[i]}.
/// Normals are primitive. For lattice polytopes the offsets are integers.
struct FacetPresentation {
  std::vector<IntVector> normals;
  std::vector<Rational> offsets;

  std::size_t size() const { return normals.size(); }
  bool operator==(const FacetPresentation&) const = default;
};

/// A convex polytope with rational vertices, stored in vertex form and,
/// when full-dimensional, also in facet form. Vertices are kept in
/// lexicographic order and facets in lexicographic order of their normals,
/// so two polytopes with the same point set compare equal.
///
/// A lattice polytope is a Polytope whose vertices are all integral; the
/// lattice-specific operations check this and throw Error(NotLattice).
class Polytope {
 public:
  /// The empty polytope in R^n.
  static Polytope empty(std::size_t ambient_dim);

  /// Convex hull; duplicates and non-extreme points are dropped.
  /// Throws Error(EmptyInput) on an empty list.
  static Polytope hull(std::size_t ambient_dim, std::vector<RatVector> points);

  /// Solution set of an inequality system (possibly empty or
  /// lower-dimensional). Throws Error(UnboundedPolyhedron).
  static Polytope from_inequalities(std::size_t ambient_dim, const FacetPresentation& system);

  std::size_t ambient_dim() const { return ambient_dim_; }
  /// Affine dimension; -1 for the empty polytope.
  int dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_dim_) && ambient_dim_ > 0; }
  bool is_lattice() const;

  const std::vector<RatVector>& vertices() const { return vertices_; }
  std::vector<IntVector> lattice_vertices() const;

  /// Throws Error(NotFullDimensional).
  const FacetPresentation& facets() const;
  /// Indices of the facets through each vertex (parallel to vertices()).
  const std::vector<std::vector<std::size_t>>& vertex_facets() const;

  bool contains(std::span<const Rational> point) const;

  bool operator==(const Polytope& other) const {
    return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<RatVector> vertices_;
  std::optional<FacetPresentation> facets_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  // Lower-dimensional polytopes: coordinates onto which the affine hull
  // projects injectively, and the full-dimensional image there.
  std::vector<std::size_t> chart_;
  std::vector<Polytope> chart_image_;
};

/// Throws Error(EmptyInput) on an empty list and Error(DimensionMismatch)
/// when the points have different lengths.
Polytope hull_from_points(std::span<const IntVector> points);
Polytope hull_from_points(std::span<const RatVector> points);

/// Throws Error(NotFullDimensional).
const FacetPresentation& facet_presentation(const Polytope& p);

/// Vertices of {x : <normals[i], x> >= -offsets[i]} in lexicographic order;
/// empty iff the system is infeasible. Throws Error(UnboundedPolyhedron).
std::vector<RatVector> vertex_enumeration(std::size_t ambient_dim, const FacetPresentation& system);

/// Lattice points in lexicographic order.
std::vector<IntVector> lattice_points(const Polytope& p);
/// Lattice points strictly inside a full-dimensional polytope.
std::vector<IntVector> interior_lattice_points(const Polytope& p);

/// Counts lattice points of the dilates kP of a fixed full-dimensional
/// polytope. Holds no mutable state, so one counter may serve many threads.
class LatticePointCounter {
 public:
  explicit LatticePointCounter(const Polytope& p);

  Integer count(const Integer& k) const;
  Integer count_interior(const Integer& k) const;
  std::vector<IntVector> points(const Integer& k, bool interior) const;

 private:
  Polytope interior_polytope(const Integer& k) const;

  std::size_t n_ = 0;
  // Level j: facets of the projection onto the first j+1 coordinates,
  // as <normal, x> >= -k * offset.
  std::vector<std::vector<IntVector>> normals_;
  std::vector<std::vector<Rational>> offsets_;
  Integer coordinate_bound_;  // max |vertex coordinate| of P, rounded up
};

/// kP for a positive integer k.
Polytope dilate(const Polytope& p, const Integer& k);
Polytope translate(const Polytope& p, std::span<const Rational> offset);
Polytope product(const Polytope& p, const Polytope& q);

/// Rays are the facet normals; the maximal cone of each vertex collects the
/// normals of its incident facets. Throws Error(NotFullDimensional).
NormalFan normal_fan(const Polytope& p);
bool same_normal_fan(const Polytope& p, const Polytope& q);

bool is_simple(const Polytope& p);
bool is_smooth(const Polytope& p);

/// x -> matrix * x + translation with integer entries and det = +-1.
struct AffineUnimodularMap {
  IntMatrix matrix;
  IntVector translation;

  RatVector apply(std::span<const Rational> x) const;
  IntVector apply(std::span<const Integer> x) const;
  bool operator==(const AffineUnimodularMap&) const = default;
};

AffineUnimodularMap identity_map(std::size_t n);
Polytope apply(const AffineUnimodularMap& map, const Polytope& p);

/// A map T with T(P) = Q, or nullopt when none exists. Both polytopes must
/// be full-dimensional in the same ambient space.
std::optional<AffineUnimodularMap> unimodular_equivalent(const Polytope& p, const Polytope& q);

/// Pairs of vertex indices joined by an edge.
std::vector<std::pair<std::size_t, std::size_t>> edges(const Polytope& p);

/// The standard simplex k * Delta_n = conv(0, k e_1, ..., k e_n).
Polytope standard_simplex(std::size_t n, long k = 1);
/// The box [0, sides[0]] x ... x [0, sides[n-1]].
Polytope box(std::span<const long> sides);

}  // namespace polyadj
