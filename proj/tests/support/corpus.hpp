#pragma once

// Shared test inputs: named polytopes, seeded random lattice polytopes,
// random unimodular maps, and generators for the classified families.

#include <polyadj/cayley.hpp>
#include <polyadj/polytope.hpp>
#include <polyadj/toricdict.hpp>

#include <random>
#include <string>
#include <vector>

namespace polyadj::testing {

struct Named {
  std::string name;
  Polytope polytope;
};

using Rng = std::mt19937_64;

Polytope lattice_hull(std::size_t n, const std::vector<std::vector<long>>& points);

/// Reeve tetrahedron conv(0, e1, e2, (1, 1, r)).
Polytope reeve(long r);
Polytope cross_polytope(std::size_t n);
/// conv{(0,0), (a,0), (0,1), (b,1)}: a smooth trapezoid when a != b.
Polytope trapezoid(long a, long b);

/// Hand-picked polytopes of dimension 1 to 4.
std::vector<Named> named_polytopes();

/// Full-dimensional hull of `points` random points of {0..coord_max}^n.
Polytope random_lattice_polytope(Rng& rng, std::size_t n, long coord_max, std::size_t points);

/// Named polytopes plus seeded random hulls (n <= 4, coordinates <= 4);
/// at least `size` entries.
std::vector<Named> degree_corpus(std::size_t size = 60);

/// Integer matrix with det +-1 built from elementary operations, plus a
/// small translation.
AffineUnimodularMap random_unimodular(Rng& rng, std::size_t n);

/// Smooth complete fans in dimensions 1 to 3.
std::vector<Fan> smooth_fans(std::size_t m);

/// A random ample divisor polytope on `fan` with offsets in [0, max_offset].
Polytope random_ample_polytope(Rng& rng, const Fan& fan, long max_offset);

/// Random strict smooth Cayley spec of order s with k+1 factors on a smooth
/// fan of dimension m.
CayleySpec random_smooth_cayley(Rng& rng, std::size_t m, std::size_t k, long s, long max_offset);

enum class Family { I, II, III, IV, V };

struct FamilyInstance {
  Family family;
  std::string name;
  Polytope polytope;
};

/// Instances of the five classified families with n <= max_n.
std::vector<FamilyInstance> family_instances(std::size_t max_n, Rng& rng);

}  // namespace polyadj::testing
