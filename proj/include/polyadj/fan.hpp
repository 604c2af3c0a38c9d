#pragma once

#include <polyadj/exactmath.hpp>

#include <cstddef>
#include <vector>

namespace polyadj {

/// A fan given by its primitive rays and its maximal cones (as sorted lists
/// of ray indices).
struct Fan {
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> maximal_cones;

  std::size_t dim() const { return rays.empty() ? 0 : rays.front().size(); }
};

/// The normal fan of a polytope is an ordinary fan.
using NormalFan = Fan;

/// Rays sorted lexicographically, cones re-indexed, sorted and deduplicated.
Fan canonical_form(const Fan& fan);

/// Equality of fans: same ray set and same maximal cones (as ray sets).
bool same_fan(const Fan& a, const Fan& b);

bool is_simplicial(const Fan& fan);

/// Simplicial with |det| = 1 on every full-dimensional maximal cone.
bool is_smooth(const Fan& fan);

}  // namespace polyadj
