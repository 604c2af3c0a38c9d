#pragma once

#include <polyadj/exactmath.hpp>

#include <vector>

namespace polyadj::detail {

/// Extreme rays of the pointed cone {y in Q^d : <row, y> >= 0 for all rows},
/// as primitive integer vectors in lexicographic order. The rows must span
/// Q^d; an empty result means the cone is {0}.
std::vector<IntVector> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t d);

}  // namespace polyadj::detail
