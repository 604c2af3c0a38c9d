#pragma once

// The fan side of the toric dictionary: the polytope P_D of a torus-invariant
// divisor D = sum a_i D_i on a complete fan, and the combinatorial ample,
// nef, big and effective tests.

#include <polyadj/exactmath.hpp>
#include <polyadj/fan.hpp>
#include <polyadj/polytope.hpp>

#include <vector>

namespace polyadj {

struct FanDivisor {
  Fan fan;
  RatVector coefficients;  // one per ray
};

/// Every wall of every maximal cone lies in exactly one other maximal cone.
/// Maximal cones must be full-dimensional.
bool is_complete(const Fan& fan);

/// P_D = {x : <rho_i, x> >= -a_i}. May be empty or lower-dimensional.
/// Throws Error(IncompleteFan) or Error(DimensionMismatch).
Polytope polytope_from_divisor(const FanDivisor& d);

/// P_D is full-dimensional and its normal fan is the fan of D.
bool is_ample(const FanDivisor& d);
/// Each maximal cone's linear functional m_s (with <rho_i, m_s> = -a_i on
/// its rays) satisfies all the other ray inequalities.
/// Throws Error(NonSimplicial) as well as the completeness errors.
bool is_nef(const FanDivisor& d);
bool is_big(const FanDivisor& d);
bool is_effective(const FanDivisor& d);

/// The divisor whose polytope is p: normal fan plus facet offsets.
FanDivisor divisor_of(const Polytope& p);

/// Fan of P^m with rays -(e_1 + ... + e_m), e_1, ..., e_m.
Fan projective_space_fan(std::size_t m);
/// Product fan in R^(a.dim + b.dim).
Fan product_fan(const Fan& a, const Fan& b);
/// Star subdivision of a simplicial fan at a primitive vector v that is not
/// already a ray; v becomes the last ray.
/// Throws Error(NonSimplicial), Error(ZeroVector), Error(DimensionMismatch).
Fan star_subdivision(const Fan& fan, const IntVector& v);

/// Blowup of P^m x P^1 along H x {o}: the fan of P^m x P^1 (rays e_0..e_m,
/// e, -e) subdivided at f = e_1 + e.
Fan example_3_6_fan(std::size_t m);
/// L = 2 D_1 + 2 D_e + 3 E on that fan.
FanDivisor example_3_6_divisor(std::size_t m);
/// P_L as the explicit system
///   x_1 >= -2, x_i >= 0 (i >= 2), -sum x_i >= 0, y >= -2, -y >= 0, x_1 + y >= -3.
Polytope example_3_6_polytope(std::size_t m);

}  // namespace polyadj
