#pragma once

// Adjoint polytopes P^(t) and the invariants built from them:
// sigma(P), lambda(P), the Q-codegree 1/sigma, the nef value 1/lambda and
// Q-normality (sigma = lambda).

#include <polyadj/exactmath.hpp>
#include <polyadj/polytope.hpp>

#include <optional>
#include <vector>

namespace polyadj {

/// {x : <eta_i, x> >= -a_i + t}: every facet pushed inward by lattice
/// distance t. The result may be empty or lower-dimensional.
/// Throws Error(NegativeParameter) for t < 0 and Error(NotFullDimensional).
Polytope adjoint(const Polytope& p, const Rational& t);

/// The facet system of P^(t) (offsets a_i - t), without solving it.
FacetPresentation adjoint_system(const Polytope& p, const Rational& t);

/// sup{t >= 0 : P^(t) nonempty}, from one exact LP in (x, t).
Rational sigma(const Polytope& p);

/// Supremum of the t for which P^(t) keeps the normal fan of P. Each
/// vertex v of a simple polytope moves as v + t*u_v where u_v is the sum of
/// the dual basis of its incident normals; the fan survives until some
/// moved vertex reaches a facet it was not on. Capped by sigma(P).
/// Throws Error(NotSimple).
Rational lambda(const Polytope& p);

/// Every t at which some moved vertex reaches a non-incident facet, sorted
/// and deduplicated (lambda is the minimum of these and sigma).
std::vector<Rational> lambda_candidates(const Polytope& p);

struct AdjunctionReport {
  Rational sigma;
  Rational lambda;
  Rational q_codegree;                 // 1 / sigma
  std::optional<Rational> nef_value;   // 1 / lambda; nullopt means infinite
  bool q_normal = false;               // sigma == lambda
};

/// Throws Error(NotSimple) or Error(NotFullDimensional).
AdjunctionReport adjunction_report(const Polytope& p);

}  // namespace polyadj
