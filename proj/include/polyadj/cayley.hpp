#pragma once

// Generalized Cayley polytopes
//   Cayley^s(P_0, ..., P_k) = conv(P_0 x {0}, P_1 x {s e_1}, ..., P_k x {s e_k})
// in R^m x R^k, their smoothness criterion, closed-form Q-codegree and nef
// value, and recognition of a Cayley structure on a given polytope.

#include <polyadj/exactmath.hpp>
#include <polyadj/polytope.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace polyadj {

struct CayleySpec {
  std::vector<Polytope> factors;  // P_0 .. P_k, full-dimensional lattice polytopes in R^m
  long s = 1;

  std::size_t k() const { return factors.size() - 1; }
  std::size_t m() const { return factors.front().ambient_dim(); }
};

/// Throws Error(EmptyInput) for fewer than two factors,
/// Error(NegativeParameter) for s < 1, Error(DimensionMismatch),
/// Error(NotFullDimensional) or Error(NotLattice) for bad factors.
void validate(const CayleySpec& spec);

Polytope cayley_construct(const CayleySpec& spec);

/// All factors share one normal fan.
bool is_strict(const CayleySpec& spec);

/// The common fan is smooth and s divides a_ij - a_i0 for every facet i.
/// Throws Error(NotStrict).
bool cayley_smooth(const CayleySpec& spec);

enum class CayleyCase { Case1, Case2a, Case2b, HypothesisFails };
std::string_view to_string(CayleyCase c);

struct CayleyAnalysis {
  bool strict = false;
  bool smooth = false;
  CayleyCase case_tag = CayleyCase::HypothesisFails;
  std::optional<Rational> q_codegree;  // set unless HypothesisFails
  std::optional<Rational> nef_value;   // tau; set unless HypothesisFails
  std::vector<Integer> degrees;        // d_i when the common fan is that of P^m
};

/// Needs strict, smooth and (k+1)/s >= m; otherwise case_tag is
/// HypothesisFails and the values are empty.
CayleyAnalysis closed_form_invariants(const CayleySpec& spec);

struct CayleyStructure {
  CayleySpec spec;
  AffineUnimodularMap map;            // map(P) = cayley_construct(spec)
  std::vector<std::size_t> facets;    // indices of nu_0 .. nu_k in P.facets()
};

/// Searches (k+1)-subsets of facet normals with zero sum, in lexicographic
/// order of facet indices, for a strict Cayley structure of order s with a
/// k-dimensional base simplex. Returns the first one found.
/// Throws Error(NotFullDimensional), Error(NotLattice), or
/// Error(DimensionMismatch) unless 1 <= k < n.
std::optional<CayleyStructure> recognize_cayley(const Polytope& p, long s, std::size_t k);

}  // namespace polyadj
