#pragma once

// Classification of smooth Q-normal lattice polytopes P of dimension n with
// codeg(P) >= (n+1)/2 into the families
//   (i)   s * Delta_1,
//   (ii)  3 * Delta_3,
//   (iii) 2 * Delta_n,
//   (iv)  Cayley^1(P_0, ..., P_k) with k >= (n-1)/2,
//   (v)   Cayley^2(a_0 Delta_1, ..., a_{n-1} Delta_1), n odd, a_i congruent mod 2.

#include <polyadj/cayley.hpp>
#include <polyadj/polytope.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyadj {

enum class VerdictTag {
  TypeI_sSegment,
  TypeII_3Delta3,
  TypeIII_2DeltaN,
  TypeIV_Cayley1,
  TypeV_Cayley2Segments,
  OutsideHypotheses,
  Unclassified,
};
std::string_view to_string(VerdictTag tag);

struct ClassificationVerdict {
  VerdictTag tag = VerdictTag::Unclassified;
  /// Types I-III: map(P) is the model polytope. Also type IV when P is a
  /// unimodular simplex, the Cayley polytope of n+1 points (k = n), which
  /// has no CayleyStructure since the factors are 0-dimensional.
  std::optional<AffineUnimodularMap> map;
  /// Type I: the segment length s.
  std::optional<Integer> segment_length;
  /// Types IV and V.
  std::optional<CayleyStructure> cayley;
  /// OutsideHypotheses: the conditions that fail, among
  /// "smooth", "q_normal", "codegree".
  std::vector<std::string> failed;
};

/// Throws Error(NotFullDimensional) or Error(NotLattice).
ClassificationVerdict classify(const Polytope& p);

/// Re-checks a verdict against p from scratch: the witness must send p onto
/// the named model (or reconstruct it), and failed hypotheses must fail.
bool verify_verdict(const Polytope& p, const ClassificationVerdict& verdict);

}  // namespace polyadj
