#pragma once

// Ehrhart counting, the h*-polynomial, degree and codegree.
//
// The Ehrhart series here includes the m = 0 term, sum_{m>=0} f_P(m) t^m;
// h*(t) is that series times (1-t)^(n+1).

#include <polyadj/exactmath.hpp>
#include <polyadj/polytope.hpp>

#include <map>
#include <mutex>
#include <vector>

namespace polyadj {

struct EhrhartOptions {
  /// Upper bound on worker threads used for counting dilates.
  unsigned threads = 1;
};

/// E(m) = coefficients[0] + coefficients[1] m + ... + coefficients[n] m^n.
struct EhrhartPolynomial {
  RatVector coefficients;

  Rational operator()(const Rational& m) const;
};

struct HStarPolynomial {
  std::vector<Integer> coefficients;  // h*_0 .. h*_n

  /// Largest index with a nonzero coefficient.
  std::size_t degree() const;
};

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t codegree = 0;
  HStarPolynomial hstar;
};

/// Lattice point counts of the dilates of one lattice polytope, memoized.
/// Safe to share between threads.
class EhrhartCounter {
 public:
  explicit EhrhartCounter(const Polytope& p, EhrhartOptions options = {});

  std::size_t dim() const { return dim_; }
  /// f_P(m); f_P(0) = 1.
  Integer count(std::size_t m) const;
  /// f_P(0..upto), computed in parallel where allowed.
  std::vector<Integer> counts(std::size_t upto) const;
  /// Number of interior lattice points of kP.
  Integer interior_count(std::size_t k) const;

 private:
  std::size_t dim_;
  EhrhartOptions options_;
  LatticePointCounter counter_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, Integer> memo_;
};

/// f_P(m) = #(mP cap Z^n).
Integer count(const Polytope& p, std::size_t m);

/// Interpolates through m = 0..n and checks m = n+1, n+2.
/// Throws Error(InternalInconsistency) if the check fails.
EhrhartPolynomial ehrhart_polynomial(const EhrhartCounter& counter);
EhrhartPolynomial ehrhart_polynomial(const Polytope& p);

/// h*_j = sum_{i=0..j} (-1)^i C(n+1, i) f_P(j-i).
HStarPolynomial h_star(const EhrhartCounter& counter);
HStarPolynomial h_star(const Polytope& p);

/// Smallest k >= 1 such that kP has an interior lattice point.
std::size_t codegree_by_interior_points(const EhrhartCounter& counter);
std::size_t codegree_by_interior_points(const Polytope& p);

/// Degree both as deg h* and as n + 1 - codegree; throws
/// Error(InternalInconsistency) if the two disagree.
DegreeReport degree_and_codegree(const Polytope& p, EhrhartOptions options = {});

}  // namespace polyadj
