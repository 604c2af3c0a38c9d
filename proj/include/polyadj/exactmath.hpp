#pragma once

// Exact integer and rational linear algebra over GMP.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyadj {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
// Row-major.
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "p", "-p" and "p/q"; throws Error(Parse) otherwise or on q = 0.
Rational parse_rational(std::string_view text);
/// num/den in lowest terms; den must be nonzero.
Rational fraction(const Integer& num, const Integer& den);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

IntVector make_int_vector(std::initializer_list<long> entries);
RatVector to_rational(std::span<const Integer> v);
bool is_integral(std::span<const Rational> v);
/// Throws Error(NotLattice) when some entry is not an integer.
IntVector to_integer(std::span<const Rational> v);
/// Smallest positive integer multiple of v with integer entries.
IntVector clear_denominators(std::span<const Rational> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Nonnegative gcd of all entries (0 for the zero vector).
Integer content(std::span<const Integer> v);
/// v divided by the gcd of its entries. Throws Error(ZeroVector) on v = 0.
IntVector primitive(std::span<const Integer> v);
/// Lattice length of the segment [a, b]: content(b - a).
Integer lattice_length(std::span<const Integer> a, std::span<const Integer> b);

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, std::span<const Integer> v);
RatVector multiply(const IntMatrix& a, std::span<const Rational> v);
/// Matrix with the given vectors as columns.
IntMatrix from_columns(std::span<const IntVector> columns);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Determinant of the square matrix whose columns are `vectors`; the
/// vectors form a lattice basis iff the result is +-1.
/// Throws Error(DimensionMismatch) unless there are n vectors of length n.
Integer unimodular_certificate(std::span<const IntVector> vectors);

/// Exact inverse; throws Error(SingularSystem).
RatMatrix inverse(const RatMatrix& m);
RatMatrix to_rational(const IntMatrix& m);

/// u_1..u_n with <vectors[i], u_j> = delta_ij. Throws Error(SingularSystem).
std::vector<RatVector> dual_basis(std::span<const IntVector> vectors);

/// Solves m * x = rhs for square invertible m. Throws Error(SingularSystem).
RatVector solve(const RatMatrix& m, std::span<const Rational> rhs);

struct SmithForm {
  IntMatrix left;       // U, unimodular
  IntMatrix diagonal;   // D = U * M * V
  IntMatrix right;      // V, unimodular
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries, d_1 | d_2 | ...
};

SmithForm smith_decomposition(const IntMatrix& m);

struct HermiteForm {
  IntMatrix form;       // H = T * M, row echelon, positive pivots, reduced above pivots
  IntMatrix transform;  // T, unimodular
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// Basis of the saturated lattice {x in Z^n : m x = 0}, returned as row
/// vectors in Hermite normal form (so the basis does not depend on how it
/// was found).
std::vector<IntVector> integer_kernel_basis(const IntMatrix& m, std::size_t columns);

/// For a saturated family of columns (n x r matrix), an integer r x n
/// matrix L with L * columns = I_r. Throws Error(SingularSystem) when the
/// family does not extend to a lattice basis.
IntMatrix integer_left_inverse(const IntMatrix& columns);

}  // namespace polyadj
