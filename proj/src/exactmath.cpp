#include <polyadj/exactmath.hpp>
#include <polyadj/error.hpp>

#include <algorithm>
#include <utility>

namespace polyadj {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::UnboundedPolyhedron: return "UnboundedPolyhedron";
    case ErrorKind::NegativeParameter: return "NegativeParameter";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::IncompleteFan: return "IncompleteFan";
    case ErrorKind::NonSimplicial: return "NonSimplicial";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q{Integer{n}, d};
  q.canonicalize();
  return q;
}

Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::SingularSystem, "zero denominator");
  Rational q{num, den};
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

IntVector make_int_vector(std::initializer_list<long> entries) {
  IntVector v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

RatVector to_rational(std::span<const Integer> v) { return RatVector(v.begin(), v.end()); }

bool is_integral(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw Error(ErrorKind::NotLattice, "coordinate " + to_string(q) + " is not an integer");
    out.push_back(q.get_num());
  }
  return out;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (l / q.get_den()));
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntVector primitive(std::span<const Integer> v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorKind::ZeroVector, "cannot primitivize the zero vector");
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(q));
  }
  return out;
}

Integer lattice_length(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "points of different dimension");
  IntVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
  return content(d);
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t inner = b.size();
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntVector multiply(const IntMatrix& a, std::span<const Integer> v) {
  IntVector out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(row, v));
  return out;
}

RatVector multiply(const IntMatrix& a, std::span<const Rational> v) {
  RatVector out;
  out.reserve(a.size());
  for (const auto& row : a) out.push_back(dot(std::span<const Integer>(row), v));
  return out;
}

IntMatrix from_columns(std::span<const IntVector> columns) {
  if (columns.empty()) return {};
  std::size_t n = columns[0].size();
  IntMatrix m(n, IntVector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw Error(ErrorKind::DimensionMismatch, "columns of different length");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = columns[j][i];
  }
  return m;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_rational(row));
  return r;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[k], a[p]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return row_reduce(a).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

Integer unimodular_certificate(std::span<const IntVector> vectors) {
  const std::size_t n = vectors.size();
  for (const auto& v : vectors)
    if (v.size() != n)
      throw Error(ErrorKind::DimensionMismatch, "need n vectors of length n for a basis certificate");
  // det(columns) = det(rows)
  IntMatrix rows(vectors.begin(), vectors.end());
  return determinant(rows);
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  auto pivots = row_reduce(a);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorKind::SingularSystem, "matrix is singular");
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::vector<RatVector> dual_basis(std::span<const IntVector> vectors) {
  const std::size_t n = vectors.size();
  RatMatrix rows;
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "dual basis needs n vectors of length n");
    rows.push_back(to_rational(v));
  }
  RatMatrix inv = inverse(rows);
  std::vector<RatVector> duals(n, RatVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) duals[j][i] = inv[i][j];
  return duals;
}

RatVector solve(const RatMatrix& m, std::span<const Rational> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  RatMatrix a(n, RatVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "solve needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n] = rhs[i];
  }
  auto pivots = row_reduce(a);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorKind::SingularSystem, "linear system is singular");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m[target].size(); ++j) m[target][j] += factor * m[source][j];
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (auto& row : m) row[target] += factor * row[source];
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

Integer trunc_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_decomposition(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
  SmithForm f{identity_matrix(rows), m, identity_matrix(cols), {}};
  IntMatrix& d = f.diagonal;
  IntMatrix& u = f.left;
  IntMatrix& v = f.right;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found_any = false;
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d[i][j] != 0 && (pi == rows || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      found_any = true;
      std::swap(d[t], d[pi]);
      std::swap(u[t], u[pi]);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        Integer q = -trunc_quotient(d[i][t], d[t][t]);
        add_row_multiple(d, i, t, q);
        add_row_multiple(u, i, t, q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        Integer q = -trunc_quotient(d[t][j], d[t][t]);
        add_col_multiple(d, j, t, q);
        add_col_multiple(v, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      add_row_multiple(d, t, bad_row, Integer(1));
      add_row_multiple(u, t, bad_row, Integer(1));
    }
    if (!found_any) break;
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
  for (std::size_t t = 0; t < std::min(rows, cols); ++t)
    if (d[t][t] != 0) f.invariant_factors.push_back(d[t][t]);
  return f;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  HermiteForm h{m, identity_matrix(rows), 0};
  IntMatrix& a = h.form;
  IntMatrix& t = h.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (p == rows || abs(a[i][c]) < abs(a[p][c]))) p = i;
      if (p == rows) break;
      std::swap(a[r], a[p]);
      std::swap(t[r], t[p]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q = -trunc_quotient(a[i][c], a[r][c]);
        add_row_multiple(a, i, r, q);
        add_row_multiple(t, i, r, q);
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& x : a[r]) x = -x;
      for (auto& x : t[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      add_row_multiple(a, i, r, -q);
      add_row_multiple(t, i, r, -q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m, std::size_t columns) {
  for (const auto& row : m)
    if (row.size() != columns) throw Error(ErrorKind::DimensionMismatch, "kernel: row length");
  IntMatrix generators;
  if (m.empty()) {
    generators = identity_matrix(columns);
  } else {
    SmithForm f = smith_decomposition(m);
    const std::size_t r = f.invariant_factors.size();
    for (std::size_t j = r; j < columns; ++j) {
      IntVector g(columns);
      for (std::size_t i = 0; i < columns; ++i) g[i] = f.right[i][j];
      generators.push_back(std::move(g));
    }
  }
  if (generators.empty()) return {};
  HermiteForm h = hermite_normal_form(generators);
  h.form.resize(h.rank);
  return h.form;
}

IntMatrix integer_left_inverse(const IntMatrix& columns) {
  const std::size_t n = columns.size();
  const std::size_t r = n == 0 ? 0 : columns[0].size();
  SmithForm f = smith_decomposition(columns);
  if (f.invariant_factors.size() != r ||
      !std::all_of(f.invariant_factors.begin(), f.invariant_factors.end(), [](const Integer& d) { return d == 1; }))
    throw Error(ErrorKind::SingularSystem, "columns do not extend to a lattice basis");
  // L = V * [I_r | 0] * U
  IntMatrix top(f.left.begin(), f.left.begin() + static_cast<std::ptrdiff_t>(r));
  return multiply(f.right, top);
}

}  // namespace polyadj
