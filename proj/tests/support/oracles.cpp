#include "oracles.hpp"

#include <polyadj/error.hpp>

#include <functional>
#include <numeric>

namespace polyadj::testing {

Integer brute_force_count(const Polytope& p, long k, bool interior) {
  const std::size_t n = p.ambient_dim();
  const auto& f = p.facets();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertices()[0][j], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = ceil_of(mn * k);
    hi[j] = floor_of(mx * k);
  }
  Integer count = 0;
  IntVector x = lo;
  std::function<void(std::size_t)> scan = [&](std::size_t j) {
    if (j == n) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        Rational lhs = Rational(dot(f.normals[i], x)), rhs = -f.offsets[i] * k;
        if (interior ? lhs <= rhs : lhs < rhs) return;
      }
      ++count;
      return;
    }
    for (x[j] = lo[j]; x[j] <= hi[j]; ++x[j]) scan(j + 1);
  };
  scan(0);
  return count;
}

std::size_t brute_force_codegree(const Polytope& p) {
  for (long k = 1;; ++k)
    if (brute_force_count(p, k, true) > 0) return static_cast<std::size_t>(k);
}

Rational sigma_by_vertices(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const auto& f = p.facets();
  FacetPresentation sys;
  for (std::size_t i = 0; i < f.size(); ++i) {
    IntVector row = f.normals[i];
    row.push_back(-1);
    sys.normals.push_back(row);
    sys.offsets.push_back(f.offsets[i]);
  }
  IntVector t(n + 1, 0);
  t[n] = 1;
  sys.normals.push_back(t);
  sys.offsets.push_back(0);
  RatVector objective(n + 1, 0);
  objective[n] = 1;
  return *max_over_vertices(n + 1, sys, objective);
}

std::optional<Rational> max_over_vertices(std::size_t n, const FacetPresentation& system, std::span<const Rational> objective) {
  auto verts = vertex_enumeration(n, system);
  if (verts.empty()) return std::nullopt;
  Rational best = dot(std::span<const Rational>(verts[0]), objective);
  for (const auto& v : verts) {
    Rational val = dot(std::span<const Rational>(v), objective);
    if (val > best) best = val;
  }
  return best;
}

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Integer> gcds{1};
  for (std::size_t size = 1; size <= std::min(rows, cols); ++size) {
    Integer g = 0;
    std::vector<std::size_t> ri(size), ci(size);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t start) {
      if (depth == size) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t r = start; r < rows; ++r) {
        ri[depth] = r;
        pick_rows(depth + 1, r + 1);
      }
    };
    pick_cols = [&](std::size_t depth, std::size_t start) {
      if (depth == size) {
        IntMatrix sub(size, IntVector(size));
        for (std::size_t a = 0; a < size; ++a)
          for (std::size_t b = 0; b < size; ++b) sub[a][b] = m[ri[a]][ci[b]];
        Integer d = abs(determinant(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        return;
      }
      for (std::size_t c = start; c < cols; ++c) {
        ci[depth] = c;
        pick_cols(depth + 1, c + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    gcds.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t i = 1; i < gcds.size(); ++i) factors.push_back(gcds[i] / gcds[i - 1]);
  return factors;
}

std::vector<Integer> h_star_by_binomials(const std::vector<Integer>& counts, std::size_t n) {
  // f(m) = sum_j h*_j C(m + n - j, n); C(n, n) = 1 makes the system triangular.
  auto binom = [](std::size_t a, std::size_t b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
  };
  std::vector<Integer> h;
  for (std::size_t m = 0; m <= n; ++m) {
    Integer v = counts[m];
    for (std::size_t j = 0; j < m; ++j) v -= h[j] * binom(m + n - j, n);
    h.push_back(v);
  }
  return h;
}

}  // namespace polyadj::testing
