#include <polyadj/cayley.hpp>
#include <polyadj/error.hpp>

#include <algorithm>

namespace polyadj {

void validate(const CayleySpec& spec) {
  if (spec.factors.size() < 2) throw Error(ErrorKind::EmptyInput, "a Cayley polytope needs at least two factors");
  if (spec.s < 1) throw Error(ErrorKind::NegativeParameter, "Cayley order s must be positive");
  const std::size_t m = spec.m();
  for (const auto& f : spec.factors) {
    if (f.ambient_dim() != m) throw Error(ErrorKind::DimensionMismatch, "Cayley factors live in different dimensions");
    if (!f.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "Cayley factors must be full-dimensional");
    if (!f.is_lattice()) throw Error(ErrorKind::NotLattice, "Cayley factors must be lattice polytopes");
  }
}

Polytope cayley_construct(const CayleySpec& spec) {
  validate(spec);
  const std::size_t m = spec.m(), k = spec.k();
  std::vector<RatVector> points;
  for (std::size_t j = 0; j <= k; ++j)
    for (const auto& v : spec.factors[j].vertices()) {
      RatVector x = v;
      x.resize(m + k, 0);
      if (j > 0) x[m + j - 1] = spec.s;
      points.push_back(std::move(x));
    }
  return Polytope::hull(m + k, std::move(points));
}

bool is_strict(const CayleySpec& spec) {
  validate(spec);
  for (std::size_t j = 1; j < spec.factors.size(); ++j)
    if (!same_normal_fan(spec.factors[0], spec.factors[j])) return false;
  return true;
}

bool cayley_smooth(const CayleySpec& spec) {
  if (!is_strict(spec)) throw Error(ErrorKind::NotStrict, "smoothness criterion needs a strict Cayley polytope");
  if (!is_smooth(normal_fan(spec.factors[0]))) return false;
  const auto& base = spec.factors[0].facets().offsets;
  for (std::size_t j = 1; j < spec.factors.size(); ++j) {
    const auto& other = spec.factors[j].facets().offsets;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Integer diff = Rational(other[i] - base[i]).get_num();
      if (diff % spec.s != 0) return false;
    }
  }
  return true;
}

std::string_view to_string(CayleyCase c) {
  switch (c) {
    case CayleyCase::Case1: return "1";
    case CayleyCase::Case2a: return "2a";
    case CayleyCase::Case2b: return "2b";
    case CayleyCase::HypothesisFails: return "HypothesisFails";
  }
  return "?";
}

CayleyAnalysis closed_form_invariants(const CayleySpec& spec) {
  CayleyAnalysis a;
  a.strict = is_strict(spec);
  a.smooth = a.strict ? cayley_smooth(spec) : is_smooth(cayley_construct(spec));
  const long m = static_cast<long>(spec.m()), k = static_cast<long>(spec.k());
  const Rational base = fraction(k + 1, spec.s);
  if (!a.strict || !a.smooth || base < m) return a;

  // A smooth complete fan with m+1 rays is the fan of P^m; there the factor
  // with offsets a_i is a copy of (sum a_i) * Delta_m.
  if (spec.factors[0].facets().size() == static_cast<std::size_t>(m + 1)) {
    Integer total = 0;
    for (const auto& f : spec.factors) {
      Integer d = 0;
      for (const auto& off : f.facets().offsets) d += off.get_num();
      a.degrees.push_back(d);
      total += d;
    }
    if (total < spec.s * (m + 1)) {
      const auto [lo, hi] = std::minmax_element(a.degrees.begin(), a.degrees.end());
      if (*lo == *hi) {
        a.case_tag = CayleyCase::Case2a;
        a.q_codegree = Rational(m + 1) / Rational(*lo);
        a.nef_value = a.q_codegree;
      } else {
        a.case_tag = CayleyCase::Case2b;
        Rational excess = Rational(m + 1) - Rational(total) / spec.s;
        a.nef_value = base + excess / Rational(*lo);
        a.q_codegree = base + excess / Rational(*hi);
      }
      a.q_codegree->canonicalize();
      a.nef_value->canonicalize();
      return a;
    }
  }
  a.case_tag = CayleyCase::Case1;
  a.q_codegree = base;
  a.nef_value = base;
  return a;
}

namespace {

// Tries one choice of facets nu_0..nu_k.
std::optional<CayleyStructure> try_structure(const Polytope& p, long s, const std::vector<std::size_t>& chosen) {
  const std::size_t n = p.ambient_dim();
  const std::size_t k = chosen.size() - 1;
  const std::size_t m = n - k;
  const auto& fp = p.facets();

  Integer offset_sum = 0;
  for (std::size_t i : chosen) offset_sum += fp.offsets[i].get_num();
  if (offset_sum != s) return std::nullopt;

  // z_j(v) = <nu_j, v> + b_j must be s for exactly one j and 0 otherwise.
  const auto verts = p.lattice_vertices();
  std::vector<std::vector<std::size_t>> fiber(k + 1);
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    std::optional<std::size_t> at;
    for (std::size_t j = 0; j <= k; ++j) {
      Integer z = dot(fp.normals[chosen[j]], verts[vi]) + fp.offsets[chosen[j]].get_num();
      if (z == 0) continue;
      if (z != s || at) return std::nullopt;
      at = j;
    }
    if (!at) return std::nullopt;
    fiber[*at].push_back(vi);
  }
  for (const auto& f : fiber)
    if (f.size() < m + 1) return std::nullopt;

  IntMatrix nu;
  for (std::size_t j = 1; j <= k; ++j) nu.push_back(fp.normals[chosen[j]]);
  const auto snf = smith_decomposition(nu);
  if (snf.invariant_factors.size() != k) return std::nullopt;
  for (const auto& d : snf.invariant_factors)
    if (d != 1) return std::nullopt;

  const auto kernel = integer_kernel_basis(nu, n);
  const IntMatrix left = integer_left_inverse(from_columns(kernel));

  CayleyStructure out;
  out.spec.s = s;
  out.facets = chosen;
  for (std::size_t j = 0; j <= k; ++j) {
    std::vector<RatVector> image;
    for (std::size_t vi : fiber[j]) image.push_back(to_rational(multiply(left, verts[vi])));
    Polytope f = Polytope::hull(m, std::move(image));
    if (!f.full_dimensional()) return std::nullopt;
    if (j > 0 && !same_normal_fan(out.spec.factors[0], f)) return std::nullopt;
    out.spec.factors.push_back(std::move(f));
  }

  out.map.matrix = left;
  for (const auto& row : nu) out.map.matrix.push_back(row);
  out.map.translation.assign(n, 0);
  for (std::size_t j = 1; j <= k; ++j) out.map.translation[m + j - 1] = fp.offsets[chosen[j]].get_num();
  if (abs(determinant(out.map.matrix)) != 1 || apply(out.map, p) != cayley_construct(out.spec))
    throw Error(ErrorKind::InternalInconsistency, "recovered Cayley structure does not reproduce the polytope");
  return out;
}

}  // namespace

std::optional<CayleyStructure> recognize_cayley(const Polytope& p, long s, std::size_t k) {
  if (!p.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "Cayley recognition needs a full-dimensional polytope");
  if (!p.is_lattice()) throw Error(ErrorKind::NotLattice, "Cayley recognition needs a lattice polytope");
  if (s < 1) throw Error(ErrorKind::NegativeParameter, "Cayley order s must be positive");
  const std::size_t n = p.ambient_dim();
  if (k < 1 || k >= n) throw Error(ErrorKind::DimensionMismatch, "need 1 <= k < dim P");
  const auto& fp = p.facets();
  const std::size_t r = fp.size();
  if (r < k + 1) return std::nullopt;

  // (k+1)-subsets of facet indices in lexicographic order
  std::vector<std::size_t> idx(k + 1);
  for (std::size_t j = 0; j <= k; ++j) idx[j] = j;
  for (;;) {
    IntVector sum(n, 0);
    for (std::size_t i : idx)
      for (std::size_t c = 0; c < n; ++c) sum[c] += fp.normals[i][c];
    if (std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return x == 0; }))
      if (auto found = try_structure(p, s, idx)) return found;
    std::size_t j = k + 1;
    while (j > 0 && idx[j - 1] == r - (k + 1) + (j - 1)) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t <= k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace polyadj
