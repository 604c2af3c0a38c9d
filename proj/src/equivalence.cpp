#include <polyadj/error.hpp>
#include <polyadj/polytope.hpp>

#include <algorithm>
#include <functional>

namespace polyadj {

namespace {

// d = multiplier * (primitive integer direction); preserved by unimodular maps.
Rational lattice_multiplier(const RatVector& d) {
  IntVector dir = primitive(clear_denominators(d));
  for (std::size_t j = 0; j < d.size(); ++j)
    if (dir[j] != 0) return d[j] / dir[j];
  return 0;
}

RatVector minus(const RatVector& a, const RatVector& b) {
  RatVector d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
  return d;
}

std::vector<std::vector<std::size_t>> adjacency(const Polytope& p) {
  std::vector<std::vector<std::size_t>> adj(p.vertices().size());
  for (auto [i, j] : edges(p)) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::size_t> degree_profile(const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::size_t> d;
  for (const auto& a : adj) d.push_back(a.size());
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::size_t> facet_profile(const Polytope& p) {
  std::vector<std::size_t> counts(p.facets().size(), 0);
  for (const auto& fs : p.vertex_facets())
    for (std::size_t j : fs) ++counts[j];
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace

std::optional<AffineUnimodularMap> unimodular_equivalent(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "polytopes live in different dimensions");
  if (!p.full_dimensional() || !q.full_dimensional())
    throw Error(ErrorKind::NotFullDimensional, "equivalence test needs full-dimensional polytopes");
  const std::size_t n = p.ambient_dim();
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (pv.size() != qv.size() || p.facets().size() != q.facets().size()) return std::nullopt;
  if (facet_profile(p) != facet_profile(q)) return std::nullopt;
  auto padj = adjacency(p);
  auto qadj = adjacency(q);
  if (degree_profile(padj) != degree_profile(qadj)) return std::nullopt;

  // Anchor: a vertex of least degree and n of its neighbours spanning R^n.
  std::size_t p0 = 0;
  for (std::size_t i = 1; i < pv.size(); ++i)
    if (padj[i].size() < padj[p0].size()) p0 = i;
  std::vector<std::size_t> anchor;
  RatMatrix chosen_dirs;
  for (std::size_t nb : padj[p0]) {
    auto trial = chosen_dirs;
    trial.push_back(minus(pv[nb], pv[p0]));
    if (rank(trial) == trial.size()) {
      chosen_dirs = std::move(trial);
      anchor.push_back(nb);
    }
    if (anchor.size() == n) break;
  }
  if (anchor.size() != n) throw Error(ErrorKind::InternalInconsistency, "vertex neighbours do not span");

  std::vector<Rational> anchor_len;
  RatMatrix pdiff(n, RatVector(n));  // columns: pv[anchor[i]] - pv[p0]
  for (std::size_t i = 0; i < n; ++i) {
    RatVector d = minus(pv[anchor[i]], pv[p0]);
    anchor_len.push_back(lattice_multiplier(d));
    for (std::size_t r = 0; r < n; ++r) pdiff[r][i] = d[r];
  }
  RatMatrix pinv = inverse(pdiff);

  std::optional<AffineUnimodularMap> found;
  std::vector<std::size_t> image(n);
  std::vector<bool> used;

  auto try_images = [&](std::size_t q0) -> bool {
    RatMatrix m(n, RatVector(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) s += (qv[image[i]][r] - qv[q0][r]) * pinv[i][c];
        if (s.get_den() != 1) return false;
        m[r][c] = s;
      }
    AffineUnimodularMap map;
    map.matrix.assign(n, IntVector(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) map.matrix[r][c] = m[r][c].get_num();
    if (abs(determinant(map.matrix)) != 1) return false;
    RatVector mp0 = multiply(map.matrix, std::span<const Rational>(pv[p0]));
    map.translation.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
      Rational t = qv[q0][r] - mp0[r];
      if (t.get_den() != 1) return false;
      map.translation[r] = t.get_num();
    }
    std::vector<RatVector> mapped;
    for (const auto& v : pv) mapped.push_back(map.apply(v));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != qv) return false;
    found = std::move(map);
    return true;
  };

  for (std::size_t q0 = 0; q0 < qv.size() && !found; ++q0) {
    if (qadj[q0].size() != padj[p0].size()) continue;
    used.assign(qv.size(), false);
    std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
      if (i == n) return try_images(q0);
      for (std::size_t nb : qadj[q0]) {
        if (used[nb]) continue;
        if (lattice_multiplier(minus(qv[nb], qv[q0])) != anchor_len[i]) continue;
        used[nb] = true;
        image[i] = nb;
        if (choose(i + 1)) return true;
        used[nb] = false;
      }
      return false;
    };
    choose(0);
  }
  return found;
}

}  // namespace polyadj
