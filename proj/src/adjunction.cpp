#include <polyadj/adjunction.hpp>
#include <polyadj/error.hpp>
#include <polyadj/linear_program.hpp>

#include <algorithm>

namespace polyadj {

FacetPresentation adjoint_system(const Polytope& p, const Rational& t) {
  if (t < 0) throw Error(ErrorKind::NegativeParameter, "adjoint parameter must be nonnegative, got " + to_string(t));
  FacetPresentation f = p.facets();
  for (auto& a : f.offsets) a -= t;
  return f;
}

Polytope adjoint(const Polytope& p, const Rational& t) {
  return Polytope::from_inequalities(p.ambient_dim(), adjoint_system(p, t));
}

Rational sigma(const Polytope& p) {
  const auto& f = p.facets();
  const std::size_t n = p.ambient_dim();
  // variables (x, t): <eta_i, x> - t >= -a_i, t >= 0; maximize t
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < f.size(); ++i) {
    IntVector row = f.normals[i];
    row.push_back(-1);
    cons.push_back({std::move(row), -f.offsets[i]});
  }
  IntVector t_row(n + 1, 0);
  t_row[n] = 1;
  cons.push_back({std::move(t_row), 0});
  RatVector objective(n + 1, 0);
  objective[n] = 1;
  LpResult r = lp_feasible_max(cons, objective);
  if (r.status != LpStatus::Optimal)
    throw Error(ErrorKind::InternalInconsistency, "sigma LP of a polytope must have a finite optimum");
  return r.value;
}

std::vector<Rational> lambda_candidates(const Polytope& p) {
  if (!is_simple(p)) throw Error(ErrorKind::NotSimple, "lambda is only computed for simple polytopes");
  const auto& f = p.facets();
  const auto& verts = p.vertices();
  const auto& vf = p.vertex_facets();
  std::vector<Rational> out;
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::vector<IntVector> incident;
    for (std::size_t j : vf[v]) incident.push_back(f.normals[j]);
    auto duals = dual_basis(incident);
    RatVector velocity(p.ambient_dim(), 0);
    for (const auto& u : duals)
      for (std::size_t c = 0; c < u.size(); ++c) velocity[c] += u[c];
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (std::binary_search(vf[v].begin(), vf[v].end(), i)) continue;
      Rational closing = 1 - dot(std::span<const Integer>(f.normals[i]), std::span<const Rational>(velocity));
      if (closing <= 0) continue;
      Rational slack = dot(std::span<const Integer>(f.normals[i]), std::span<const Rational>(verts[v])) + f.offsets[i];
      out.push_back(slack / closing);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational lambda(const Polytope& p) {
  auto candidates = lambda_candidates(p);
  Rational s = sigma(p);
  if (!candidates.empty() && candidates.front() < s) return candidates.front();
  return s;
}

AdjunctionReport adjunction_report(const Polytope& p) {
  AdjunctionReport r;
  r.sigma = sigma(p);
  auto candidates = lambda_candidates(p);
  r.lambda = (!candidates.empty() && candidates.front() < r.sigma) ? candidates.front() : r.sigma;
  r.q_codegree = 1 / r.sigma;
  if (r.lambda > 0) r.nef_value = 1 / r.lambda;
  r.q_normal = r.sigma == r.lambda;
  return r;
}

}  // namespace polyadj
