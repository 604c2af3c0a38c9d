#include "double_description.hpp"

#include <polyadj/error.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace polyadj::detail {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVector coords;
  Bits zeros;  // processed rows on which the ray is tight
};

// Greedy choice of d linearly independent rows, earliest first.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t d) {
  std::vector<std::size_t> chosen;
  RatMatrix echelon;  // reduced rows with recorded pivot columns
  std::vector<std::size_t> pivot_cols;
  for (std::size_t r = 0; r < rows.size() && chosen.size() < d; ++r) {
    RatVector v = to_rational(rows[r]);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational& f = v[pivot_cols[k]];
      if (f == 0) continue;
      Rational scale = f / echelon[k][pivot_cols[k]];
      for (std::size_t j = 0; j < d; ++j) v[j] -= scale * echelon[k][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivot_cols.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(r);
  }
  return chosen;
}

}  // namespace

std::vector<IntVector> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t d) {
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.size() != d) throw Error(ErrorKind::DimensionMismatch, "cone constraint length");
  if (d == 0) return {};

  std::vector<std::size_t> basis_rows = independent_rows(rows, d);
  if (basis_rows.size() < d) throw Error(ErrorKind::InternalInconsistency, "cone is not pointed");

  // The simplicial cone cut out by the basis rows: its rays are the columns
  // of the inverse of the basis matrix.
  RatMatrix basis;
  for (std::size_t r : basis_rows) basis.push_back(to_rational(rows[r]));
  RatMatrix inv = inverse(basis);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RatVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = inv[i][j];
    Ray ray{primitive(clear_denominators(col)), Bits(m)};
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) ray.zeros.set(basis_rows[i]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> is_basis(m, false);
  for (std::size_t r : basis_rows) is_basis[r] = true;

  for (std::size_t r = 0; r < m && !rays.empty(); ++r) {
    if (is_basis[r]) continue;
    const IntVector& row = rows[r];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(row, rays[i].coords);
      if (value[i] > 0) pos.push_back(i);
      else if (value[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].zeros.set(r);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (common.is_subset_of(rays[o].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector c(d);
        Integer wp = value[p], wq = -value[q];
        for (std::size_t j = 0; j < d; ++j) c[j] = wp * rays[q].coords[j] + wq * rays[p].coords[j];
        Ray ray{primitive(c), std::move(common)};
        ray.zeros.set(r);
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] < 0) continue;
      if (value[i] == 0) rays[i].zeros.set(r);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& ray : rays) out.push_back(std::move(ray.coords));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace polyadj::detail
