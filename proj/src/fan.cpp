#include <polyadj/fan.hpp>

#include <algorithm>
#include <numeric>

namespace polyadj {

Fan canonical_form(const Fan& fan) {
  std::vector<std::size_t> order(fan.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fan.rays[a] < fan.rays[b]; });
  std::vector<std::size_t> new_index(fan.rays.size());
  Fan out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = i;
    out.rays.push_back(fan.rays[order[i]]);
  }
  for (const auto& cone : fan.maximal_cones) {
    std::vector<std::size_t> c;
    for (std::size_t r : cone) c.push_back(new_index[r]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    out.maximal_cones.push_back(std::move(c));
  }
  std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
  out.maximal_cones.erase(std::unique(out.maximal_cones.begin(), out.maximal_cones.end()), out.maximal_cones.end());
  return out;
}

bool same_fan(const Fan& a, const Fan& b) {
  Fan ca = canonical_form(a), cb = canonical_form(b);
  return ca.rays == cb.rays && ca.maximal_cones == cb.maximal_cones;
}

bool is_simplicial(const Fan& fan) {
  for (const auto& cone : fan.maximal_cones) {
    IntMatrix gens;
    for (std::size_t r : cone) gens.push_back(fan.rays[r]);
    if (rank(gens) != cone.size()) return false;
  }
  return true;
}

bool is_smooth(const Fan& fan) {
  const std::size_t n = fan.dim();
  for (const auto& cone : fan.maximal_cones) {
    if (cone.size() != n) return false;
    std::vector<IntVector> gens;
    for (std::size_t r : cone) gens.push_back(fan.rays[r]);
    if (abs(unimodular_certificate(gens)) != 1) return false;
  }
  return true;
}

}  // namespace polyadj
