#include "corpus.hpp"

#include <polyadj/error.hpp>

#include <algorithm>

namespace polyadj::testing {

Polytope lattice_hull(std::size_t n, const std::vector<std::vector<long>>& points) {
  std::vector<RatVector> pts;
  for (const auto& p : points) {
    RatVector v;
    for (long x : p) v.emplace_back(x);
    pts.push_back(std::move(v));
  }
  return Polytope::hull(n, std::move(pts));
}

Polytope reeve(long r) { return lattice_hull(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, r}}); }

Polytope cross_polytope(std::size_t n) {
  std::vector<std::vector<long>> pts;
  for (std::size_t i = 0; i < n; ++i)
    for (long sgn : {-1L, 1L}) {
      std::vector<long> v(n, 0);
      v[i] = sgn;
      pts.push_back(v);
    }
  return lattice_hull(n, pts);
}

Polytope trapezoid(long a, long b) { return lattice_hull(2, {{0, 0}, {a, 0}, {0, 1}, {b, 1}}); }

std::vector<Named> named_polytopes() {
  std::vector<Named> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    out.push_back({"Delta_" + std::to_string(n), standard_simplex(n)});
    out.push_back({"2Delta_" + std::to_string(n), standard_simplex(n, 2)});
  }
  out.push_back({"3Delta_2", standard_simplex(2, 3)});
  out.push_back({"3Delta_3", standard_simplex(3, 3)});
  out.push_back({"4Delta_1", standard_simplex(1, 4)});
  for (std::vector<long> sides : {std::vector<long>{1, 1}, {2, 1}, {1, 1, 1}, {2, 2, 1}, {1, 1, 1, 1}}) {
    std::string name = "box";
    for (long s : sides) name += "_" + std::to_string(s);
    out.push_back({name, box(sides)});
  }
  out.push_back({"reeve_2", reeve(2)});
  out.push_back({"reeve_3", reeve(3)});
  out.push_back({"cross_2", cross_polytope(2)});
  out.push_back({"cross_3", cross_polytope(3)});
  out.push_back({"trapezoid_1_2", trapezoid(1, 2)});
  out.push_back({"trapezoid_3_1", trapezoid(3, 1)});
  out.push_back({"hexagon", lattice_hull(2, {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}})});
  out.push_back({"square_pyramid", lattice_hull(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}})});
  out.push_back({"prism_Delta2xDelta1", product(standard_simplex(2), standard_simplex(1))});
  out.push_back({"example_3_6_m2", example_3_6_polytope(2)});
  return out;
}

Polytope random_lattice_polytope(Rng& rng, std::size_t n, long coord_max, std::size_t points) {
  std::uniform_int_distribution<long> coord(0, coord_max);
  for (;;) {
    std::vector<RatVector> pts;
    for (std::size_t i = 0; i < points; ++i) {
      RatVector v;
      for (std::size_t j = 0; j < n; ++j) v.emplace_back(coord(rng));
      pts.push_back(std::move(v));
    }
    Polytope p = Polytope::hull(n, std::move(pts));
    if (p.full_dimensional()) return p;
  }
}

std::vector<Named> degree_corpus(std::size_t size) {
  std::vector<Named> out = named_polytopes();
  Rng rng(20240611);
  std::size_t i = 0;
  while (out.size() < size) {
    const std::size_t n = 2 + i % 3;
    const long coord_max = n == 4 ? 2 + static_cast<long>(i % 2) : 4;
    const std::size_t pts = n + 1 + i % 4;
    out.push_back({"random_" + std::to_string(i), random_lattice_polytope(rng, n, coord_max, pts)});
    ++i;
  }
  // unimodular images of Delta_n, which must have degree 0
  for (std::size_t n = 2; n <= 4; ++n) {
    AffineUnimodularMap t = random_unimodular(rng, n);
    out.push_back({"image_of_Delta_" + std::to_string(n), apply(t, standard_simplex(n))});
  }
  return out;
}

AffineUnimodularMap random_unimodular(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<long> mult(-2, 2), shift(-3, 3);
  std::bernoulli_distribution coin(0.5);
  AffineUnimodularMap t = identity_map(n);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    std::size_t a = index(rng), b = index(rng);
    if (a == b) {
      if (coin(rng))
        for (auto& x : t.matrix[a]) x = -x;
      continue;
    }
    if (coin(rng)) {
      std::swap(t.matrix[a], t.matrix[b]);
    } else {
      long c = mult(rng);
      for (std::size_t j = 0; j < n; ++j) t.matrix[a][j] += c * t.matrix[b][j];
    }
  }
  for (auto& x : t.translation) x = shift(rng);
  return t;
}

std::vector<Fan> smooth_fans(std::size_t m) {
  std::vector<Fan> fans{projective_space_fan(m)};
  if (m == 2) {
    fans.push_back(product_fan(projective_space_fan(1), projective_space_fan(1)));
    fans.push_back(star_subdivision(projective_space_fan(2), make_int_vector({1, 1})));
  } else if (m == 3) {
    fans.push_back(product_fan(projective_space_fan(2), projective_space_fan(1)));
    fans.push_back(product_fan(product_fan(projective_space_fan(1), projective_space_fan(1)), projective_space_fan(1)));
    fans.push_back(star_subdivision(projective_space_fan(3), make_int_vector({1, 1, 1})));
  }
  return fans;
}

Polytope random_ample_polytope(Rng& rng, const Fan& fan, long max_offset) {
  std::uniform_int_distribution<long> off(0, max_offset);
  for (;;) {
    FanDivisor d{fan, RatVector(fan.rays.size())};
    for (auto& a : d.coefficients) a = off(rng);
    if (is_ample(d)) return polytope_from_divisor(d);
  }
}

CayleySpec random_smooth_cayley(Rng& rng, std::size_t m, std::size_t k, long s, long max_offset) {
  auto fans = smooth_fans(m);
  const Fan& fan = fans[std::uniform_int_distribution<std::size_t>(0, fans.size() - 1)(rng)];
  std::uniform_int_distribution<long> step(0, 2);
  CayleySpec spec;
  spec.s = s;
  spec.factors.push_back(random_ample_polytope(rng, fan, max_offset));
  const FanDivisor base = divisor_of(spec.factors[0]);
  while (spec.factors.size() < k + 1) {
    // Offsets congruent to the base mod s keep the Cayley polytope smooth.
    FanDivisor d = base;
    for (auto& a : d.coefficients) a += s * step(rng);
    if (is_ample(d) && same_normal_fan(polytope_from_divisor(d), spec.factors[0]))
      spec.factors.push_back(polytope_from_divisor(d));
  }
  return spec;
}

std::vector<FamilyInstance> family_instances(std::size_t max_n, Rng& rng) {
  std::vector<FamilyInstance> out;
  for (long s = 1; s <= 4; ++s) {
    const long t = std::uniform_int_distribution<long>(-3, 3)(rng);
    out.push_back({Family::I, "segment_" + std::to_string(s), lattice_hull(1, {{t}, {t + s}})});
  }
  if (max_n >= 3) {
    out.push_back({Family::II, "3Delta_3", standard_simplex(3, 3)});
    out.push_back({Family::II, "3Delta_3_image", apply(random_unimodular(rng, 3), standard_simplex(3, 3))});
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back({Family::III, "2Delta_" + std::to_string(n), standard_simplex(n, 2)});
    out.push_back({Family::III, "2Delta_" + std::to_string(n) + "_image", apply(random_unimodular(rng, n), standard_simplex(n, 2))});
  }
  for (std::size_t n = 2; n <= max_n; ++n)
    for (std::size_t k = n / 2; k < n; ++k) {
      const std::size_t m = n - k;
      const std::size_t samples = n <= 4 ? 3 : 2;
      for (std::size_t i = 0; i < samples; ++i) {
        const long max_offset = n <= 4 ? 4 : 2;
        CayleySpec spec = random_smooth_cayley(rng, m, k, 1, max_offset);
        Polytope p = cayley_construct(spec);
        if (i % 2 == 1) p = apply(random_unimodular(rng, n), p);
        out.push_back({Family::IV, "cayley1_n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + std::to_string(i), p});
      }
    }
  for (std::size_t n = 3; n <= max_n; n += 2) {
    std::uniform_int_distribution<long> len(0, 2);
    for (std::size_t i = 0; i < 4; ++i) {
      const long parity = static_cast<long>(i % 2);  // odd lengths 1,3,5 or even 2,4
      CayleySpec spec;
      spec.s = 2;
      for (std::size_t j = 0; j < n; ++j) {
        long a = parity == 1 ? 1 + 2 * len(rng) : 2 + 2 * (len(rng) % 2);
        spec.factors.push_back(standard_simplex(1, a));
      }
      Polytope p = cayley_construct(spec);
      if (i >= 2) p = apply(random_unimodular(rng, n), p);
      out.push_back({Family::V, "cayley2_segments_n" + std::to_string(n) + "_" + std::to_string(i), p});
    }
  }
  return out;
}

}  // namespace polyadj::testing
