#include <polyadj/error.hpp>
#include <polyadj/polytope.hpp>

#include <algorithm>
#include <limits>
#include <optional>

namespace polyadj {

// Enumeration is coordinate by coordinate. Level j holds the facets of the
// projection of P onto the first j+1 coordinates, so every partial point
// that survives level j extends to a point of that projection and the last
// level only has to intersect an interval with Z.

LatticePointCounter::LatticePointCounter(const Polytope& p) : n_(p.ambient_dim()) {
  if (!p.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "lattice point counter needs a full-dimensional polytope");
  coordinate_bound_ = 0;
  for (const auto& v : p.vertices())
    for (const auto& x : v) coordinate_bound_ = std::max(coordinate_bound_, ceil_of(abs(x)));
  normals_.resize(n_);
  offsets_.resize(n_);
  for (std::size_t j = 0; j + 1 < n_; ++j) {
    std::vector<RatVector> proj;
    for (const auto& v : p.vertices()) proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j + 1));
    Polytope q = Polytope::hull(j + 1, std::move(proj));
    normals_[j] = q.facets().normals;
    offsets_[j] = q.facets().offsets;
  }
  normals_[n_ - 1] = p.facets().normals;
  offsets_[n_ - 1] = p.facets().offsets;
}

namespace {

template <typename T>
struct IntLevel {
  std::vector<std::vector<T>> normals;
  std::vector<T> rhs;  // <normal, x> >= rhs
};

template <typename T>
T floor_div(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Integer>) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  } else {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
}

template <typename T>
T ceil_div(const T& a, const T& b) {
  return -floor_div<T>(-a, b);
}

template <typename T>
T convert(const Integer& z) {
  if constexpr (std::is_same_v<T, Integer>) return z;
  else return static_cast<T>(z.get_si());
}

// Depth-first walk over the lattice points. The leaf callback receives the
// prefix of length n-1 and the feasible range of the last coordinate.
template <typename T>
class Walker {
 public:
  explicit Walker(std::vector<IntLevel<T>> levels) : levels_(std::move(levels)), x_(levels_.size()) {}

  template <typename Leaf>
  void run(Leaf&& leaf) {
    descend(0, leaf);
  }

 private:
  std::optional<std::pair<T, T>> range(std::size_t j) const {
    const auto& lvl = levels_[j];
    std::optional<T> lo, hi;
    for (std::size_t r = 0; r < lvl.normals.size(); ++r) {
      const auto& eta = lvl.normals[r];
      T s = lvl.rhs[r];
      for (std::size_t i = 0; i < j; ++i)
        if (eta[i] != 0) s -= eta[i] * x_[i];
      const T& e = eta[j];
      if (e > 0) {
        T b = ceil_div<T>(s, e);
        if (!lo || b > *lo) lo = b;
      } else if (e < 0) {
        T b = floor_div<T>(s, e);
        if (!hi || b < *hi) hi = b;
      } else if (s > 0) {
        return std::nullopt;
      }
    }
    if (!lo || !hi || *lo > *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
  }

  template <typename Leaf>
  void descend(std::size_t j, Leaf& leaf) {
    auto r = range(j);
    if (!r) return;
    if (j + 1 == levels_.size()) {
      leaf(x_, r->first, r->second);
      return;
    }
    for (T v = r->first; v <= r->second; ++v) {
      x_[j] = v;
      descend(j + 1, leaf);
    }
  }

  std::vector<IntLevel<T>> levels_;
  std::vector<T> x_;
};

std::vector<IntLevel<Integer>> scale_levels(const std::vector<std::vector<IntVector>>& normals,
                                            const std::vector<std::vector<Rational>>& offsets, const Integer& k) {
  std::vector<IntLevel<Integer>> lv(normals.size());
  for (std::size_t j = 0; j < normals.size(); ++j) {
    for (std::size_t r = 0; r < normals[j].size(); ++r) {
      lv[j].normals.push_back(normals[j][r]);
      lv[j].rhs.push_back(ceil_of(-k * offsets[j][r]));
    }
  }
  return lv;
}

Integer count_points(std::vector<IntLevel<Integer>> lv, const Integer& coordinate_bound) {
  Integer emax = 0, cmax = 0;
  for (const auto& level : lv) {
    for (std::size_t r = 0; r < level.normals.size(); ++r) {
      for (const auto& e : level.normals[r]) emax = std::max(emax, Integer(abs(e)));
      cmax = std::max(cmax, Integer(abs(level.rhs[r])));
    }
  }
  Integer total = 0;
  Integer bound = 4 * (Integer(lv.size()) * emax * (coordinate_bound + 1) + cmax + 1);
  if (bound < Integer(std::numeric_limits<long>::max() / 4)) {
    std::vector<IntLevel<long>> small(lv.size());
    for (std::size_t j = 0; j < lv.size(); ++j) {
      for (std::size_t r = 0; r < lv[j].normals.size(); ++r) {
        std::vector<long> eta;
        for (const auto& e : lv[j].normals[r]) eta.push_back(convert<long>(e));
        small[j].normals.push_back(std::move(eta));
        small[j].rhs.push_back(convert<long>(lv[j].rhs[r]));
      }
    }
    long acc = 0;
    Walker<long> w(std::move(small));
    w.run([&](const std::vector<long>&, long lo, long hi) {
      acc += hi - lo + 1;
      if (acc > (1L << 52)) {
        total += acc;
        acc = 0;
      }
    });
    total += acc;
  } else {
    Walker<Integer> w(std::move(lv));
    w.run([&](const std::vector<Integer>&, const Integer& lo, const Integer& hi) { total += hi - lo + 1; });
  }
  return total;
}

// Lattice points of a lower-dimensional polytope: enumerate the image under
// a coordinate projection that is injective on the affine hull, lift each
// point back and keep the integral lifts.
std::vector<IntVector> lift_from_chart(const Polytope& p) {
  const std::size_t n = p.ambient_dim();
  const auto& verts = p.vertices();
  std::vector<IntVector> out;
  if (p.dim() == 0) {
    if (is_integral(verts[0])) out.push_back(to_integer(verts[0]));
    return out;
  }
  const auto d = static_cast<std::size_t>(p.dim());
  RatMatrix basis;  // d independent edge directions from verts[0]
  for (std::size_t i = 1; i < verts.size() && basis.size() < d; ++i) {
    RatVector diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = verts[i][j] - verts[0][j];
    auto trial = basis;
    trial.push_back(diff);
    if (rank(trial) == trial.size()) basis = std::move(trial);
  }
  std::vector<std::size_t> coords;
  RatMatrix minor;  // rows: chosen coordinates of the basis vectors
  for (std::size_t j = 0; j < n && coords.size() < d; ++j) {
    RatVector row(d);
    for (std::size_t c = 0; c < d; ++c) row[c] = basis[c][j];
    auto trial = minor;
    trial.push_back(row);
    if (rank(trial) == trial.size()) {
      minor = std::move(trial);
      coords.push_back(j);
    }
  }
  std::vector<RatVector> image;
  for (const auto& v : verts) {
    RatVector y;
    for (std::size_t j : coords) y.push_back(v[j]);
    image.push_back(std::move(y));
  }
  const RatMatrix inv = inverse(minor);
  for (const auto& y : LatticePointCounter(Polytope::hull(d, std::move(image))).points(1, false)) {
    RatVector rel(d);
    for (std::size_t c = 0; c < d; ++c) rel[c] = Rational(y[c]) - verts[0][coords[c]];
    RatVector x = verts[0];
    for (std::size_t c = 0; c < d; ++c) {
      Rational coef = 0;
      for (std::size_t t = 0; t < d; ++t) coef += inv[c][t] * rel[t];
      for (std::size_t j = 0; j < n; ++j) x[j] += coef * basis[c][j];
    }
    if (is_integral(x)) out.push_back(to_integer(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Integer LatticePointCounter::count(const Integer& k) const {
  if (k < 0) throw Error(ErrorKind::NegativeParameter, "negative dilation");
  if (k == 0) return 1;
  return count_points(scale_levels(normals_, offsets_, k), k * coordinate_bound_);
}

// For integral x and integral normals, <eta, x> > -k a is the same as
// <eta, x> >= floor(-k a) + 1, so the interior points of kP are the lattice
// points of a (usually much smaller) polytope.
Polytope LatticePointCounter::interior_polytope(const Integer& k) const {
  FacetPresentation sys{normals_[n_ - 1], {}};
  for (const auto& a : offsets_[n_ - 1]) sys.offsets.push_back(-(floor_of(-k * a) + 1));
  return Polytope::from_inequalities(n_, sys);
}

Integer LatticePointCounter::count_interior(const Integer& k) const {
  if (k < 0) throw Error(ErrorKind::NegativeParameter, "negative dilation");
  if (k == 0) return 0;
  Polytope q = interior_polytope(k);
  if (q.is_empty()) return 0;
  if (q.full_dimensional()) return LatticePointCounter(q).count(1);
  return static_cast<unsigned long>(lift_from_chart(q).size());
}

std::vector<IntVector> LatticePointCounter::points(const Integer& k, bool interior) const {
  if (k < 0) throw Error(ErrorKind::NegativeParameter, "negative dilation");
  std::vector<IntVector> out;
  if (k == 0) {
    if (!interior) out.emplace_back(n_, 0);
    return out;
  }
  if (interior) return lattice_points(interior_polytope(k));
  Walker<Integer> w(scale_levels(normals_, offsets_, k));
  w.run([&](const std::vector<Integer>& prefix, const Integer& lo, const Integer& hi) {
    for (Integer v = lo; v <= hi; ++v) {
      IntVector x(prefix.begin(), prefix.end() - 1);
      x.push_back(v);
      out.push_back(std::move(x));
    }
  });
  return out;
}

std::vector<IntVector> lattice_points(const Polytope& p) {
  if (p.is_empty()) return {};
  if (p.full_dimensional()) return LatticePointCounter(p).points(1, false);
  return lift_from_chart(p);
}

std::vector<IntVector> interior_lattice_points(const Polytope& p) {
  if (!p.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "interior of a lower-dimensional polytope");
  return LatticePointCounter(p).points(1, true);
}

}  // namespace polyadj
