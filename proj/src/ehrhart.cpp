#include <polyadj/ehrhart.hpp>
#include <polyadj/error.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace polyadj {

namespace {

const Polytope& require_lattice(const Polytope& p) {
  if (!p.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "Ehrhart data needs a full-dimensional polytope");
  if (!p.is_lattice()) throw Error(ErrorKind::NotLattice, "Ehrhart data needs a lattice polytope");
  return p;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Rational EhrhartPolynomial::operator()(const Rational& m) const {
  Rational v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * m + *it;
  return v;
}

std::size_t HStarPolynomial::degree() const {
  for (std::size_t j = coefficients.size(); j-- > 0;)
    if (coefficients[j] != 0) return j;
  return 0;
}

EhrhartCounter::EhrhartCounter(const Polytope& p, EhrhartOptions options)
    : dim_(p.ambient_dim()), options_(options), counter_(require_lattice(p)) {}

Integer EhrhartCounter::count(std::size_t m) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  }
  Integer c = counter_.count(Integer(static_cast<unsigned long>(m)));
  std::lock_guard lock(mutex_);
  return memo_.emplace(m, c).first->second;
}

std::vector<Integer> EhrhartCounter::counts(std::size_t upto) const {
  const unsigned workers = std::max(1u, std::min<unsigned>(options_.threads, static_cast<unsigned>(upto + 1)));
  if (workers > 1) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    // largest dilates first: they dominate the running time
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) <= upto;) count(upto - i);
      });
    for (auto& t : pool) t.join();
  }
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= upto; ++m) out.push_back(count(m));
  return out;
}

Integer EhrhartCounter::interior_count(std::size_t k) const {
  return counter_.count_interior(Integer(static_cast<unsigned long>(k)));
}

Integer count(const Polytope& p, std::size_t m) {
  if (m == 0) return 1;
  if (!p.is_lattice()) throw Error(ErrorKind::NotLattice, "Ehrhart counts need a lattice polytope");
  if (!p.full_dimensional()) {
    if (m == 1) return static_cast<Integer>(lattice_points(p).size());
    return static_cast<Integer>(lattice_points(dilate(p, Integer(static_cast<unsigned long>(m)))).size());
  }
  return LatticePointCounter(p).count(Integer(static_cast<unsigned long>(m)));
}

EhrhartPolynomial ehrhart_polynomial(const EhrhartCounter& counter) {
  const std::size_t n = counter.dim();
  auto f = counter.counts(n + 2);
  // forward differences at 0, then expand sum_j D^j f(0) * C(m, j)
  std::vector<Integer> diff(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n + 1));
  std::vector<Integer> leading;
  for (std::size_t j = 0; j <= n; ++j) {
    leading.push_back(diff[0]);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  EhrhartPolynomial e{RatVector(n + 1, 0)};
  RatVector falling{1};  // coefficients of C(m, j)
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t c = 0; c < falling.size(); ++c) e.coefficients[c] += leading[j] * falling[c];
    // C(m, j+1) = C(m, j) * (m - j) / (j + 1)
    RatVector next(falling.size() + 1, 0);
    for (std::size_t c = 0; c < falling.size(); ++c) {
      next[c + 1] += falling[c];
      next[c] -= falling[c] * static_cast<long>(j);
    }
    for (auto& x : next) x /= static_cast<long>(j + 1);
    falling = std::move(next);
  }
  for (std::size_t m = n + 1; m <= n + 2; ++m)
    if (e(Rational(static_cast<long>(m))) != f[m])
      throw Error(ErrorKind::InternalInconsistency, "Ehrhart interpolation does not reproduce f(" + std::to_string(m) + ")");
  return e;
}

EhrhartPolynomial ehrhart_polynomial(const Polytope& p) { return ehrhart_polynomial(EhrhartCounter(p)); }

HStarPolynomial h_star(const EhrhartCounter& counter) {
  const std::size_t n = counter.dim();
  auto f = counter.counts(n);
  HStarPolynomial h;
  for (std::size_t j = 0; j <= n; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      Integer term = binomial(n + 1, i) * f[j - i];
      if (i % 2 == 0) s += term;
      else s -= term;
    }
    h.coefficients.push_back(s);
  }
  if (h.coefficients[0] != 1) throw Error(ErrorKind::InternalInconsistency, "h*_0 must be 1");
  for (const auto& c : h.coefficients)
    if (c < 0) throw Error(ErrorKind::InternalInconsistency, "negative h* coefficient");
  return h;
}

HStarPolynomial h_star(const Polytope& p) { return h_star(EhrhartCounter(p)); }

std::size_t codegree_by_interior_points(const EhrhartCounter& counter) {
  for (std::size_t k = 1; k <= counter.dim() + 1; ++k)
    if (counter.interior_count(k) > 0) return k;
  throw Error(ErrorKind::InternalInconsistency, "(n+1)P has no interior lattice point");
}

std::size_t codegree_by_interior_points(const Polytope& p) { return codegree_by_interior_points(EhrhartCounter(p)); }

DegreeReport degree_and_codegree(const Polytope& p, EhrhartOptions options) {
  EhrhartCounter counter(p, options);
  DegreeReport r;
  r.hstar = h_star(counter);
  r.codegree = codegree_by_interior_points(counter);
  r.degree = r.hstar.degree();
  if (r.degree + r.codegree != counter.dim() + 1)
    throw Error(ErrorKind::InternalInconsistency,
                "deg h* = " + std::to_string(r.degree) + " disagrees with codegree " + std::to_string(r.codegree));
  return r;
}

}  // namespace polyadj
