#include <polyadj/error.hpp>
#include <polyadj/linear_program.hpp>

#include <optional>

namespace polyadj {

namespace {

// Dense simplex tableau for  A z = b, z >= 0, with an explicit reduced-cost
// row. Pivoting follows Bland's rule: lowest-index entering column,
// lowest-index basic variable among tied ratios.
class Tableau {
 public:
  Tableau(RatMatrix rows, RatVector rhs, std::vector<std::size_t> basis)
      : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)) {}

  // Installs the cost vector and prices out the current basis.
  void set_costs(const RatVector& costs) {
    const std::size_t cols = costs.size();
    reduced_ = costs;
    value_ = 0;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) reduced_[j] -= cb * a_[i][j];
      value_ += cb * b_[i];
    }
  }

  enum class Outcome { Optimal, Unbounded };

  // Minimizes the installed cost over columns j with allowed[j].
  Outcome minimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < reduced_.size(); ++j)
        if (allowed[j] && reduced_[j] < 0) {
          entering = j;
          break;
        }
      if (!entering) return Outcome::Optimal;
      const std::size_t e = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][e] <= 0) continue;
        Rational ratio = b_[i] / a_[i][e];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return Outcome::Unbounded;
      pivot(*leaving, e);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t cols = a_[row].size();
    Rational inv = 1 / a_[row][col];
    for (auto& x : a_[row]) x *= inv;
    b_[row] *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == row || a_[i][col] == 0) continue;
      Rational f = a_[i][col];
      for (std::size_t j = 0; j < cols; ++j)
        if (a_[row][j] != 0) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    if (!reduced_.empty() && reduced_[col] != 0) {
      Rational f = reduced_[col];
      for (std::size_t j = 0; j < cols; ++j)
        if (a_[row][j] != 0) reduced_[j] -= f * a_[row][j];
      value_ += f * b_[row];
    }
    basis_[row] = col;
  }

  void drop_row(std::size_t row) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(row));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  std::size_t rows() const { return a_.size(); }
  const Rational& entry(std::size_t i, std::size_t j) const { return a_[i][j]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  const Rational& value() const { return value_; }

  RatVector solution(std::size_t columns) const {
    RatVector z(columns, 0);
    for (std::size_t i = 0; i < a_.size(); ++i) z[basis_[i]] = b_[i];
    return z;
  }

 private:
  RatMatrix a_;
  RatVector b_;
  std::vector<std::size_t> basis_;
  RatVector reduced_;
  Rational value_;
};

}  // namespace

LpResult lp_feasible_max(std::span<const LinearConstraint> constraints, std::span<const Rational> objective) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  for (const auto& c : constraints)
    if (c.normal.size() != n) throw Error(ErrorKind::DimensionMismatch, "constraint normal length differs from objective");

  // y = p - q; row i:  <a_i,p> - <a_i,q> - s_i + art_i = b_i  (sign-normalized so b_i >= 0)
  const std::size_t p0 = 0, q0 = n, s0 = 2 * n, art0 = 2 * n + m, cols = 2 * n + 2 * m;
  RatMatrix rows(m, RatVector(cols, 0));
  RatVector rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    int sign = c.offset < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][p0 + j] = sign * c.normal[j];
      rows[i][q0 + j] = -sign * c.normal[j];
    }
    rows[i][s0 + i] = -sign;
    rows[i][art0 + i] = 1;
    rhs[i] = sign * c.offset;
    basis[i] = art0 + i;
  }
  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  RatVector phase1(cols, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = 1;
  tab.set_costs(phase1);
  std::vector<bool> allowed(cols, true);
  tab.minimize(allowed);
  LpResult result;
  if (tab.value() != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }

  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basic(i) < art0) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < art0; ++j)
      if (tab.entry(i, j) != 0) {
        col = j;
        break;
      }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);  // redundant equation
    }
  }

  RatVector phase2(cols, 0);
  for (std::size_t j = 0; j < n; ++j) {
    phase2[p0 + j] = -objective[j];
    phase2[q0 + j] = objective[j];
  }
  for (std::size_t j = art0; j < cols; ++j) allowed[j] = false;
  tab.set_costs(phase2);
  auto outcome = tab.minimize(allowed);

  RatVector z = tab.solution(cols);
  result.witness.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.witness[j] = z[p0 + j] - z[q0 + j];
  if (outcome == Tableau::Outcome::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.value = -tab.value();
  return result;
}

}  // namespace polyadj
