#include "negdep/simplex.hpp"

#include <optional>

#include "negdep/error.hpp"

namespace negdep {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : a_(rows, std::vector<Rational>(cols)), rhs_(rows), basis_(rows), cost_(cols) {}

  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return cost_.size(); }

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& value() const { return value_; }

  /// Sets reduced costs for maximizing c . x under the current basis.
  void price(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j < cols(); ++j) cost_[j] = c[j];
    value_ = Rational(0);
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!a_[r][j].is_zero()) cost_[j] -= cb * a_[r][j];
      }
      value_ += cb * rhs_[r];
    }
  }

  /// Runs Bland-rule pivots until optimal or unbounded. Columns with
  /// allowed[j] == false never enter.
  LpStatus optimize(const std::vector<bool>& allowed, std::uint64_t& pivots) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (allowed[j] && cost_[j].sign() > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return LpStatus::kOptimal;
      const std::size_t q = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][q].sign() <= 0) continue;
        Rational ratio = rhs_[r] / a_[r][q];
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return LpStatus::kUnbounded;
      pivot(*leaving, q);
      ++pivots;
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    const Rational inv = Rational(1) / a_[p][q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!a_[p][j].is_zero()) {
        a_[p][j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[p] *= inv;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == p || a_[r][q].is_zero()) continue;
      const Rational f = a_[r][q];
      for (std::size_t j : nz) a_[r][j] -= f * a_[p][j];
      rhs_[r] -= f * rhs_[p];
    }
    if (!cost_[q].is_zero()) {
      const Rational f = cost_[q];
      for (std::size_t j : nz) cost_[j] -= f * a_[p][j];
      value_ += f * rhs_[p];
    }
    basis_[p] = q;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  const Rational& rhs_value(std::size_t r) const { return rhs_[r]; }

 private:
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  Rational value_;
};

}  // namespace

LpSolution simplex_solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.num_vars) {
    throw Error(ErrorCode::kInternal, "objective length differs from variable count");
  }
  const std::size_t n = lp.num_vars;
  const std::size_t m = lp.constraints.size();

  // Column layout: structural | slack/surplus | artificial.
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  std::vector<int> flip(m, 1);
  std::vector<LpRelation> rel(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    rel[r] = c.relation;
    if (c.rhs.sign() < 0) {
      flip[r] = -1;
      if (rel[r] == LpRelation::kLe) rel[r] = LpRelation::kGe;
      else if (rel[r] == LpRelation::kGe) rel[r] = LpRelation::kLe;
    }
    if (rel[r] != LpRelation::kEq) ++slack_count;
    if (rel[r] != LpRelation::kLe) ++artificial_count;
  }
  const std::size_t first_slack = n;
  const std::size_t first_art = n + slack_count;
  const std::size_t cols = first_art + artificial_count;

  Tableau t(m, cols);
  std::size_t next_slack = first_slack;
  std::size_t next_art = first_art;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = lp.constraints[r];
    for (const auto& [var, coef] : c.terms) {
      if (var >= n) throw Error(ErrorCode::kInternal, "constraint references unknown variable");
      t.at(r, var) += flip[r] > 0 ? coef : -coef;
    }
    t.rhs(r) = flip[r] > 0 ? c.rhs : -c.rhs;
    switch (rel[r]) {
      case LpRelation::kLe:
        t.at(r, next_slack) = Rational(1);
        t.basis(r) = next_slack++;
        break;
      case LpRelation::kGe:
        t.at(r, next_slack++) = Rational(-1);
        t.at(r, next_art) = Rational(1);
        t.basis(r) = next_art++;
        break;
      case LpRelation::kEq:
        t.at(r, next_art) = Rational(1);
        t.basis(r) = next_art++;
        break;
    }
  }

  LpSolution sol;
  std::vector<bool> allowed(cols, true);

  if (artificial_count > 0) {
    std::vector<Rational> phase1(cols);
    for (std::size_t j = first_art; j < cols; ++j) phase1[j] = Rational(-1);
    t.price(phase1);
    t.optimize(allowed, sol.pivots);
    if (t.value().sign() < 0) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Pivot zero-level artificials out of the basis; rows where that is
    // impossible are redundant.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis(r) < first_art) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (!t.at(r, j).is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
        ++sol.pivots;
        ++r;
      } else {
        t.drop_row(r);
      }
    }
    for (std::size_t j = first_art; j < cols; ++j) allowed[j] = false;
  }

  std::vector<Rational> phase2(cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  t.price(phase2);
  if (t.optimize(allowed, sol.pivots) == LpStatus::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.optimum = t.value();
  sol.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) sol.x[t.basis()[r]] = t.rhs_value(r);
  }
  return sol;
}

}  // namespace negdep
