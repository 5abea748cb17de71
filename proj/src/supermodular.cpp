#include "negdep/supermodular.hpp"

#include <algorithm>

#include "negdep/error.hpp"
#include "negdep/simplex.hpp"

namespace negdep {

namespace {

std::vector<std::size_t> strides_of(const std::vector<std::vector<Rational>>& axes) {
  std::vector<std::size_t> stride(axes.size(), 1);
  for (std::size_t i = axes.size(); i-- > 1;) stride[i - 1] = stride[i] * axes[i].size();
  return stride;
}

// Calls f(flat, digits) for every grid point in row-major order.
template <class F>
void for_each_grid_point(const std::vector<std::vector<Rational>>& axes, F&& f) {
  std::vector<std::size_t> digit(axes.size(), 0);
  std::size_t flat = 0;
  while (true) {
    f(flat, digit);
    ++flat;
    std::size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++digit[i] < axes[i].size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (axes.empty()) return;
  }
}

// Calls f(base, +i, +j, +i+j) flat indices for every unit square.
template <class F>
void for_each_local_square(const std::vector<std::vector<Rational>>& axes, F&& f) {
  const auto stride = strides_of(axes);
  for_each_grid_point(axes, [&](std::size_t flat, const std::vector<std::size_t>& digit) {
    for (std::size_t i = 0; i < axes.size(); ++i) {
      if (digit[i] + 1 >= axes[i].size()) continue;
      for (std::size_t j = i + 1; j < axes.size(); ++j) {
        if (digit[j] + 1 >= axes[j].size()) continue;
        f(flat, flat + stride[i], flat + stride[j], flat + stride[i] + stride[j]);
      }
    }
  });
}

}  // namespace

GridFunction::GridFunction(std::vector<std::vector<Rational>> axes, std::vector<Rational> values)
    : axes_(std::move(axes)), values_(std::move(values)) {
  std::size_t total = 1;
  for (const auto& a : axes_) total *= a.size();
  if (values_.size() != total) throw Error(ErrorCode::kDimMismatch, "grid function size mismatch");
}

std::optional<Rational> GridFunction::at(std::span<const Rational> x) const {
  if (x.size() != axes_.size()) return std::nullopt;
  const auto stride = strides_of(axes_);
  std::size_t flat = 0;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    auto it = std::lower_bound(axes_[i].begin(), axes_[i].end(), x[i]);
    if (it == axes_[i].end() || *it != x[i]) return std::nullopt;
    flat += static_cast<std::size_t>(it - axes_[i].begin()) * stride[i];
  }
  return values_[flat];
}

bool GridFunction::is_supermodular() const {
  bool ok = true;
  for_each_local_square(axes_, [&](std::size_t b, std::size_t i, std::size_t j, std::size_t ij) {
    if ((values_[ij] - values_[i] - values_[j] + values_[b]).sign() < 0) ok = false;
  });
  return ok;
}

Rational GridFunction::expectation(const FiniteJointDistribution& d) const {
  Rational total;
  for (const auto& a : d.atoms()) {
    auto v = at(a.x);
    if (!v) throw Error(ErrorCode::kUndefinedAtAtom, "grid function undefined at " + point_str(a.x));
    total += *v * a.p;
  }
  return total;
}

SupermodularVerdict supermodular_leq(const FiniteJointDistribution& dx,
                                     const FiniteJointDistribution& dy,
                                     const EnumerationCaps& caps) {
  if (dx.dim() != dy.dim()) {
    throw Error(ErrorCode::kDimMismatch, "compared laws have different dimensions");
  }
  auto axes = support_grid(dx);
  const auto axes_y = support_grid(dy);
  std::size_t total = 1;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    axes[i].insert(axes[i].end(), axes_y[i].begin(), axes_y[i].end());
    std::sort(axes[i].begin(), axes[i].end());
    axes[i].erase(std::unique(axes[i].begin(), axes[i].end()), axes[i].end());
    total *= axes[i].size();
    if (total > caps.lp_variables) {
      throw Error(ErrorCode::kGridTooLarge, "supermodular LP grid exceeds " +
                                                std::to_string(caps.lp_variables) + " points");
    }
  }

  // Variables phi = psi + 1 in [0, 2]; the shift does not change the
  // objective because the mass difference sums to zero.
  LinearProgram lp;
  lp.num_vars = total;
  lp.objective.assign(total, Rational(0));
  {
    const auto stride = strides_of(axes);
    auto flat_of = [&](std::span<const Rational> x) {
      std::size_t flat = 0;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        auto it = std::lower_bound(axes[i].begin(), axes[i].end(), x[i]);
        flat += static_cast<std::size_t>(it - axes[i].begin()) * stride[i];
      }
      return flat;
    };
    for (const auto& a : dx.atoms()) lp.objective[flat_of(a.x)] += a.p;
    for (const auto& a : dy.atoms()) lp.objective[flat_of(a.x)] -= a.p;
  }
  for_each_local_square(axes, [&](std::size_t b, std::size_t i, std::size_t j, std::size_t ij) {
    // phi(b) - phi(i) - phi(j) + phi(ij) >= 0, written as <= 0 after negation.
    lp.constraints.push_back(LpConstraint{
        {{ij, Rational(-1)}, {i, Rational(1)}, {j, Rational(1)}, {b, Rational(-1)}},
        LpRelation::kLe,
        Rational(0)});
  });
  for (std::size_t g = 0; g < total; ++g) {
    lp.constraints.push_back(LpConstraint{{{g, Rational(1)}}, LpRelation::kLe, Rational(2)});
  }

  SupermodularVerdict verdict;
  verdict.lp_variables = total;
  verdict.lp_constraints = lp.constraints.size();
  const LpSolution sol = simplex_solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInternal, "bounded supermodular LP did not reach an optimum");
  }
  verdict.pivots = sol.pivots;
  verdict.optimum = sol.optimum;
  verdict.holds = sol.optimum.sign() == 0;
  if (!verdict.holds) {
    std::vector<Rational> psi(total);
    for (std::size_t g = 0; g < total; ++g) psi[g] = sol.x[g] - Rational(1);
    GridFunction witness(std::move(axes), std::move(psi));
    verdict.expectation_x = witness.expectation(dx);
    verdict.expectation_y = witness.expectation(dy);
    verdict.witness = std::move(witness);
  }
  return verdict;
}

}  // namespace negdep
