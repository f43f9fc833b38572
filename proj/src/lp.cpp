#include "hypercross/lp.hpp"

#include <optional>
#include <utility>

#include "hypercross/error.hpp"

namespace hypercross {
namespace {

// Dense simplex tableau over exact rationals. Column `width - 1` holds the
// right-hand side; basis[i] is the basic variable of row i.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars)
      : vars_(vars), cells_(rows, RationalVector(vars + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][vars_]; }
  std::size_t rows() const { return cells_.size(); }
  std::size_t vars() const { return vars_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / cells_[r][c];
    for (auto& x : cells_[r]) x *= inv;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == r || cells_[i][c].is_zero()) continue;
      const Rational f = cells_[i][c];
      for (std::size_t j = 0; j <= vars_; ++j) {
        if (!cells_[r][j].is_zero()) cells_[i][j] -= f * cells_[r][j];
      }
    }
    basis_[r] = c;
  }

  void erase_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Keeps only the first `keep` variable columns (plus the rhs column).
  void truncate_columns(std::size_t keep) {
    for (auto& row : cells_) {
      Rational b = std::move(row[vars_]);
      row.resize(keep + 1);
      row[keep] = std::move(b);
    }
    vars_ = keep;
  }

  // Maximizes cost . x from the current basic feasible solution using
  // Bland's rule. Returns false if the objective is unbounded.
  bool maximize(const RationalVector& cost) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < vars_ && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) reduced -= cost[basis_[i]] * cells_[i][j];
        if (reduced.sign() > 0) entering = j;
      }
      if (!entering) return true;

      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (cells_[i][c].sign() <= 0) continue;
        Rational ratio = cells_[i][vars_] / cells_[i][c];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, c);
    }
  }

  Rational value(const RationalVector& cost) const {
    Rational v;
    for (std::size_t i = 0; i < cells_.size(); ++i) v += cost[basis_[i]] * cells_[i][vars_];
    return v;
  }

  RationalVector solution() const {
    RationalVector x(vars_);
    for (std::size_t i = 0; i < cells_.size(); ++i) x[basis_[i]] = cells_[i][vars_];
    return x;
  }

 private:
  std::size_t vars_;
  std::vector<RationalVector> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_max_slack(const LpProblem& problem) {
  const Matrix& a = problem.constraints;
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  if (n == 0) throw Error(ErrorKind::kDimension, "lp: no variables");
  if (problem.rhs.size() != m) throw Error(ErrorKind::kDimension, "lp: rhs length mismatch");
  if (problem.objective >= n) throw Error(ErrorKind::kDimension, "lp: objective index out of range");

  // Phase I: one artificial per row, rows sign-normalized so rhs >= 0.
  Tableau t(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = problem.rhs[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? -a(i, j) : a(i, j);
    t.at(i, n + i) = 1;
    t.rhs(i) = flip ? -problem.rhs[i] : problem.rhs[i];
    t.basis()[i] = n + i;
  }
  RationalVector phase1_cost(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1_cost[n + i] = -1;
  t.maximize(phase1_cost);  // bounded above by zero
  if (t.value(phase1_cost).sign() < 0) return LpResult{LpStatus::kInfeasible, {}, {}};

  // Drive remaining (zero-valued) artificials out of the basis; rows where
  // that is impossible are redundant.
  for (std::size_t i = t.rows(); i-- > 0;) {
    if (t.basis()[i] < n) continue;
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (!t.at(i, j).is_zero()) col = j;
    if (col) {
      t.pivot(i, *col);
    } else {
      t.erase_row(i);
    }
  }
  t.truncate_columns(n);

  RationalVector cost(n);
  cost[problem.objective] = 1;
  if (!t.maximize(cost)) return LpResult{LpStatus::kUnbounded, {}, {}};
  return LpResult{LpStatus::kOptimal, t.value(cost), t.solution()};
}

}  // namespace hypercross
