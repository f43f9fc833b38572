#pragma once

#include <cstddef>
#include <vector>

#include "hypercross/matrix.hpp"

namespace hypercross {

/// maximize x[objective] subject to  constraints * x = rhs,  x >= 0.
///
/// This is the only LP shape the library needs: every predicate is phrased
/// as "maximize a slack variable t over a polytope in standard form".
struct LpProblem {
  Matrix constraints;
  RationalVector rhs;
  std::size_t objective = 0;

  std::size_t variable_count() const { return constraints.cols(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum;             // meaningful only when kOptimal
  RationalVector witness;       // a vertex attaining the optimum when kOptimal
};

/// Two-phase exact simplex with Bland's rule; always terminates.
/// Throws Error(kDimension) on malformed shapes or zero variables.
LpResult lp_max_slack(const LpProblem& problem);

}  // namespace hypercross
