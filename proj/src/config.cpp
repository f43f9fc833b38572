#include "hypercross/config.hpp"

#include <random>
#include <string>

#include "hypercross/combinatorics.hpp"
#include "hypercross/error.hpp"
#include "hypercross/lp.hpp"

namespace hypercross {
namespace {

constexpr int kRetryBudget = 1000;

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

MomentParams unit_moment_params(std::size_t dim, std::size_t n) {
  MomentParams p{dim, {}};
  for (std::size_t i = 1; i <= n; ++i) p.ts.emplace_back(static_cast<long>(i));
  return p;
}

PointConfig moment_config(const MomentParams& params) {
  if (params.dim < 1) throw Error(ErrorKind::kDimension, "moment curve needs dim >= 1");
  for (std::size_t i = 1; i < params.ts.size(); ++i) {
    if (!(params.ts[i - 1] < params.ts[i]))
      throw Error(ErrorKind::kOrdering, "moment parameters must be strictly increasing");
  }
  PointConfig c{params.dim, {}};
  for (const Rational& t : params.ts) {
    Point p(params.dim);
    Rational power = t;
    for (std::size_t k = 0; k < params.dim; ++k) {
      p[k] = power;
      power *= t;
    }
    c.points.push_back(std::move(p));
  }
  return c;
}

void validate_shape(const PointConfig& c) {
  if (c.dim < 1) throw Error(ErrorKind::kDimension, "configuration dimension must be >= 1");
  for (const Point& p : c.points) {
    if (p.size() != c.dim)
      throw Error(ErrorKind::kDimension, "point has " + std::to_string(p.size()) +
                                             " coordinates, expected " + std::to_string(c.dim));
  }
}

Matrix lifted_matrix(const PointConfig& c, std::span<const std::size_t> indices) {
  Matrix m(c.dim + 1, indices.size());
  for (std::size_t col = 0; col < indices.size(); ++col) {
    const Point& p = c.points.at(indices[col]);
    for (std::size_t r = 0; r < c.dim; ++r) m(r, col) = p[r];
    m(c.dim, col) = 1;
  }
  return m;
}

Matrix lifted_matrix(const PointConfig& c) {
  const auto idx = all_indices(c.size());
  return lifted_matrix(c, idx);
}

bool affinely_independent(const PointConfig& c, std::span<const std::size_t> indices) {
  if (indices.size() > c.dim + 1) return false;
  const Matrix m = lifted_matrix(c, indices);
  if (indices.size() == c.dim + 1) return !det(m).is_zero();
  return rank(m) == indices.size();
}

GeneralPosition general_position(const PointConfig& c, std::span<const std::size_t> indices) {
  validate_shape(c);
  if (indices.size() <= c.dim) {
    return GeneralPosition::kTrivial;
  }
  bool ok = true;
  std::vector<std::size_t> subset(c.dim + 1);
  for_each_combination(indices.size(), c.dim + 1, [&](const std::vector<std::size_t>& pick) {
    for (std::size_t i = 0; i < pick.size(); ++i) subset[i] = indices[pick[i]];
    ok = !det(lifted_matrix(c, subset)).is_zero();
    return ok;
  });
  return ok ? GeneralPosition::kGeneral : GeneralPosition::kDegenerate;
}

GeneralPosition general_position(const PointConfig& c) {
  const auto idx = all_indices(c.size());
  return general_position(c, idx);
}

bool is_general_position(const PointConfig& c) {
  switch (general_position(c)) {
    case GeneralPosition::kGeneral: return true;
    case GeneralPosition::kDegenerate: return false;
    case GeneralPosition::kTrivial: break;
  }
  throw Error(ErrorKind::kPrecondition,
              "general position query needs more than dim points (degenerate query)");
}

bool in_convex_hull_of_others(const PointConfig& c, std::size_t index) {
  // Feasibility of  sum_j lambda_j p_j = p_index,  sum_j lambda_j = 1,  lambda >= 0.
  const std::size_t others = c.size() - 1;
  LpProblem lp;
  lp.constraints = Matrix(c.dim + 1, others);
  lp.rhs.assign(c.dim + 1, Rational(0));
  std::size_t col = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == index) continue;
    for (std::size_t r = 0; r < c.dim; ++r) lp.constraints(r, col) = c.points[j][r];
    lp.constraints(c.dim, col) = 1;
    ++col;
  }
  for (std::size_t r = 0; r < c.dim; ++r) lp.rhs[r] = c.points[index][r];
  lp.rhs[c.dim] = 1;
  lp.objective = 0;
  return lp_max_slack(lp).status != LpStatus::kInfeasible;
}

bool is_convex_position(const PointConfig& c) {
  if (general_position(c) == GeneralPosition::kDegenerate)
    throw Error(ErrorKind::kPrecondition, "convex position test needs general position");
  if (c.size() <= c.dim + 1) return true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (in_convex_hull_of_others(c, i)) return false;
  }
  return true;
}

PointConfig random_general_config(std::size_t dim, std::size_t n, std::uint64_t seed,
                                  std::uint64_t coordinate_bound) {
  if (dim < 1 || n < dim + 1)
    throw Error(ErrorKind::kParameter, "random_general_config needs n >= dim + 1");
  const std::uint64_t bound = coordinate_bound == 0 ? 4 * n * dim : coordinate_bound;
  if (bound < n) throw Error(ErrorKind::kParameter, "coordinate bound must be >= n");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, static_cast<long>(bound) - 1);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    PointConfig c{dim, {}};
    for (std::size_t i = 0; i < n; ++i) {
      Point p(dim);
      for (auto& x : p) x = coord(rng);
      c.points.push_back(std::move(p));
    }
    if (general_position(c) == GeneralPosition::kGeneral) return c;
  }
  throw Error(ErrorKind::kGeneration, "random_general_config: retry budget exhausted");
}

PointConfig random_convex_config_3d(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw Error(ErrorKind::kParameter, "random_convex_config_3d needs n >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    PointConfig c{3, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const Rational u(num(rng), den(rng));
      const Rational v(num(rng), den(rng));
      const Rational s = u * u + v * v;
      const Rational scale = Rational(1) / (s + 1);
      c.points.push_back({2 * u * scale, 2 * v * scale, (s - 1) * scale});
    }
    if (general_position(c) == GeneralPosition::kGeneral) return c;
  }
  throw Error(ErrorKind::kGeneration, "random_convex_config_3d: retry budget exhausted");
}

}  // namespace hypercross
