#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hypercross/matrix.hpp"
#include "hypercross/rational.hpp"

namespace hypercross {

using Point = RationalVector;

/// Ordered sequence of points in R^dim with exact coordinates.
struct PointConfig {
  std::size_t dim = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

/// Parameters t_1 < ... < t_n of points on the moment curve in R^dim.
struct MomentParams {
  std::size_t dim = 0;
  RationalVector ts;
};

/// Integer parameters 1, 2, ..., n.
MomentParams unit_moment_params(std::size_t dim, std::size_t n);

/// Point i is (t_i, t_i^2, ..., t_i^dim). Throws Error(kOrdering) unless the
/// parameters are strictly increasing.
PointConfig moment_config(const MomentParams& params);

/// Checks that every point has `dim` coordinates and dim >= 1.
void validate_shape(const PointConfig& c);

/// The (dim+1) x n matrix whose columns are the points with a trailing 1.
Matrix lifted_matrix(const PointConfig& c);
Matrix lifted_matrix(const PointConfig& c, std::span<const std::size_t> indices);

/// True iff the selected points are affinely independent.
bool affinely_independent(const PointConfig& c, std::span<const std::size_t> indices);

enum class GeneralPosition {
  kGeneral,     // every (d+1)-subset is affinely independent
  kDegenerate,  // some d+1 points share a hyperplane
  kTrivial,     // n <= d: nothing to check, reported separately
};

GeneralPosition general_position(const PointConfig& c);
GeneralPosition general_position(const PointConfig& c, std::span<const std::size_t> indices);

/// Convenience form: true for kGeneral, false for kDegenerate.
/// Throws Error(kPrecondition) for the trivial (n <= d) query.
bool is_general_position(const PointConfig& c);

/// True iff every point is a vertex of the convex hull, decided per point by
/// infeasibility of writing it as a convex combination of the others.
/// Throws Error(kPrecondition) unless the configuration is in general position.
bool is_convex_position(const PointConfig& c);

/// Per-point hull membership test used by is_convex_position.
bool in_convex_hull_of_others(const PointConfig& c, std::size_t index);

/// Integer points uniform in [0, coordinate_bound)^dim, resampled until in
/// general position. Pure function of its arguments.
/// coordinate_bound == 0 selects the default 4 * n * dim.
PointConfig random_general_config(std::size_t dim, std::size_t n, std::uint64_t seed,
                                  std::uint64_t coordinate_bound = 0);

/// n rational points on the unit sphere in R^3 (inverse stereographic images
/// of random rational grid points), resampled until in general position.
/// Points on a sphere are automatically in convex position.
PointConfig random_convex_config_3d(std::size_t n, std::uint64_t seed);

}  // namespace hypercross
