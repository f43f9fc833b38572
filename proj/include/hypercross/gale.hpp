#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "hypercross/config.hpp"
#include "hypercross/rational.hpp"

namespace hypercross {

/// m vectors in R^k, k = m - d - 1, obtained from a null-space basis of the
/// lifted coordinate matrix of m points in R^d. Not unique: any invertible
/// k x k change of basis gives another valid diagram.
struct GaleDiagram {
  std::size_t source_dim = 0;  // d of the originating configuration
  std::size_t k = 0;
  std::vector<RationalVector> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// Generic transform: vector i collects the i-th entry of every null-space
/// basis vector of the lifted matrix (basis from null_space_basis).
/// Requires m >= d + 2; throws Error(kDegenerate) if the points do not
/// affinely span R^d.
GaleDiagram gale_transform(const PointConfig& c);

/// Closed form for m = d + 3 points on the moment curve (k = 2).
GaleDiagram gale_moment_d3(const MomentParams& params);

/// Closed form for m = 2d points on the moment curve (k = d - 1).
GaleDiagram gale_moment_2d(const MomentParams& params);

/// Shared closed form: for i <= d+1 the r-th coordinate is
///   (-1)^(d+1) prod_{j != i} (t_{d+1+r} - t_j) / prod_{j != i} (t_j - t_i)
/// over j in 1..d+1, and v_{d+1+r} is the r-th unit vector.
GaleDiagram gale_moment_closed_form(const MomentParams& params);

/// Every k-subset of the vectors is linearly independent.
bool spans_check(const GaleDiagram& g);

/// True iff some open half-space through the origin holds vector `index`
/// and no other vector (decided by LP).
bool is_isolatable(const GaleDiagram& g, std::size_t index);

/// No linear hyperplane has exactly one vector strictly on one side.
/// k = 2 uses the angular sweep, other k the per-vector LP.
/// Throws Error(kPrecondition) when spans_check fails.
bool gale_convexity_check(const GaleDiagram& g);

nlohmann::json to_json(const GaleDiagram& g);

}  // namespace hypercross
