#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "hypercross/rational.hpp"

namespace hypercross {

struct GaleDiagram;

/// Partition of a planar vector sequence by a line through the origin.
/// `direction` spans the line; `positive_side` holds the vectors strictly
/// counter-clockwise of it. Indices are 0-based and sorted.
struct Separation {
  std::vector<std::size_t> positive_side;
  std::vector<std::size_t> negative_side;
  RationalVector direction;

  std::size_t min_side() const {
    return positive_side.size() < negative_side.size() ? positive_side.size()
                                                       : negative_side.size();
  }
  /// Side sizes are ceil(m/2) and floor(m/2).
  bool is_proper() const;
};

struct SweepStep {
  Separation separation;
  std::size_t min_side = 0;
};

/// Half-turn sweep of a line through the origin, visiting every partition in
/// order of the line's angle in [0, pi). Arcs with an empty side are skipped;
/// for diagrams not contained in an open half-plane (e.g. every Gale diagram)
/// consecutive steps, cyclically, differ by exactly one vector.
/// Throws Error(kDimension) unless k = 2 and Error(kDegenerate) when two
/// vectors are collinear (same or opposite direction) or a vector is zero.
std::vector<SweepStep> sweep_partition_sequence(const GaleDiagram& g);

/// All distinct linear separations, ordered by boundary angle.
std::vector<Separation> enumerate_separations(const GaleDiagram& g);

std::size_t count_proper_separations(const GaleDiagram& g);

/// LP decision: is there a linear functional strictly positive on the
/// vectors flagged in `positive` and strictly negative on the rest?
/// Works in any dimension.
bool linearly_separable(const std::vector<RationalVector>& vectors,
                        const std::vector<bool>& positive);

/// 1-based JSON: [{"positive": [...], "negative": [...], "direction": [..]}].
nlohmann::json to_json(const std::vector<Separation>& separations);

}  // namespace hypercross
