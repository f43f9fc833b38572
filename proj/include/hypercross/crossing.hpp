#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercross/config.hpp"
#include "hypercross/lp.hpp"

namespace hypercross {

using IndexSet = std::vector<std::size_t>;

/// Unordered pair of disjoint vertex sets, stored canonically: both sides
/// sorted and min(left ∪ right) in `left`. Indices are 0-based.
struct Bipartition {
  IndexSet left;
  IndexSet right;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Sorts both sides and orients so that the smallest index is on the left.
/// Throws Error(kPrecondition) if a side is empty or the sides overlap.
Bipartition make_bipartition(IndexSet a, IndexSet b);

/// maximize t  s.t.  sum_U (t + s_i) p_i = sum_V (t + s_j) p_j,
///                   sum_U (t + s_i) = sum_V (t + s_j) = 1,   t, s >= 0.
/// Variable 0 is t, then s_i for U in order, then s_j for V in order.
LpProblem build_crossing_lp(const PointConfig& c, const Bipartition& b);

/// relint conv(U) ∩ relint conv(V) ≠ ∅, for arbitrary disjoint non-empty
/// index sets (no simplex requirement). Exact.
bool relative_interiors_meet(const PointConfig& c, const Bipartition& b);

/// Crossing predicate for a u-simplex and a v-simplex: each side has 1..d
/// points, and the points of both sides are in general position.
/// Throws Error(kPrecondition) on overlap or bad sizes and Error(kDegenerate)
/// when the support is not in general position.
bool simplices_cross(const PointConfig& c, const Bipartition& b);

/// Every unordered pair of disjoint `size`-subsets of {0..n-1}, canonical and
/// in lexicographic order of (left, right).
std::vector<Bipartition> enumerate_disjoint_pairs(std::size_t n, std::size_t size);

struct CrossingReport {
  std::size_t dim = 0;
  std::size_t n = 0;
  std::size_t hyperedge_size = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t crossing_count = 0;
  std::vector<Bipartition> witnesses;  // lexicographic; empty unless requested

  friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

struct CountOptions {
  bool collect_witnesses = false;
  int threads = 0;  // 0: OpenMP default
};

/// Counts crossing pairs of hyperedges of the given size (OpenMP over the
/// pair list). The report does not depend on the thread count.
/// Throws Error(kParameter) if n < 2 * size and Error(kDegenerate) if the
/// configuration is not in general position.
CrossingReport count_crossing_pairs(const PointConfig& c, std::size_t hyperedge_size,
                                    const CountOptions& options = {});

/// Single-threaded reference implementation of count_crossing_pairs.
CrossingReport count_crossing_pairs_serial(const PointConfig& c, std::size_t hyperedge_size,
                                           bool collect_witnesses = false);

/// All extensions of a crossing sub-pair (U, V) to disjoint d-sets
/// U' ⊇ U, V' ⊇ V using the remaining vertices, in lexicographic order.
/// Requires 2 <= |U|, |V| <= d, |U| + |V| >= d + 1, n >= 2d and that U, V
/// cross; throws Error(kPrecondition) otherwise.
std::vector<Bipartition> extension_crossings(const PointConfig& c, const Bipartition& b);

/// Indices are written 1-based.
nlohmann::json to_json(const Bipartition& b);
nlohmann::json to_json(const CrossingReport& r);
/// "left,right" header, one witness per row, space separated 1-based indices.
std::string witnesses_csv(const CrossingReport& r);

}  // namespace hypercross
