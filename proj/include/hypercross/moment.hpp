#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypercross/combinatorics.hpp"
#include "hypercross/crossing.hpp"
#include "hypercross/rational.hpp"

namespace hypercross {

enum class Color : std::uint8_t { kRed, kBlue };

/// Colors of the 2d moment-curve vertices in parameter order. Canonical form
/// has d of each color and RED at position 0.
struct ColoredSequence {
  std::vector<Color> colors;
  std::size_t d = 0;

  /// Parses e.g. "RBRB" (d inferred as half the length).
  static ColoredSequence parse(std::string_view text);
  /// Left side RED, right side BLUE; indices are parameter ranks.
  static ColoredSequence from_bipartition(const Bipartition& b, std::size_t d);

  std::size_t block_count() const;
};

/// Throws Error(kDimension) unless the sequence is canonical.
void validate(const ColoredSequence& s);

/// Two hyperedges on the moment curve cross iff the coloring has at least
/// d + 2 maximal monochromatic blocks (equivalently, an alternating
/// subsequence of length d + 2).
bool alternation_crosses(const ColoredSequence& s);

/// Enumerates all C(2d-1, d-1) canonical colorings and counts crossing ones.
/// OpenMP over rank ranges. Practical up to d = 14; hard limit d <= 31.
std::uint64_t count_moment_crossings_enum(std::size_t d, int threads = 0);
std::uint64_t count_moment_crossings_enum_serial(std::size_t d);

/// Exact number of crossing pairs of K_{2d}^d on the moment curve:
///   even d: C(2d-1,d-1) - sum_{i=1}^{d/2} C(d,i) C(d-1,i-1)
///   odd d:  C(2d-1,d-1) - 1 - sum_{i=1}^{floor(d/2)} C(d-1,i) C(d,i)
BigCount closed_form_cdm(std::size_t d);

/// Non-crossing pair count, in the block-distribution form
///   even d: sum_{i=1}^{d/2} C(d,i) C(d-1,i-1)
///   odd d:  sum_{i=1}^{floor(d/2)} C(d-1,i) (C(d-1,i-1) + C(d-1,i)) + 1
BigCount noncrossing_distribution_count(std::size_t d);

struct BoundValue {
  BigCount value;
  bool degenerate_range = false;  // series/product outside its stated range
};

/// Sweep-extension lower bound sum_{k=0}^{floor((d-3)/2)-1} C(d-3, floor((d-2k-3)/2)).
/// d = 4 has an empty range and reports the first sweep term C(1,0) = 1,
/// flagged; d <= 3 reports 0, flagged.
BoundValue thm1_lower_bound(std::size_t d);

/// 2 floor((d+3)/2) C(d-3, ceil((d-5)/2)); d < 4 reports 0, flagged.
BoundValue lemma8_lower_bound(std::size_t d);

/// c_value * C(n, 2d). Throws Error(kParameter) when n < 2d.
BigCount cr_lower_nd(std::size_t d, std::size_t n, const BigCount& c_value);

/// Interleaving test for a floor(d/2)-simplex and a ceil(d/2)-simplex on the
/// moment curve, given by their parameters (either order of sizes).
/// Throws Error(kDimension) on wrong sizes, Error(kPrecondition) on shared
/// parameter values.
bool dey_pach_subsimplex_cross(std::size_t d, RationalVector p, RationalVector q);

struct BoundRow {
  std::size_t d = 0;
  BigCount cdm;
  BoundValue thm1;
  BoundValue lemma8;
  BigCount binom_2d_d;
};

/// Rows for d = 2 .. d_max. Throws Error(kParameter) if d_max > 64.
std::vector<BoundRow> bound_table(std::size_t d_max);

/// Big values are emitted as decimal strings.
nlohmann::json to_json(const std::vector<BoundRow>& rows);
std::string bound_table_csv(const std::vector<BoundRow>& rows);

}  // namespace hypercross
