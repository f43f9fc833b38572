#include "hypercross/moment.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <sstream>

#include "hypercross/error.hpp"

namespace hypercross {
namespace {

constexpr std::size_t kMaxEnumDim = 31;

// Coloring mask: bit i set iff position i is RED. Bit 0 is always set; the
// remaining d-1 RED positions come from a (2d-1)-bit combination.
inline bool mask_crosses(std::uint64_t sub, std::size_t d) {
  const std::uint64_t x = 1 | (sub << 1);
  const std::uint64_t low = (std::uint64_t{1} << (2 * d - 1)) - 1;
  const auto transitions = static_cast<std::size_t>(std::popcount((x ^ (x >> 1)) & low));
  return transitions + 1 >= d + 2;
}

// Next k-subset mask in increasing numeric order (Gosper's hack).
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Mask of the combination with the given colex rank among k-subsets.
std::uint64_t unrank_colex(std::uint64_t rank, unsigned k) {
  std::uint64_t mask = 0;
  for (unsigned i = k; i >= 1; --i) {
    unsigned c = i - 1;
    while (binomial_u64(c + 1, i) <= rank) ++c;
    rank -= binomial_u64(c, i);
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

void check_enum_dim(std::size_t d) {
  if (d < 2 || d > kMaxEnumDim)
    throw Error(ErrorKind::kParameter, "moment enumeration supports 2 <= d <= 31");
}

}  // namespace

ColoredSequence ColoredSequence::parse(std::string_view text) {
  ColoredSequence s;
  for (char ch : text) {
    if (ch == 'R' || ch == 'r') {
      s.colors.push_back(Color::kRed);
    } else if (ch == 'B' || ch == 'b') {
      s.colors.push_back(Color::kBlue);
    } else {
      throw Error(ErrorKind::kParse, "coloring must use R and B only");
    }
  }
  s.d = s.colors.size() / 2;
  return s;
}

ColoredSequence ColoredSequence::from_bipartition(const Bipartition& b, std::size_t d) {
  ColoredSequence s{std::vector<Color>(2 * d, Color::kBlue), d};
  for (auto i : b.left) s.colors.at(i) = Color::kRed;
  return s;
}

std::size_t ColoredSequence::block_count() const {
  if (colors.empty()) return 0;
  std::size_t blocks = 1;
  for (std::size_t i = 1; i < colors.size(); ++i)
    if (colors[i] != colors[i - 1]) ++blocks;
  return blocks;
}

void validate(const ColoredSequence& s) {
  if (s.d < 1 || s.colors.size() != 2 * s.d)
    throw Error(ErrorKind::kDimension, "coloring must have exactly 2d entries");
  const auto reds = std::count(s.colors.begin(), s.colors.end(), Color::kRed);
  if (static_cast<std::size_t>(reds) != s.d)
    throw Error(ErrorKind::kDimension, "coloring must have d RED and d BLUE entries");
  if (s.colors.front() != Color::kRed)
    throw Error(ErrorKind::kDimension, "canonical coloring starts with RED");
}

bool alternation_crosses(const ColoredSequence& s) {
  validate(s);
  return s.block_count() >= s.d + 2;
}

std::uint64_t count_moment_crossings_enum_serial(std::size_t d) {
  check_enum_dim(d);
  const auto k = static_cast<unsigned>(d - 1);
  const std::uint64_t total = binomial_u64(static_cast<unsigned>(2 * d - 1), k);
  std::uint64_t count = 0;
  std::uint64_t sub = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (mask_crosses(sub, d)) ++count;
    if (r + 1 < total) sub = next_combination(sub);
  }
  return count;
}

std::uint64_t count_moment_crossings_enum(std::size_t d, int threads) {
  check_enum_dim(d);
  const auto k = static_cast<unsigned>(d - 1);
  const std::uint64_t total = binomial_u64(static_cast<unsigned>(2 * d - 1), k);
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const long chunks = std::max<long>(1, std::min<long>(static_cast<long>(total), 64L * workers));
  std::uint64_t count = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : count) num_threads(workers)
  for (long chunk = 0; chunk < chunks; ++chunk) {
    const std::uint64_t begin = total * static_cast<std::uint64_t>(chunk) / chunks;
    const std::uint64_t end = total * static_cast<std::uint64_t>(chunk + 1) / chunks;
    if (begin == end) continue;
    std::uint64_t sub = unrank_colex(begin, k);
    for (std::uint64_t r = begin; r < end; ++r) {
      if (mask_crosses(sub, d)) ++count;
      if (r + 1 < end) sub = next_combination(sub);
    }
  }
  return count;
}

BigCount noncrossing_distribution_count(std::size_t d) {
  const long n = static_cast<long>(d);
  BigCount sum = 0;
  if (d % 2 == 0) {
    for (long i = 1; i <= n / 2; ++i) sum += binomial(n, i) * binomial(n - 1, i - 1);
  } else {
    for (long i = 1; i <= n / 2; ++i)
      sum += binomial(n - 1, i) * (binomial(n - 1, i - 1) + binomial(n - 1, i));
    sum += 1;
  }
  return sum;
}

BigCount closed_form_cdm(std::size_t d) {
  const long n = static_cast<long>(d);
  BigCount value = binomial(2 * n - 1, n - 1);
  if (d % 2 == 0) {
    for (long i = 1; i <= n / 2; ++i) value -= binomial(n, i) * binomial(n - 1, i - 1);
  } else {
    value -= 1;
    for (long i = 1; i <= n / 2; ++i) value -= binomial(n - 1, i) * binomial(n, i);
  }
  return value;
}

BoundValue thm1_lower_bound(std::size_t d) {
  if (d <= 3) return {0, true};
  const long n = static_cast<long>(d);
  if (d == 4) return {binomial(1, 0), true};
  BigCount sum = 0;
  const long steps = (n - 3) / 2;  // k = 0 .. steps - 1
  for (long k = 0; k < steps; ++k) sum += binomial(n - 3, (n - 2 * k - 3) / 2);
  return {sum, false};
}

BoundValue lemma8_lower_bound(std::size_t d) {
  if (d < 4) return {0, true};
  const long n = static_cast<long>(d);
  const long ceil_half = (n - 5 + 1) / 2;  // ceil((d-5)/2) for d >= 4
  return {BigCount(2 * ((n + 3) / 2)) * binomial(n - 3, std::max(0L, ceil_half)), false};
}

BigCount cr_lower_nd(std::size_t d, std::size_t n, const BigCount& c_value) {
  if (n < 2 * d) throw Error(ErrorKind::kParameter, "cr_lower_nd needs n >= 2d");
  return c_value * binomial(static_cast<long>(n), static_cast<long>(2 * d));
}

bool dey_pach_subsimplex_cross(std::size_t d, RationalVector p, RationalVector q) {
  const std::size_t small = d / 2 + 1;
  const std::size_t large = (d + 1) / 2 + 1;
  const bool sizes_ok = (p.size() == small && q.size() == large) ||
                        (p.size() == large && q.size() == small);
  if (!sizes_ok) throw Error(ErrorKind::kDimension, "sub-simplex sizes must be floor(d/2)+1 and ceil(d/2)+1");
  std::sort(p.begin(), p.end());
  std::sort(q.begin(), q.end());
  for (const auto& x : p)
    if (std::binary_search(q.begin(), q.end(), x))
      throw Error(ErrorKind::kPrecondition, "sub-simplices share a parameter");
  if (std::adjacent_find(p.begin(), p.end()) != p.end() ||
      std::adjacent_find(q.begin(), q.end()) != q.end())
    throw Error(ErrorKind::kPrecondition, "repeated parameter within a sub-simplex");

  auto each_gap_holds_one = [](const RationalVector& ends, const RationalVector& inner) {
    for (std::size_t j = 0; j + 1 < ends.size(); ++j) {
      const auto lo = std::upper_bound(inner.begin(), inner.end(), ends[j]);
      const auto hi = std::lower_bound(inner.begin(), inner.end(), ends[j + 1]);
      if (hi - lo != 1) return false;
    }
    return true;
  };
  return each_gap_holds_one(q, p) && each_gap_holds_one(p, q);
}

std::vector<BoundRow> bound_table(std::size_t d_max) {
  if (d_max > 64) throw Error(ErrorKind::kParameter, "bound table supports d <= 64");
  std::vector<BoundRow> rows;
  for (std::size_t d = 2; d <= d_max; ++d) {
    rows.push_back({d, closed_form_cdm(d), thm1_lower_bound(d), lemma8_lower_bound(d),
                    binomial(static_cast<long>(2 * d), static_cast<long>(d))});
  }
  return rows;
}

nlohmann::json to_json(const std::vector<BoundRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"d", r.d},
                   {"cdm", r.cdm.get_str()},
                   {"thm1", r.thm1.value.get_str()},
                   {"thm1_degenerate", r.thm1.degenerate_range},
                   {"lemma8", r.lemma8.value.get_str()},
                   {"lemma8_degenerate", r.lemma8.degenerate_range},
                   {"binom_2d_d", r.binom_2d_d.get_str()}});
  }
  return out;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "d,cdm,thm1,lemma8,binom_2d_d,thm1_degenerate,lemma8_degenerate\n";
  for (const auto& r : rows) {
    out << r.d << ',' << r.cdm.get_str() << ',' << r.thm1.value.get_str() << ','
        << r.lemma8.value.get_str() << ',' << r.binom_2d_d.get_str() << ','
        << (r.thm1.degenerate_range ? 1 : 0) << ',' << (r.lemma8.degenerate_range ? 1 : 0)
        << '\n';
  }
  return out.str();
}

}  // namespace hypercross
