// Independent brute-force oracles used by the test suites. Nothing here calls
// the code path it is used to check.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hypercross/combinatorics.hpp"
#include "hypercross/config.hpp"
#include "hypercross/matrix.hpp"
#include "hypercross/moment.hpp"
#include "hypercross/separations.hpp"

namespace oracle {

using hypercross::Rational;
using hypercross::RationalVector;

// det of the lifted moment matrix [t; t^2; ...; t^d; 1] over d+1 parameters:
// a row rotation of the classic Vandermonde, so (-1)^d prod_{i<j} (t_j - t_i).
inline Rational lifted_vandermonde(const RationalVector& ts) {
  Rational p = 1;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) p *= ts[j] - ts[i];
  const std::size_t d = ts.size() - 1;
  return d % 2 == 0 ? p : -p;
}

// Number of unordered linear separations, by LP over every subset that
// contains vector 0 (complement side non-empty).
inline std::size_t brute_force_separation_count(const std::vector<RationalVector>& vs,
                                                std::vector<std::size_t>* min_sides = nullptr) {
  const std::size_t m = vs.size();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << m) - 1; ++mask) {
    if ((mask & 1u) == 0) continue;
    std::vector<bool> positive(m);
    std::size_t size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      positive[i] = (mask >> i) & 1u;
      size += positive[i] ? 1 : 0;
    }
    if (hypercross::linearly_separable(vs, positive)) {
      ++count;
      if (min_sides) min_sides->push_back(std::min(size, m - size));
    }
  }
  return count;
}

// Weak compositions of d blue vertices into d gaps, counting those whose
// colorings cannot contain an alternating run of length d + 2.
inline std::uint64_t noncrossing_by_distribution(std::size_t d) {
  std::uint64_t count = 0;
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (parts.size() == d) {
      if (left != 0) return;
      std::size_t nonempty = 0;
      const std::size_t considered = d % 2 == 0 ? d : d - 1;
      for (std::size_t i = 0; i < considered; ++i) nonempty += parts[i] ? 1 : 0;
      if (nonempty <= d / 2) ++count;
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      parts.push_back(x);
      self(self, left - x);
      parts.pop_back();
    }
  };
  rec(rec, d);
  return count;
}

// Longest alternating subsequence by dynamic programming.
inline std::size_t longest_alternating(const std::vector<hypercross::Color>& colors) {
  std::size_t end_red = 0;
  std::size_t end_blue = 0;
  for (auto c : colors) {
    if (c == hypercross::Color::kRed) {
      end_red = std::max(end_red, end_blue + 1);
    } else {
      end_blue = std::max(end_blue, end_red + 1);
    }
  }
  return std::max(end_red, end_blue);
}

inline Rational random_rational(std::mt19937_64& rng, long span = 9) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

inline hypercross::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  hypercross::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
  return m;
}

// x -> A x + b with A invertible.
inline hypercross::PointConfig random_affine_image(const hypercross::PointConfig& c,
                                                   std::mt19937_64& rng) {
  hypercross::Matrix a;
  do {
    a = random_matrix(rng, c.dim, c.dim);
  } while (hypercross::det(a).is_zero());
  RationalVector shift(c.dim);
  for (auto& x : shift) x = random_rational(rng);
  hypercross::PointConfig out{c.dim, {}};
  for (const auto& p : c.points) {
    auto q = a * p;
    for (std::size_t i = 0; i < c.dim; ++i) q[i] += shift[i];
    out.points.push_back(std::move(q));
  }
  return out;
}

}  // namespace oracle
