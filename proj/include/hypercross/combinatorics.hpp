#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace hypercross {

using BigCount = mpz_class;

inline BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// Exact binomial in 64 bits; callers keep n <= 62.
inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Calls fn(const std::vector<std::size_t>&) for every k-subset of
/// {0..n-1} in lexicographic order. Stops early if fn returns false.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if constexpr (std::is_same_v<decltype(fn(idx)), bool>) {
      if (!fn(idx)) return;
    } else {
      fn(idx);
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace hypercross
