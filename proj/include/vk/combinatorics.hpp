#pragma once

#include <cstddef>
#include <vector>

namespace vk {

/// Calls `fn` with every size-k subset of `items`, in lexicographic order of
/// positions. Preserves the input order inside each subset.
template <typename T, typename Fn>
void for_each_subset(const std::vector<T>& items, std::size_t k, Fn&& fn) {
  const std::size_t n = items.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> cur(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = items[idx[i]];
    fn(cur);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace vk
