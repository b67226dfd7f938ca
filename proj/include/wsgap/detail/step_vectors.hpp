#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wsgap::detail {

// Visits every integer vector d with lo <= d <= hi (componentwise) and
// sum_lo <= sum(d) <= sum_hi, in lexicographic order.
template <class Fn>
void for_each_step_vector(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                          std::int64_t sum_lo, std::int64_t sum_hi, Fn&& fn) {
  const std::size_t n = lo.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) return;
  }
  std::vector<std::int64_t> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
  for (std::size_t j = n; j-- > 0;) {
    suffix_lo[j] = suffix_lo[j + 1] + lo[j];
    suffix_hi[j] = suffix_hi[j + 1] + hi[j];
  }
  std::vector<std::int64_t> d(n, 0);
  auto step = [&](auto& self, std::size_t k, std::int64_t partial) -> void {
    if (k == n) {
      if (partial >= sum_lo && partial <= sum_hi) fn(static_cast<const std::vector<std::int64_t>&>(d));
      return;
    }
    const std::int64_t from = std::max(lo[k], sum_lo - partial - suffix_hi[k + 1]);
    const std::int64_t to = std::min(hi[k], sum_hi - partial - suffix_lo[k + 1]);
    for (std::int64_t v = from; v <= to; ++v) {
      d[k] = v;
      self(self, k + 1, partial + v);
    }
  };
  step(step, 0, 0);
}

}  // namespace wsgap::detail
