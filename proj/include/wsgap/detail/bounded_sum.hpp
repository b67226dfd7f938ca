#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace wsgap {

namespace detail {

template <class Fn>
void bounded_sum_step(IntTuple& t, std::size_t k, std::int64_t remaining, Fn& fn) {
  if (k == t.size()) {
    fn(static_cast<const IntTuple&>(t));
    return;
  }
  for (std::int64_t v = 0; v <= remaining; ++v) {
    t[k] = v;
    bounded_sum_step(t, k + 1, remaining - v, fn);
  }
  t[k] = 0;
}

}  // namespace detail

template <class Fn>
void for_each_bounded_sum(std::size_t m, std::int64_t max_sum, Fn&& fn,
                          std::optional<std::int64_t> first) {
  if (m == 0 || max_sum < 0) return;
  IntTuple t(m, 0);
  if (first) {
    if (*first < 0 || *first > max_sum) return;
    t[0] = *first;
    detail::bounded_sum_step(t, 1, max_sum - *first, fn);
    return;
  }
  detail::bounded_sum_step(t, 0, max_sum, fn);
}

}  // namespace wsgap
