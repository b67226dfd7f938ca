#include <algorithm>

#include "wsgap/checked.hpp"
#include "wsgap/kernels.hpp"

namespace wsgap::kernels {

void coordinate_maxima_scalar(const RepTable& reps, std::size_t m, std::size_t count,
                              std::span<const std::int64_t> betas, std::span<std::int64_t> out) {
  const std::int64_t b = reps.b;
  std::vector<std::int64_t> upper(m);
  for (std::size_t lane = 0; lane < count; ++lane) {
    for (std::size_t k = 0; k < m; ++k) out[k * count + lane] = kAbsent;
    const std::int64_t beta0 = betas[lane];
    for (std::size_t r = 0; r < reps.first.size(); ++r) {
      const std::int64_t first = reps.first[r];
      const std::int64_t level = reps.level[r];
      const std::int64_t need = checked::ceil_div(checked::sub(first, beta0), b);
      std::int64_t room = 0;
      for (std::size_t k = 1; k < m; ++k) {
        upper[k] = checked::floor_div(checked::sub(betas[k * count + lane], level), b);
        room = checked::add(room, upper[k]);
      }
      if (room < need) continue;
      auto bump = [&](std::size_t k, std::int64_t v) {
        std::int64_t& slot = out[k * count + lane];
        slot = std::max(slot, v);
      };
      bump(0, checked::sub(first, checked::mul(b, need)));
      for (std::size_t k = 1; k < m; ++k) bump(k, checked::add(level, checked::mul(b, upper[k])));
    }
  }
}

}  // namespace wsgap::kernels
