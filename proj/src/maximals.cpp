#include "wsgap/maximals.hpp"

#include <algorithm>
#include <string>

#include "wsgap/checked.hpp"
#include "wsgap/detail/step_vectors.hpp"
#include "wsgap/error.hpp"

namespace wsgap {

const char* to_string(MaximalKind kind) noexcept {
  return kind == MaximalKind::absolute ? "absolute" : "relative";
}

namespace {

void require_multipoint(const CurveParams& params) {
  if (params.m() < 2) throw Error(ErrorCode::bad_point_count, "maximal elements require m >= 2");
}

IntTuple level_tuple(std::size_t m, std::int64_t first, std::int64_t level) {
  IntTuple t(m, level);
  t[0] = first;
  return t;
}

void sort_unique(std::vector<IntTuple>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

}  // namespace

MaximalSet absolute_maximals_region(const CurveParams& params) {
  require_multipoint(params);
  const std::int64_t a = params.a(), b = params.b();
  const auto m = static_cast<std::int64_t>(params.m());
  MaximalSet ms{MaximalKind::absolute, {}, theta_basis(params), params};
  ms.region_reps.push_back(IntTuple(params.m(), 0));
  for (std::int64_t i = 1; i < b; ++i) {
    ms.region_reps.push_back(level_tuple(params.m(), a * (b - i) - b * (m - 1), i));
  }
  sort_unique(ms.region_reps);
  return ms;
}

MaximalSet relative_maximals_region(const CurveParams& params) {
  require_multipoint(params);
  const std::int64_t a = params.a(), b = params.b();
  const auto m = static_cast<std::int64_t>(params.m());
  MaximalSet ms{MaximalKind::relative, {}, theta_basis(params), params};
  ms.region_reps.push_back(level_tuple(params.m(), b * (m - 2), 0));
  for (std::int64_t i = 1; i < b; ++i) {
    ms.region_reps.push_back(level_tuple(params.m(), a * (b - i) - b, i));
  }
  sort_unique(ms.region_reps);
  return ms;
}

std::vector<IntTuple> expand_in_box(const MaximalSet& ms, const Box& box) {
  const CurveParams& p = ms.params;
  const std::size_t m = p.m();
  if (box.dims() != m) throw Error(ErrorCode::length_mismatch, "box dimension must equal m");
  const std::int64_t b = p.b();
  std::vector<IntTuple> out;
  for (const auto& rep : ms.region_reps) {
    // Translate rep + (-b*sum d, b*d_2, ..., b*d_m) lands in the box iff
    // each d_j and the sum of d respect the bounds below.
    std::vector<std::int64_t> lo(m - 1), hi(m - 1);
    for (std::size_t j = 1; j < m; ++j) {
      lo[j - 1] = checked::ceil_div(checked::sub(box.lo[j], rep[j]), b);
      hi[j - 1] = checked::floor_div(checked::sub(box.hi[j], rep[j]), b);
    }
    const std::int64_t sum_lo = checked::ceil_div(checked::sub(rep[0], box.hi[0]), b);
    const std::int64_t sum_hi = checked::floor_div(checked::sub(rep[0], box.lo[0]), b);
    detail::for_each_step_vector(lo, hi, sum_lo, sum_hi, [&](const std::vector<std::int64_t>& d) {
      out.push_back(rep + theta_element(p, d));
    });
  }
  sort_unique(out);
  return out;
}

std::vector<IntTuple> lambda_nonneg(const CurveParams& params, bool include_zero_family) {
  require_multipoint(params);
  const std::int64_t a = params.a(), b = params.b();
  const std::size_t m = params.m();
  std::vector<IntTuple> out;
  auto emit_family = [&](std::int64_t first, std::int64_t level) {
    if (first < 0) return;
    // d_j >= 0 with first - b*sum(d) >= 0.
    std::vector<std::int64_t> lo(m - 1, 0), hi(m - 1, first / b);
    detail::for_each_step_vector(lo, hi, 0, first / b, [&](const std::vector<std::int64_t>& d) {
      out.push_back(level_tuple(m, first, level) + theta_element(params, d));
    });
  };
  for (std::int64_t i = 1; i < b; ++i) emit_family(a * (b - i) - b, i);
  if (include_zero_family) {
    emit_family(b * (static_cast<std::int64_t>(m) - 2), 0);
  }
  sort_unique(out);
  return out;
}

}  // namespace wsgap
