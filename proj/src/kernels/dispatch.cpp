#include <cstdlib>
#include <string_view>

#include "wsgap/error.hpp"
#include "wsgap/kernels.hpp"
#include "wsgap/maximals.hpp"

namespace wsgap::kernels {

RepTable make_rep_table(const CurveParams& params) {
  const MaximalSet ms = absolute_maximals_region(params);
  RepTable table;
  table.b = params.b();
  for (const auto& rep : ms.region_reps) {
    table.first.push_back(rep[0]);
    table.level.push_back(rep[1]);
  }
  return table;
}

const char* to_string(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) && defined(WSGAP_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa preferred_isa() noexcept {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("WSGAP_KERNEL")) {
      const std::string_view v(env);
      if (v == "scalar") return Isa::scalar;
      if (v == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
    }
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

namespace {

bool within_simd_range(std::span<const std::int64_t> betas) {
  for (auto v : betas) {
    if (v >= kSimdMagnitudeLimit || v <= -kSimdMagnitudeLimit) return false;
  }
  return true;
}

}  // namespace

void coordinate_maxima(const RepTable& reps, std::size_t m, std::size_t count,
                       std::span<const std::int64_t> betas, std::span<std::int64_t> out, Isa isa) {
  if (betas.size() != m * count || out.size() != m * count) {
    throw Error(ErrorCode::length_mismatch, "batch buffers must hold m * count values");
  }
  if (isa == Isa::avx2 && isa_available(Isa::avx2) && within_simd_range(betas)) {
    coordinate_maxima_avx2(reps, m, count, betas, out);
    return;
  }
  coordinate_maxima_scalar(reps, m, count, betas, out);
}

std::vector<std::int64_t> coordinate_maxima(const RepTable& reps, const IntTuple& beta) {
  std::vector<std::int64_t> out(beta.size());
  coordinate_maxima_scalar(reps, beta.size(), 1, beta.coords(), out);
  return out;
}

}  // namespace wsgap::kernels
