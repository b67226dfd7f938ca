#include "wsgap/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <vector>

namespace wsgap::kernels {

namespace {

// Exact int64 <-> double conversion for |x| < 2^51 via the 2^52 + 2^51 bias.
constexpr double kBias = 6755399441055744.0;
constexpr std::int64_t kBiasBits = 0x4338000000000000;

inline __m256d to_double(__m256i x) {
  const __m256i biased = _mm256_add_epi64(x, _mm256_set1_epi64x(kBiasBits));
  return _mm256_sub_pd(_mm256_castsi256_pd(biased), _mm256_set1_pd(kBias));
}

inline __m256i to_int(__m256d x) {
  const __m256d biased = _mm256_add_pd(x, _mm256_set1_pd(kBias));
  return _mm256_sub_epi64(_mm256_castpd_si256(biased), _mm256_set1_epi64x(kBiasBits));
}

}  // namespace

void coordinate_maxima_avx2(const RepTable& reps, std::size_t m, std::size_t count,
                            std::span<const std::int64_t> betas, std::span<std::int64_t> out) {
  constexpr std::size_t kLanes = 4;
  const std::size_t full = count - count % kLanes;
  const __m256d bvec = _mm256_set1_pd(static_cast<double>(reps.b));
  const __m256d neg_inf = _mm256_set1_pd(-__builtin_inf());

  struct alignas(32) Lane4 {
    __m256d v;
  };
  std::vector<Lane4> beta_buf(m), acc_buf(m), upper_buf(m);
  auto beta = [&](std::size_t k) -> __m256d& { return beta_buf[k].v; };
  auto acc = [&](std::size_t k) -> __m256d& { return acc_buf[k].v; };
  auto upper = [&](std::size_t k) -> __m256d& { return upper_buf[k].v; };
  for (std::size_t lane = 0; lane < full; lane += kLanes) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto* src = reinterpret_cast<const __m256i*>(betas.data() + k * count + lane);
      beta(k) = to_double(_mm256_loadu_si256(src));
      acc(k) = neg_inf;
    }
    for (std::size_t r = 0; r < reps.first.size(); ++r) {
      const __m256d first = _mm256_set1_pd(static_cast<double>(reps.first[r]));
      const __m256d level = _mm256_set1_pd(static_cast<double>(reps.level[r]));
      // Quotients of exact integers below 2^53 never round onto an integer,
      // so floor/ceil of the rounded quotient are exact.
      const __m256d need = _mm256_ceil_pd(_mm256_div_pd(_mm256_sub_pd(first, beta(0)), bvec));
      __m256d room = _mm256_setzero_pd();
      for (std::size_t k = 1; k < m; ++k) {
        upper(k) = _mm256_floor_pd(_mm256_div_pd(_mm256_sub_pd(beta(k), level), bvec));
        room = _mm256_add_pd(room, upper(k));
      }
      const __m256d ok = _mm256_cmp_pd(room, need, _CMP_GE_OQ);
      const __m256d cand0 = _mm256_sub_pd(first, _mm256_mul_pd(bvec, need));
      acc(0) = _mm256_blendv_pd(acc(0), _mm256_max_pd(acc(0), cand0), ok);
      for (std::size_t k = 1; k < m; ++k) {
        const __m256d cand = _mm256_add_pd(level, _mm256_mul_pd(bvec, upper(k)));
        acc(k) = _mm256_blendv_pd(acc(k), _mm256_max_pd(acc(k), cand), ok);
      }
    }
    const __m256i absent = _mm256_set1_epi64x(kAbsent);
    for (std::size_t k = 0; k < m; ++k) {
      const __m256d missing = _mm256_cmp_pd(acc(k), neg_inf, _CMP_EQ_OQ);
      const __m256d safe = _mm256_blendv_pd(acc(k), _mm256_setzero_pd(), missing);
      const __m256i v = _mm256_castpd_si256(_mm256_blendv_pd(
          _mm256_castsi256_pd(to_int(safe)), _mm256_castsi256_pd(absent), missing));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k * count + lane), v);
    }
  }

  if (full == count) return;
  // Tail lanes through the scalar reference, repacked as a small batch.
  const std::size_t rest = count - full;
  std::vector<std::int64_t> tail_in(m * rest), tail_out(m * rest);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < rest; ++l) tail_in[k * rest + l] = betas[k * count + full + l];
  }
  coordinate_maxima_scalar(reps, m, rest, tail_in, tail_out);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < rest; ++l) out[k * count + full + l] = tail_out[k * rest + l];
  }
}

}  // namespace wsgap::kernels

#else

#include <stdexcept>

namespace wsgap::kernels {

void coordinate_maxima_avx2(const RepTable&, std::size_t, std::size_t,
                            std::span<const std::int64_t>, std::span<std::int64_t>) {
  throw std::logic_error("AVX2 kernel not compiled for this target");
}

}  // namespace wsgap::kernels

#endif
