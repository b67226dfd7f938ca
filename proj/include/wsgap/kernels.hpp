#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "wsgap/lattice.hpp"

// Batched per-coordinate maxima over the absolute maximal elements below a
// tuple. For a tuple beta this is
//
//   pcm(beta)_k = max { gamma_k : gamma absolute maximal, gamma <= beta },
//
// the quantity that decides membership (pcm == beta) and the dimension drops
// of L(D_beta). Each region generator (first, level, ..., level) contributes
// in closed form: with U_j = floor((beta_j - level) / b) and
// L = ceil((first - beta_1) / b), some translate lies below beta iff
// sum_j U_j >= L, and then the largest reachable coordinates are
// first - b*L and level + b*U_j.
namespace wsgap::kernels {

inline constexpr std::int64_t kAbsent = std::numeric_limits<std::int64_t>::min();

// Coordinates whose magnitude exceeds this go to the scalar path.
inline constexpr std::int64_t kSimdMagnitudeLimit = std::int64_t{1} << 48;

struct RepTable {
  std::int64_t b = 0;
  std::vector<std::int64_t> first;  // coordinate 1 of each region generator
  std::vector<std::int64_t> level;  // common value of coordinates 2..m
};

// Absolute-maximal region generators of the curve (m >= 2).
RepTable make_rep_table(const CurveParams& params);

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;

// Best available ISA, unless WSGAP_KERNEL=scalar|avx2 asks otherwise.
Isa preferred_isa() noexcept;

// Structure-of-arrays batch: coordinate k of lane l lives at
// betas[k * count + l]; `out` uses the same layout and receives kAbsent for
// coordinates with no absolute maximal below the tuple.
void coordinate_maxima_scalar(const RepTable& reps, std::size_t m, std::size_t count,
                              std::span<const std::int64_t> betas, std::span<std::int64_t> out);

// Requires isa_available(Isa::avx2) and every |beta_k| < kSimdMagnitudeLimit.
void coordinate_maxima_avx2(const RepTable& reps, std::size_t m, std::size_t count,
                            std::span<const std::int64_t> betas, std::span<std::int64_t> out);

// Dispatching entry point; falls back to scalar when the batch is out of the
// SIMD range or the ISA is unavailable.
void coordinate_maxima(const RepTable& reps, std::size_t m, std::size_t count,
                       std::span<const std::int64_t> betas, std::span<std::int64_t> out,
                       Isa isa = preferred_isa());

// Single-tuple convenience over the scalar kernel.
std::vector<std::int64_t> coordinate_maxima(const RepTable& reps, const IntTuple& beta);

}  // namespace wsgap::kernels
