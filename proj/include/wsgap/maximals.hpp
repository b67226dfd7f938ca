#pragma once

#include <vector>

#include "wsgap/lattice.hpp"

namespace wsgap {

enum class MaximalKind { absolute, relative };

const char* to_string(MaximalKind kind) noexcept;

/// Region generators of an infinite family of maximal elements; the full
/// family is region_reps + Theta.
struct MaximalSet {
  MaximalKind kind;
  std::vector<IntTuple> region_reps;  // sorted, inside the region
  ThetaBasis theta;
  CurveParams params;
};

// (a(b-i) - b(m-1), i, ..., i) for i = 1..b-1, plus the zero tuple.
MaximalSet absolute_maximals_region(const CurveParams& params);

// (b(m-2), 0, ..., 0) and (a(b-i) - b, i, ..., i) for i = 1..b-1.
MaximalSet relative_maximals_region(const CurveParams& params);

// Every element of region_reps + Theta inside the box, sorted.
std::vector<IntTuple> expand_in_box(const MaximalSet& ms, const Box& box);

// Nonnegative relative maximals. The default follows the closed form with
// i = 1..b-1 only; `include_zero_family` adds the nonnegative translates of
// (b(m-2), 0, ..., 0).
std::vector<IntTuple> lambda_nonneg(const CurveParams& params, bool include_zero_family = false);

}  // namespace wsgap
