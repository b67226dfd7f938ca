#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsgap/kernels.hpp"
#include "wsgap/lattice.hpp"

namespace wsgap {

// Gap set of the numerical semigroup <a, b> (ascending), i.e. the gaps at a
// single point.
std::vector<std::int64_t> numerical_semigroup_gaps(std::int64_t a, std::int64_t b);

enum class GapMethod { union_nabla, explicit_s, complement };
enum class PureGapMethod { intersection, profile };

const char* to_string(GapMethod method) noexcept;
const char* to_string(PureGapMethod method) noexcept;
std::optional<GapMethod> parse_gap_method(std::string_view name) noexcept;
std::optional<PureGapMethod> parse_pure_gap_method(std::string_view name) noexcept;

struct SweepOptions {
  unsigned threads = 0;  // 0: WSGAP_THREADS or hardware concurrency
  bool include_zero_family = false;
  std::uint64_t max_cells = 100'000'000;
  bool force = false;
  kernels::Isa isa = kernels::preferred_isa();
};

struct GapStats {
  std::size_t gap_count = 0;
  std::size_t pure_gap_count = 0;
  Box bounding_box;
};

struct GapReport {
  CurveParams params;
  std::vector<IntTuple> gaps;       // sorted
  std::vector<IntTuple> pure_gaps;  // sorted; empty for gaps()
  std::string method;
  GapStats stats;
};

// Every alpha >= 0 with sum(alpha) <= 2g - 1 lies in this box.
Box gap_bounding_box(const CurveParams& params);

// m = 1 always yields the gaps of <a, b>.
GapReport gaps(const CurveParams& params, GapMethod method, const SweepOptions& options = {});

// The report also carries the gap set from the companion method
// (profile -> complement sweep, intersection -> union_nabla).
GapReport pure_gaps(const CurveParams& params, PureGapMethod method,
                    const SweepOptions& options = {});

// nabla-bar(beta*) restricted to nonnegative tuples, sorted.
std::vector<IntTuple> nabla_bar_nonneg(const CurveParams& params, const IntTuple& beta_star);

// (beta^1, ..., beta^m), each from the nonnegative relative maximals and
// lexicographically first, with alpha in the intersection of
// nabla-bar_i(beta^i). Absent when alpha is not a pure gap.
std::optional<std::vector<IntTuple>> pure_gap_witness(const CurveParams& params,
                                                      const IntTuple& alpha);

struct CandidateSuperset {
  std::vector<std::int64_t> a_star;  // first-coordinate candidates
  std::vector<std::int64_t> a;       // candidates for coordinates 2..m
};

CandidateSuperset candidate_superset(const CurveParams& params);

/// Two-point data: sigma pairs each gap l_i at P_1 with the gap
/// l'_{sigma(i)} at P_2. Indices are 1-based as in the usual notation.
struct SigmaTable {
  std::vector<std::int64_t> gaps_q1;
  std::vector<std::int64_t> gaps_q2;
  std::vector<std::size_t> sigma;  // sigma[i-1] = sigma(i)
  std::vector<std::pair<std::int64_t, std::int64_t>> gamma_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> inversions;
};

// Requires m = 2. sigma is read off the nonnegative relative maximals.
SigmaTable sigma_pair(const CurveParams& params);

// sigma(l) = min { beta : (l, beta) in H } for each gap l at P_1, found by
// membership sweeps; returns l'_{sigma(i)} for i = 1..g.
std::vector<std::int64_t> sigma_by_min_definition(const CurveParams& params);

// Union over i of nabla-bar(l_i, l'_{sigma(i)}) in N_0^2.
std::vector<IntTuple> pair_gaps(const SigmaTable& table);

// Union over inversions (i, j) of nabla-bar_1(pair i) meet nabla-bar_2(pair j).
std::vector<IntTuple> pair_pure_gaps(const SigmaTable& table);

}  // namespace wsgap
