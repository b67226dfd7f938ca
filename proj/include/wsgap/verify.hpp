#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsgap/lattice.hpp"

namespace wsgap {

enum class FixtureKind {
  relative_maximals_positive,  // relative maximals in [1, 2g-1]^m
  pure_gaps,
  nabla_bar,    // nabla-bar(anchor) restricted to N_0^m
  sigma_pairs,  // Gamma(Q_1, Q_2) as 2-tuples
};

const char* to_string(FixtureKind kind) noexcept;

struct Fixture {
  std::string name;
  CurveParams params;
  FixtureKind kind;
  std::optional<IntTuple> anchor;
  std::vector<IntTuple> expected;  // sorted, duplicate-free
  std::string source;
};

// Worked examples for the Hermitian curve over F_16 and the norm-trace curve
// over F_8, plus the two-point sigma table of <4, 5>.
std::vector<Fixture> builtin_fixtures();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<IntTuple> missing;     // expected but not computed
  std::vector<IntTuple> unexpected;  // computed but not expected
  double wall_ms = 0.0;
};

struct ConformanceReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  double wall_ms = 0.0;

  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
  const CheckResult* find(std::string_view name) const noexcept;
};

ConformanceReport run_fixtures(std::span<const Fixture> fixtures, unsigned threads = 0);
ConformanceReport run_fixtures(unsigned threads = 0);

struct SweepConfig {
  std::int64_t max_a = 5;
  std::int64_t max_b = 9;
  std::int64_t max_m = 4;
  std::size_t trials = 1000;  // random oracle trials per parameter triple
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

// Runs every cross-method and oracle invariant over all coprime (a, b) with
// 2 <= a <= max_a, 2 <= b <= max_b and 2 <= m <= min(max_m, a + 1).
// Non-coprime pairs are skipped and listed in the notes.
ConformanceReport run_property_sweep(const SweepConfig& config = {});

// Formula-generated maximal elements in [-(b+1), 2g]^m must pass the
// definition-level classification; `sample_size` random members outside the
// formula families must fail it.
ConformanceReport check_definition_level(const CurveParams& params, std::size_t sample_size,
                                         std::uint64_t seed = 7);

}  // namespace wsgap
