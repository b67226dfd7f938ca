// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "wsgap/gaps.hpp"
#include "wsgap/maximals.hpp"
#include "wsgap/verify.hpp"

using namespace wsgap;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<IntTuple> sorted(std::vector<IntTuple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<IntTuple> kHermitianRelmax = sorted({{1, 1, 11}, {1, 6, 6}, {1, 11, 1}, {2, 2, 7}, {2, 7, 2},
                                                       {3, 3, 3}, {6, 1, 6}, {6, 6, 1}, {7, 2, 2}, {11, 1, 1}});
const std::vector<IntTuple> kHermitianPure =
    sorted({{1, 1, 1}, {2, 1, 1}, {1, 1, 2}, {1, 2, 1}, {3, 1, 1}, {1, 1, 3}, {1, 3, 1}, {2, 1, 2},
            {2, 2, 1}, {1, 2, 2}, {3, 1, 2}, {2, 1, 3}, {3, 2, 1}, {1, 2, 3}, {2, 3, 1}, {1, 3, 2}});
const std::vector<IntTuple> kNormTraceRelmax =
    sorted({{17, 1, 1}, {10, 1, 8}, {3, 1, 15}, {13, 2, 2}, {6, 2, 9}, {9, 3, 3}, {2, 3, 10},
            {5, 4, 4}, {1, 5, 5}, {10, 8, 1}, {3, 8, 8}, {6, 9, 2}, {2, 10, 3}, {3, 15, 1}});
const std::vector<IntTuple> kNormTracePure = sorted({
    {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 3, 1},
    {1, 3, 2}, {1, 3, 3}, {1, 3, 4}, {1, 4, 1}, {1, 4, 2}, {1, 4, 3}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3},
    {2, 1, 4}, {2, 1, 8}, {2, 1, 9}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 8}, {2, 3, 1},
    {2, 3, 2}, {2, 4, 1}, {2, 4, 2}, {2, 8, 1}, {2, 8, 2}, {2, 9, 1}, {3, 1, 1}, {3, 1, 2}, {3, 1, 3},
    {3, 1, 4}, {3, 2, 1}, {3, 2, 2}, {3, 2, 3}, {3, 2, 4}, {3, 3, 1}, {3, 3, 2}, {3, 4, 1}, {3, 4, 2},
    {5, 1, 1}, {5, 1, 2}, {5, 1, 3}, {5, 2, 1}, {5, 2, 2}, {5, 2, 3}, {5, 3, 1}, {5, 3, 2}, {6, 1, 1},
    {6, 1, 2}, {6, 1, 3}, {6, 2, 1}, {6, 3, 1}, {9, 1, 1}, {9, 1, 2}, {9, 2, 1},
});

std::vector<IntTuple> positive_relmax(const CurveParams& p) {
  return expand_in_box(relative_maximals_region(p),
                       Box{IntTuple(p.m(), 1), IntTuple(p.m(), 2 * p.genus() - 1)});
}

std::vector<CurveParams> swept_params() {
  std::vector<CurveParams> out;
  for (std::int64_t a = 2; a <= 5; ++a) {
    for (std::int64_t b = 2; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t m = 2; m <= std::min<std::int64_t>(4, a + 1); ++m) out.push_back(new_curve_params(a, b, m));
    }
  }
  return out;
}

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0 && ms > limit_ms) {
    o.ok = false;
    o.detail += " (over time limit " + std::to_string(static_cast<int>(limit_ms)) + " ms)";
  }
  if (!o.ok) ++failures;
  std::printf("%s %s: %s | %s | %.1f ms\n", id, o.ok ? "PASS" : "FAIL", title, o.detail.c_str(), ms);
  std::fflush(stdout);
}

bool passed(const ConformanceReport& r, const char* name, std::string& detail) {
  const auto* c = r.find(name);
  if (!c) {
    detail += std::string(" ") + name + "=missing";
    return false;
  }
  if (!c->passed) detail += std::string(" ") + name + "=FAIL(" + c->detail + ")";
  return c->passed;
}

}  // namespace

int main() {
  criterion("AC1", "relative maximals, Hermitian q=4, three points", 1000, [] {
    const auto got = positive_relmax(new_curve_params(4, 5, 3, 16));
    return Outcome{got == kHermitianRelmax, std::to_string(got.size()) + " computed, 10 expected"};
  });

  criterion("AC2", "pure gaps, Hermitian q=4, both methods", 5000, [] {
    const auto p = new_curve_params(4, 5, 3, 16);
    const auto x = pure_gaps(p, PureGapMethod::intersection).pure_gaps;
    const auto y = pure_gaps(p, PureGapMethod::profile).pure_gaps;
    return Outcome{x == kHermitianPure && y == kHermitianPure,
                   "intersection " + std::to_string(x.size()) + ", profile " + std::to_string(y.size()) +
                       ", 16 expected"};
  });

  criterion("AC3", "relative maximals and pure gaps, norm-trace l=2 r=3", 10000, [] {
    const auto p = new_curve_params(4, 7, 3, 8);
    const auto rel = positive_relmax(p);
    const auto x = pure_gaps(p, PureGapMethod::intersection).pure_gaps;
    const auto y = pure_gaps(p, PureGapMethod::profile).pure_gaps;
    return Outcome{rel == kNormTraceRelmax && x == kNormTracePure && y == kNormTracePure,
                   std::to_string(rel.size()) + "/14 relative maximals, pure gaps " + std::to_string(x.size()) +
                       " (intersection) and " + std::to_string(y.size()) + " (profile) against the " +
                       std::to_string(kNormTracePure.size()) + " expected triples"};
  });

  criterion("AC4", "ten nabla-bar sets of the Hermitian example", 0, [] {
    const auto report = run_fixtures();
    int count = 0;
    bool ok = true;
    std::string bad;
    for (const auto& c : report.checks) {
      if (c.name.find("nabla-gamma") == std::string::npos) continue;
      ++count;
      if (!c.passed) {
        ok = false;
        bad += " " + c.name;
      }
    }
    return Outcome{ok && count == 10, std::to_string(count) + " sets checked" + (bad.empty() ? "" : ", failed:" + bad)};
  });

  criterion("AC5", "method equivalence over a<=5, b<=9, m<=min(4,a+1)", 60000, [] {
    std::size_t discrepancies = 0, triples = 0;
    std::string first;
    for (const auto& p : swept_params()) {
      ++triples;
      const auto g1 = gaps(p, GapMethod::union_nabla).gaps;
      const auto g2 = gaps(p, GapMethod::explicit_s).gaps;
      const auto g3 = gaps(p, GapMethod::complement).gaps;
      const auto p1 = pure_gaps(p, PureGapMethod::intersection).pure_gaps;
      const auto p2 = pure_gaps(p, PureGapMethod::profile).pure_gaps;
      if (g1 != g3 || g2 != g3 || p1 != p2) {
        ++discrepancies;
        if (first.empty()) first = " first at a=" + std::to_string(p.a()) + " b=" + std::to_string(p.b()) + " m=" + std::to_string(p.m());
      }
    }
    return Outcome{discrepancies == 0 && triples == 56,
                   std::to_string(triples) + " triples, " + std::to_string(discrepancies) + " discrepancies" + first};
  });

  ConformanceReport sweep;
  const auto sweep_start = Clock::now();
  try {
    sweep = run_property_sweep(SweepConfig{});
  } catch (const std::exception& e) {
    sweep.checks.push_back(CheckResult{"sweep", false, e.what(), {}, {}, 0});
  }
  const double sweep_ms = std::chrono::duration<double, std::milli>(Clock::now() - sweep_start).count();
  std::printf("(property sweep: %zu checks, %.1f ms)\n", sweep.checks.size(), sweep_ms);

  criterion("AC6", "oracle invariants, 1000 random trials per triple", 0, [&] {
    std::string d;
    bool ok = passed(sweep, "no-exceptions", d);
    for (const char* n : {"theta-invariance", "two-g-rule", "lub-closure", "dim-unit-increments",
                          "riemann-roch-regime", "membership-iff-unit-increments", "kernel-equivalence"}) {
      ok = passed(sweep, n, d) && ok;
    }
    return Outcome{ok, ok ? "zero violations" : d};
  });

  criterion("AC7", "genus counts and two-point sigma", 0, [&] {
    std::string d;
    bool ok = true;
    for (const char* n : {"axis-gap-count-equals-genus", "axis-gaps-equal-numerical-semigroup",
                          "axis-gaps-agree-across-points", "sigma-bijection", "sigma-pairs-equal-genus",
                          "pure-gap-count-equals-inversions", "pair-formulas-match", "sigma-min-definition"}) {
      ok = passed(sweep, n, d) && ok;
    }
    const auto p = new_curve_params(4, 5, 2);
    const auto inv = sigma_pair(p).inversions.size();
    const auto g0 = pure_gaps(p, PureGapMethod::profile).pure_gaps.size();
    const auto g0i = pure_gaps(p, PureGapMethod::intersection).pure_gaps.size();
    ok = ok && inv == 14 && g0 == 14 && g0i == 14;
    return Outcome{ok, "|R(sigma)| = " + std::to_string(inv) + ", |G_0| = " + std::to_string(g0) + "/" +
                           std::to_string(g0i) + " at (4,5,2)" + d};
  });

  criterion("AC8", "formula and definition-level classification agree", 0, [&] {
    std::string d;
    bool ok = passed(sweep, "formula-definition-agreement", d);
    ok = passed(sweep, "definition-level-classification", d) && ok;
    std::size_t confirmed = 0;
    for (auto [a, b, m] : {std::tuple{4, 5, 3}, {4, 5, 2}, {4, 7, 3}}) {
      const auto r = check_definition_level(new_curve_params(a, b, m), 50);
      for (const auto& c : r.checks) {
        if (!c.passed) d += " " + c.name + "=FAIL(" + c.detail + ")";
        ok = ok && c.passed;
      }
      ++confirmed;
    }
    return Outcome{ok, std::to_string(confirmed) + " worked parameter sets plus full sweep" + d};
  });

  criterion("AC9", "pure gaps lie in A* x A^(m-1)", 0, [&] {
    std::string d;
    const bool ok = passed(sweep, "pure-gaps-in-candidate-superset", d);
    return Outcome{ok, ok ? "all swept parameters" : d};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
