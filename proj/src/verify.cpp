#include "wsgap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "wsgap/error.hpp"
#include "wsgap/gaps.hpp"
#include "wsgap/maximals.hpp"
#include "wsgap/oracle.hpp"
#include "wsgap/parallel.hpp"

namespace wsgap {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe(const CurveParams& p) {
  std::ostringstream os;
  os << "(a=" << p.a() << ",b=" << p.b() << ",m=" << p.m() << ")";
  return os.str();
}

void diff_sets(const std::vector<IntTuple>& expected, const std::vector<IntTuple>& computed,
               CheckResult& out) {
  std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                      std::back_inserter(out.missing));
  std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                      std::back_inserter(out.unexpected));
}

CheckResult evaluate(const Fixture& fx, unsigned threads) {
  const auto start = Clock::now();
  CheckResult r;
  r.name = fx.name;

  std::vector<IntTuple> computed;
  std::string extra;
  switch (fx.kind) {
    case FixtureKind::relative_maximals_positive: {
      const auto top = std::max<std::int64_t>(1, 2 * fx.params.genus() - 1);
      const Box box{IntTuple(fx.params.m(), 1), IntTuple(fx.params.m(), top)};
      computed = expand_in_box(relative_maximals_region(fx.params), box);
      break;
    }
    case FixtureKind::pure_gaps: {
      SweepOptions opts;
      opts.threads = threads;
      computed = pure_gaps(fx.params, PureGapMethod::profile, opts).pure_gaps;
      const auto other = pure_gaps(fx.params, PureGapMethod::intersection, opts).pure_gaps;
      if (other != computed) extra = "; intersection and profile methods disagree";
      break;
    }
    case FixtureKind::nabla_bar:
      computed = nabla_bar_nonneg(fx.params, fx.anchor.value_or(IntTuple(fx.params.m())));
      break;
    case FixtureKind::sigma_pairs:
      for (const auto& [x, y] : sigma_pair(fx.params).gamma_pairs) computed.push_back(IntTuple{x, y});
      std::sort(computed.begin(), computed.end());
      break;
  }

  diff_sets(fx.expected, computed, r);
  const std::size_t matched = fx.expected.size() - r.missing.size();
  r.passed = r.missing.empty() && r.unexpected.empty() && extra.empty();
  r.detail = std::to_string(matched) + "/" + std::to_string(fx.expected.size()) +
             " tuples matched, " + std::to_string(r.unexpected.size()) + " unexpected" + extra;
  r.wall_ms = ms_since(start);
  return r;
}

// Collects violations for one parameter triple; names map to report checks.
class CellLog {
 public:
  void check(const std::string& name, bool ok, const std::function<std::string()>& why) {
    auto& entry = entries_[name];
    if (!ok && entry.empty()) entry = why();
  }
  void touch(const std::string& name) { entries_[name]; }
  void add_time(const std::string& name, double ms) { times_[name] += ms; }

  const std::map<std::string, std::string>& entries() const { return entries_; }
  const std::map<std::string, double>& times() const { return times_; }

 private:
  std::map<std::string, std::string> entries_;  // empty string: no violation
  std::map<std::string, double> times_;
};

class Timed {
 public:
  Timed(CellLog& log, std::string name) : log_(log), name_(std::move(name)) {}
  ~Timed() { log_.add_time(name_, ms_since(start_)); }
  Timed(const Timed&) = delete;
  Timed& operator=(const Timed&) = delete;

 private:
  CellLog& log_;
  std::string name_;
  Clock::time_point start_ = Clock::now();
};

std::string list_str(const std::vector<IntTuple>& ts, std::size_t limit = 4) {
  std::string s;
  for (std::size_t i = 0; i < ts.size() && i < limit; ++i) s += (i ? " " : "") + ts[i].to_string();
  if (ts.size() > limit) s += " ...";
  return s;
}

std::string set_mismatch(const std::vector<IntTuple>& x, const std::vector<IntTuple>& y) {
  CheckResult tmp;
  diff_sets(x, y, tmp);
  return "only in first: [" + list_str(tmp.missing) + "], only in second: [" +
         list_str(tmp.unexpected) + "]";
}

bool subset_of(const std::vector<IntTuple>& small, const std::vector<IntTuple>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

IntTuple random_tuple(std::mt19937_64& rng, std::size_t m, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  IntTuple t(m);
  for (auto& v : t) v = dist(rng);
  return t;
}

void check_gap_sets(const CurveParams& p, unsigned threads, CellLog& log) {
  const std::size_t m = p.m();
  SweepOptions opts;
  opts.threads = threads;
  SweepOptions with_zero = opts;
  with_zero.include_zero_family = true;

  std::vector<IntTuple> g_union, g_s, g_comp, pg_inter, pg_profile;
  {
    Timed t(log, "gap-methods-agree");
    g_union = gaps(p, GapMethod::union_nabla, opts).gaps;
    g_s = gaps(p, GapMethod::explicit_s, opts).gaps;
    g_comp = gaps(p, GapMethod::complement, opts).gaps;
    log.check("gap-methods-agree", g_union == g_s && g_s == g_comp, [&] {
      return describe(p) + " union_nabla vs complement: " + set_mismatch(g_union, g_comp) +
             "; explicit_S vs complement: " + set_mismatch(g_s, g_comp);
    });
  }
  {
    Timed t(log, "pure-gap-methods-agree");
    const auto inter = pure_gaps(p, PureGapMethod::intersection, opts);
    const auto prof = pure_gaps(p, PureGapMethod::profile, opts);
    pg_inter = inter.pure_gaps;
    pg_profile = prof.pure_gaps;
    log.check("pure-gap-methods-agree", pg_inter == pg_profile && prof.gaps == g_comp, [&] {
      return describe(p) + " intersection vs profile: " + set_mismatch(pg_inter, pg_profile);
    });
  }
  {
    Timed t(log, "zero-family-indifference");
    const auto gz = gaps(p, GapMethod::union_nabla, with_zero).gaps;
    const auto pz = pure_gaps(p, PureGapMethod::intersection, with_zero).pure_gaps;
    log.check("zero-family-indifference", gz == g_union && pz == pg_inter, [&] {
      return describe(p) + " gaps: " + set_mismatch(g_union, gz) +
             "; pure gaps: " + set_mismatch(pg_inter, pz);
    });
  }

  const std::int64_t g = p.genus();
  log.check("gap-containment", subset_of(pg_profile, g_comp), [&] {
    return describe(p) + " pure gaps outside gaps: " + set_mismatch(pg_profile, g_comp);
  });
  for (const auto& t : g_comp) {
    const bool ok = std::all_of(t.begin(), t.end(), [](std::int64_t v) { return v >= 0; }) &&
                    t.sum() <= 2 * g - 1;
    log.check("gap-containment", ok, [&] { return describe(p) + " gap " + t.to_string() + " outside the box"; });
  }

  // Single-point projections. Coordinate 0 always carries <a, b>; points
  // 2..m share one gap sequence, which is <a, b> again when b = a + 1.
  const auto ns = numerical_semigroup_gaps(p.a(), p.b());
  std::vector<std::int64_t> second_axis;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::int64_t> axis;
    for (const auto& t : g_comp) {
      bool on_axis = true;
      for (std::size_t j = 0; j < m; ++j) on_axis = on_axis && (j == k || t[j] == 0);
      if (on_axis) axis.push_back(t[k]);
    }
    if (k == 0 || p.b() == p.a() + 1) {
      log.check("axis-gaps-equal-numerical-semigroup", axis == ns, [&] {
        return describe(p) + " coordinate " + std::to_string(k) + " differs from gaps of <a,b>";
      });
    }
    if (k == 1) second_axis = axis;
    if (k >= 1) {
      log.check("axis-gaps-agree-across-points", axis == second_axis, [&] {
        return describe(p) + " coordinate " + std::to_string(k) + " differs from coordinate 1";
      });
    }
    log.check("axis-gap-count-equals-genus", static_cast<std::int64_t>(axis.size()) == g, [&] {
      return describe(p) + " coordinate " + std::to_string(k) + " has " +
             std::to_string(axis.size()) + " gaps, genus " + std::to_string(g);
    });
  }

  // Points 2..m play symmetric roles.
  {
    std::set<IntTuple> gs(g_comp.begin(), g_comp.end());
    for (std::size_t j = 1; j + 1 < m; ++j) {
      for (const auto& t : g_comp) {
        IntTuple s = t;
        std::swap(s[j], s[j + 1]);
        log.check("coordinate-symmetry", gs.count(s) == 1, [&] {
          return describe(p) + " " + t.to_string() + " is a gap but " + s.to_string() + " is not";
        });
      }
    }
    log.touch("coordinate-symmetry");
  }

  {
    Timed t(log, "pure-gap-witness");
    std::set<IntTuple> pure(pg_profile.begin(), pg_profile.end());
    for (const auto& alpha : pg_profile) {
      const auto w = pure_gap_witness(p, alpha);
      bool ok = w.has_value();
      for (std::size_t i = 0; ok && i < m; ++i) ok = (*w)[i][i] == alpha[i];
      log.check("pure-gap-witness", ok, [&] { return describe(p) + " no witness for " + alpha.to_string(); });
    }
    for (std::size_t i = 0; i < g_comp.size(); i += 7) {
      if (pure.count(g_comp[i])) continue;
      log.check("pure-gap-witness", !pure_gap_witness(p, g_comp[i]).has_value(), [&] {
        return describe(p) + " non-pure gap " + g_comp[i].to_string() + " has a witness";
      });
    }
  }

  {
    const auto sup = candidate_superset(p);
    for (const auto& alpha : pg_profile) {
      bool ok = std::binary_search(sup.a_star.begin(), sup.a_star.end(), alpha[0]);
      for (std::size_t k = 1; ok && k < m; ++k) ok = std::binary_search(sup.a.begin(), sup.a.end(), alpha[k]);
      log.check("pure-gaps-in-candidate-superset", ok, [&] {
        return describe(p) + " pure gap " + alpha.to_string() + " outside A* x A^(m-1)";
      });
    }
    log.touch("pure-gaps-in-candidate-superset");
  }

  if (m == 2) {
    Timed t(log, "sigma-bijection");
    const SigmaTable table = sigma_pair(p);  // throws on non-bijection
    std::vector<std::size_t> perm = table.sigma;
    std::sort(perm.begin(), perm.end());
    std::vector<std::size_t> iota(perm.size());
    std::iota(iota.begin(), iota.end(), std::size_t{1});
    log.check("sigma-bijection", perm == iota, [&] { return describe(p) + " sigma is not a permutation"; });
    log.check("sigma-pairs-equal-genus", static_cast<std::int64_t>(table.gamma_pairs.size()) == g,
              [&] { return describe(p) + " |Gamma| = " + std::to_string(table.gamma_pairs.size()); });
    log.check("pure-gap-count-equals-inversions", table.inversions.size() == pg_profile.size(), [&] {
      return describe(p) + " |R(sigma)| = " + std::to_string(table.inversions.size()) +
             ", |G_0| = " + std::to_string(pg_profile.size());
    });
    log.check("pair-formulas-match", pair_gaps(table) == g_comp && pair_pure_gaps(table) == pg_profile,
              [&] { return describe(p) + " pair formulas differ from the sweep"; });
    std::vector<std::int64_t> expected;
    for (std::size_t i = 0; i < table.sigma.size(); ++i) expected.push_back(table.gaps_q2[table.sigma[i] - 1]);
    log.check("sigma-min-definition", sigma_by_min_definition(p) == expected,
              [&] { return describe(p) + " min-definition sigma differs"; });
  }
}

void check_oracle(const CurveParams& p, std::size_t trials, std::mt19937_64& rng, CellLog& log) {
  const DimOracle oracle(p);
  const std::size_t m = p.m();
  const std::int64_t g = p.genus(), b = p.b();
  const std::int64_t lo = -2 * g - b, hi = 2 * g + b;

  {
    Timed t(log, "theta-invariance");
    std::uniform_int_distribution<std::int64_t> step(-3, 3);
    for (std::size_t n = 0; n < trials; ++n) {
      const IntTuple alpha = random_tuple(rng, m, lo, hi);
      std::vector<std::int64_t> steps(m - 1);
      for (auto& s : steps) s = step(rng);
      const IntTuple moved = alpha + theta_element(p, steps);
      log.check("theta-invariance", oracle.is_member(alpha) == oracle.is_member(moved), [&] {
        return describe(p) + " " + alpha.to_string() + " vs " + moved.to_string();
      });
      const auto red = reduce_to_region(p, alpha);
      log.check("theta-invariance",
                in_region(p, red.rep) && reduce_to_region(p, moved).rep == red.rep, [&] {
                  return describe(p) + " region reduction of " + alpha.to_string();
                });
    }
  }
  {
    Timed t(log, "two-g-rule");
    for (std::size_t n = 0; n < trials; ++n) {
      IntTuple alpha = random_tuple(rng, m, lo, hi);
      const std::int64_t s = alpha.sum();
      if (s < 2 * g) alpha[0] += 2 * g - s + static_cast<std::int64_t>(n % 3);
      log.check("two-g-rule", oracle.is_member(alpha),
                [&] { return describe(p) + " " + alpha.to_string() + " has degree >= 2g but is not a member"; });
    }
  }

  // Members for lub closure: draw until enough are found.
  {
    Timed t(log, "lub-closure");
    std::vector<IntTuple> members;
    for (std::size_t n = 0; n < 4 * trials && members.size() < 64; ++n) {
      IntTuple alpha = random_tuple(rng, m, -b, 2 * g);
      if (oracle.is_member(alpha)) members.push_back(std::move(alpha));
    }
    std::uniform_int_distribution<std::size_t> pick(0, members.empty() ? 0 : members.size() - 1);
    for (std::size_t n = 0; n < trials && !members.empty(); ++n) {
      const IntTuple pair[2] = {members[pick(rng)], members[pick(rng)]};
      const IntTuple l = lub(pair);
      log.check("lub-closure", oracle.is_member(l), [&] {
        return describe(p) + " lub(" + pair[0].to_string() + "," + pair[1].to_string() + ") = " +
               l.to_string() + " is not a member";
      });
    }
    log.touch("lub-closure");
  }
  {
    Timed t(log, "dim-unit-increments");
    for (std::size_t n = 0; n < trials; ++n) {
      const IntTuple alpha = random_tuple(rng, m, lo, hi);
      const std::int64_t d = oracle.dim_L(alpha);
      bool unit_all = true;
      for (std::size_t k = 0; k < m; ++k) {
        const std::int64_t inc = oracle.dim_L(alpha + unit(m, k)) - d;
        log.check("dim-unit-increments", inc == 0 || inc == 1, [&] {
          return describe(p) + " l(D+Q_" + std::to_string(k + 1) + ") - l(D) = " + std::to_string(inc) +
                 " at " + alpha.to_string();
        });
        unit_all = unit_all && d - oracle.dim_L(alpha - unit(m, k)) == 1;
      }
      log.check("membership-iff-unit-increments", oracle.is_member(alpha) == unit_all,
                [&] { return describe(p) + " " + alpha.to_string(); });
      const std::int64_t deg = alpha.sum();
      if (deg >= 2 * g - 1) {
        log.check("riemann-roch-regime", d == deg - g + 1, [&] {
          return describe(p) + " l(D) = " + std::to_string(d) + " at " + alpha.to_string();
        });
      }
      if (deg < 0) {
        log.check("riemann-roch-regime", d == 0,
                  [&] { return describe(p) + " negative degree with l(D) > 0 at " + alpha.to_string(); });
      }
    }
    log.touch("riemann-roch-regime");
  }
  {
    Timed t(log, "kernel-equivalence");
    const auto& reps = oracle.reps();
    const std::size_t count = std::max<std::size_t>(trials / 4, 8);
    std::vector<std::int64_t> betas(m * count), out_scalar(m * count), out_simd(m * count);
    std::vector<IntTuple> tuples;
    for (std::size_t l = 0; l < count; ++l) {
      tuples.push_back(random_tuple(rng, m, lo, hi));
      for (std::size_t k = 0; k < m; ++k) betas[k * count + l] = tuples.back()[k];
    }
    kernels::coordinate_maxima_scalar(reps, m, count, betas, out_scalar);
    kernels::coordinate_maxima(reps, m, count, betas, out_simd, kernels::Isa::avx2);
    log.check("kernel-equivalence", out_scalar == out_simd,
              [&] { return describe(p) + " scalar and SIMD maxima differ"; });
    for (std::size_t l = 0; l < count; l += 5) {
      const auto prof = oracle.local_absolute_maximals(tuples[l]);
      bool ok = true;
      for (std::size_t k = 0; k < m; ++k) {
        const std::int64_t want = prof.per_coord_max[k].value_or(kernels::kAbsent);
        ok = ok && out_scalar[k * count + l] == want;
      }
      log.check("kernel-equivalence", ok,
                [&] { return describe(p) + " kernel differs from enumeration at " + tuples[l].to_string(); });
    }
  }
}

void check_region_reps(const CurveParams& p, CellLog& log) {
  Timed t(log, "formula-definition-agreement");
  const DimOracle oracle(p);
  const bool m2 = p.m() == 2;
  const auto abs = absolute_maximals_region(p);
  const auto rel = relative_maximals_region(p);
  log.check("maximal-family-sizes",
            abs.region_reps.size() == static_cast<std::size_t>(p.b()) &&
                rel.region_reps.size() == static_cast<std::size_t>(p.b()),
            [&] { return describe(p) + " region families do not have b elements"; });
  for (const auto& r : abs.region_reps) {
    log.check("formula-definition-agreement",
              oracle.is_absolute_maximal(r) && oracle.is_relative_maximal(r) == m2,
              [&] { return describe(p) + " absolute generator " + r.to_string(); });
  }
  for (const auto& r : rel.region_reps) {
    log.check("formula-definition-agreement",
              oracle.is_relative_maximal(r) && oracle.is_absolute_maximal(r) == m2 &&
                  oracle.check_relmax_equivalence(r).agree(),
              [&] { return describe(p) + " relative generator " + r.to_string(); });
  }
}

struct CellResult {
  CellLog log;
  std::string error;
};

void merge(const CurveParams& p, const CellResult& cell,
           std::map<std::string, CheckResult>& checks, std::map<std::string, std::size_t>& counts) {
  for (const auto& [name, violation] : cell.log.entries()) {
    auto& c = checks[name];
    if (c.name.empty()) {
      c.name = name;
      c.passed = true;
    }
    ++counts[name];
    if (!violation.empty() && c.passed) {
      c.passed = false;
      c.detail = violation;
    }
  }
  for (const auto& [name, ms] : cell.log.times()) {
    auto& c = checks[name];
    if (c.name.empty()) {
      c.name = name;
      c.passed = true;
    }
    c.wall_ms += ms;
  }
  if (!cell.error.empty()) {
    auto& c = checks["no-exceptions"];
    if (c.passed) c.detail = describe(p) + " " + cell.error;
    c.passed = false;
  }
}

}  // namespace

bool ConformanceReport::all_passed() const noexcept { return failures() == 0; }

std::size_t ConformanceReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

const CheckResult* ConformanceReport::find(std::string_view name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ConformanceReport run_fixtures(std::span<const Fixture> fixtures, unsigned threads) {
  const auto start = Clock::now();
  ConformanceReport report;
  report.checks.resize(fixtures.size());
  // Each fixture is small; parallelism is across fixtures.
  parallel_for(fixtures.size(), resolve_threads(threads), [&](std::size_t i) {
    try {
      report.checks[i] = evaluate(fixtures[i], 1);
    } catch (const std::exception& e) {
      report.checks[i] = CheckResult{fixtures[i].name, false, e.what(), {}, {}, 0.0};
    }
  });
  report.wall_ms = ms_since(start);
  return report;
}

ConformanceReport run_fixtures(unsigned threads) {
  const auto corpus = builtin_fixtures();
  return run_fixtures(corpus, threads);
}

ConformanceReport run_property_sweep(const SweepConfig& config) {
  const auto start = Clock::now();
  ConformanceReport report;
  std::vector<CurveParams> cells;
  for (std::int64_t a = 2; a <= config.max_a; ++a) {
    for (std::int64_t b = 2; b <= config.max_b; ++b) {
      if (std::gcd(a, b) != 1) {
        report.notes.push_back("skipped non-coprime pair (a=" + std::to_string(a) +
                               ",b=" + std::to_string(b) + ")");
        continue;
      }
      for (std::int64_t m = 2; m <= std::min(config.max_m, a + 1); ++m) {
        cells.push_back(new_curve_params(a, b, m));
      }
    }
  }

  std::vector<CellResult> results(cells.size());
  // Cells run concurrently, each single-threaded internally.
  parallel_for(cells.size(), resolve_threads(config.threads), [&](std::size_t i) {
    const CurveParams& p = cells[i];
    std::mt19937_64 rng(config.seed ^ (static_cast<std::uint64_t>(p.a()) << 32) ^
                        (static_cast<std::uint64_t>(p.b()) << 16) ^ p.m());
    try {
      check_gap_sets(p, 1, results[i].log);
      check_oracle(p, config.trials, rng, results[i].log);
      check_region_reps(p, results[i].log);
      const auto t0 = Clock::now();
      const auto def = check_definition_level(p, 20, config.seed + i);
      for (const auto& c : def.checks) {
        results[i].log.check("definition-level-classification", c.passed,
                             [&] { return describe(p) + " " + c.name + ": " + c.detail; });
      }
      results[i].log.add_time("definition-level-classification", ms_since(t0));
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  });

  std::map<std::string, CheckResult> checks;
  std::map<std::string, std::size_t> counts;
  checks["no-exceptions"] = CheckResult{"no-exceptions", true, {}, {}, {}, 0.0};
  counts["no-exceptions"] = cells.size();
  for (std::size_t i = 0; i < cells.size(); ++i) merge(cells[i], results[i], checks, counts);
  for (auto& [name, c] : checks) {
    if (c.passed) c.detail = std::to_string(counts[name]) + " parameter triples, no violations";
    report.checks.push_back(std::move(c));
  }
  report.notes.push_back(std::to_string(cells.size()) + " parameter triples swept");
  report.wall_ms = ms_since(start);
  return report;
}

ConformanceReport check_definition_level(const CurveParams& params, std::size_t sample_size,
                                         std::uint64_t seed) {
  if (params.m() < 2) throw Error(ErrorCode::bad_point_count, "definition-level check requires m >= 2");
  const auto start = Clock::now();
  const DimOracle oracle(params);
  const std::size_t m = params.m();
  const bool m2 = m == 2;
  const std::int64_t b = params.b();
  const Box box{IntTuple(m, -(b + 1)), IntTuple(m, 2 * params.genus())};

  auto run = [&](const std::string& name, const std::function<void(CheckResult&)>& body) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.name = name;
    r.passed = true;
    body(r);
    r.wall_ms = ms_since(t0);
    return r;
  };

  const auto rel = expand_in_box(relative_maximals_region(params), box);
  const auto abs = expand_in_box(absolute_maximals_region(params), box);

  ConformanceReport report;
  report.checks.push_back(run("relative-maximals-by-definition", [&](CheckResult& r) {
    for (const auto& t : rel) {
      const bool ok = oracle.is_relative_maximal(t) && oracle.is_absolute_maximal(t) == m2 &&
                      oracle.check_relmax_equivalence(t).agree();
      if (!ok) r.unexpected.push_back(t);
    }
    r.passed = r.unexpected.empty();
    r.detail = std::to_string(rel.size() - r.unexpected.size()) + "/" + std::to_string(rel.size()) +
               " formula relative maximals confirmed";
  }));
  report.checks.push_back(run("absolute-maximals-by-definition", [&](CheckResult& r) {
    for (const auto& t : abs) {
      if (!(oracle.is_absolute_maximal(t) && oracle.is_relative_maximal(t) == m2)) r.unexpected.push_back(t);
    }
    r.passed = r.unexpected.empty();
    r.detail = std::to_string(abs.size() - r.unexpected.size()) + "/" + std::to_string(abs.size()) +
               " formula absolute maximals confirmed";
  }));
  report.checks.push_back(run("sampled-members-not-maximal", [&](CheckResult& r) {
    std::set<IntTuple> formula(rel.begin(), rel.end());
    formula.insert(abs.begin(), abs.end());
    std::mt19937_64 rng(seed);
    std::size_t sampled = 0;
    for (std::size_t tries = 0; sampled < sample_size && tries < 200 * (sample_size + 1); ++tries) {
      const IntTuple t = random_tuple(rng, m, box.lo[0], box.hi[0]);
      if (formula.count(t) || !oracle.is_member(t)) continue;
      ++sampled;
      if (oracle.is_relative_maximal(t) || oracle.is_absolute_maximal(t)) r.unexpected.push_back(t);
    }
    r.passed = r.unexpected.empty() && sampled == sample_size;
    r.detail = std::to_string(sampled) + " sampled members, " + std::to_string(r.unexpected.size()) +
               " classified maximal";
  }));
  report.notes.push_back("box " + box.lo.to_string() + ".." + box.hi.to_string());
  report.wall_ms = ms_since(start);
  return report;
}

}  // namespace wsgap
