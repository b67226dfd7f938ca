// wsgap: gaps, pure gaps and maximal elements of generalized Weierstrass
// semigroups on curves f(y) = g(x).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsgap/checked.hpp"
#include "wsgap/error.hpp"
#include "wsgap/gaps.hpp"
#include "wsgap/maximals.hpp"
#include "wsgap/oracle.hpp"
#include "wsgap/output.hpp"
#include "wsgap/verify.hpp"

namespace {

using namespace wsgap;
using output::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveFlags {
  std::string preset;
  std::optional<std::int64_t> ell, r, q, a, b, m, field_size;
};

struct CommonFlags {
  std::string format = "json";
  unsigned threads = 0;
  bool force = false;
  bool no_timing = false;
};

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out = checked::mul(out, base);
  return out;
}

CurveParams resolve_curve(const CurveFlags& f, std::optional<std::int64_t> default_m) {
  std::int64_t a = 0, b = 0;
  std::optional<std::int64_t> field = f.field_size;
  if (f.preset == "norm-trace") {
    if (!f.ell || !f.r) throw UsageError("--preset norm-trace needs --ell and --r");
    if (*f.ell < 2 || *f.r < 1) throw UsageError("--ell must be >= 2 and --r >= 1");
    a = ipow(*f.ell, *f.r - 1);
    b = (ipow(*f.ell, *f.r) - 1) / (*f.ell - 1);
    field = ipow(*f.ell, *f.r);
  } else if (f.preset == "hermitian") {
    if (!f.q) throw UsageError("--preset hermitian needs --q");
    a = *f.q;
    b = checked::add(*f.q, 1);
    field = checked::mul(*f.q, *f.q);
  } else if (f.preset.empty()) {
    if (!f.a || !f.b) throw UsageError("give --a and --b, or a --preset");
    a = *f.a;
    b = *f.b;
  } else {
    throw UsageError("unknown preset '" + f.preset + "' (norm-trace, hermitian)");
  }
  if (!f.preset.empty() && (f.a || f.b)) throw UsageError("--a/--b cannot be combined with --preset");
  const auto m = f.m ? f.m : default_m;
  if (!m) throw UsageError("--m is required");
  return new_curve_params(a, b, *m, field);
}

IntTuple tuple_from(const std::vector<std::int64_t>& v, const char* flag) {
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  return IntTuple(v);
}

void add_curve_flags(CLI::App* cmd, CurveFlags& f) {
  cmd->add_option("--preset", f.preset, "Curve family: norm-trace or hermitian")
      ->check(CLI::IsMember({"norm-trace", "hermitian"}));
  cmd->add_option("--ell", f.ell, "norm-trace: base field size l");
  cmd->add_option("--r", f.r, "norm-trace: extension degree r");
  cmd->add_option("--q", f.q, "hermitian: q");
  cmd->add_option("--a", f.a, "Degree a (coprime to b)");
  cmd->add_option("--b", f.b, "Degree b");
  cmd->add_option("--m", f.m, "Number of points, 1 <= m <= a + 1");
  cmd->add_option("--field-size", f.field_size, "Size of the constant field (informational)");
}

void add_common_flags(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--threads", c.threads, "Worker threads (default: WSGAP_THREADS or all cores)");
  cmd->add_flag("--force", c.force, "Allow sweeps over more than 1e8 cells");
  cmd->add_flag("--no-timing", c.no_timing, "Report timing_ms as 0 for reproducible output");
}

SweepOptions sweep_options(const CommonFlags& c, bool include_zero_family = false) {
  SweepOptions o;
  o.threads = c.threads;
  o.force = c.force;
  o.include_zero_family = include_zero_family;
  return o;
}

Json json_ints(const std::vector<std::int64_t>& v) { return Json(v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaps and maximal elements of generalized Weierstrass semigroups", "wsgap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", output::tool_version());

  CurveFlags curve;
  CommonFlags common;

  std::string kind = "relative", scope = "region";
  bool box_positive = false, include_zero = false;
  std::vector<std::int64_t> lo, hi, tuple;
  std::string gap_method = "complement", pure_method = "profile";
  std::string suite = "all";
  SweepConfig sweep_cfg;
  std::size_t definition_samples = 50;

  auto* maximals = app.add_subcommand("maximals", "Absolute or relative maximal elements");
  maximals->add_option("--kind", kind, "absolute or relative")->check(CLI::IsMember({"absolute", "relative"}));
  maximals->add_option("--scope", scope, "region (generators), box, or nonneg")
      ->check(CLI::IsMember({"region", "box", "nonneg"}));
  maximals->add_option("--lo", lo, "Box lower corner, e.g. -6,-6,-6")->delimiter(',');
  maximals->add_option("--hi", hi, "Box upper corner")->delimiter(',');
  maximals->add_flag("--box-positive", box_positive, "Box [1, 2g-1]^m");
  maximals->add_flag("--include-zero-family", include_zero,
                     "nonneg relative scope: add translates of (b(m-2), 0, ..., 0)");

  auto* gaps_cmd = app.add_subcommand("gaps", "Gap set G(P_1, ..., P_m)");
  gaps_cmd->add_option("--method", gap_method, "union_nabla, explicit_S or complement")
      ->check(CLI::IsMember({"union_nabla", "explicit_S", "complement"}));
  gaps_cmd->add_flag("--include-zero-family", include_zero, "union_nabla: widen the relative maximals");

  auto* pure_cmd = app.add_subcommand("pure-gaps", "Pure gap set G_0(P_1, ..., P_m)");
  pure_cmd->add_option("--method", pure_method, "intersection or profile")
      ->check(CLI::IsMember({"intersection", "profile"}));
  pure_cmd->add_flag("--include-zero-family", include_zero, "intersection: widen the relative maximals");

  auto* member_cmd = app.add_subcommand("member", "Is the tuple in the semigroup?");
  member_cmd->add_option("--tuple", tuple, "Tuple, e.g. 12,0,0")->delimiter(',')->required();

  auto* dim_cmd = app.add_subcommand("dim", "Riemann-Roch dimension l(D_beta)");
  dim_cmd->add_option("--tuple", tuple, "Tuple, e.g. 12,0,0")->delimiter(',')->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Two-point permutation sigma (m = 2)");
  auto* superset_cmd = app.add_subcommand("superset", "Candidate sets A* and A for pure gap coordinates");

  auto* verify_cmd = app.add_subcommand("verify", "Built-in fixtures and property sweeps");
  verify_cmd->add_option("suite", suite, "fixtures, sweep, definition or all")
      ->check(CLI::IsMember({"fixtures", "sweep", "definition", "all"}));
  verify_cmd->add_option("--max-a", sweep_cfg.max_a, "Sweep bound on a");
  verify_cmd->add_option("--max-b", sweep_cfg.max_b, "Sweep bound on b");
  verify_cmd->add_option("--max-m", sweep_cfg.max_m, "Sweep bound on m");
  verify_cmd->add_option("--trials", sweep_cfg.trials, "Random oracle trials per parameter triple");
  verify_cmd->add_option("--seed", sweep_cfg.seed, "Sweep RNG seed");
  verify_cmd->add_option("--samples", definition_samples, "definition suite: sampled members");

  for (auto* cmd : {maximals, gaps_cmd, pure_cmd, member_cmd, dim_cmd, sigma_cmd, superset_cmd, verify_cmd}) {
    add_curve_flags(cmd, curve);
    add_common_flags(cmd, common);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "wsgap: " << e.what() << "\n\n";
    const auto used = app.get_subcommands();
    std::cerr << (used.empty() ? app.help() : used.front()->help());
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  const auto format = *output::parse_format(common.format);

  try {
    output::Envelope env;
    env.command = name;
    const auto start = std::chrono::steady_clock::now();
    bool failed_checks = false;

    if (name == "verify") {
      if (suite == "definition") {
        const CurveParams p = resolve_curve(curve, std::nullopt);
        env.params = p;
        const auto report = check_definition_level(p, definition_samples);
        env.payload["definition"] = output::to_json(report);
        failed_checks = !report.all_passed();
      } else {
        sweep_cfg.threads = common.threads;
        if (suite == "fixtures" || suite == "all") {
          const auto report = run_fixtures(common.threads);
          env.payload["fixtures"] = output::to_json(report);
          failed_checks = failed_checks || !report.all_passed();
        }
        if (suite == "sweep" || suite == "all") {
          const auto report = run_property_sweep(sweep_cfg);
          env.payload["sweep"] = output::to_json(report);
          failed_checks = failed_checks || !report.all_passed();
        }
      }
      env.payload["suite"] = suite;
    } else {
      std::optional<std::int64_t> default_m;
      if (!tuple.empty()) default_m = static_cast<std::int64_t>(tuple.size());
      const CurveParams p = resolve_curve(curve, default_m);
      env.params = p;

      if (name == "maximals") {
        const MaximalKind k = kind == "absolute" ? MaximalKind::absolute : MaximalKind::relative;
        const MaximalSet set = k == MaximalKind::absolute ? absolute_maximals_region(p) : relative_maximals_region(p);
        if (box_positive) scope = "box";
        std::vector<IntTuple> tuples;
        if (scope == "region") {
          tuples = set.region_reps;
        } else if (scope == "nonneg") {
          if (k == MaximalKind::relative) {
            tuples = lambda_nonneg(p, include_zero);
          } else {
            // Theta preserves the coordinate sum, so nonnegative translates
            // of a generator stay below its sum in every coordinate.
            std::int64_t top = 0;
            for (const auto& r : set.region_reps) top = std::max(top, r.sum());
            tuples = expand_in_box(set, Box{IntTuple(p.m(), 0), IntTuple(p.m(), top)});
          }
        } else {
          Box box;
          if (box_positive) {
            box = Box{IntTuple(p.m(), 1), IntTuple(p.m(), std::max<std::int64_t>(1, 2 * p.genus() - 1))};
          } else {
            if (lo.empty() || hi.empty()) throw UsageError("--scope box needs --lo and --hi (or --box-positive)");
            box = Box{IntTuple(lo), IntTuple(hi)};
          }
          if (box.cardinality() > 100'000'000 && !common.force) {
            throw Error(ErrorCode::too_large, "box exceeds 1e8 cells; pass --force to proceed");
          }
          tuples = expand_in_box(set, box);
          env.payload["box"] = output::to_json(box);
        }
        env.payload["kind"] = to_string(k);
        env.payload["scope"] = scope;
        env.payload["count"] = tuples.size();
        env.payload["tuples"] = output::to_json(tuples);
      } else if (name == "gaps") {
        const auto report = gaps(p, *parse_gap_method(gap_method), sweep_options(common, include_zero));
        env.payload["method"] = report.method;
        env.payload["gap_count"] = report.stats.gap_count;
        env.payload["gaps"] = output::to_json(report.gaps);
        env.payload["bounding_box"] = output::to_json(report.stats.bounding_box);
      } else if (name == "pure-gaps") {
        const auto report = pure_gaps(p, *parse_pure_gap_method(pure_method), sweep_options(common, include_zero));
        env.payload["method"] = report.method;
        env.payload["gap_count"] = report.stats.gap_count;
        env.payload["pure_gap_count"] = report.stats.pure_gap_count;
        env.payload["pure_gaps"] = output::to_json(report.pure_gaps);
        env.payload["bounding_box"] = output::to_json(report.stats.bounding_box);
      } else if (name == "member" || name == "dim") {
        const IntTuple t = tuple_from(tuple, "--tuple");
        if (t.size() != p.m()) throw Error(ErrorCode::length_mismatch, "--tuple must have m coordinates");
        const DimOracle oracle(p);
        env.payload["tuple"] = output::to_json(t);
        if (name == "member") {
          env.payload["member"] = oracle.is_member(t);
        } else {
          env.payload["dim"] = oracle.dim_L(t);
          env.payload["degree"] = t.sum();
        }
      } else if (name == "sigma") {
        const SigmaTable table = sigma_pair(p);
        std::vector<IntTuple> pairs, inversions;
        for (const auto& [x, y] : table.gamma_pairs) pairs.push_back(IntTuple{x, y});
        for (const auto& [i, j] : table.inversions) {
          inversions.push_back(IntTuple{static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
        }
        std::vector<std::int64_t> sigma(table.sigma.begin(), table.sigma.end());
        env.payload["gaps_q1"] = json_ints(table.gaps_q1);
        env.payload["gaps_q2"] = json_ints(table.gaps_q2);
        env.payload["sigma"] = json_ints(sigma);
        env.payload["gamma_pairs"] = output::to_json(pairs);
        env.payload["inversions"] = output::to_json(inversions);
        env.payload["inversion_count"] = inversions.size();
        env.payload["pure_gaps"] = output::to_json(pair_pure_gaps(table));
      } else if (name == "superset") {
        const auto sup = candidate_superset(p);
        env.payload["a_star"] = json_ints(sup.a_star);
        env.payload["a"] = json_ints(sup.a);
      }
    }

    env.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << output::render(env, format, !common.no_timing);
    if (env.params) {
      for (const auto& w : env.params->warnings()) std::cerr << "wsgap: warning: " << w << '\n';
    }
    if (failed_checks) {
      std::cerr << "wsgap: verification failed\n";
      return 1;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "wsgap: " << e.what() << "\n\n" << cmd->help();
    return 2;
  } catch (const Error& e) {
    std::cerr << "wsgap: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 1;
  }
}
