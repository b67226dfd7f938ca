#include "wsgap/gaps.hpp"

#include <algorithm>
#include <string>

#include "wsgap/checked.hpp"
#include "wsgap/detail/step_vectors.hpp"
#include "wsgap/error.hpp"
#include "wsgap/maximals.hpp"
#include "wsgap/oracle.hpp"
#include "wsgap/parallel.hpp"

namespace wsgap {

namespace {

constexpr std::size_t kSweepBatch = 512;

void sort_unique(std::vector<IntTuple>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

void require_multipoint(const CurveParams& params, const char* what) {
  if (params.m() < 2) {
    throw Error(ErrorCode::bad_point_count, std::string(what) + " requires m >= 2");
  }
}

void require_sweep_budget(const CurveParams& params, const SweepOptions& options) {
  const std::uint64_t cells = gap_bounding_box(params).cardinality();
  if (cells > options.max_cells && !options.force) {
    throw Error(ErrorCode::too_large,
                "gap sweep box has " + std::to_string(cells) + " cells (limit " +
                    std::to_string(options.max_cells) + "); pass --force to run anyway");
  }
}

// Appends the product of [lo_k, hi_k] over all coordinates.
void append_product(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                    std::vector<IntTuple>& out) {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) return;
  }
  Box box{IntTuple(lo), IntTuple(hi)};
  for (const auto& t : box_tuples(std::move(box))) out.push_back(t);
}

struct SweepResult {
  std::vector<IntTuple> gaps;
  std::vector<IntTuple> pure_gaps;
};

// Classifies every alpha >= 0 with sum(alpha) <= 2g - 1 through the batched
// profile kernel: alpha is a member iff its coordinate maxima equal alpha,
// and a pure gap iff every coordinate maximum falls strictly below it.
SweepResult classify_sweep(const DimOracle& oracle, const SweepOptions& options) {
  const CurveParams& p = oracle.params();
  const std::size_t m = p.m();
  const std::int64_t max_sum = 2 * p.genus() - 1;
  std::vector<SweepResult> parts(static_cast<std::size_t>(max_sum + 1));

  parallel_for(parts.size(), resolve_threads(options.threads), [&](std::size_t task) {
    SweepResult& part = parts[task];
    std::vector<std::int64_t> in(m * kSweepBatch), out(m * kSweepBatch);
    std::vector<IntTuple> pending;
    pending.reserve(kSweepBatch);
    auto flush = [&] {
      const std::size_t n = pending.size();
      if (n == 0) return;
      std::span<std::int64_t> in_view(in.data(), m * n), out_view(out.data(), m * n);
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = 0; k < m; ++k) in_view[k * n + l] = pending[l][k];
      }
      kernels::coordinate_maxima(oracle.reps(), m, n, in_view, out_view, options.isa);
      for (std::size_t l = 0; l < n; ++l) {
        bool member = true, pure = true;
        for (std::size_t k = 0; k < m; ++k) {
          const std::int64_t top = out_view[k * n + l];
          member = member && top == pending[l][k];
          pure = pure && top < pending[l][k];
        }
        if (!member) part.gaps.push_back(pending[l]);
        if (pure) part.pure_gaps.push_back(pending[l]);
      }
      pending.clear();
    };
    for_each_bounded_sum(
        m, max_sum,
        [&](const IntTuple& t) {
          pending.push_back(t);
          if (pending.size() == kSweepBatch) flush();
        },
        static_cast<std::int64_t>(task));
    flush();
  });

  SweepResult merged;
  for (auto& part : parts) {
    merged.gaps.insert(merged.gaps.end(), part.gaps.begin(), part.gaps.end());
    merged.pure_gaps.insert(merged.pure_gaps.end(), part.pure_gaps.begin(), part.pure_gaps.end());
  }
  sort_unique(merged.gaps);
  sort_unique(merged.pure_gaps);
  return merged;
}

std::vector<IntTuple> gaps_by_union_nabla(const CurveParams& params, bool include_zero_family) {
  std::vector<IntTuple> out;
  for (const auto& beta_star : lambda_nonneg(params, include_zero_family)) {
    auto part = nabla_bar_nonneg(params, beta_star);
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_unique(out);
  return out;
}

// The S_{ik} families: for each relative maximal
// (a(b-i) - b - b*sum d, i + b*d_2, ..., i + b*d_m) with d >= 0, the
// nonnegative part of its nabla-bar_k.
std::vector<IntTuple> gaps_by_explicit_s(const CurveParams& params) {
  const std::int64_t a = params.a(), b = params.b();
  const std::size_t m = params.m();
  std::vector<IntTuple> out;
  for (std::int64_t i = 1; i < b; ++i) {
    const std::int64_t top = a * (b - i) - b;
    if (top < 0) continue;
    const std::int64_t j_max = checked::floor_div(top, b);

    // S_{i1}: first coordinate a(b-i) - b(1+j), the rest below i + b*d_t
    // with d_2 + ... + d_m = j.
    for (std::int64_t j = 0; j <= j_max; ++j) {
      const std::vector<std::int64_t> zero(m - 1, 0), cap(m - 1, j);
      detail::for_each_step_vector(zero, cap, j, j, [&](const std::vector<std::int64_t>& d) {
        std::vector<std::int64_t> lo(m, 0), hi(m);
        lo[0] = hi[0] = top - b * j;
        for (std::size_t t = 1; t < m; ++t) hi[t] = i + b * d[t - 1] - 1;
        append_product(lo, hi, out);
      });
    }

    // S_{ik}, k >= 2: coordinate k fixed at i + b*j, d_1 solved from
    // d_1 - sum_{t != k} d_t = j, first coordinate below a(b-i) - b(1+d_1).
    for (std::size_t k = 1; k < m; ++k) {
      for (std::int64_t j = 0; j <= j_max; ++j) {
        const std::size_t others = m - 2;
        const std::vector<std::int64_t> zero(others, 0), cap(others, j_max);
        detail::for_each_step_vector(zero, cap, 0, j_max, [&](const std::vector<std::int64_t>& d) {
          std::int64_t d1 = j;
          for (auto v : d) d1 += v;
          if (d1 < 0) return;
          std::vector<std::int64_t> lo(m, 0), hi(m);
          hi[0] = top - b * d1 - 1;
          lo[k] = hi[k] = i + b * j;
          std::size_t pos = 0;
          for (std::size_t t = 1; t < m; ++t) {
            if (t == k) continue;
            hi[t] = i + b * d[pos++] - 1;
          }
          append_product(lo, hi, out);
        });
      }
    }
  }
  sort_unique(out);
  return out;
}

// Backtracking over (beta^1, ..., beta^m) in Lambda^m, keeping only choices
// with beta^i_i < beta^j_i for all j != i; each surviving m-tuple yields the
// pure gap (beta^1_1, ..., beta^m_m).
std::vector<IntTuple> pure_gaps_by_intersection(const CurveParams& params,
                                                bool include_zero_family) {
  const std::vector<IntTuple> lambda = lambda_nonneg(params, include_zero_family);
  const std::size_t m = params.m();
  std::vector<const IntTuple*> chosen(m, nullptr);
  std::vector<IntTuple> out;
  auto step = [&](auto& self, std::size_t i) -> void {
    if (i == m) {
      IntTuple alpha(m);
      for (std::size_t k = 0; k < m; ++k) alpha[k] = (*chosen[k])[k];
      out.push_back(std::move(alpha));
      return;
    }
    for (const auto& beta : lambda) {
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = (*chosen[k])[k] < beta[k] && beta[i] < (*chosen[k])[i];
      }
      if (!ok) continue;
      chosen[i] = &beta;
      self(self, i + 1);
    }
  };
  step(step, 0);
  sort_unique(out);
  return out;
}

std::vector<IntTuple> as_single_point(const std::vector<std::int64_t>& values) {
  std::vector<IntTuple> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(IntTuple{v});
  return out;
}

}  // namespace

std::vector<std::int64_t> numerical_semigroup_gaps(std::int64_t a, std::int64_t b) {
  std::vector<std::int64_t> out;
  // Every integer above the Frobenius number ab - a - b is representable.
  const std::int64_t frobenius = a * b - a - b;
  for (std::int64_t t = 1; t <= frobenius; ++t) {
    bool representable = false;
    for (std::int64_t x = 0; x * a <= t && !representable; ++x) {
      representable = (t - x * a) % b == 0;
    }
    if (!representable) out.push_back(t);
  }
  return out;
}

const char* to_string(GapMethod method) noexcept {
  switch (method) {
    case GapMethod::union_nabla: return "union_nabla";
    case GapMethod::explicit_s: return "explicit_S";
    case GapMethod::complement: return "complement";
  }
  return "unknown";
}

const char* to_string(PureGapMethod method) noexcept {
  return method == PureGapMethod::intersection ? "intersection" : "profile";
}

std::optional<GapMethod> parse_gap_method(std::string_view name) noexcept {
  if (name == "union_nabla") return GapMethod::union_nabla;
  if (name == "explicit_S" || name == "explicit_s") return GapMethod::explicit_s;
  if (name == "complement") return GapMethod::complement;
  return std::nullopt;
}

std::optional<PureGapMethod> parse_pure_gap_method(std::string_view name) noexcept {
  if (name == "intersection") return PureGapMethod::intersection;
  if (name == "profile") return PureGapMethod::profile;
  return std::nullopt;
}

Box gap_bounding_box(const CurveParams& params) {
  const auto top = std::max<std::int64_t>(0, 2 * params.genus() - 1);
  return Box(IntTuple(params.m(), 0), IntTuple(params.m(), top));
}

GapReport gaps(const CurveParams& params, GapMethod method, const SweepOptions& options) {
  GapReport report{params, {}, {}, to_string(method), {0, 0, gap_bounding_box(params)}};
  if (params.m() == 1) {
    report.gaps = as_single_point(numerical_semigroup_gaps(params.a(), params.b()));
  } else {
    require_sweep_budget(params, options);
    switch (method) {
      case GapMethod::union_nabla:
        report.gaps = gaps_by_union_nabla(params, options.include_zero_family);
        break;
      case GapMethod::explicit_s:
        report.gaps = gaps_by_explicit_s(params);
        break;
      case GapMethod::complement:
        report.gaps = classify_sweep(DimOracle(params), options).gaps;
        break;
    }
  }
  report.stats.gap_count = report.gaps.size();
  return report;
}

GapReport pure_gaps(const CurveParams& params, PureGapMethod method, const SweepOptions& options) {
  require_multipoint(params, "pure_gaps");
  require_sweep_budget(params, options);
  GapReport report{params, {}, {}, to_string(method), {0, 0, gap_bounding_box(params)}};
  if (method == PureGapMethod::profile) {
    SweepResult sweep = classify_sweep(DimOracle(params), options);
    report.gaps = std::move(sweep.gaps);
    report.pure_gaps = std::move(sweep.pure_gaps);
  } else {
    report.gaps = gaps_by_union_nabla(params, options.include_zero_family);
    report.pure_gaps = pure_gaps_by_intersection(params, options.include_zero_family);
  }
  report.stats.gap_count = report.gaps.size();
  report.stats.pure_gap_count = report.pure_gaps.size();
  return report;
}

std::vector<IntTuple> nabla_bar_nonneg(const CurveParams& params, const IntTuple& beta_star) {
  require_multipoint(params, "nabla_bar_nonneg");
  const std::size_t m = params.m();
  if (beta_star.size() != m) throw Error(ErrorCode::length_mismatch, "tuple length must equal m");
  std::vector<IntTuple> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (beta_star[i] < 0) continue;
    std::vector<std::int64_t> lo(m, 0), hi(m);
    for (std::size_t k = 0; k < m; ++k) hi[k] = beta_star[k] - 1;
    lo[i] = hi[i] = beta_star[i];
    append_product(lo, hi, out);
  }
  sort_unique(out);
  return out;
}

std::optional<std::vector<IntTuple>> pure_gap_witness(const CurveParams& params,
                                                      const IntTuple& alpha) {
  require_multipoint(params, "pure_gap_witness");
  const std::size_t m = params.m();
  if (alpha.size() != m) throw Error(ErrorCode::length_mismatch, "tuple length must equal m");
  const std::vector<IntTuple> lambda = lambda_nonneg(params);
  std::vector<IntTuple> witness;
  for (std::size_t i = 0; i < m; ++i) {
    auto it = std::find_if(lambda.begin(), lambda.end(), [&](const IntTuple& beta) {
      if (beta[i] != alpha[i]) return false;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != i && beta[k] <= alpha[k]) return false;
      }
      return true;
    });
    if (it == lambda.end()) return std::nullopt;
    witness.push_back(*it);
  }
  return witness;
}

CandidateSuperset candidate_superset(const CurveParams& params) {
  require_multipoint(params, "candidate_superset");
  const std::int64_t a = params.a(), b = params.b();
  CandidateSuperset out;
  for (std::int64_t i = 1; i < b; ++i) {
    const std::int64_t j_max = checked::floor_div(a * (b - i) - b, b);
    for (std::int64_t j = 0; j <= j_max; ++j) {
      out.a_star.push_back(a * (b - i) - b * (1 + j));
      out.a.push_back(i + b * j);
    }
  }
  for (auto* v : {&out.a_star, &out.a}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return out;
}

SigmaTable sigma_pair(const CurveParams& params) {
  if (params.m() != 2) throw Error(ErrorCode::bad_point_count, "sigma_pair requires m = 2");
  const DimOracle oracle(params);
  SigmaTable table;
  for (std::int64_t t = 0; t <= 2 * params.genus() - 1; ++t) {
    if (!oracle.is_member(IntTuple{t, 0})) table.gaps_q1.push_back(t);
    if (!oracle.is_member(IntTuple{0, t})) table.gaps_q2.push_back(t);
  }
  const std::size_t g = static_cast<std::size_t>(params.genus());
  if (table.gaps_q1.size() != g || table.gaps_q2.size() != g) {
    throw std::logic_error("single-point gap counts differ from the genus");
  }
  auto index_of = [](const std::vector<std::int64_t>& seq, std::int64_t v) -> std::size_t {
    auto it = std::lower_bound(seq.begin(), seq.end(), v);
    if (it == seq.end() || *it != v) throw std::logic_error("maximal pair leaves the gap sequence");
    return static_cast<std::size_t>(it - seq.begin()) + 1;
  };

  table.sigma.assign(g, 0);
  std::vector<bool> hit(g + 1, false);
  for (const auto& pair : lambda_nonneg(params)) {
    const std::size_t i = index_of(table.gaps_q1, pair[0]);
    const std::size_t j = index_of(table.gaps_q2, pair[1]);
    if (table.sigma[i - 1] != 0 || hit[j]) throw std::logic_error("sigma is not injective");
    table.sigma[i - 1] = j;
    hit[j] = true;
  }
  for (std::size_t i = 1; i <= g; ++i) {
    if (table.sigma[i - 1] == 0) throw std::logic_error("sigma is not surjective");
    table.gamma_pairs.emplace_back(table.gaps_q1[i - 1], table.gaps_q2[table.sigma[i - 1] - 1]);
  }
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t j = i + 1; j <= g; ++j) {
      if (table.sigma[i - 1] > table.sigma[j - 1]) table.inversions.emplace_back(i, j);
    }
  }
  return table;
}

std::vector<std::int64_t> sigma_by_min_definition(const CurveParams& params) {
  if (params.m() != 2) throw Error(ErrorCode::bad_point_count, "sigma requires m = 2");
  const DimOracle oracle(params);
  const std::int64_t two_g = 2 * params.genus();
  std::vector<std::int64_t> out;
  for (auto ell : numerical_semigroup_gaps(params.a(), params.b())) {
    // (ell, beta) is a member once ell + beta >= 2g, so the search ends.
    for (std::int64_t beta = 0; beta <= two_g; ++beta) {
      if (oracle.is_member(IntTuple{ell, beta})) {
        out.push_back(beta);
        break;
      }
    }
  }
  return out;
}

std::vector<IntTuple> pair_gaps(const SigmaTable& table) {
  std::vector<IntTuple> out;
  for (const auto& [x, y] : table.gamma_pairs) {
    for (std::int64_t v = 0; v < y; ++v) out.push_back(IntTuple{x, v});
    for (std::int64_t v = 0; v < x; ++v) out.push_back(IntTuple{v, y});
  }
  sort_unique(out);
  return out;
}

std::vector<IntTuple> pair_pure_gaps(const SigmaTable& table) {
  std::vector<IntTuple> out;
  for (const auto& [i, j] : table.inversions) {
    // nabla-bar_1(l_i, l'_s(i)) meet nabla-bar_2(l_j, l'_s(j)) = {(l_i, l'_s(j))}
    // whenever l_i < l_j and l'_s(j) < l'_s(i).
    const auto& [xi, yi] = table.gamma_pairs[i - 1];
    const auto& [xj, yj] = table.gamma_pairs[j - 1];
    if (xi < xj && yj < yi) out.push_back(IntTuple{xi, yj});
  }
  sort_unique(out);
  return out;
}

}  // namespace wsgap
