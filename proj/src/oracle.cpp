#include "wsgap/oracle.hpp"

#include <algorithm>
#include <string>

#include "wsgap/checked.hpp"
#include "wsgap/detail/step_vectors.hpp"
#include "wsgap/error.hpp"

namespace wsgap {

namespace {

constexpr std::size_t kMaxSubsetPoints = 20;
constexpr std::size_t kWitnessBatch = 256;
constexpr std::uint64_t kMaxLocalEnumeration = 50'000'000;

std::vector<std::size_t> complement_of(std::span<const std::size_t> J, std::size_t m) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::binary_search(J.begin(), J.end(), i)) free.push_back(i);
  }
  return free;
}

// Calls fn(J) for every J of the given size, as sorted index vectors.
template <class Fn>
bool for_each_subset_of_size(std::size_t m, std::size_t size, Fn&& fn) {
  std::vector<std::size_t> J(size);
  auto step = [&](auto& self, std::size_t pos, std::size_t from) -> bool {
    if (pos == size) return fn(static_cast<const std::vector<std::size_t>&>(J));
    for (std::size_t i = from; i + (size - pos) <= m; ++i) {
      J[pos] = i;
      if (!self(self, pos + 1, i + 1)) return false;
    }
    return true;
  };
  return step(step, 0, 0);
}

}  // namespace

DimOracle::DimOracle(CurveParams params) : params_(std::move(params)) {
  if (params_.m() < 2) {
    throw Error(ErrorCode::bad_point_count, "the dimension oracle requires m >= 2");
  }
  reps_ = kernels::make_rep_table(params_);
}

void DimOracle::require_tuple(const IntTuple& t) const {
  if (t.size() != params_.m()) {
    throw Error(ErrorCode::length_mismatch, "tuple " + t.to_string() + " must have " +
                                                std::to_string(params_.m()) + " coordinates");
  }
}

LocalProfile DimOracle::local_absolute_maximals(const IntTuple& beta) const {
  require_tuple(beta);
  const std::size_t m = params_.m();
  const std::int64_t b = params_.b();
  LocalProfile profile{beta, {}, std::vector<std::optional<std::int64_t>>(m)};

  std::uint64_t visited = 0;
  for (std::size_t r = 0; r < reps_.first.size(); ++r) {
    const std::int64_t first = reps_.first[r];
    const std::int64_t level = reps_.level[r];
    // gamma = (first - b*sum d, level + b*d_2, ..., level + b*d_m) <= beta.
    std::vector<std::int64_t> hi(m - 1);
    std::int64_t room = 0;
    for (std::size_t j = 1; j < m; ++j) {
      hi[j - 1] = checked::floor_div(checked::sub(beta[j], level), b);
      room = checked::add(room, hi[j - 1]);
    }
    const std::int64_t need = checked::ceil_div(checked::sub(first, beta[0]), b);
    if (room < need) continue;
    std::vector<std::int64_t> lo(m - 1);
    for (std::size_t j = 0; j + 1 < m; ++j) lo[j] = need - (room - hi[j]);

    IntTuple base(m, level);
    base[0] = first;
    detail::for_each_step_vector(lo, hi, need, room, [&](const std::vector<std::int64_t>& d) {
      if (++visited > kMaxLocalEnumeration) {
        throw Error(ErrorCode::too_large, "absolute maximal enumeration below " +
                                              beta.to_string() + " is too large");
      }
      profile.gamma_hat_beta.push_back(base + theta_element(params_, d));
    });
  }
  std::sort(profile.gamma_hat_beta.begin(), profile.gamma_hat_beta.end());
  for (const auto& gamma : profile.gamma_hat_beta) {
    for (std::size_t k = 0; k < m; ++k) {
      auto& slot = profile.per_coord_max[k];
      slot = slot ? std::max(*slot, gamma[k]) : gamma[k];
    }
  }
  return profile;
}

std::vector<std::optional<std::int64_t>> DimOracle::coordinate_maxima(const IntTuple& beta) const {
  require_tuple(beta);
  const auto raw = kernels::coordinate_maxima(reps_, beta);
  std::vector<std::optional<std::int64_t>> out(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] != kernels::kAbsent) out[k] = raw[k];
  }
  return out;
}

bool DimOracle::is_member(const IntTuple& beta) const {
  require_tuple(beta);
  const auto raw = kernels::coordinate_maxima(reps_, beta);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] != beta[k]) return false;
  }
  return true;
}

std::int64_t DimOracle::dim_L(const IntTuple& beta) const {
  require_tuple(beta);
  const std::size_t m = params_.m();
  const std::int64_t b = params_.b();
  // First coordinates reachable from different region generators lie in
  // different residue classes mod b, so the per-generator counts add up.
  std::int64_t total = 0;
  for (std::size_t r = 0; r < reps_.first.size(); ++r) {
    std::int64_t room = 0;
    for (std::size_t j = 1; j < m; ++j) {
      room = checked::add(room, checked::floor_div(checked::sub(beta[j], reps_.level[r]), b));
    }
    const std::int64_t need = checked::ceil_div(checked::sub(reps_.first[r], beta[0]), b);
    if (room >= need) total = checked::add(total, checked::add(checked::sub(room, need), 1));
  }
  return total;
}

std::optional<IntTuple> DimOracle::nabla_J_witness(const IntTuple& alpha,
                                                   std::span<const std::size_t> J) const {
  require_tuple(alpha);
  const std::size_t m = params_.m();
  if (J.empty() || !std::is_sorted(J.begin(), J.end()) ||
      std::adjacent_find(J.begin(), J.end()) != J.end() || J.back() >= m) {
    throw Error(ErrorCode::invalid_argument, "J must be a nonempty sorted set of point indices");
  }
  if (J.size() == m) {
    return is_member(alpha) ? std::optional<IntTuple>(alpha) : std::nullopt;
  }

  const std::vector<std::size_t> free = complement_of(J, m);
  // Members have nonnegative degree, so the free coordinates must make up
  // at least -sum_J alpha_j.
  std::int64_t need = 0;
  for (auto j : J) need = checked::sub(need, alpha[j]);
  std::vector<std::int64_t> cap(free.size()), suffix_cap(free.size() + 1, 0);
  for (std::size_t p = 0; p < free.size(); ++p) cap[p] = checked::sub(alpha[free[p]], 1);
  for (std::size_t p = free.size(); p-- > 0;) suffix_cap[p] = checked::add(suffix_cap[p + 1], cap[p]);
  if (suffix_cap[0] < need) return std::nullopt;

  // Candidates are classified in batches through the profile kernel.
  std::vector<std::int64_t> batch(m * kWitnessBatch);
  std::uint64_t visited = 0;
  std::size_t filled = 0;
  std::optional<IntTuple> found;
  auto flush = [&]() {
    if (filled == 0) return;
    std::vector<std::int64_t> in(m * filled), out(m * filled);
    for (std::size_t k = 0; k < m; ++k) {
      std::copy_n(batch.begin() + k * kWitnessBatch, filled, in.begin() + k * filled);
    }
    kernels::coordinate_maxima(reps_, m, filled, in, out);
    for (std::size_t l = 0; l < filled && !found; ++l) {
      bool member = true;
      for (std::size_t k = 0; k < m && member; ++k) member = out[k * filled + l] == in[k * filled + l];
      if (member) {
        IntTuple t(m);
        for (std::size_t k = 0; k < m; ++k) t[k] = in[k * filled + l];
        found = std::move(t);
      }
    }
    filled = 0;
  };

  IntTuple candidate = alpha;
  auto step = [&](auto& self, std::size_t p, std::int64_t partial) -> void {
    if (found) return;
    if (p == free.size()) {
      if (++visited > kMaxLocalEnumeration) {
        throw Error(ErrorCode::too_large, "nabla search around " + alpha.to_string() + " is too large");
      }
      for (std::size_t k = 0; k < m; ++k) batch[k * kWitnessBatch + filled] = candidate[k];
      if (++filled == kWitnessBatch) flush();
      return;
    }
    const std::int64_t from = checked::sub(checked::sub(need, partial), suffix_cap[p + 1]);
    for (std::int64_t v = cap[p]; v >= from && !found; --v) {
      candidate[free[p]] = v;
      self(self, p + 1, checked::add(partial, v));
    }
  };
  step(step, 0, 0);
  flush();
  return found;
}

bool DimOracle::nabla_J_empty(const IntTuple& alpha, std::span<const std::size_t> J) const {
  if (J.size() >= params_.m()) {
    throw Error(ErrorCode::invalid_argument, "J must be a proper subset of the points");
  }
  return !nabla_J_witness(alpha, J).has_value();
}

bool DimOracle::is_maximal(const IntTuple& alpha) const {
  if (!is_member(alpha)) return false;
  for (std::size_t i = 0; i < params_.m(); ++i) {
    const std::size_t J[] = {i};
    if (nabla_J_witness(alpha, J)) return false;
  }
  return true;
}

namespace {

void require_subset_budget(std::size_t m) {
  if (m > kMaxSubsetPoints) {
    throw Error(ErrorCode::too_large, "definition-level maximality is limited to m <= 20");
  }
}

}  // namespace

bool DimOracle::is_absolute_maximal(const IntTuple& alpha) const {
  require_subset_budget(params_.m());
  if (!is_maximal(alpha)) return false;
  for (std::size_t size = 2; size < params_.m(); ++size) {
    const bool all_empty = for_each_subset_of_size(params_.m(), size, [&](const auto& J) {
      return !nabla_J_witness(alpha, J).has_value();
    });
    if (!all_empty) return false;
  }
  return true;
}

bool DimOracle::is_relative_maximal(const IntTuple& alpha) const {
  require_subset_budget(params_.m());
  if (!is_maximal(alpha)) return false;
  for (std::size_t size = 2; size < params_.m(); ++size) {
    const bool all_nonempty = for_each_subset_of_size(params_.m(), size, [&](const auto& J) {
      return nabla_J_witness(alpha, J).has_value();
    });
    if (!all_nonempty) return false;
  }
  return true;
}

RelmaxEquivalence DimOracle::check_relmax_equivalence(const IntTuple& alpha) const {
  require_tuple(alpha);
  const std::size_t m = params_.m();
  RelmaxEquivalence report;
  report.relative_maximal = is_relative_maximal(alpha);

  std::vector<bool> single_empty(m);
  bool nabla_empty = true;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t J[] = {i};
    single_empty[i] = !nabla_J_witness(alpha, J).has_value();
    nabla_empty = nabla_empty && single_empty[i];
  }
  IntTuple lowered = alpha;
  for (auto& c : lowered) c = checked::sub(c, 1);
  report.dimension_jump =
      nabla_empty && dim_L(alpha) == checked::add(dim_L(lowered), static_cast<std::int64_t>(m) - 1);

  for (std::size_t i = 0; i < m && !report.pair_condition; ++i) {
    if (!single_empty[i]) continue;
    bool all_pairs = true;
    for (std::size_t j = 0; j < m && all_pairs; ++j) {
      if (j == i) continue;
      const std::size_t J[] = {std::min(i, j), std::max(i, j)};
      all_pairs = nabla_J_witness(alpha, J).has_value();
    }
    report.pair_condition = all_pairs;
  }
  return report;
}

LocalProfile local_absolute_maximals(const CurveParams& params, const IntTuple& beta) {
  return DimOracle(params).local_absolute_maximals(beta);
}

bool is_member(const CurveParams& params, const IntTuple& beta) {
  return DimOracle(params).is_member(beta);
}

std::int64_t dim_L(const CurveParams& params, const IntTuple& beta) {
  return DimOracle(params).dim_L(beta);
}

bool nabla_J_empty(const CurveParams& params, const IntTuple& alpha, std::span<const std::size_t> J) {
  return DimOracle(params).nabla_J_empty(alpha, J);
}

bool is_absolute_maximal(const CurveParams& params, const IntTuple& alpha) {
  return DimOracle(params).is_absolute_maximal(alpha);
}

bool is_relative_maximal(const CurveParams& params, const IntTuple& alpha) {
  return DimOracle(params).is_relative_maximal(alpha);
}

RelmaxEquivalence check_relmax_equivalence(const CurveParams& params, const IntTuple& alpha) {
  return DimOracle(params).check_relmax_equivalence(alpha);
}

}  // namespace wsgap
