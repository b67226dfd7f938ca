#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wsgap/kernels.hpp"
#include "wsgap/lattice.hpp"

// Membership in the generalized Weierstrass semigroup, Riemann-Roch
// dimensions of divisors supported on P_1..P_m, and definition-level
// maximality tests. Everything here is decided from the absolute maximal
// elements below a tuple; no function-field arithmetic is involved.
//
// Point subsets J are given as sorted 0-based coordinate indices.
namespace wsgap {

struct LocalProfile {
  IntTuple beta;
  // Absolute maximal elements gamma <= beta, sorted.
  std::vector<IntTuple> gamma_hat_beta;
  // max { gamma_k : gamma in gamma_hat_beta }, absent when the set is empty.
  std::vector<std::optional<std::int64_t>> per_coord_max;
};

struct RelmaxEquivalence {
  bool relative_maximal = false;  // definition
  bool dimension_jump = false;    // nabla empty and l(D_a) = l(D_{a-1}) + (m-1)
  bool pair_condition = false;    // some i with nabla_i empty, nabla_{i,j} nonempty
  bool agree() const noexcept {
    return relative_maximal == dimension_jump && dimension_jump == pair_condition;
  }
};

class DimOracle {
 public:
  explicit DimOracle(CurveParams params);

  const CurveParams& params() const noexcept { return params_; }
  const kernels::RepTable& reps() const noexcept { return reps_; }

  // Explicit enumeration of every absolute maximal element below beta.
  LocalProfile local_absolute_maximals(const IntTuple& beta) const;

  // Same maxima as local_absolute_maximals().per_coord_max, computed in
  // closed form by the profile kernel.
  std::vector<std::optional<std::int64_t>> coordinate_maxima(const IntTuple& beta) const;

  bool is_member(const IntTuple& beta) const;

  // l(D_beta): the number of t <= beta_1 reached as first coordinate by an
  // absolute maximal gamma with gamma_j <= beta_j for j >= 2.
  std::int64_t dim_L(const IntTuple& beta) const;

  // Some member beta with beta_j = alpha_j on J and beta_i < alpha_i off J.
  // J may be the full index set, in which case the witness is alpha itself.
  std::optional<IntTuple> nabla_J_witness(const IntTuple& alpha,
                                          std::span<const std::size_t> J) const;
  bool nabla_J_empty(const IntTuple& alpha, std::span<const std::size_t> J) const;

  // Member with every nabla_i(alpha) empty.
  bool is_maximal(const IntTuple& alpha) const;
  bool is_absolute_maximal(const IntTuple& alpha) const;
  bool is_relative_maximal(const IntTuple& alpha) const;

  RelmaxEquivalence check_relmax_equivalence(const IntTuple& alpha) const;

 private:
  void require_tuple(const IntTuple& t) const;

  CurveParams params_;
  kernels::RepTable reps_;
};

// Free-function forms; each builds a DimOracle.
LocalProfile local_absolute_maximals(const CurveParams& params, const IntTuple& beta);
bool is_member(const CurveParams& params, const IntTuple& beta);
std::int64_t dim_L(const CurveParams& params, const IntTuple& beta);
bool nabla_J_empty(const CurveParams& params, const IntTuple& alpha, std::span<const std::size_t> J);
bool is_absolute_maximal(const CurveParams& params, const IntTuple& alpha);
bool is_relative_maximal(const CurveParams& params, const IntTuple& alpha);
RelmaxEquivalence check_relmax_equivalence(const CurveParams& params, const IntTuple& alpha);

}  // namespace wsgap
