#include "wsgap/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "wsgap/checked.hpp"
#include "wsgap/error.hpp"

namespace wsgap {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_coprime: return "NotCoprime";
    case ErrorCode::bad_point_count: return "BadPointCount";
    case ErrorCode::bad_degree: return "BadDegree";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

CurveParams new_curve_params(std::int64_t a, std::int64_t b, std::int64_t m,
                             std::optional<std::int64_t> field_size) {
  if (a < 2 || b < 2) {
    throw Error(ErrorCode::bad_degree, "degrees must satisfy a >= 2 and b >= 2 (got a=" +
                                           std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  if (a > CurveParams::kMaxDegree || b > CurveParams::kMaxDegree) {
    throw Error(ErrorCode::bad_degree, "degrees above 2^16 are not supported");
  }
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorCode::not_coprime, "gcd(a, b) must be 1 (got a=" + std::to_string(a) +
                                            ", b=" + std::to_string(b) + ")");
  }
  if (m < 1 || m > a + 1) {
    throw Error(ErrorCode::bad_point_count, "point count m must lie in [1, a+1] = [1, " +
                                                std::to_string(a + 1) + "] (got " +
                                                std::to_string(m) + ")");
  }
  if (field_size && *field_size < 1) {
    throw Error(ErrorCode::invalid_argument, "field size must be positive");
  }
  CurveParams p;
  p.a_ = a;
  p.b_ = b;
  p.m_ = static_cast<std::size_t>(m);
  p.genus_ = (a - 1) * (b - 1) / 2;
  p.field_size_ = field_size;
  if (field_size && *field_size < m) {
    p.warnings_.push_back("FieldTooSmall: field size " + std::to_string(*field_size) +
                          " is below the point count " + std::to_string(m));
  }
  return p;
}

CurveParams CurveParams::with_points(std::size_t m) const {
  return new_curve_params(a_, b_, static_cast<std::int64_t>(m), field_size_);
}

std::int64_t IntTuple::sum() const {
  std::int64_t s = 0;
  for (auto c : coords_) s = checked::add(s, c);
  return s;
}

std::string IntTuple::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

namespace {

void require_same_length(const IntTuple& x, const IntTuple& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::length_mismatch, "tuple lengths differ: " + x.to_string() +
                                                " vs " + y.to_string());
  }
}

template <class Pick>
IntTuple fold(std::span<const IntTuple> ts, Pick pick, const char* name) {
  if (ts.empty()) throw Error(ErrorCode::empty_input, std::string(name) + " of an empty list");
  IntTuple out = ts.front();
  for (const auto& t : ts.subspan(1)) {
    require_same_length(out, t);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pick(out[i], t[i]);
  }
  return out;
}

}  // namespace

IntTuple operator+(const IntTuple& x, const IntTuple& y) {
  require_same_length(x, y);
  IntTuple out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = checked::add(x[i], y[i]);
  return out;
}

IntTuple operator-(const IntTuple& x, const IntTuple& y) {
  require_same_length(x, y);
  IntTuple out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = checked::sub(x[i], y[i]);
  return out;
}

bool dominated_by(const IntTuple& x, const IntTuple& y) {
  require_same_length(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

IntTuple unit(std::size_t m, std::size_t i) {
  IntTuple e(m, 0);
  e[i] = 1;
  return e;
}

IntTuple lub(std::span<const IntTuple> ts) {
  return fold(ts, [](std::int64_t x, std::int64_t y) { return std::max(x, y); }, "lub");
}

IntTuple glb(std::span<const IntTuple> ts) {
  return fold(ts, [](std::int64_t x, std::int64_t y) { return std::min(x, y); }, "glb");
}

IntTuple ThetaBasis::combine(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != generators.size()) {
    throw Error(ErrorCode::length_mismatch, "coefficient count does not match the basis");
  }
  IntTuple out(generators.empty() ? 0 : generators.front().size(), 0);
  for (std::size_t j = 0; j < generators.size(); ++j) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = checked::add(out[k], checked::mul(coeffs[j], generators[j][k]));
    }
  }
  return out;
}

namespace {

void require_multipoint(const CurveParams& params, const char* what) {
  if (params.m() < 2) {
    throw Error(ErrorCode::bad_point_count, std::string(what) + " requires m >= 2");
  }
}

}  // namespace

ThetaBasis theta_basis(const CurveParams& params) {
  require_multipoint(params, "theta_basis");
  const std::size_t m = params.m();
  ThetaBasis basis;
  for (std::size_t i = 1; i < m; ++i) {
    IntTuple eta(m, 0);
    eta[i - 1] = -params.b();
    eta[i] = params.b();
    basis.generators.push_back(std::move(eta));
  }
  return basis;
}

IntTuple theta_element(const CurveParams& params, std::span<const std::int64_t> steps) {
  const std::size_t m = params.m();
  if (steps.size() + 1 != m) {
    throw Error(ErrorCode::length_mismatch, "theta_element needs m-1 steps");
  }
  IntTuple out(m, 0);
  std::int64_t total = 0;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    out[j + 1] = checked::mul(params.b(), steps[j]);
    total = checked::add(total, steps[j]);
  }
  out[0] = checked::mul(-params.b(), total);
  return out;
}

RegionReduction reduce_to_region(const CurveParams& params, const IntTuple& alpha) {
  require_multipoint(params, "reduce_to_region");
  const std::size_t m = params.m();
  if (alpha.size() != m) throw Error(ErrorCode::length_mismatch, "tuple length must equal m");
  const std::int64_t b = params.b();

  // alpha = rep + sum_j q_j * b * (e_j - e_1); rewrite in the eta basis,
  // where eta^j = b(e_j - e_1) - b(e_{j-1} - e_1), so the coefficient on
  // eta^j is minus the tail sum of q from j onward.
  std::vector<std::int64_t> q(m - 1);
  IntTuple rep = alpha;
  for (std::size_t j = 1; j < m; ++j) {
    q[j - 1] = checked::floor_div(alpha[j], b);
    rep[j] = checked::floor_mod(alpha[j], b);
    rep[0] = checked::add(rep[0], checked::mul(b, q[j - 1]));
  }
  RegionReduction out{std::move(rep), std::vector<std::int64_t>(m - 1, 0)};
  std::int64_t tail = 0;
  for (std::size_t j = m - 1; j-- > 0;) {
    tail = checked::add(tail, q[j]);
    out.shift[j] = -tail;
  }
  return out;
}

bool in_region(const CurveParams& params, const IntTuple& alpha) {
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    if (alpha[j] < 0 || alpha[j] >= params.b()) return false;
  }
  return true;
}

Box::Box(IntTuple lo_, IntTuple hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw Error(ErrorCode::length_mismatch, "box bounds differ in length");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      throw Error(ErrorCode::invalid_argument,
                  "box lower bound exceeds upper bound: " + lo.to_string() + " > " + hi.to_string());
    }
  }
}

bool Box::contains(const IntTuple& t) const {
  if (t.size() != lo.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < lo[i] || t[i] > hi[i]) return false;
  }
  return true;
}

std::uint64_t Box::cardinality() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    // hi - lo computed unsigned to survive the full int64 span.
    std::uint64_t side = static_cast<std::uint64_t>(hi[i]) - static_cast<std::uint64_t>(lo[i]);
    if (side == kMax) return kMax;
    ++side;
    if (__builtin_mul_overflow(n, side, &n)) return kMax;
  }
  return n;
}

BoxRange::iterator::iterator(const Box* box, bool done) : box_(box), done_(done) {
  if (!done_) current_ = box_->lo;
}

BoxRange::iterator& BoxRange::iterator::operator++() {
  for (std::size_t k = current_.size(); k-- > 0;) {
    if (current_[k] < box_->hi[k]) {
      ++current_[k];
      return *this;
    }
    current_[k] = box_->lo[k];
  }
  done_ = true;
  return *this;
}

BoxRange box_tuples(Box box) { return BoxRange(std::move(box)); }

}  // namespace wsgap
