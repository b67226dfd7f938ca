#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wsgap {

/// Curve data for f(y) = g(x) with deg f = a, deg g = b, gcd(a, b) = 1,
/// together with the number m of designated rational points P_1..P_m.
/// Coordinate 0 of every tuple refers to P_1 (the point at infinity).
class CurveParams {
 public:
  static constexpr std::int64_t kMaxDegree = std::int64_t{1} << 16;

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::size_t m() const noexcept { return m_; }
  std::int64_t genus() const noexcept { return genus_; }
  std::optional<std::int64_t> field_size() const noexcept { return field_size_; }

  // Non-fatal notes collected during validation (e.g. field smaller than m).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  // Same curve, different point count; revalidated.
  CurveParams with_points(std::size_t m) const;

  friend bool operator==(const CurveParams& x, const CurveParams& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_ &&
           x.field_size_ == y.field_size_;
  }

 private:
  friend CurveParams new_curve_params(std::int64_t, std::int64_t, std::int64_t,
                                      std::optional<std::int64_t>);
  CurveParams() = default;

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::size_t m_ = 0;
  std::int64_t genus_ = 0;
  std::optional<std::int64_t> field_size_;
  std::vector<std::string> warnings_;
};

// Throws Error{not_coprime | bad_point_count | bad_degree}. A field smaller
// than m only adds a warning.
CurveParams new_curve_params(std::int64_t a, std::int64_t b, std::int64_t m,
                             std::optional<std::int64_t> field_size = std::nullopt);

/// Integer m-tuple: a divisor exponent vector or semigroup element.
/// Ordered lexicographically.
class IntTuple {
 public:
  IntTuple() = default;
  explicit IntTuple(std::size_t m, std::int64_t fill = 0) : coords_(m, fill) {}
  IntTuple(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit IntTuple(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t& operator[](std::size_t i) noexcept { return coords_[i]; }
  std::int64_t operator[](std::size_t i) const noexcept { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  auto begin() noexcept { return coords_.begin(); }
  auto end() noexcept { return coords_.end(); }

  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  // Checked sum of the coordinates (degree of the divisor).
  std::int64_t sum() const;

  // "(1,2,3)"
  std::string to_string() const;

  friend auto operator<=>(const IntTuple&, const IntTuple&) = default;
  friend bool operator==(const IntTuple&, const IntTuple&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

IntTuple operator+(const IntTuple& x, const IntTuple& y);
IntTuple operator-(const IntTuple& x, const IntTuple& y);

// Componentwise x <= y.
bool dominated_by(const IntTuple& x, const IntTuple& y);

// Unit vector e_i of length m (0-based i).
IntTuple unit(std::size_t m, std::size_t i);

IntTuple lub(std::span<const IntTuple> ts);
IntTuple glb(std::span<const IntTuple> ts);

/// Generators eta^2..eta^m of the translation lattice: eta^i carries -b at
/// point i-1 and +b at point i (1-based points).
struct ThetaBasis {
  std::vector<IntTuple> generators;

  // sum_j coeffs[j] * generators[j]
  IntTuple combine(std::span<const std::int64_t> coeffs) const;
};

ThetaBasis theta_basis(const CurveParams& params);

// Lattice element (-b*sum(steps), b*steps[0], ..., b*steps[m-2]); `steps`
// holds one multiple of b*(e_j - e_1) per point j = 2..m.
IntTuple theta_element(const CurveParams& params, std::span<const std::int64_t> steps);

struct RegionReduction {
  IntTuple rep;
  // Coefficients on ThetaBasis::generators with rep = alpha + sum shift[j]*eta^{j+2}.
  std::vector<std::int64_t> shift;
};

// Unique representative of alpha + Theta with coordinates 2..m in [0, b).
RegionReduction reduce_to_region(const CurveParams& params, const IntTuple& alpha);

bool in_region(const CurveParams& params, const IntTuple& alpha);

/// Inclusive lattice box.
struct Box {
  IntTuple lo;
  IntTuple hi;

  Box() = default;
  Box(IntTuple lo_, IntTuple hi_);

  std::size_t dims() const noexcept { return lo.size(); }
  bool contains(const IntTuple& t) const;
  // Number of lattice points; saturates at UINT64_MAX.
  std::uint64_t cardinality() const noexcept;
};

/// Lexicographic stream over every lattice point of a box.
class BoxRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = IntTuple;
    using difference_type = std::ptrdiff_t;
    using pointer = const IntTuple*;
    using reference = const IntTuple&;

    iterator() = default;
    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& x, const iterator& y) noexcept {
      return x.done_ == y.done_ && (x.done_ || x.current_ == y.current_);
    }

   private:
    friend class BoxRange;
    iterator(const Box* box, bool done);

    const Box* box_ = nullptr;
    IntTuple current_;
    bool done_ = true;
  };

  explicit BoxRange(Box box) : box_(std::move(box)) {}
  iterator begin() const { return iterator(&box_, false); }
  iterator end() const { return iterator(&box_, true); }

 private:
  Box box_;
};

BoxRange box_tuples(Box box);

// Calls fn(t) for every t >= 0 of length m with sum(t) <= max_sum, in
// lexicographic order. `first` restricts coordinate 0 to a single value.
template <class Fn>
void for_each_bounded_sum(std::size_t m, std::int64_t max_sum, Fn&& fn,
                          std::optional<std::int64_t> first = std::nullopt);

}  // namespace wsgap

#include "wsgap/detail/bounded_sum.hpp"
