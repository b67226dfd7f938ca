#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "wsgap/checked.hpp"
#include "wsgap/error.hpp"
#include "wsgap/lattice.hpp"

using namespace wsgap;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no wsgap::Error thrown";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(CurveParams, GenusAndEcho) {
  const auto p = new_curve_params(4, 5, 3, 16);
  EXPECT_EQ(p.genus(), 6);
  EXPECT_EQ(p.m(), 3u);
  EXPECT_EQ(p.field_size(), 16);
  EXPECT_TRUE(p.warnings().empty());
  EXPECT_EQ(new_curve_params(4, 7, 3).genus(), 9);
  EXPECT_EQ(new_curve_params(5, 9, 2).genus(), 16);
}

TEST(CurveParams, Rejections) {
  EXPECT_EQ(code_of([] { new_curve_params(4, 6, 3); }), ErrorCode::not_coprime);
  EXPECT_EQ(code_of([] { new_curve_params(4, 5, 6); }), ErrorCode::bad_point_count);
  EXPECT_EQ(code_of([] { new_curve_params(4, 5, 0); }), ErrorCode::bad_point_count);
  EXPECT_EQ(code_of([] { new_curve_params(1, 5, 1); }), ErrorCode::bad_degree);
  EXPECT_EQ(code_of([] { new_curve_params(3, (1 << 16) + 1, 2); }), ErrorCode::bad_degree);
  EXPECT_NO_THROW(new_curve_params(4, 5, 5));
  EXPECT_NO_THROW(new_curve_params(4, 5, 1));
}

TEST(CurveParams, SmallFieldOnlyWarns) {
  const auto p = new_curve_params(4, 5, 5, 4);
  ASSERT_EQ(p.warnings().size(), 1u);
  EXPECT_NE(p.warnings()[0].find("FieldTooSmall"), std::string::npos);
}

TEST(CurveParams, WithPointsRevalidates) {
  const auto p = new_curve_params(4, 5, 3, 16);
  EXPECT_EQ(p.with_points(2).m(), 2u);
  EXPECT_EQ(code_of([&] { p.with_points(7); }), ErrorCode::bad_point_count);
}

TEST(IntTuple, ArithmeticAndOrder) {
  const IntTuple x{1, 2, 3}, y{0, 5, -1};
  EXPECT_EQ(x + y, (IntTuple{1, 7, 2}));
  EXPECT_EQ(x - y, (IntTuple{1, -3, 4}));
  EXPECT_EQ(x.sum(), 6);
  EXPECT_EQ(x.to_string(), "(1,2,3)");
  EXPECT_LT(y, x);
  EXPECT_TRUE(dominated_by(IntTuple{0, 2, 3}, x));
  EXPECT_FALSE(dominated_by(y, x));
  EXPECT_EQ(unit(3, 1), (IntTuple{0, 1, 0}));
  EXPECT_EQ(code_of([&] { (void)(x + IntTuple{1, 2}); }), ErrorCode::length_mismatch);
}

TEST(IntTuple, OverflowIsReported) {
  const IntTuple big{std::numeric_limits<std::int64_t>::max(), 0};
  EXPECT_EQ(code_of([&] { (void)(big + IntTuple{1, 0}); }), ErrorCode::overflow);
  EXPECT_EQ(code_of([&] { (void)IntTuple({std::numeric_limits<std::int64_t>::max(), 1}).sum(); }),
            ErrorCode::overflow);
}

TEST(IntTuple, LubGlb) {
  const std::vector<IntTuple> ts{{1, 7, 2}, {3, 0, 2}, {-1, 4, 9}};
  EXPECT_EQ(lub(ts), (IntTuple{3, 7, 9}));
  EXPECT_EQ(glb(ts), (IntTuple{-1, 0, 2}));
  EXPECT_EQ(code_of([] { lub(std::vector<IntTuple>{}); }), ErrorCode::empty_input);
  const std::vector<IntTuple> mixed{{1, 2}, {1, 2, 3}};
  EXPECT_EQ(code_of([&] { glb(mixed); }), ErrorCode::length_mismatch);
}

TEST(Checked, FloorAndCeilDivision) {
  for (std::int64_t x = -30; x <= 30; ++x) {
    for (std::int64_t y : {-7, -3, -1, 1, 2, 5}) {
      const auto q = checked::floor_div(x, y);
      EXPECT_EQ(q, static_cast<std::int64_t>(std::floor(static_cast<double>(x) / y)));
      EXPECT_EQ(checked::ceil_div(x, y), static_cast<std::int64_t>(std::ceil(static_cast<double>(x) / y)));
    }
    const auto r = checked::floor_mod(x, 5);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, 5);
    EXPECT_EQ((x - r) % 5, 0);
  }
}

TEST(Theta, BasisShape) {
  const auto p = new_curve_params(4, 5, 3);
  const auto basis = theta_basis(p);
  ASSERT_EQ(basis.generators.size(), 2u);
  EXPECT_EQ(basis.generators[0], (IntTuple{-5, 5, 0}));
  EXPECT_EQ(basis.generators[1], (IntTuple{0, -5, 5}));
  const std::vector<std::int64_t> c{2, -1};
  EXPECT_EQ(basis.combine(c).sum(), 0);
  EXPECT_EQ(code_of([] { theta_basis(new_curve_params(4, 5, 1)); }), ErrorCode::bad_point_count);
}

TEST(Theta, ElementsHaveDegreeZero) {
  const auto p = new_curve_params(5, 7, 4);
  const std::vector<std::int64_t> steps{1, -2, 3};
  const IntTuple t = theta_element(p, steps);
  EXPECT_EQ(t, (IntTuple{-14, 7, -14, 21}));
  EXPECT_EQ(t.sum(), 0);
  // Both descriptions generate the same lattice.
  const auto basis = theta_basis(p);
  const std::vector<std::int64_t> coeffs{2, 1, 3};  // telescoping sums of the steps
  EXPECT_EQ(basis.combine(coeffs), t);
}

TEST(Region, ReductionExamples) {
  const auto p = new_curve_params(4, 5, 3);
  auto r = reduce_to_region(p, IntTuple{0, -1, 0});
  EXPECT_EQ(r.rep, (IntTuple{-5, 4, 0}));
  EXPECT_EQ(r.shift, (std::vector<std::int64_t>{1, 0}));

  r = reduce_to_region(p, IntTuple{1, 6, 6});
  EXPECT_EQ(r.rep, (IntTuple{11, 1, 1}));
  const auto basis = theta_basis(p);
  EXPECT_EQ(IntTuple({1, 6, 6}) + basis.combine(r.shift), r.rep);
}

TEST(Region, ReductionIsCanonical) {
  const auto p = new_curve_params(3, 7, 4);
  const auto basis = theta_basis(p);
  for (std::int64_t x = -9; x <= 9; x += 3) {
    for (std::int64_t y = -15; y <= 15; y += 4) {
      for (std::int64_t z = -8; z <= 20; z += 5) {
        const IntTuple alpha{x, y, z, y - z};
        const auto red = reduce_to_region(p, alpha);
        EXPECT_TRUE(in_region(p, red.rep));
        EXPECT_EQ(alpha + basis.combine(red.shift), red.rep);
        EXPECT_EQ(red.rep.sum(), alpha.sum());
        const std::vector<std::int64_t> steps{2, -1, 1};
        EXPECT_EQ(reduce_to_region(p, alpha + theta_element(p, steps)).rep, red.rep);
      }
    }
  }
}

TEST(Box, ValidationAndCardinality) {
  EXPECT_EQ(code_of([] { Box(IntTuple{0, 3}, IntTuple{1, 2}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { Box(IntTuple{0}, IntTuple{1, 2}); }), ErrorCode::length_mismatch);
  const Box box{IntTuple{-1, 0, 2}, IntTuple{1, 3, 2}};
  EXPECT_EQ(box.cardinality(), 12u);
  EXPECT_TRUE(box.contains(IntTuple{0, 3, 2}));
  EXPECT_FALSE(box.contains(IntTuple{0, 4, 2}));
  const Box huge{IntTuple(8, 0), IntTuple(8, std::int64_t{1} << 40)};
  EXPECT_EQ(huge.cardinality(), std::numeric_limits<std::uint64_t>::max());
}

TEST(Box, StreamIsLexicographicAndComplete) {
  const Box box{IntTuple{-1, 0, 2}, IntTuple{1, 3, 3}};
  std::vector<IntTuple> seen;
  for (const auto& t : box_tuples(box)) seen.push_back(t);
  std::vector<IntTuple> want;
  for (std::int64_t x = -1; x <= 1; ++x) {
    for (std::int64_t y = 0; y <= 3; ++y) {
      for (std::int64_t z = 2; z <= 3; ++z) want.push_back(IntTuple{x, y, z});
    }
  }
  EXPECT_EQ(seen, want);
}

TEST(BoundedSum, CountsMatchBinomials) {
  // Nonnegative m-tuples with sum <= s number C(s + m, m).
  auto binom = [](std::int64_t n, std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::int64_t s = 0; s <= 9; ++s) {
      std::int64_t count = 0;
      IntTuple last;
      bool ordered = true;
      for_each_bounded_sum(m, s, [&](const IntTuple& t) {
        ++count;
        if (count > 1) ordered = ordered && last < t;
        last = t;
        EXPECT_LE(t.sum(), s);
      });
      EXPECT_EQ(count, binom(s + static_cast<std::int64_t>(m), static_cast<std::int64_t>(m)));
      EXPECT_TRUE(ordered);
    }
  }
  std::int64_t fixed = 0;
  for_each_bounded_sum(3, 5, [&](const IntTuple& t) { EXPECT_EQ(t[0], 2); ++fixed; }, 2);
  EXPECT_EQ(fixed, 10);  // pairs with sum <= 3
}
