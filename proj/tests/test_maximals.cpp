#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "wsgap/error.hpp"
#include "wsgap/maximals.hpp"

using namespace wsgap;

TEST(Maximals, RegionGeneratorsHermitian) {
  const auto p = new_curve_params(4, 5, 3);
  const auto abs = absolute_maximals_region(p);
  EXPECT_EQ(abs.kind, MaximalKind::absolute);
  EXPECT_EQ(abs.region_reps, (std::vector<IntTuple>{{-6, 4, 4}, {-2, 3, 3}, {0, 0, 0}, {2, 2, 2}, {6, 1, 1}}));
  const auto rel = relative_maximals_region(p);
  EXPECT_EQ(rel.region_reps, (std::vector<IntTuple>{{-1, 4, 4}, {3, 3, 3}, {5, 0, 0}, {7, 2, 2}, {11, 1, 1}}))
      << "relative generators shift by (b(m-2), 0, 0) against the absolute ones";
}

TEST(Maximals, TwoPointsCoincide) {
  const auto p = new_curve_params(4, 5, 2);
  EXPECT_EQ(absolute_maximals_region(p).region_reps, relative_maximals_region(p).region_reps);
}

TEST(Maximals, FamiliesHaveBElementsInRegion) {
  for (auto [a, b, m] : {std::tuple{2, 3, 2}, {3, 7, 4}, {5, 9, 4}, {4, 9, 5}}) {
    const auto p = new_curve_params(a, b, m);
    for (const auto& set : {absolute_maximals_region(p), relative_maximals_region(p)}) {
      EXPECT_EQ(set.region_reps.size(), static_cast<std::size_t>(b));
      for (const auto& r : set.region_reps) EXPECT_TRUE(in_region(p, r)) << r.to_string();
      EXPECT_TRUE(std::is_sorted(set.region_reps.begin(), set.region_reps.end()));
    }
  }
}

TEST(Maximals, RequireTwoPoints) {
  EXPECT_THROW(absolute_maximals_region(new_curve_params(4, 5, 1)), Error);
}

// Box expansion against a scan of the whole box.
TEST(Maximals, ExpandInBoxMatchesScan) {
  for (auto [a, b, m] : {std::tuple{4, 5, 3}, {3, 4, 3}, {2, 5, 3}, {4, 7, 4}}) {
    const auto p = new_curve_params(a, b, m);
    const Box box{IntTuple(m, -(b + 1)), IntTuple(m, 2 * p.genus())};
    for (const auto& set : {absolute_maximals_region(p), relative_maximals_region(p)}) {
      std::set<IntTuple> reps(set.region_reps.begin(), set.region_reps.end());
      std::vector<IntTuple> scanned;
      for (const auto& t : box_tuples(box)) {
        // rep = t + Theta-shift: coordinates 2..m reduced mod b, degree kept.
        IntTuple r = t;
        std::int64_t moved = 0;
        for (std::size_t j = 1; j < static_cast<std::size_t>(m); ++j) {
          const std::int64_t v = ((t[j] % b) + b) % b;
          moved += t[j] - v;
          r[j] = v;
        }
        r[0] += moved;
        if (reps.count(r)) scanned.push_back(t);
      }
      EXPECT_EQ(expand_in_box(set, box), scanned) << "a=" << a << " b=" << b << " m=" << m;
    }
  }
}

TEST(Maximals, PositiveRelativeMaximalsHermitian) {
  const auto p = new_curve_params(4, 5, 3);
  const auto got = expand_in_box(relative_maximals_region(p), Box{IntTuple(3, 1), IntTuple(3, 11)});
  const std::vector<IntTuple> want{{1, 1, 11}, {1, 6, 6}, {1, 11, 1}, {2, 2, 7}, {2, 7, 2},
                                   {3, 3, 3},  {6, 1, 6}, {6, 6, 1},  {7, 2, 2}, {11, 1, 1}};
  EXPECT_EQ(got, want);
}

TEST(Maximals, LambdaNonneg) {
  const auto p = new_curve_params(4, 5, 3);
  const auto lam = lambda_nonneg(p);
  EXPECT_EQ(lam.size(), 10u);
  for (const auto& t : lam) {
    for (auto v : t) EXPECT_GT(v, 0);
  }
  const auto wide = lambda_nonneg(p, true);
  std::vector<IntTuple> extra;
  std::set_difference(wide.begin(), wide.end(), lam.begin(), lam.end(), std::back_inserter(extra));
  EXPECT_EQ(extra, (std::vector<IntTuple>{{0, 0, 5}, {0, 5, 0}, {5, 0, 0}}));

  const auto two = lambda_nonneg(p.with_points(2));
  EXPECT_EQ(two, (std::vector<IntTuple>{{1, 11}, {2, 7}, {3, 3}, {6, 6}, {7, 2}, {11, 1}}));
}

TEST(Maximals, LambdaNonnegIsNonnegativePartOfFamily) {
  for (auto [a, b, m] : {std::tuple{4, 7, 3}, {5, 6, 4}, {3, 8, 3}}) {
    const auto p = new_curve_params(a, b, m);
    // Nonnegative relative maximals have degree at most max generator degree.
    std::int64_t top = 0;
    const auto rel = relative_maximals_region(p);
    for (const auto& r : rel.region_reps) top = std::max(top, r.sum());
    auto all = expand_in_box(rel, Box{IntTuple(m, 0), IntTuple(m, top)});
    EXPECT_EQ(lambda_nonneg(p, true), all);
  }
}
