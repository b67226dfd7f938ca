#pragma once

// Slow reference computations used only by the tests. Nothing here calls
// into the library's oracle, kernels or gap engine.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using Vec = std::vector<std::int64_t>;

inline bool in_numerical_semigroup(std::int64_t a, std::int64_t b, std::int64_t t) {
  if (t < 0) return false;
  for (std::int64_t x = 0; x * a <= t; ++x) {
    if ((t - x * a) % b == 0) return true;
  }
  return false;
}

inline Vec numerical_semigroup_gaps(std::int64_t a, std::int64_t b) {
  Vec out;
  for (std::int64_t t = 0; t < a * b; ++t) {
    if (!in_numerical_semigroup(a, b, t)) out.push_back(t);
  }
  return out;
}

inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

// All absolute maximal elements reachable with lattice steps in [-radius,
// radius]^(m-1), materialized once. Queries scan the whole list.
class Curve {
 public:
  Curve(std::int64_t a, std::int64_t b, std::size_t m, std::int64_t coord_bound)
      : a_(a), b_(b), m_(m) {
    const std::int64_t radius =
        (a * b + coord_bound) / b + static_cast<std::int64_t>(m) * (coord_bound + b) / b + 2;
    std::vector<Vec> reps;
    reps.push_back(Vec(m, 0));
    for (std::int64_t i = 1; i < b; ++i) {
      Vec r(m, i);
      r[0] = a * (b - i) - b * static_cast<std::int64_t>(m - 1);
      reps.push_back(r);
    }
    Vec d(m - 1, -radius);
    for (;;) {
      for (const Vec& r : reps) {
        Vec g = r;
        for (std::size_t j = 1; j < m; ++j) {
          g[j] += b * d[j - 1];
          g[0] -= b * d[j - 1];
        }
        if (std::all_of(g.begin(), g.end(), [&](std::int64_t v) {
              return v >= -b * radius - a * b && v <= coord_bound + a * b;
            })) {
          gammas_.push_back(g);
        }
      }
      std::size_t k = 0;
      while (k < d.size() && d[k] == radius) d[k++] = -radius;
      if (k == d.size()) break;
      ++d[k];
    }
  }

  std::size_t m() const { return m_; }
  std::int64_t genus() const { return (a_ - 1) * (b_ - 1) / 2; }

  bool member(const Vec& beta) const {
    std::vector<bool> hit(m_, false);
    for (const Vec& g : gammas_) {
      if (!below(g, beta)) continue;
      for (std::size_t k = 0; k < m_; ++k) hit[k] = hit[k] || g[k] == beta[k];
    }
    return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  }

  std::int64_t dim(const Vec& beta) const {
    std::set<std::int64_t> firsts;
    for (const Vec& g : gammas_) {
      if (below(g, beta)) firsts.insert(g[0]);
    }
    return static_cast<std::int64_t>(firsts.size());
  }

  bool gap(const Vec& alpha, bool pure) const {
    const std::int64_t d = dim(alpha);
    bool any = false, all = true;
    for (std::size_t k = 0; k < m_; ++k) {
      Vec s = alpha;
      --s[k];
      const bool drop = dim(s) == d;
      any = any || drop;
      all = all && drop;
    }
    return pure ? all : any;
  }

 private:
  static bool below(const Vec& g, const Vec& beta) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] > beta[k]) return false;
    }
    return true;
  }

  std::int64_t a_, b_;
  std::size_t m_;
  std::vector<Vec> gammas_;
};

}  // namespace brute
