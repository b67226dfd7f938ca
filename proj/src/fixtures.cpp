#include <algorithm>
#include <array>
#include <initializer_list>

#include "wsgap/verify.hpp"

namespace wsgap {
namespace {

using Triples = std::initializer_list<std::array<std::int64_t, 3>>;

// Inclusive coordinate ranges; one slab per component of the union.
struct Slab {
  std::array<std::int64_t, 3> lo;
  std::array<std::int64_t, 3> hi;
};

std::vector<IntTuple> sorted_unique(std::vector<IntTuple> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<IntTuple> from_triples(Triples triples) {
  std::vector<IntTuple> out;
  for (const auto& t : triples) out.push_back(IntTuple{t[0], t[1], t[2]});
  return sorted_unique(std::move(out));
}

std::vector<IntTuple> from_slabs(std::initializer_list<Slab> slabs) {
  std::vector<IntTuple> out;
  for (const Slab& s : slabs) {
    for (const IntTuple& t : box_tuples(Box{IntTuple{s.lo[0], s.lo[1], s.lo[2]},
                                            IntTuple{s.hi[0], s.hi[1], s.hi[2]}})) {
      out.push_back(t);
    }
  }
  return sorted_unique(std::move(out));
}

Fixture nabla_fixture(const CurveParams& params, int k, IntTuple anchor,
                      std::initializer_list<Slab> slabs) {
  return Fixture{"hermitian-q4-nabla-gamma" + std::to_string(k),
                 params,
                 FixtureKind::nabla_bar,
                 std::move(anchor),
                 from_slabs(slabs),
                 "Hermitian curve over F_16, three points: nabla-bar(gamma^" + std::to_string(k) +
                     ") in N_0^3"};
}

}  // namespace

const char* to_string(FixtureKind kind) noexcept {
  switch (kind) {
    case FixtureKind::relative_maximals_positive: return "relative_maximals";
    case FixtureKind::pure_gaps: return "pure_gaps";
    case FixtureKind::nabla_bar: return "nabla_bar";
    case FixtureKind::sigma_pairs: return "sigma_pairs";
  }
  return "?";
}

std::vector<Fixture> builtin_fixtures() {
  const CurveParams herm = new_curve_params(4, 5, 3, 16);
  const CurveParams nt = new_curve_params(4, 7, 3, 8);

  std::vector<Fixture> out;
  out.push_back({"hermitian-q4-relmax", herm, FixtureKind::relative_maximals_positive,
                 std::nullopt,
                 from_triples({{1, 1, 11}, {1, 6, 6}, {1, 11, 1}, {2, 2, 7}, {2, 7, 2},
                               {3, 3, 3}, {6, 1, 6}, {6, 6, 1}, {7, 2, 2}, {11, 1, 1}}),
                 "Hermitian curve over F_16, three points: relative maximals in N^3"});
  out.push_back({"hermitian-q4-puregaps", herm, FixtureKind::pure_gaps, std::nullopt,
                 from_triples({{1, 1, 1}, {2, 1, 1}, {1, 1, 2}, {1, 2, 1}, {3, 1, 1}, {1, 1, 3},
                               {1, 3, 1}, {2, 1, 2}, {2, 2, 1}, {1, 2, 2}, {3, 1, 2}, {2, 1, 3},
                               {3, 2, 1}, {1, 2, 3}, {2, 3, 1}, {1, 3, 2}}),
                 "Hermitian curve over F_16, three points: pure gaps"});
  out.push_back({"norm-trace-2-3-relmax", nt, FixtureKind::relative_maximals_positive,
                 std::nullopt,
                 from_triples({{17, 1, 1}, {10, 1, 8}, {3, 1, 15}, {13, 2, 2}, {6, 2, 9},
                               {9, 3, 3}, {2, 3, 10}, {5, 4, 4}, {1, 5, 5}, {10, 8, 1},
                               {3, 8, 8}, {6, 9, 2}, {2, 10, 3}, {3, 15, 1}}),
                 "norm-trace curve over F_8, three points: relative maximals in N^3"});
  // 61 triples.
  out.push_back({"norm-trace-2-3-puregaps", nt, FixtureKind::pure_gaps, std::nullopt,
                 from_triples({
                     {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 2, 1}, {1, 2, 2},
                     {1, 2, 3}, {1, 2, 4}, {1, 3, 1}, {1, 3, 2}, {1, 3, 3}, {1, 3, 4},
                     {1, 4, 1}, {1, 4, 2}, {1, 4, 3}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3},
                     {2, 1, 4}, {2, 1, 8}, {2, 1, 9}, {2, 2, 1}, {2, 2, 2}, {2, 2, 3},
                     {2, 2, 4}, {2, 2, 8}, {2, 3, 1}, {2, 3, 2}, {2, 4, 1}, {2, 4, 2},
                     {2, 8, 1}, {2, 8, 2}, {2, 9, 1}, {3, 1, 1}, {3, 1, 2}, {3, 1, 3},
                     {3, 1, 4}, {3, 2, 1}, {3, 2, 2}, {3, 2, 3}, {3, 2, 4}, {3, 3, 1},
                     {3, 3, 2}, {3, 4, 1}, {3, 4, 2}, {5, 1, 1}, {5, 1, 2}, {5, 1, 3},
                     {5, 2, 1}, {5, 2, 2}, {5, 2, 3}, {5, 3, 1}, {5, 3, 2}, {6, 1, 1},
                     {6, 1, 2}, {6, 1, 3}, {6, 2, 1}, {6, 3, 1}, {9, 1, 1}, {9, 1, 2},
                     {9, 2, 1},
                 }),
                 "norm-trace curve over F_8, three points: pure gaps"});

  out.push_back(nabla_fixture(herm, 1, {1, 1, 11},
                              {{{1, 0, 0}, {1, 0, 10}}, {{0, 1, 0}, {0, 1, 10}},
                               {{0, 0, 11}, {0, 0, 11}}}));
  // First slab: (1, r, s) with 0 <= r, s <= 5.
  out.push_back(nabla_fixture(herm, 2, {1, 6, 6},
                              {{{1, 0, 0}, {1, 5, 5}}, {{0, 6, 0}, {0, 6, 5}},
                               {{0, 0, 6}, {0, 5, 6}}}));
  out.push_back(nabla_fixture(herm, 3, {1, 11, 1},
                              {{{1, 0, 0}, {1, 10, 0}}, {{0, 11, 0}, {0, 11, 0}},
                               {{0, 0, 1}, {0, 10, 1}}}));
  out.push_back(nabla_fixture(herm, 4, {2, 2, 7},
                              {{{2, 0, 0}, {2, 1, 6}}, {{0, 2, 0}, {1, 2, 6}},
                               {{0, 0, 7}, {1, 1, 7}}}));
  out.push_back(nabla_fixture(herm, 5, {2, 7, 2},
                              {{{2, 0, 0}, {2, 6, 1}}, {{0, 0, 2}, {1, 6, 2}},
                               {{0, 7, 0}, {1, 7, 1}}}));
  out.push_back(nabla_fixture(herm, 6, {3, 3, 3},
                              {{{3, 0, 0}, {3, 2, 2}}, {{0, 3, 0}, {2, 3, 2}},
                               {{0, 0, 3}, {2, 2, 3}}}));
  out.push_back(nabla_fixture(herm, 7, {6, 1, 6},
                              {{{6, 0, 0}, {6, 0, 5}}, {{0, 1, 0}, {5, 1, 5}},
                               {{0, 0, 6}, {5, 0, 6}}}));
  out.push_back(nabla_fixture(herm, 8, {6, 6, 1},
                              {{{6, 0, 0}, {6, 5, 0}}, {{0, 6, 0}, {5, 6, 0}},
                               {{0, 0, 1}, {5, 5, 1}}}));
  out.push_back(nabla_fixture(herm, 9, {7, 2, 2},
                              {{{7, 0, 0}, {7, 1, 1}}, {{0, 2, 0}, {6, 2, 1}},
                               {{0, 0, 2}, {6, 1, 2}}}));
  out.push_back(nabla_fixture(herm, 10, {11, 1, 1},
                              {{{11, 0, 0}, {11, 0, 0}}, {{0, 1, 0}, {10, 1, 0}},
                               {{0, 0, 1}, {10, 0, 1}}}));

  out.push_back({"hermitian-q4-sigma-pairs", herm.with_points(2), FixtureKind::sigma_pairs,
                 std::nullopt,
                 sorted_unique({IntTuple{1, 11}, IntTuple{2, 7}, IntTuple{3, 3}, IntTuple{6, 6},
                                IntTuple{7, 2}, IntTuple{11, 1}}),
                 "Hermitian curve over F_16, two points: maximal pairs (l_i, l'_sigma(i))"});
  return out;
}

}  // namespace wsgap
