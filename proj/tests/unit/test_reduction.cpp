#include "doctest.h"
#include "testkit.hpp"

using namespace latcoh;
using testkit::fixture;

TEST_CASE("two-node data") {
  Lattice lat(fixture("ex2"));
  auto d = two_node_data(lat);
  CHECK(d.eps == Rat(8, 175));
  CHECK(d.left.legs.size() == 3u);
  CHECK(d.right.legs.size() == 3u);
  for (auto& leg : d.left.legs) CHECK(leg.alpha == 5);
}

TEST_CASE("closed form weights agree with the generalized sequence") {
  for (auto name : {"ex1", "g622", "g626"}) {
    Lattice lat(fixture(name));
    auto d = two_node_data(lat);
    XCycleEngine eng(lat, {d.n1, d.n2}, canonical_spinc(lat));
    for (auto& p : testkit::grid({9, 9})) {
      CHECK(two_node_wbar(d, p[0], p[1]) == eng.weight(p));
      CHECK(two_node_x_coeffs(lat, d, p[0], p[1]) == eng.x(p));
      CHECK(two_node_delta1(d, p[0], p[1]) == eng.weight({p[0] + 1, p[1]}) - eng.weight(p));
      CHECK(two_node_delta2(d, p[0], p[1]) == eng.weight({p[0], p[1] + 1}) - eng.weight(p));
    }
  }
}

TEST_CASE("rectangle indexing") {
  WeightRectangle r;
  r.nu = 2;
  r.bound = {2, 3};
  r.w.assign(12, 0);
  for (i64 k = 0; k < r.points(); ++k) {
    CHECK(r.index(r.point(k)) == k);
    r.w[k] = k;
  }
  CHECK(r.point(1) == Vec{0, 1});
  CHECK(r.cube({0, 0}, 3u) == 5);
  CHECK(r.contains({2, 3}));
  CHECK_FALSE(r.contains({3, 0}));
  auto small = r.restrict_to({1, 1});
  CHECK(small.points() == 4);
  CHECK(small.at({1, 1}) == r.at({1, 1}));
}

TEST_CASE("bounds") {
  std::vector<std::pair<const char*, Vec>> rows = {
      {"g622", {10, 7}}, {"g623", {12, 7}}, {"g624", {20, 14}}, {"g626", {30, 34}}, {"g621", {7, 7}}};
  for (auto& [name, want] : rows) {
    Lattice lat(fixture(name));
    auto d = two_node_data(lat);
    auto sb = bound_two_node(d);
    REQUIRE(sb.bound);
    CHECK_MESSAGE(*sb.bound == want, name);
    XCycleEngine eng(lat, {d.n1, d.n2}, canonical_spinc(lat));
    auto ic = i_can(eng);
    auto bg = bound_general(eng);
    for (int t = 0; t < 2; ++t) CHECK(bg[t] >= ic[t]);
  }
}

TEST_CASE("weights beyond the bound never drop") {
  Lattice lat(fixture("g621"));
  auto d = two_node_data(lat);
  auto b = *bound_two_node(d).bound;
  for (i64 i = 0; i <= b[0] + 6; ++i)
    for (i64 j = 0; j <= b[1] + 6; ++j) {
      if (i >= b[0]) CHECK(two_node_delta1(d, i, j) >= 0);
      if (j >= b[1]) CHECK(two_node_delta2(d, i, j) >= 0);
    }
}

TEST_CASE("one bad vertex on a Seifert graph") {
  Lattice lat(fixture("tref"));
  XCycleEngine eng(lat, {0}, canonical_spinc(lat));
  auto b = bound_general(eng);
  auto rect = weights_general(eng, b);
  CHECK(rect.nu == 1);
  CHECK(rect.at({0}) == 0);
  CHECK(rect.w == Vec{0, 1, 0});
  CHECK(h0_module(rect).str() == "T+_0 + T_0(1)");
}
