#include "doctest.h"
#include "testkit.hpp"

#include <sstream>

using namespace latcoh;

namespace {

WeightRectangle g621_rect() {
  Lattice lat(testkit::fixture("g621"));
  auto d = two_node_data(lat);
  return two_node_weights(d, *bound_two_node(d).bound);
}

}  // namespace

TEST_CASE("text table") {
  auto rect = g621_rect();
  const std::string golden =
      " 1  1 -1 -2 -2 -1  0 -1\n"
      " 1  1 -1 -2 -2 -1  1  0\n"
      "-1 -1 -3 -4 -4 -3 -1 -1\n"
      "-2 -2 -4 -5 -5 -4 -2 -2\n"
      "-2 -2 -4 -5 -5 -4 -2 -2\n"
      "-1 -1 -3 -4 -4 -3 -1 -1\n"
      " 1  1 -1 -2 -2 -1  1  1\n"
      " 0  1 -1 -2 -2 -1  1  1\n";
  CHECK(render_ascii(rect) == golden);
  std::istringstream in(render_ascii(rect));
  std::string row;
  for (i64 j = rect.bound[1]; j >= 0; --j) {
    REQUIRE(static_cast<bool>(std::getline(in, row)));
    std::istringstream cells(row);
    for (i64 i = 0; i <= rect.bound[0]; ++i) {
      i64 v;
      REQUIRE(static_cast<bool>(cells >> v));
      CHECK(v == rect.at({i, j}));
    }
  }
}

TEST_CASE("svg markup") {
  auto rect = g621_rect();
  MonotonePath best;
  min_path_eu(rect, &best);
  auto svg = render_svg(rect, best);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("#ffe08a") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg == render_svg(rect, best));
  CHECK(render_svg(rect).find("#ffe08a") == std::string::npos);
}
