#pragma once

#include "latcoh/laufer.hpp"

#include <optional>
#include <vector>

namespace latcoh {

struct Leg {
  i64 alpha = 1;
  i64 omega = 0;
  std::vector<int> chain;  ///< vertices from the node outward
};

struct SeifertData {
  int node = -1;
  i64 b0 = 0;
  std::vector<Leg> legs;
  Rat e;  ///< b0 + sum omega/alpha (connector term included for two-node sides)
};

/// Legs at `node`: the chains hanging off it that avoid every vertex in `exclude`.
SeifertData seifert_data(const Lattice& lat, int node, const std::vector<int>& exclude = {});

struct TwoNodeData {
  int n1 = -1, n2 = -1;
  std::vector<int> connector;  ///< from n1 to n2, nodes excluded
  SeifertData left, right;
  i64 alpha0 = 1, omega0 = 0, omegat0 = 0, tau = -1;
  Rat e, et, eps;
};

TwoNodeData two_node_data(const Lattice& lat);

/// x(i, j) for the canonical class through the ceiling recursions.
Vec two_node_x_coeffs(const Lattice& lat, const TwoNodeData& d, i64 i, i64 j);
/// Reduced weight of a chain hanging off a bad vertex of coefficient m0
/// (left/right legs and the connector share this recursion).
Vec chain_x_coeffs(const Lattice& lat, const std::vector<int>& chain, i64 m0, i64 tail);

i64 two_node_wbar(const TwoNodeData& d, i64 i, i64 j);
i64 two_node_delta1(const TwoNodeData& d, i64 i, i64 j);
i64 two_node_delta2(const TwoNodeData& d, i64 i, i64 j);

/// Row-major table over R(0, bound); the last coordinate varies fastest.
struct WeightRectangle {
  int nu = 0;
  Vec bound;
  Vec w;

  i64 points() const { return static_cast<i64>(w.size()); }
  i64 index(const Vec& p) const;
  Vec point(i64 idx) const;
  i64 at(const Vec& p) const { return w[index(p)]; }
  bool contains(const Vec& p) const;
  /// Weight of the cube with corner p spanned by the coordinates in mask.
  i64 cube(const Vec& p, unsigned mask) const;
  WeightRectangle restrict_to(const Vec& smaller) const;
};

WeightRectangle weights_general(XCycleEngine& eng, const Vec& bound);
WeightRectangle two_node_weights(const TwoNodeData& d, const Vec& bound);

struct SolBound {
  Vec scan;                  ///< box scanned for Sol
  std::optional<Vec> bound;  ///< componentwise max of Sol
};

SolBound bound_two_node(const TwoNodeData& d);
/// Projection of floor(-k_r) onto the bad coordinates.
Vec i_can(const XCycleEngine& eng);
Vec bound_general(XCycleEngine& eng);

}  // namespace latcoh
