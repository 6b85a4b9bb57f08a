#pragma once

#include "latcoh/reduction.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace latcoh {

struct Monomial {
  Int coeff;
  Vec exp;  ///< scaled by SeriesRep::den
  ClassLabel label;
};

/// sum coeff t^{exp/den} / prod (1 - t^{a_i/den}); labels track H-classes
/// when the series comes from a graph (empty otherwise).
struct SeriesRep {
  int dim = 0;
  i64 den = 1;
  std::vector<Monomial> numerator;
  std::vector<Vec> denominator;
  std::vector<ClassLabel> den_labels;
  Vec factors;  ///< invariant factors of H, for label arithmetic
};

using Expansion = std::map<Vec, Int>;

SeriesRep z_series(const Lattice& lat);

/// Taylor coefficients with every exponent <= upper; restricted to one class
/// when `label` is given.
Expansion expand(const SeriesRep& s, const Vec& upper, const std::optional<ClassLabel>& label = std::nullopt);

/// Class-h part, then t_v = 1 off `coords`: keys are the kept coordinates (scaled).
Expansion reduce_to_coords(const SeriesRep& s, const std::vector<int>& coords, const Vec& upper,
                           const std::optional<ClassLabel>& label = std::nullopt);
Expansion reduce_to_nodes(const Lattice& lat, const SeriesRep& s, const Vec& upper_nodes, const ClassLabel& label);

/// Q(l') = sum of coefficients at exponents not >= l' (class-restricted if given).
Int counting_function(const SeriesRep& s, const Vec& l, const std::optional<ClassLabel>& label = std::nullopt);
/// Same, for the series with t_v = 1 off `coords`.
Int counting_function_coords(const SeriesRep& s, const std::vector<int>& coords, const Vec& l,
                             const std::optional<ClassLabel>& label = std::nullopt);

/// Coefficient table sum over subsets (-1)^{|I|+1} w(i, I) on R(0, bound - 1).
std::map<Vec, i64> reduced_series_from_weights(const WeightRectangle& rect);

/// One-variable polynomial / periodic constant.
using Poly = std::map<i64, Int>;
Int pc_one_variable(Poly numerator, const Vec& denominators);

/// Periodic constant of a series along a ray: constant term of Q(lambda * dir)
/// fitted on lambda >= start. dir must make the counting function polynomial there.
Int pc_along_ray(const SeriesRep& s, const Vec& dir, i64 start, int degree,
                 const std::optional<ClassLabel>& label = std::nullopt);

// ---------------------------------------------------------------- one node

/// l' = c0 E*_node + sum c_i E*_(end of leg i).
DualCycle seifert_lift(const Lattice& lat, const SeifertData& d, const Vec& c);
Rat seifert_ctilde(const SeifertData& d, const Vec& c);
Rat seifert_N(const SeifertData& d, const Vec& c, i64 ell);
Int seifert_pc(const SeifertData& d, const Vec& c);
/// Sum over -ct <= ell < -ct + floor(ct(s_h)) of max(0, -N).
Int seifert_window_sum(const SeifertData& d, const Vec& c, const Rat& ct_sh);
Int seifert_pc_ne(const SeifertData& d);

// ---------------------------------------------------------------- two nodes

/// (c0, ct0, cbar, c_1..c_d, ct_1..ct_dt).
struct TwoNodeLift {
  i64 c0 = 0, ct0 = 0, cbar = 0;
  Vec ci, cti;
};

TwoNodeLift parse_two_node_lift(const TwoNodeData& d, const Vec& flat);
DualCycle two_node_lift_cycle(const Lattice& lat, const TwoNodeData& d, const TwoNodeLift& c);
/// Node coefficients (c, ct) of the lift.
std::pair<Rat, Rat> two_node_cc(const TwoNodeData& d, const TwoNodeLift& c);
Rat two_node_N(const TwoNodeData& d, const TwoNodeLift& c, i64 l, i64 lt);
Rat two_node_Nt(const TwoNodeData& d, const TwoNodeLift& c, i64 l, i64 lt);
bool two_node_congruent(const TwoNodeData& d, i64 cbar, i64 l, i64 lt);

using Point2 = std::pair<i64, i64>;

struct TwoNodeMonoid {
  Point2 v1, v2;
  std::pair<Rat, Rat> cc;  ///< normalized into [0,1)^2
  Point2 shift;
  std::vector<Point2> box;  ///< congruent box points
  std::vector<Point2> sminus1, sminus2;
  std::vector<Point2> fplus;  ///< exponents l of t^{l + cc}, coefficient 1
  Int pc;
};

/// Searched v1, v2 when not supplied.
TwoNodeMonoid two_node_pc(const TwoNodeData& d, const TwoNodeLift& c,
                          std::optional<std::pair<Point2, Point2>> v = std::nullopt);
bool two_node_v_valid(const TwoNodeData& d, const TwoNodeLift& c, Point2 v1, Point2 v2);
Int two_node_pc_ne(const TwoNodeData& d);

// ---------------------------------------------------------------- polynomial part

struct PolyPart2 {
  std::map<Vec, Int> fplus, q, q1, q2;  ///< exponent (scaled) -> coefficient
};

PolyPart2 polynomial_part_2var(const SeriesRep& s);
/// Numerator Q + Q1 (1 - t^a2) + Q2 (1 - t^a1) + f+ (1 - t^a1)(1 - t^a2).
SeriesRep recompose(const SeriesRep& shape, const PolyPart2& parts);

// ---------------------------------------------------------------- lens spaces

Rat dedekind_sum(i64 q, i64 p);

struct LensRecord {
  Rat chi_formula;
  Rat chi_direct;
  Rat k2s_formula;  ///< K^2 + |V|
  Rat k2s_direct;
  Rat sw;
};

LensRecord lens_invariants(i64 p, i64 q, i64 a);

}  // namespace latcoh
