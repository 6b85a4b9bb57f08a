#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library except to load graphs and read its answers.

#include "latcoh/ehrhart.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/laufer.hpp"
#include "latcoh/plumbing.hpp"
#include "latcoh/reduction.hpp"
#include "latcoh/render.hpp"
#include "latcoh/series.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace testkit {

using namespace latcoh;

std::string fixture_path(const std::string& name);
PlumbingGraph fixture(const std::string& name);

/// Intersection matrix straight from the Euler numbers and edges.
IMatrix raw_form(const PlumbingGraph& g);
/// Sylvester test on -M with plain fraction-free elimination.
bool raw_negative_definite(const IMatrix& m);

/// Non-isomorphic trees on n vertices as parent arrays (parent[0] = -1).
std::vector<std::vector<int>> unlabeled_trees(int n);
PlumbingGraph tree_graph(const std::vector<int>& parent, const Vec& eulers);

/// Calls f on every negative definite tree with at most max_n vertices and
/// Euler numbers in [lo, hi].
void for_each_small_graph(int max_n, i64 lo, i64 hi, const std::function<void(const PlumbingGraph&)>& f);

/// Looks for y with 0 <= y <= z (coordinates in `fixed` pinned to z), y != z,
/// satisfying M y + offset <= 0 on the coordinates in `test`, by exhaustive
/// search. `skip_zero` excludes y = 0. Returns 1 if found, 0 if not, -1 when
/// the search exceeds `limit` nodes.
i64 count_below(const IMatrix& m, const Vec& z, const std::vector<char>& fixed, const std::vector<char>& test,
                const Vec& offset, bool skip_zero, i64 limit = 50'000'000);

/// Z_min is in the cone and nothing smaller is.
bool zmin_is_minimal(const PlumbingGraph& g, const Vec& z);
/// s is in the class of l and in S', and s - x leaves S' for every integral x > 0.
bool sh_is_minimal(const Lattice& lat, const DualCycle& l, const DualCycle& s);
/// x(i) satisfies the defining inequalities and is minimal among them.
bool xi_is_minimal(const Lattice& lat, const std::vector<int>& bad, const DualCycle& lk, const Vec& i,
                   const Vec& x);

/// Definition of s(q, p) as a sum of sawtooth products.
Rat dedekind_oracle(i64 q, i64 p);

/// Rank-2 synthetic series: sum of monomials over (1 - t^a1)(1 - t^a2).
SeriesRep synthetic2(const Vec& a1, const Vec& a2, const std::vector<std::pair<Vec, i64>>& terms);

/// Two-node fixtures, by name.
const std::vector<std::string>& two_node_fixtures();

/// All points of the box [0, upper], last coordinate fastest.
std::vector<Vec> grid(const Vec& upper);

std::set<Point2> as_set(const std::vector<Point2>& v);

}  // namespace testkit
