#pragma once

#include "latcoh/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace latcoh {

/// Columns a_i (scaled by den) of the dilated polytope {x >= 0 : sum x_i a_i not >= l'}.
struct Polytope {
  int dim = 0;  ///< coordinates of L'
  i64 den = 1;
  std::vector<Vec> cols;
  std::vector<ClassLabel> labels;  ///< class of each column; empty when untracked
  Vec factors;
  int d() const { return static_cast<int>(cols.size()); }
};

/// Columns from the denominator of a series.
Polytope polytope_of(const SeriesRep& s);
Polytope polytope_of(const Lattice& lat);

enum class Facets { TRemoved, FMinusT };
const char* facets_name(Facets f);

/// Lattice points of the polytope at dilation l (scaled), optionally in one class.
/// `coords` restricts the inequalities to those coordinates (all when empty).
i64 count_points(const Polytope& p, const Vec& l, Facets f, const std::optional<ClassLabel>& label = std::nullopt,
                 const std::vector<int>& coords = {});
/// Same count through inclusion-exclusion over the convex pieces P_v.
i64 count_points_ie(const Polytope& p, const Vec& l, Facets f,
                    const std::optional<ClassLabel>& label = std::nullopt, const std::vector<int>& coords = {});

ClassLabel negate_label(const ClassLabel& h, const Vec& factors);

/// Polynomial in several variables: exponent vector -> coefficient.
using MultiPoly = std::map<Vec, Rat>;
Rat eval(const MultiPoly& p, const std::vector<Rat>& x);
/// p(-x).
MultiPoly reflect(const MultiPoly& p);

/// Interpolates f on base + step * m, |m| <= degree; nullopt when two further
/// layers of samples disagree with the interpolant.
std::optional<MultiPoly> fit_multivariate(const std::function<Rat(const Vec&)>& f, const Vec& base, i64 step,
                                          int degree);

struct RayFit {
  Vec base, dir;
  i64 period = 1;
  std::vector<std::vector<Rat>> residues;  ///< coefficients (low to high) for lambda = r mod period
};

/// Counts at base + lambda * dir, fitted per residue class of lambda (lambda >= 1).
/// Throws ValidationError when a residual does not vanish.
RayFit fit_ray_quasipolynomial(const Polytope& p, const Vec& base, const Vec& dir, Facets f,
                               const std::optional<ClassLabel>& label, int degree, i64 period = 1);

struct ReciprocityReport {
  bool holds = false;
  RayFit t_removed, f_minus_t;
};

/// Compares L_h(T, lambda) with (-1)^d L_{-h}(F \ T, -lambda) residue by residue.
ReciprocityReport reciprocity_check(const Polytope& p, const Vec& dir, const std::optional<ClassLabel>& h,
                                    int degree, i64 period = 1);

/// Ehrhart data in the node dilation variables for a graph with trivial H.
struct NodeCoefficients {
  std::vector<int> nodes;
  std::vector<std::vector<Rat>> J;
  /// Normalized coefficients (times prod m!) for m >= delta - 2 with excess at most 2,
  /// recovered from Delta since the counting function itself is only quasi-polynomial.
  MultiPoly normalized;
  bool top_ok = false, cross_ok = false, linear_ok = false;
  Rat pc;             ///< read from the constant block
  bool delta_ok = false;  ///< Delta(lambda) - chi(sum lambda_n E*_n) equals pc on the grid
};
NodeCoefficients node_coefficients(const Lattice& lat, const Vec& base = {}, i64 step = 1);

/// Non-equivariant Ehrhart polynomial of P_0 in the node coefficient n.
struct SeifertEhrhart {
  i64 period = 1;
  std::vector<Rat> normalized;  ///< a_j with the polynomial sum a_j n^j / j!
  bool leading_ok = false, second_ok = false;
  Rat pc_ne;  ///< from the third identity
};
SeifertEhrhart seifert_ne_coefficients(const Lattice& lat);

}  // namespace latcoh
