#pragma once

#include "latcoh/arith.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace latcoh {

struct Vertex {
  std::string id;
  i64 euler;
};

/// Decorated tree; vertex order is the input order.
struct PlumbingGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> nbrs;

  int size() const { return static_cast<int>(vertices.size()); }
  int index_of(const std::string& id) const;
  int degree(int v) const { return static_cast<int>(nbrs[v].size()); }
  std::vector<int> nodes() const;
  std::vector<int> ends() const;
  /// Vertices on the unique path from a to b, both included.
  std::vector<int> path(int a, int b) const;
};

/// Builds and validates a graph (tree, unique ids). Negative definiteness is
/// checked by intersection_form.
PlumbingGraph make_graph(const std::vector<Vertex>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges);
PlumbingGraph parse_graph(const std::string& text);
PlumbingGraph load_graph(const std::string& path);
std::string format_graph(const PlumbingGraph& g);

struct IntersectionForm {
  int s = 0;
  IMatrix m;
  Int det;  ///< det(-m)
};

IntersectionForm intersection_form(const PlumbingGraph& g);
bool is_negative_definite(const IMatrix& m);

/// Rational vector stored as num / den with den = det(G) shared across a lattice.
struct DualCycle {
  Vec num;
  i64 den = 1;

  Rat coeff(int v) const { return Rat(num[v], den); }
  std::vector<Rat> coeffs() const;
  bool integral() const;
  DualCycle operator+(const DualCycle& o) const;
  DualCycle operator-(const DualCycle& o) const;
  DualCycle operator*(i64 k) const;
  bool operator==(const DualCycle& o) const { return num == o.num && den == o.den; }
  bool operator<(const DualCycle& o) const { return num < o.num; }
  /// Componentwise comparison.
  bool leq(const DualCycle& o) const;
};

/// Residues of the pairing vector in the invariant-factor diagonalization.
using ClassLabel = Vec;

struct DiscriminantGroup {
  i64 order = 1;
  Vec factors;  ///< invariant factors > 1
  IMatrix u;    ///< rows of the left unimodular transform for those factors
};

class Lattice {
 public:
  explicit Lattice(PlumbingGraph g);

  const PlumbingGraph& graph() const { return g_; }
  const IntersectionForm& form() const { return form_; }
  int size() const { return n_; }
  i64 det() const { return det_; }
  i64 entry(int i, int j) const { return form_.m[i][j]; }

  DualCycle zero() const;
  DualCycle dual(int v) const;  ///< E*_v, so (E*_v, E_w) = -delta
  std::vector<DualCycle> dual_basis() const;
  DualCycle k_can() const { return kcan_; }
  DualCycle from_cycle(const Vec& x) const;
  /// The unique l' with (l', E_v) = a_v.
  DualCycle from_pairings(const Vec& a) const;

  Vec pairings(const DualCycle& l) const;
  i64 pair_with_E(const DualCycle& l, int j) const;
  i64 pair_cycle_E(const Vec& x, int j) const;
  Rat pair(const DualCycle& a, const DualCycle& b) const;
  Rat chi(const DualCycle& k, const DualCycle& l) const;

  /// (k_can, k_can) + |V| from the dual basis.
  Rat k_squared_plus_s() const;
  /// Closed form through the inverse matrix and the valencies.
  Rat k_squared_plus_s_closed() const;

  const DiscriminantGroup& group() const { return group_; }
  ClassLabel class_of(const DualCycle& l) const;
  ClassLabel class_of_pairings(const Vec& a) const;
  /// Fractional part: the representative of [l'] in the semi-open unit cube.
  DualCycle r_representative(const DualCycle& l) const;
  /// One r_h per class, class 0 first, in a deterministic order.
  /// Enumerated on first use.
  const std::vector<DualCycle>& class_representatives() const;
  int class_index(const DualCycle& l) const;

  /// (-i)^{-1} entry as a rational.
  Rat inverse_entry(int v, int w) const { return Rat(adj_[v][w], det_); }

  bool subgraph_determinant_identity(int v, int w) const;
  /// det of minus the form restricted to the complement of the given vertices.
  Int complement_det(const std::vector<int>& removed) const;

 private:
  PlumbingGraph g_;
  IntersectionForm form_;
  int n_;
  i64 det_;
  IMatrix adj_;  ///< det * (-i)^{-1}
  DualCycle kcan_;
  DiscriminantGroup group_;
  void enumerate_classes() const;
  mutable bool classes_done_ = false;
  mutable std::vector<DualCycle> reps_;
  mutable std::map<ClassLabel, int> rep_index_;
};

/// Straight chain with the given Euler numbers.
PlumbingGraph chain_graph(const Vec& eulers);
/// Star with a central vertex and chains attached.
PlumbingGraph star_graph(i64 center, const std::vector<Vec>& legs);
/// Two nodes joined by a chain, with legs on both sides.
PlumbingGraph two_node_graph(i64 b1, i64 b2, const Vec& connector,
                             const std::vector<Vec>& left, const std::vector<Vec>& right);
/// Continued fraction expansion p/q = [k1, ..., ks], every k >= 2.
Vec hirzebruch_expansion(i64 p, i64 q);
/// Chain of the lens space L(p, q).
PlumbingGraph lens_graph(i64 p, i64 q);
/// Euler numbers -deg (leaves -2) on a tree given by parent pointers.
PlumbingGraph ratmin_graph(const std::vector<int>& parent);

}  // namespace latcoh
