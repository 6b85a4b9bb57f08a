#pragma once

#include "latcoh/plumbing.hpp"

#include <map>
#include <optional>
#include <vector>

namespace latcoh {

struct TraceStep {
  Vec cycle;   ///< snapshot after the step
  int added;   ///< vertex whose coefficient grew by one
  i64 pairing; ///< (previous cycle, E_added), the value that triggered the step
};

struct ComputationTrace {
  std::vector<TraceStep> steps;
  Vec terminal;
};

/// Laufer sequence from E_start; ties broken by the order in `priority`
/// (defaults to vertex order).
ComputationTrace laufer_trace(const Lattice& lat, int start = 0,
                              const std::vector<int>& priority = {});
Vec artin_cycle(const Lattice& lat, const std::vector<int>& priority = {});

struct RationalityWitness {
  bool rational = false;  ///< both tests agree on this value
  bool by_steps = false;
  bool by_chi = false;
  Vec zmin;
  Rat chi_zmin;
  int failing_step = -1;
};

RationalityWitness is_rational(const Lattice& lat);

struct BadVertexReport {
  bool valid = false;
  i64 delta = 0;
  bool heuristic = true;  ///< the threshold is a chosen bound, not a certificate
};

BadVertexReport validate_bad_vertices(const PlumbingGraph& g, const std::vector<int>& bad);

/// Minimal element of (l' + L) in the Lipman cone, reached by ascent from r_h.
DualCycle minimal_representative(const Lattice& lat, const DualCycle& l);

/// A spin^c structure through its class: k_r = k_can + 2 l_k.
struct SpinC {
  int index = 0;
  DualCycle lk;
  DualCycle kr;
};

SpinC canonical_spinc(const Lattice& lat);
SpinC spinc_of(const Lattice& lat, const DualCycle& l);

/// chi_{k_r}(x) for an integral cycle x.
i64 chi_kr(const Lattice& lat, const Vec& lk_pairings, const Vec& x);

/// Memoized generalized Laufer engine for x(i).
class XCycleEngine {
 public:
  XCycleEngine(const Lattice& lat, std::vector<int> bad, SpinC cls);

  const Lattice& lattice() const { return lat_; }
  const std::vector<int>& bad() const { return bad_; }
  const SpinC& spinc() const { return cls_; }
  int nu() const { return static_cast<int>(bad_.size()); }

  const Vec& x(const Vec& i);
  i64 weight(const Vec& i);
  /// chi(x(i + 1_j)) - chi(x(i)) through the pairing formula.
  i64 chi_increment(const Vec& i, int j);
  /// Ascent from x_J = i, zero elsewhere, with the chi value after each step.
  std::vector<i64> trace_chi(const Vec& i) const;
  i64 chi(const Vec& x) const { return chi_kr(lat_, lkp_, x); }

 private:
  Vec ascend(Vec x, std::vector<i64>* chis) const;

  const Lattice& lat_;
  std::vector<int> bad_;
  std::vector<char> is_bad_;
  SpinC cls_;
  Vec lkp_;  ///< pairings (l_k, E_v)
  std::map<Vec, Vec> memo_;
};

}  // namespace latcoh
