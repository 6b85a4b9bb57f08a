#pragma once

#include "latcoh/reduction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latcoh {

/// T_{birth2}(len): generated in degrees birth2, birth2 + 2, ..., len steps.
struct Piece {
  i64 birth2 = 0;
  i64 len = 0;
  auto operator<=>(const Piece&) const = default;
};

struct GradedModule {
  int q = 0;
  std::optional<i64> tplus;  ///< 2 m_w, only for q = 0
  std::vector<Piece> pieces;  ///< sorted

  i64 reduced_rank() const;
  std::string str() const;
  bool operator==(const GradedModule&) const = default;
};

/// Persistence interval [birth, death) of H_q over the sublevel filtration;
/// death absent for essential classes.
struct Bar {
  int q = 0;
  i64 birth = 0;
  std::optional<i64> death;
  Vec corner;          ///< lattice point of the cell that creates the class
  unsigned mask = 0;   ///< directions spanned by that cell
};

/// All bars of the cubical filtration, computed by column reduction over F_p
/// with p = 2^31 - 1.
std::vector<Bar> barcode(const WeightRectangle& rect);

GradedModule h0_module(const WeightRectangle& rect);
/// nu = 2 only: holes of S_N through the complement inside the frame.
GradedModule h1_module(const WeightRectangle& rect);
/// Modules for every degree from the barcode.
std::vector<GradedModule> modules_from_barcode(const WeightRectangle& rect);

struct LevelRanks {
  i64 level = 0;
  Vec ranks;       ///< rank H^q(S_N), q = 0..nu
  Vec next_ranks;  ///< rank of restriction from the next realized level
};

std::vector<LevelRanks> ranks_only(const WeightRectangle& rect);
/// Ranks of H^q(S_N) for one level, q = 0..nu.
Vec sublevel_ranks(const WeightRectangle& rect, i64 level);
/// True when some H_q(S_N; Z) has torsion (exact integer elimination; small complexes).
bool sublevel_has_torsion(const WeightRectangle& rect, i64 level);

i64 min_weight(const WeightRectangle& rect);
i64 max_weight(const WeightRectangle& rect);

struct EulerData {
  i64 eu_h0 = 0;
  i64 eu_star = 0;
};

EulerData euler_characteristic(const WeightRectangle& rect);
/// Alternating sum over all cubes of their weights.
i64 cube_euler_sum(const WeightRectangle& rect);

using MonotonePath = std::vector<Vec>;

i64 path_eu(const WeightRectangle& rect, const MonotonePath& path);
/// Weight sequence version used as a one-dimensional cross-check.
i64 path_eu_sequence(const Vec& weights);
i64 min_path_eu(const WeightRectangle& rect, MonotonePath* best = nullptr);

struct SwRecord {
  i64 eu = 0;
  Rat normalization;  ///< ((k_can + 2 r_h)^2 + |V|) / 8
  Rat sw;
};

SwRecord sw_invariant(const Lattice& lat, const DualCycle& rh, i64 eu);

}  // namespace latcoh
