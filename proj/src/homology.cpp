#include "latcoh/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace latcoh {

i64 GradedModule::reduced_rank() const {
  i64 s = 0;
  for (auto& p : pieces) s += p.len;
  return s;
}

std::string GradedModule::str() const {
  std::ostringstream out;
  bool first = true;
  if (tplus) {
    out << "T+_" << *tplus;
    first = false;
  }
  for (std::size_t k = 0; k < pieces.size();) {
    std::size_t r = k;
    while (r < pieces.size() && pieces[r] == pieces[k]) ++r;
    if (!first) out << " + ";
    out << "T_" << pieces[k].birth2 << "(" << pieces[k].len << ")";
    if (r - k > 1) out << "^" << (r - k);
    first = false;
    k = r;
  }
  if (first) out << "0";
  return out.str();
}

i64 min_weight(const WeightRectangle& rect) { return *std::min_element(rect.w.begin(), rect.w.end()); }
i64 max_weight(const WeightRectangle& rect) { return *std::max_element(rect.w.begin(), rect.w.end()); }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

void sort_pieces(GradedModule& m) { std::sort(m.pieces.begin(), m.pieces.end()); }

}  // namespace

GradedModule h0_module(const WeightRectangle& rect) {
  GradedModule m;
  m.q = 0;
  const i64 n = rect.points();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rect.w[a] < rect.w[b]; });
  struct Edge {
    i64 w;
    int a, b;
  };
  std::vector<Edge> edges;
  for (i64 k = 0; k < n; ++k) {
    Vec p = rect.point(k);
    for (int t = 0; t < rect.nu; ++t) {
      if (p[t] == rect.bound[t]) continue;
      Vec q = p;
      q[t] += 1;
      i64 kq = rect.index(q);
      edges.push_back({std::max(rect.w[k], rect.w[kq]), static_cast<int>(k), static_cast<int>(kq)});
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.w < y.w; });
  UnionFind uf(n);
  std::vector<char> alive(n, 0);
  std::size_t vi = 0, ei = 0;
  while (vi < order.size() || ei < edges.size()) {
    i64 level = vi < order.size() ? rect.w[order[vi]] : edges[ei].w;
    if (ei < edges.size()) level = std::min(level, edges[ei].w);
    while (vi < order.size() && rect.w[order[vi]] == level) alive[order[vi++]] = 1;
    while (ei < edges.size() && edges[ei].w == level) {
      int a = uf.find(edges[ei].a), b = uf.find(edges[ei].b);
      ++ei;
      if (a == b) continue;
      // elder rule: lower birth survives, then the lexicographically smaller anchor
      auto key = [&](int r) { return std::make_pair(rect.w[r], r); };
      if (key(b) < key(a)) std::swap(a, b);
      if (level > rect.w[b]) m.pieces.push_back({2 * rect.w[b], level - rect.w[b]});
      uf.parent[b] = a;
    }
  }
  m.tplus = 2 * min_weight(rect);
  sort_pieces(m);
  return m;
}

GradedModule h1_module(const WeightRectangle& rect) {
  if (rect.nu != 2) throw ValidationError("planar H^1 needs a two-dimensional rectangle");
  GradedModule m;
  m.q = 1;
  const i64 I = rect.bound[0], J = rect.bound[1];
  if (I == 0 || J == 0) return m;
  // squares 0..I*J-1, outer region I*J
  const int outer = static_cast<int>(I * J);
  auto sq = [&](i64 i, i64 j) { return static_cast<int>(i * J + j); };
  struct Item {
    i64 w;
    int kind;  // 0 square, 1 edge
    int a, b;
  };
  std::vector<Item> items;
  for (i64 i = 0; i < I; ++i)
    for (i64 j = 0; j < J; ++j) items.push_back({rect.cube({i, j}, 3u), 0, sq(i, j), -1});
  for (i64 i = 0; i < I; ++i)
    for (i64 j = 0; j <= J; ++j) {
      i64 w = std::max(rect.at({i, j}), rect.at({i + 1, j}));
      items.push_back({w, 1, j > 0 ? sq(i, j - 1) : outer, j < J ? sq(i, j) : outer});
    }
  for (i64 i = 0; i <= I; ++i)
    for (i64 j = 0; j < J; ++j) {
      i64 w = std::max(rect.at({i, j}), rect.at({i, j + 1}));
      items.push_back({w, 1, i > 0 ? sq(i - 1, j) : outer, i < I ? sq(i, j) : outer});
    }
  std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    if (x.w != y.w) return x.w > y.w;
    return x.kind < y.kind;
  });
  UnionFind uf(outer + 1);
  std::vector<i64> hi(outer + 1, 0);
  const i64 inf = std::numeric_limits<i64>::max();
  hi[outer] = inf;
  for (auto& it : items) {
    const i64 level = it.w - 1;  // the element lies in the complement of S_N for N <= level
    if (it.kind == 0) {
      hi[it.a] = level;
      continue;
    }
    int a = uf.find(it.a), b = uf.find(it.b);
    if (a == b) continue;
    auto key = [&](int r) { return std::make_pair(hi[r], -r); };
    if (key(a) < key(b)) std::swap(a, b);
    // b is the younger region; it was a separate hole on levels level+1 .. hi[b]
    if (hi[b] > level) m.pieces.push_back({2 * (level + 1), hi[b] - level});
    uf.parent[b] = a;
  }
  sort_pieces(m);
  return m;
}

// ---------------------------------------------------------------- cubical persistence

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

struct Cell {
  i64 point;
  unsigned mask;
  int dim;
  i64 w;
};

struct Complex {
  std::vector<Cell> cells;  ///< in filtration order
  std::vector<std::vector<std::pair<int, int>>> boundary;  ///< (position, sign)
};

Complex build_complex(const WeightRectangle& rect, std::optional<i64> level) {
  Complex cx;
  const i64 n = rect.points();
  const unsigned full = (1u << rect.nu);
  for (i64 k = 0; k < n; ++k) {
    Vec p = rect.point(k);
    unsigned allowed = 0;
    for (int t = 0; t < rect.nu; ++t)
      if (p[t] < rect.bound[t]) allowed |= 1u << t;
    for (unsigned mask = 0; mask < full; ++mask) {
      if ((mask & allowed) != mask) continue;
      i64 w = rect.cube(p, mask);
      if (level && w > *level) continue;
      cx.cells.push_back({k, mask, __builtin_popcount(mask), w});
    }
  }
  std::stable_sort(cx.cells.begin(), cx.cells.end(), [](const Cell& a, const Cell& b) {
    if (a.w != b.w) return a.w < b.w;
    return a.dim < b.dim;
  });
  std::map<std::pair<i64, unsigned>, int> pos;
  for (std::size_t i = 0; i < cx.cells.size(); ++i) pos[{cx.cells[i].point, cx.cells[i].mask}] = static_cast<int>(i);
  cx.boundary.resize(cx.cells.size());
  for (std::size_t i = 0; i < cx.cells.size(); ++i) {
    const auto& c = cx.cells[i];
    if (c.dim == 0) continue;
    Vec p = rect.point(c.point);
    int k = 0;
    for (int t = 0; t < rect.nu; ++t) {
      if (!(c.mask & (1u << t))) continue;
      unsigned face = c.mask & ~(1u << t);
      int sign = (k % 2 == 0) ? 1 : -1;
      Vec up = p;
      up[t] += 1;
      cx.boundary[i].push_back({pos.at({c.point, face}), -sign});
      cx.boundary[i].push_back({pos.at({rect.index(up), face}), sign});
      ++k;
    }
    std::sort(cx.boundary[i].begin(), cx.boundary[i].end());
  }
  return cx;
}

using Column = std::vector<std::pair<int, std::uint64_t>>;  // sorted by row

Column to_column(const std::vector<std::pair<int, int>>& b) {
  Column c;
  for (auto [r, s] : b) c.push_back({r, s > 0 ? 1ULL : kPrime - 1});
  return c;
}

// c <- c - f * o
void axpy(Column& c, const Column& o, std::uint64_t f) {
  Column out;
  out.reserve(c.size() + o.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < o.size()) {
    if (j == o.size() || (i < c.size() && c[i].first < o[j].first)) {
      out.push_back(c[i++]);
    } else if (i == c.size() || o[j].first < c[i].first) {
      out.push_back({o[j].first, (kPrime - f * o[j].second % kPrime) % kPrime});
      ++j;
    } else {
      std::uint64_t v = (c[i].second + kPrime - f * o[j].second % kPrime) % kPrime;
      if (v) out.push_back({c[i].first, v});
      ++i, ++j;
    }
  }
  c.swap(out);
}

struct Reduction {
  std::vector<int> pivot_of_col;  ///< lowest row of reduced column, or -1
  std::vector<int> col_of_pivot;  ///< column killing the row, or -1
};

Reduction reduce(const Complex& cx) {
  const int n = static_cast<int>(cx.cells.size());
  Reduction r;
  r.pivot_of_col.assign(n, -1);
  r.col_of_pivot.assign(n, -1);
  std::vector<Column> cols(n);
  for (int j = 0; j < n; ++j) {
    Column c = to_column(cx.boundary[j]);
    while (!c.empty()) {
      int low = c.back().first;
      int k = r.col_of_pivot[low];
      if (k < 0) break;
      std::uint64_t f = c.back().second * inv_mod(cols[k].back().second) % kPrime;
      axpy(c, cols[k], f);
    }
    if (!c.empty()) {
      r.pivot_of_col[j] = c.back().first;
      r.col_of_pivot[c.back().first] = j;
    }
    cols[j] = std::move(c);
  }
  return r;
}

}  // namespace

std::vector<Bar> barcode(const WeightRectangle& rect) {
  auto cx = build_complex(rect, std::nullopt);
  auto red = reduce(cx);
  std::vector<Bar> bars;
  const int n = static_cast<int>(cx.cells.size());
  for (int i = 0; i < n; ++i) {
    if (red.pivot_of_col[i] >= 0) continue;  // i kills a class
    Bar b;
    b.q = cx.cells[i].dim;
    b.birth = cx.cells[i].w;
    b.corner = rect.point(cx.cells[i].point);
    b.mask = cx.cells[i].mask;
    int killer = red.col_of_pivot[i];
    if (killer >= 0) {
      if (cx.cells[killer].w == b.birth) continue;
      b.death = cx.cells[killer].w;
    }
    bars.push_back(b);
  }
  return bars;
}

std::vector<GradedModule> modules_from_barcode(const WeightRectangle& rect) {
  std::vector<GradedModule> mods(rect.nu + 1);
  for (int q = 0; q <= rect.nu; ++q) mods[q].q = q;
  for (auto& b : barcode(rect)) {
    if (!b.death) {
      if (b.q != 0 || mods[0].tplus) throw std::logic_error("unexpected essential class");
      mods[0].tplus = 2 * b.birth;
      continue;
    }
    mods[b.q].pieces.push_back({2 * b.birth, *b.death - b.birth});
  }
  for (auto& m : mods) sort_pieces(m);
  return mods;
}

std::vector<LevelRanks> ranks_only(const WeightRectangle& rect) {
  auto bars = barcode(rect);
  std::vector<i64> levels(rect.w.begin(), rect.w.end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto alive = [](const Bar& b, i64 N) { return b.birth <= N && (!b.death || N < *b.death); };
  std::vector<LevelRanks> out;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    LevelRanks lr;
    lr.level = levels[k];
    lr.ranks.assign(rect.nu + 1, 0);
    lr.next_ranks.assign(rect.nu + 1, 0);
    for (auto& b : bars) {
      if (alive(b, levels[k])) ++lr.ranks[b.q];
      if (k + 1 < levels.size() && alive(b, levels[k]) && alive(b, levels[k + 1])) ++lr.next_ranks[b.q];
    }
    out.push_back(lr);
  }
  return out;
}

Vec sublevel_ranks(const WeightRectangle& rect, i64 level) {
  Vec ranks(rect.nu + 1, 0);
  for (auto& b : barcode(rect))
    if (b.birth <= level && (!b.death || level < *b.death)) ++ranks[b.q];
  return ranks;
}

namespace {

// Smith elimination over Z; returns true when a nonunit invariant factor occurs.
bool nonunit_factor(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return false;
  const std::size_t cols = a[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
    if (bi == rows) return false;
    std::swap(a[t], a[bi]);
    for (auto& row : a) std::swap(row[t], row[bj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    if (abs(a[t][t]) != 1) {
      // a nonunit pivot is a genuine factor only if it divides everything left
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            divides = false;
            break;
          }
      if (divides) return true;
      continue;
    }
    ++t;
  }
  return false;
}

}  // namespace

bool sublevel_has_torsion(const WeightRectangle& rect, i64 level) {
  auto cx = build_complex(rect, level);
  for (int q = 1; q <= rect.nu; ++q) {
    std::vector<int> rows_idx, cols_idx;
    std::map<int, int> rowpos;
    for (std::size_t i = 0; i < cx.cells.size(); ++i) {
      if (cx.cells[i].dim == q - 1) {
        rowpos[static_cast<int>(i)] = static_cast<int>(rows_idx.size());
        rows_idx.push_back(static_cast<int>(i));
      }
      if (cx.cells[i].dim == q) cols_idx.push_back(static_cast<int>(i));
    }
    if (rows_idx.empty() || cols_idx.empty()) continue;
    std::vector<std::vector<Int>> m(rows_idx.size(), std::vector<Int>(cols_idx.size(), 0));
    for (std::size_t c = 0; c < cols_idx.size(); ++c)
      for (auto [r, s] : cx.boundary[cols_idx[c]]) m[rowpos.at(r)][c] = s;
    if (nonunit_factor(m)) return true;
  }
  return false;
}

EulerData euler_characteristic(const WeightRectangle& rect) {
  EulerData e;
  const i64 mw = min_weight(rect);
  auto h0 = h0_module(rect);
  e.eu_h0 = -mw + h0.reduced_rank();
  i64 alt = 0;
  if (rect.nu == 2) {
    alt = h0.reduced_rank() - h1_module(rect).reduced_rank();
  } else {
    auto mods = modules_from_barcode(rect);
    for (auto& m : mods) alt += (m.q % 2 == 0 ? 1 : -1) * m.reduced_rank();
  }
  e.eu_star = -mw + alt;
  return e;
}

i64 cube_euler_sum(const WeightRectangle& rect) {
  i64 s = 0;
  const unsigned full = 1u << rect.nu;
  for (i64 k = 0; k < rect.points(); ++k) {
    Vec p = rect.point(k);
    for (unsigned mask = 0; mask < full; ++mask) {
      bool ok = true;
      for (int t = 0; t < rect.nu; ++t)
        if ((mask & (1u << t)) && p[t] == rect.bound[t]) ok = false;
      if (!ok) continue;
      int dim = __builtin_popcount(mask);
      s += (dim % 2 == 0 ? -1 : 1) * rect.cube(p, mask);
    }
  }
  return s;
}

i64 path_eu_sequence(const Vec& w) {
  i64 r = -w.front();
  for (std::size_t n = 0; n + 1 < w.size(); ++n) r += std::max<i64>(0, w[n] - w[n + 1]);
  return r;
}

i64 path_eu(const WeightRectangle& rect, const MonotonePath& path) {
  Vec w;
  for (std::size_t n = 0; n < path.size(); ++n) {
    if (!rect.contains(path[n])) throw ValidationError("path leaves the rectangle");
    if (n > 0) {
      i64 diff = 0;
      for (int t = 0; t < rect.nu; ++t) diff += path[n][t] - path[n - 1][t];
      for (int t = 0; t < rect.nu; ++t)
        if (path[n][t] < path[n - 1][t]) diff = -1;
      if (diff != 1) throw ValidationError("path steps must be unit increments");
    }
    w.push_back(rect.at(path[n]));
  }
  return path_eu_sequence(w);
}

i64 min_path_eu(const WeightRectangle& rect, MonotonePath* best_path) {
  const i64 n = rect.points();
  std::vector<i64> best(n, 0);
  std::vector<i64> from(n, -1);
  for (i64 k = 1; k < n; ++k) {
    Vec p = rect.point(k);
    bool set = false;
    for (int t = 0; t < rect.nu; ++t) {
      if (p[t] == 0) continue;
      Vec q = p;
      q[t] -= 1;
      i64 kq = rect.index(q);
      i64 v = best[kq] + std::max<i64>(0, rect.w[kq] - rect.w[k]);
      if (!set || v < best[k]) {
        best[k] = v;
        from[k] = kq;
        set = true;
      }
    }
  }
  if (best_path) {
    best_path->clear();
    for (i64 k = n - 1; k >= 0; k = from[k]) {
      best_path->push_back(rect.point(k));
      if (k == 0) break;
    }
    std::reverse(best_path->begin(), best_path->end());
  }
  return -rect.w[0] + best[n - 1];
}

SwRecord sw_invariant(const Lattice& lat, const DualCycle& rh, i64 eu) {
  SwRecord r;
  r.eu = eu;
  DualCycle k = lat.k_can() + rh * 2;
  r.normalization = (lat.pair(k, k) + lat.size()) / 8;
  r.sw = -Rat(eu) - r.normalization;
  return r;
}

}  // namespace latcoh
