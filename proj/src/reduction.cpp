#include "latcoh/reduction.hpp"

#include <algorithm>

namespace latcoh {

namespace {

Vec minus_eulers(const Lattice& lat, const std::vector<int>& chain, std::size_t from, std::size_t to) {
  Vec ks;
  for (std::size_t t = from; t < to; ++t) ks.push_back(-lat.entry(chain[t], chain[t]));
  return ks;
}

}  // namespace

SeifertData seifert_data(const Lattice& lat, int node, const std::vector<int>& exclude) {
  const auto& g = lat.graph();
  SeifertData s;
  s.node = node;
  s.b0 = lat.entry(node, node);
  s.e = s.b0;
  for (int w : g.nbrs[node]) {
    if (std::find(exclude.begin(), exclude.end(), w) != exclude.end()) continue;
    Leg leg;
    int prev = node, cur = w;
    for (;;) {
      if (g.degree(cur) > 2) throw ValidationError("leg at '" + g.vertices[node].id + "' is not a chain");
      leg.chain.push_back(cur);
      int nxt = -1;
      for (int u : g.nbrs[cur])
        if (u != prev) nxt = u;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
    }
    leg.alpha = hirzebruch_numerator(minus_eulers(lat, leg.chain, 0, leg.chain.size()));
    leg.omega = hirzebruch_numerator(minus_eulers(lat, leg.chain, 1, leg.chain.size()));
    s.e += Rat(leg.omega, leg.alpha);
    s.legs.push_back(leg);
  }
  return s;
}

TwoNodeData two_node_data(const Lattice& lat) {
  const auto& g = lat.graph();
  auto nodes = g.nodes();
  if (nodes.size() != 2) throw ValidationError("expected exactly two nodes, found " + std::to_string(nodes.size()));
  TwoNodeData d;
  d.n1 = nodes[0];
  d.n2 = nodes[1];
  auto path = g.path(d.n1, d.n2);
  d.connector.assign(path.begin() + 1, path.end() - 1);
  const std::size_t s = d.connector.size();
  if (s == 0) {
    d.alpha0 = 1, d.omega0 = 0, d.omegat0 = 0, d.tau = -1;
  } else {
    d.alpha0 = hirzebruch_numerator(minus_eulers(lat, d.connector, 0, s));
    d.omega0 = hirzebruch_numerator(minus_eulers(lat, d.connector, 1, s));
    d.omegat0 = hirzebruch_numerator(minus_eulers(lat, d.connector, 0, s - 1));
    d.tau = s == 1 ? 0 : hirzebruch_numerator(minus_eulers(lat, d.connector, 1, s - 1));
  }
  if (d.omega0 * d.omegat0 != d.alpha0 * d.tau + 1) throw std::logic_error("connector continued fractions inconsistent");
  d.left = seifert_data(lat, d.n1, path);
  d.right = seifert_data(lat, d.n2, path);
  d.left.e += Rat(d.omega0, d.alpha0);
  d.right.e += Rat(d.omegat0, d.alpha0);
  d.e = d.left.e;
  d.et = d.right.e;
  d.eps = d.e * d.et - Rat(1, d.alpha0 * d.alpha0);
  if (d.eps <= 0) throw std::logic_error("orbifold determinant not positive");
  Rat prod = d.eps * d.alpha0;
  for (auto& l : d.left.legs) prod *= l.alpha;
  for (auto& l : d.right.legs) prod *= l.alpha;
  if (prod != Rat(lat.det())) throw std::logic_error("determinant identity failed");
  return d;
}

Vec chain_x_coeffs(const Lattice& lat, const std::vector<int>& chain, i64 m0, i64 tail) {
  const std::size_t s = chain.size();
  Vec n(s + 1, 1);  // n[v] = numerator of chain[v..s-1]
  for (std::size_t v = 0; v < s; ++v) n[v] = hirzebruch_numerator(minus_eulers(lat, chain, v, s));
  Vec m(s);
  i64 prev = m0;
  for (std::size_t v = 0; v < s; ++v) {
    m[v] = ceil_div(checked_add(checked_mul(prev, n[v + 1]), tail), n[v]);
    prev = m[v];
  }
  return m;
}

Vec two_node_x_coeffs(const Lattice& lat, const TwoNodeData& d, i64 i, i64 j) {
  Vec x(lat.size(), 0);
  x[d.n1] = i;
  x[d.n2] = j;
  auto mc = chain_x_coeffs(lat, d.connector, i, j);
  for (std::size_t t = 0; t < mc.size(); ++t) x[d.connector[t]] = mc[t];
  for (const auto* side : {&d.left, &d.right}) {
    i64 m0 = side == &d.left ? i : j;
    for (auto& leg : side->legs) {
      auto ml = chain_x_coeffs(lat, leg.chain, m0, 0);
      for (std::size_t t = 0; t < ml.size(); ++t) x[leg.chain[t]] = ml[t];
    }
  }
  return x;
}

namespace {

i64 binom2(i64 n) { return n * (n - 1) / 2; }

}  // namespace

i64 two_node_wbar(const TwoNodeData& d, i64 i, i64 j) {
  i64 r = i + j - binom2(i) * d.left.b0 - binom2(j) * d.right.b0;
  for (i64 q = 0; q < i; ++q) {
    r -= ceil_div(q * d.omega0 + j, d.alpha0);
    for (auto& l : d.left.legs) r -= ceil_div(q * l.omega, l.alpha);
  }
  for (i64 q = 0; q < j; ++q) {
    r -= ceil_div(q * d.omegat0, d.alpha0);
    for (auto& l : d.right.legs) r -= ceil_div(q * l.omega, l.alpha);
  }
  return r;
}

i64 two_node_delta1(const TwoNodeData& d, i64 i, i64 j) {
  i64 r = 1 - i * d.left.b0 - ceil_div(i * d.omega0 + j, d.alpha0);
  for (auto& l : d.left.legs) r -= ceil_div(i * l.omega, l.alpha);
  return r;
}

i64 two_node_delta2(const TwoNodeData& d, i64 i, i64 j) {
  i64 r = 1 - j * d.right.b0 - ceil_div(i + j * d.omegat0, d.alpha0);
  for (auto& l : d.right.legs) r -= ceil_div(j * l.omega, l.alpha);
  return r;
}

// ---------------------------------------------------------------- rectangles

i64 WeightRectangle::index(const Vec& p) const {
  i64 idx = 0;
  for (int t = 0; t < nu; ++t) idx = idx * (bound[t] + 1) + p[t];
  return idx;
}

Vec WeightRectangle::point(i64 idx) const {
  Vec p(nu);
  for (int t = nu - 1; t >= 0; --t) {
    p[t] = idx % (bound[t] + 1);
    idx /= bound[t] + 1;
  }
  return p;
}

bool WeightRectangle::contains(const Vec& p) const {
  for (int t = 0; t < nu; ++t)
    if (p[t] < 0 || p[t] > bound[t]) return false;
  return true;
}

i64 WeightRectangle::cube(const Vec& p, unsigned mask) const {
  i64 best = at(p);
  for (unsigned sub = mask; sub; sub = (sub - 1) & mask) {
    Vec q = p;
    for (int t = 0; t < nu; ++t)
      if (sub & (1u << t)) q[t] += 1;
    best = std::max(best, at(q));
  }
  return best;
}

WeightRectangle WeightRectangle::restrict_to(const Vec& smaller) const {
  WeightRectangle r;
  r.nu = nu;
  r.bound = smaller;
  i64 total = 1;
  for (i64 b : smaller) total *= b + 1;
  r.w.resize(total);
  for (i64 k = 0; k < total; ++k) r.w[k] = at(r.point(k));
  return r;
}

namespace {

WeightRectangle empty_rect(const Vec& bound) {
  WeightRectangle r;
  r.nu = static_cast<int>(bound.size());
  r.bound = bound;
  i64 total = 1;
  for (i64 b : bound) total = checked_mul(total, b + 1);
  r.w.resize(total);
  return r;
}

}  // namespace

WeightRectangle weights_general(XCycleEngine& eng, const Vec& bound) {
  auto r = empty_rect(bound);
  for (i64 k = 0; k < r.points(); ++k) r.w[k] = eng.weight(r.point(k));
  return r;
}

WeightRectangle two_node_weights(const TwoNodeData& d, const Vec& bound) {
  auto r = empty_rect(bound);
  for (i64 k = 0; k < r.points(); ++k) {
    Vec p = r.point(k);
    r.w[k] = two_node_wbar(d, p[0], p[1]);
  }
  return r;
}

SolBound bound_two_node(const TwoNodeData& d) {
  const Rat E = -d.e, Et = -d.et;
  const i64 a0 = d.alpha0;
  const i64 L = static_cast<i64>(d.left.legs.size()), Lt = static_cast<i64>(d.right.legs.size());
  const i64 a = a0 * (1 - L) + 1, at = a0 * (1 - Lt) + 1;
  const Rat q = Rat(a0 * a0) * E * Et;
  const Rat kappa = q - 1;
  SolBound sb;
  sb.scan = {floor_i64((q - at - a0 * Et * (a - 1)) / kappa), floor_i64((q - a - a0 * E * (at - 1)) / kappa)};
  for (i64 i = 1; i <= sb.scan[0]; ++i)
    for (i64 j = 1; j <= sb.scan[1]; ++j)
      if (two_node_delta1(d, i - 1, j) < 0 && two_node_delta2(d, i, j - 1) < 0) {
        if (!sb.bound) sb.bound = Vec{i, j};
        (*sb.bound)[0] = std::max((*sb.bound)[0], i);
        (*sb.bound)[1] = std::max((*sb.bound)[1], j);
      }
  return sb;
}

Vec i_can(const XCycleEngine& eng) {
  const auto& kr = eng.spinc().kr;
  Vec out;
  for (int v : eng.bad()) out.push_back(std::max<i64>(0, floor_div(-kr.num[v], kr.den)));
  return out;
}

Vec bound_general(XCycleEngine& eng) {
  Vec b = i_can(eng);
  const int nu = eng.nu();
  const i64 cap = step_cap();
  for (i64 guard = 0;; ++guard) {
    if (guard > cap) throw CapExceeded("rectangle extension exceeded the step cap");
    bool grew = false;
    for (int t = 0; t < nu; ++t) {
      WeightRectangle face;
      face.nu = nu;
      face.bound = b;
      face.bound[t] = 0;
      i64 total = 1;
      for (i64 x : face.bound) total *= x + 1;
      for (i64 k = 0; k < total; ++k) {
        Vec p = face.point(k);
        p[t] = b[t];
        Vec q = p;
        q[t] += 1;
        if (eng.weight(q) < eng.weight(p)) {
          b[t] += 1;
          grew = true;
          break;
        }
      }
    }
    if (!grew) return b;
  }
}

}  // namespace latcoh
