#include "latcoh/laufer.hpp"

#include <algorithm>
#include <numeric>

namespace latcoh {

namespace {

std::vector<int> default_order(int n, const std::vector<int>& priority) {
  if (!priority.empty()) return priority;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

ComputationTrace laufer_trace(const Lattice& lat, int start, const std::vector<int>& priority) {
  const int n = lat.size();
  auto order = default_order(n, priority);
  ComputationTrace t;
  Vec x(n, 0);
  x[start] = 1;
  t.steps.push_back({x, start, 0});
  const i64 cap = step_cap();
  for (i64 guard = 0;; ++guard) {
    if (guard > cap) throw CapExceeded("Laufer sequence exceeded the step cap");
    int pick = -1;
    i64 val = 0;
    for (int j : order) {
      i64 p = lat.pair_cycle_E(x, j);
      if (p > 0) {
        pick = j;
        val = p;
        break;
      }
    }
    if (pick < 0) break;
    x[pick] += 1;
    t.steps.push_back({x, pick, val});
  }
  t.terminal = x;
  return t;
}

Vec artin_cycle(const Lattice& lat, const std::vector<int>& priority) {
  return laufer_trace(lat, priority.empty() ? 0 : priority.front(), priority).terminal;
}

RationalityWitness is_rational(const Lattice& lat) {
  RationalityWitness w;
  auto t = laufer_trace(lat);
  w.zmin = t.terminal;
  w.by_steps = true;
  for (std::size_t s = 1; s < t.steps.size(); ++s)
    if (t.steps[s].pairing != 1) {
      w.by_steps = false;
      w.failing_step = static_cast<int>(s);
      break;
    }
  w.chi_zmin = lat.chi(lat.k_can(), lat.from_cycle(w.zmin));
  w.by_chi = w.chi_zmin == 1;
  if (w.by_steps != w.by_chi) throw std::logic_error("rationality criteria disagree");
  w.rational = w.by_steps;
  return w;
}

BadVertexReport validate_bad_vertices(const PlumbingGraph& g, const std::vector<int>& bad) {
  BadVertexReport r;
  i64 maxb = 0;
  for (auto& v : g.vertices) maxb = std::max(maxb, v.euler < 0 ? -v.euler : v.euler);
  r.delta = (g.size() + 1) * (1 + maxb);
  r.valid = true;
  for (i64 mult : {1, 2}) {
    PlumbingGraph h = g;
    for (int v : bad) h.vertices[v].euler -= mult * r.delta;
    try {
      Lattice lat(h);
      if (!is_rational(lat).rational) r.valid = false;
    } catch (const ValidationError&) {
      r.valid = false;
    }
  }
  return r;
}

DualCycle minimal_representative(const Lattice& lat, const DualCycle& l) {
  DualCycle s = lat.r_representative(l);
  Vec a = lat.pairings(s);
  const int n = lat.size();
  const i64 cap = step_cap();
  for (i64 guard = 0;; ++guard) {
    if (guard > cap) throw CapExceeded("minimal representative ascent exceeded the step cap");
    int pick = -1;
    for (int j = 0; j < n; ++j)
      if (a[j] > 0) {
        pick = j;
        break;
      }
    if (pick < 0) break;
    s.num[pick] += s.den;
    a[pick] += lat.entry(pick, pick);
    for (int w : lat.graph().nbrs[pick]) a[w] += 1;
  }
  return s;
}

SpinC canonical_spinc(const Lattice& lat) {
  return SpinC{0, lat.zero(), lat.k_can()};
}

SpinC spinc_of(const Lattice& lat, const DualCycle& l) {
  SpinC c;
  c.index = lat.class_index(l);
  c.lk = minimal_representative(lat, l);
  c.kr = lat.k_can() + c.lk * 2;
  return c;
}

i64 chi_kr(const Lattice& lat, const Vec& lkp, const Vec& x) {
  // chi_{k_r}(x) = -((x,x) + sum x_v (-b_v - 2) + 2 (x, l_k)) / 2
  const int n = lat.size();
  i64 s = 0;
  for (int v = 0; v < n; ++v) {
    if (x[v] == 0) continue;
    i64 b = lat.entry(v, v);
    s += x[v] * (lat.pair_cycle_E(x, v) + (-b - 2) + 2 * lkp[v]);
  }
  return -s / 2;
}

XCycleEngine::XCycleEngine(const Lattice& lat, std::vector<int> bad, SpinC cls)
    : lat_(lat), bad_(std::move(bad)), is_bad_(lat.size(), 0), cls_(std::move(cls)) {
  for (int v : bad_) is_bad_[v] = 1;
  lkp_ = lat_.pairings(cls_.lk);
}

Vec XCycleEngine::ascend(Vec x, std::vector<i64>* chis) const {
  const int n = lat_.size();
  const i64 cap = step_cap();
  if (chis) chis->push_back(chi(x));
  for (i64 guard = 0;; ++guard) {
    if (guard > cap) throw CapExceeded("generalized Laufer sequence exceeded the step cap");
    int pick = -1;
    for (int j = 0; j < n; ++j)
      if (!is_bad_[j] && lat_.pair_cycle_E(x, j) + lkp_[j] > 0) {
        pick = j;
        break;
      }
    if (pick < 0) return x;
    x[pick] += 1;
    if (chis) chis->push_back(chi(x));
  }
}

const Vec& XCycleEngine::x(const Vec& i) {
  auto it = memo_.find(i);
  if (it != memo_.end()) return it->second;
  const int n = lat_.size();
  Vec seed(n, 0);
  for (int t = 0; t < nu(); ++t) {
    if (i[t] == 0) continue;
    Vec prev = i;
    prev[t] -= 1;
    Vec lower = x(prev);
    lower[bad_[t]] += 1;
    for (int v = 0; v < n; ++v) seed[v] = std::max(seed[v], lower[v]);
  }
  for (int t = 0; t < nu(); ++t) seed[bad_[t]] = i[t];
  return memo_.emplace(i, ascend(seed, nullptr)).first->second;
}

i64 XCycleEngine::weight(const Vec& i) { return chi(x(i)); }

i64 XCycleEngine::chi_increment(const Vec& i, int j) {
  const Vec& xi = x(i);
  return 1 - (lat_.pair_cycle_E(xi, bad_[j]) + lkp_[bad_[j]]);
}

std::vector<i64> XCycleEngine::trace_chi(const Vec& i) const {
  Vec start(lat_.size(), 0);
  for (int t = 0; t < static_cast<int>(bad_.size()); ++t) start[bad_[t]] = i[t];
  std::vector<i64> chis;
  ascend(start, &chis);
  return chis;
}

}  // namespace latcoh
