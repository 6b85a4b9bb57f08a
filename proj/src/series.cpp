#include "latcoh/series.hpp"

#include <algorithm>
#include <set>

namespace latcoh {

namespace {

ClassLabel add_labels(const ClassLabel& a, const ClassLabel& b, i64 k, const Vec& factors) {
  ClassLabel r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i] + mod(k, factors[i]) * b[i], factors[i]);
  return r;
}

bool geq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

void axpy(Vec& t, const Vec& a, i64 k) {
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = checked_add(t[i], checked_mul(k, a[i]));
}

// Enumerates b + A x, x >= 0, continuing along a coordinate while `keep_going` holds
// for the current partial sum. `visit` receives the final vector and its label.
template <class Keep, class Visit>
void enumerate(const SeriesRep& s, const Vec& base, const ClassLabel& label, Keep keep_going, Visit visit) {
  const std::size_t d = s.denominator.size();
  std::function<void(std::size_t, Vec&, const ClassLabel&)> rec = [&](std::size_t i, Vec& cur, const ClassLabel& lab) {
    if (i == d) {
      visit(cur, lab);
      return;
    }
    Vec t = cur;
    ClassLabel l = lab;
    for (i64 guard = 0; keep_going(t); ++guard) {
      if (guard > step_cap()) throw CapExceeded("series enumeration exceeded the step cap");
      rec(i + 1, t, l);
      axpy(t, s.denominator[i], 1);
      if (!s.factors.empty()) l = add_labels(l, s.den_labels[i], 1, s.factors);
    }
  };
  Vec cur = base;
  rec(0, cur, label);
}

}  // namespace

SeriesRep z_series(const Lattice& lat) {
  const auto& g = lat.graph();
  SeriesRep s;
  s.dim = lat.size();
  s.den = lat.det();
  s.factors = lat.group().factors;
  std::map<Vec, Int> num{{Vec(s.dim, 0), Int(1)}};
  for (int v = 0; v < s.dim; ++v) {
    int delta = g.degree(v);
    DualCycle ev = lat.dual(v);
    if (delta > 2) {
      for (int k = 0; k < delta - 2; ++k) {
        std::map<Vec, Int> next;
        for (auto& [e, c] : num) {
          next[e] += c;
          Vec f = e;
          axpy(f, ev.num, 1);
          next[f] -= c;
        }
        num.clear();
        for (auto& [e, c] : next)
          if (c != 0) num.emplace(e, c);
      }
    }
    for (int k = delta; k < 2; ++k) {
      s.denominator.push_back(ev.num);
      s.den_labels.push_back(lat.class_of(ev));
    }
  }
  for (auto& [e, c] : num) s.numerator.push_back({c, e, lat.class_of(DualCycle{e, s.den})});
  return s;
}

Expansion expand(const SeriesRep& s, const Vec& upper, const std::optional<ClassLabel>& label) {
  Expansion out;
  for (auto& m : s.numerator) {
    enumerate(
        s, m.exp, m.label, [&](const Vec& t) { return geq(upper, t); },
        [&](const Vec& t, const ClassLabel& lab) {
          if (label && lab != *label) return;
          out[t] += m.coeff;
        });
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

Vec project(const Vec& v, const std::vector<int>& coords) {
  Vec r;
  for (int c : coords) r.push_back(v[c]);
  return r;
}

}  // namespace

Expansion reduce_to_coords(const SeriesRep& s, const std::vector<int>& coords, const Vec& upper,
                           const std::optional<ClassLabel>& label) {
  Expansion out;
  for (auto& m : s.numerator) {
    enumerate(
        s, m.exp, m.label, [&](const Vec& t) { return geq(upper, project(t, coords)); },
        [&](const Vec& t, const ClassLabel& lab) {
          if (label && lab != *label) return;
          out[project(t, coords)] += m.coeff;
        });
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Expansion reduce_to_nodes(const Lattice& lat, const SeriesRep& s, const Vec& upper_nodes, const ClassLabel& label) {
  return reduce_to_coords(s, lat.graph().nodes(), upper_nodes, label);
}

Int counting_function_coords(const SeriesRep& s, const std::vector<int>& coords, const Vec& l,
                             const std::optional<ClassLabel>& label) {
  Int total = 0;
  for (auto& m : s.numerator) {
    i64 count = 0;
    enumerate(
        s, m.exp, m.label, [&](const Vec& t) { return !geq(project(t, coords), l); },
        [&](const Vec&, const ClassLabel& lab) {
          if (label && lab != *label) return;
          ++count;
        });
    total += m.coeff * count;
  }
  return total;
}

Int counting_function(const SeriesRep& s, const Vec& l, const std::optional<ClassLabel>& label) {
  std::vector<int> all(s.dim);
  for (int i = 0; i < s.dim; ++i) all[i] = i;
  return counting_function_coords(s, all, l, label);
}

std::map<Vec, i64> reduced_series_from_weights(const WeightRectangle& rect) {
  std::map<Vec, i64> out;
  const unsigned full = 1u << rect.nu;
  for (i64 k = 0; k < rect.points(); ++k) {
    Vec p = rect.point(k);
    bool inner = true;
    for (int t = 0; t < rect.nu; ++t)
      if (p[t] == rect.bound[t]) inner = false;
    if (!inner) continue;
    i64 c = 0;
    for (unsigned mask = 0; mask < full; ++mask) c += (__builtin_popcount(mask) % 2 == 1 ? 1 : -1) * rect.cube(p, mask);
    out[p] = c;
  }
  return out;
}

// ---------------------------------------------------------------- periodic constants

namespace {

void add_to(Poly& p, i64 e, const Int& c) {
  if (c == 0) return;
  auto& x = p[e];
  x += c;
  if (x == 0) p.erase(e);
}

Poly times(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) add_to(r, ea + eb, ca * cb);
  return r;
}

}  // namespace

Int pc_one_variable(Poly num, const Vec& dens) {
  Poly a{{0, 1}};
  for (i64 d : dens) {
    if (d <= 0) throw ValidationError("denominator exponents must be positive");
    a = times(a, Poly{{0, 1}, {d, -1}});
  }
  Poly one_minus_a = Poly{{0, 1}};
  for (auto& [e, c] : a) add_to(one_minus_a, e, -c);
  Int c_at_one = 0;
  // terms of negative degree: c t^e / A = c t^e + c t^e (1 - A) / A
  const i64 cap = step_cap();
  for (i64 guard = 0; !num.empty() && num.begin()->first < 0; ++guard) {
    if (guard > cap) throw CapExceeded("periodic constant reduction exceeded the step cap");
    auto [e, c] = *num.begin();
    num.erase(num.begin());
    c_at_one += c;
    for (auto& [f, d] : one_minus_a) add_to(num, e + f, c * d);
  }
  const i64 deg_a = a.rbegin()->first;
  const Int lead = a.rbegin()->second;
  while (!num.empty() && num.rbegin()->first >= deg_a) {
    auto [e, c] = *num.rbegin();
    Int q = c / lead;
    c_at_one += q;
    for (auto& [f, d] : a) add_to(num, e - deg_a + f, -q * d);
  }
  return c_at_one;
}

Int pc_along_ray(const SeriesRep& s, const Vec& dir, i64 start, int degree, const std::optional<ClassLabel>& label) {
  std::vector<Rat> xs, ys;
  for (i64 lam = start; lam < start + degree + 3; ++lam) {
    Vec l = dir;
    for (auto& x : l) x = checked_mul(x, lam);
    xs.push_back(lam);
    ys.push_back(Rat(counting_function(s, l, label)));
  }
  auto fit = fit_polynomial(xs, ys, degree);
  if (!fit) throw ValidationError("counting function is not polynomial on the sampled ray");
  Rat c0 = (*fit)[0];
  if (boost::multiprecision::denominator(c0) != 1) throw std::logic_error("non-integral periodic constant");
  return boost::multiprecision::numerator(c0);
}

// ---------------------------------------------------------------- one node

DualCycle seifert_lift(const Lattice& lat, const SeifertData& d, const Vec& c) {
  DualCycle l = lat.dual(d.node) * c[0];
  for (std::size_t i = 0; i < d.legs.size(); ++i) l = l + lat.dual(d.legs[i].chain.back()) * c[i + 1];
  return l;
}

Rat seifert_ctilde(const SeifertData& d, const Vec& c) {
  Rat s = c[0];
  for (std::size_t i = 0; i < d.legs.size(); ++i) s += Rat(c[i + 1], d.legs[i].alpha);
  return s / -d.e;
}

Rat seifert_N(const SeifertData& d, const Vec& c, i64 ell) {
  Int n = 1 + c[0] - Int(ell) * d.b0;
  for (std::size_t i = 0; i < d.legs.size(); ++i)
    n += floor_div(c[i + 1] - d.legs[i].omega * ell, d.legs[i].alpha);
  return Rat(n);
}

Int seifert_pc(const SeifertData& d, const Vec& c) {
  const Rat ct = seifert_ctilde(d, c);
  Rat gamma = static_cast<i64>(d.legs.size()) - 2;
  for (auto& l : d.legs) gamma -= Rat(1, l.alpha);
  gamma /= -d.e;
  const i64 lo = ceil_i64(-ct), hi = floor_i64(gamma - ct) + 1;
  Int s = 0;
  for (i64 ell = lo; ell <= hi; ++ell) {
    Rat n = seifert_N(d, c, ell);
    if (n < 0) s -= boost::multiprecision::numerator(n);
  }
  return s;
}

Int seifert_window_sum(const SeifertData& d, const Vec& c, const Rat& ct_sh) {
  const Rat ct = seifert_ctilde(d, c);
  const i64 lo = ceil_i64(-ct);
  const Rat top = -ct + Rat(floor(ct_sh));
  Int s = 0;
  for (i64 ell = lo; Rat(ell) < top; ++ell) {
    Rat n = seifert_N(d, c, ell);
    if (n < 0) s -= boost::multiprecision::numerator(n);
  }
  return s;
}

Int seifert_pc_ne(const SeifertData& d) {
  const std::size_t k = d.legs.size();
  Vec x(k, 0);
  Int twice = 0;
  for (;;) {
    Rat s = 0;
    for (std::size_t i = 0; i < k; ++i) s += Rat(x[i], d.legs[i].alpha);
    Int f = floor(s);
    twice += f * (f - 1);
    std::size_t i = 0;
    while (i < k && ++x[i] == d.legs[i].alpha) x[i++] = 0;
    if (i == k) break;
  }
  return twice / 2;
}

// ---------------------------------------------------------------- two nodes

TwoNodeLift parse_two_node_lift(const TwoNodeData& d, const Vec& flat) {
  const std::size_t nl = d.left.legs.size(), nr = d.right.legs.size();
  if (flat.size() != 3 + nl + nr)
    throw ValidationError("class lift needs " + std::to_string(3 + nl + nr) + " coefficients");
  TwoNodeLift c;
  c.c0 = flat[0];
  c.ct0 = flat[1];
  c.cbar = flat[2];
  c.ci.assign(flat.begin() + 3, flat.begin() + 3 + static_cast<long>(nl));
  c.cti.assign(flat.begin() + 3 + static_cast<long>(nl), flat.end());
  if (d.connector.empty() && c.cbar != 0) throw ValidationError("connector coefficient needs a connector vertex");
  return c;
}

DualCycle two_node_lift_cycle(const Lattice& lat, const TwoNodeData& d, const TwoNodeLift& c) {
  DualCycle l = lat.dual(d.n1) * c.c0 + lat.dual(d.n2) * c.ct0;
  if (!d.connector.empty()) l = l + lat.dual(d.connector.front()) * c.cbar;
  for (std::size_t i = 0; i < c.ci.size(); ++i) l = l + lat.dual(d.left.legs[i].chain.back()) * c.ci[i];
  for (std::size_t i = 0; i < c.cti.size(); ++i) l = l + lat.dual(d.right.legs[i].chain.back()) * c.cti[i];
  return l;
}

std::pair<Rat, Rat> two_node_cc(const TwoNodeData& d, const TwoNodeLift& c) {
  Rat A = Rat(c.c0) + Rat(d.omega0 * c.cbar, d.alpha0);
  for (std::size_t i = 0; i < c.ci.size(); ++i) A += Rat(c.ci[i], d.left.legs[i].alpha);
  Rat At = Rat(c.ct0) + Rat(c.cbar, d.alpha0);
  for (std::size_t i = 0; i < c.cti.size(); ++i) At += Rat(c.cti[i], d.right.legs[i].alpha);
  return {(-d.et * A + At / d.alpha0) / d.eps, (A / d.alpha0 - d.e * At) / d.eps};
}

Rat two_node_N(const TwoNodeData& d, const TwoNodeLift& c, i64 l, i64 lt) {
  Rat n = Rat(c.c0) + Rat(d.omega0 * c.cbar, d.alpha0) - (Rat(d.left.b0) + Rat(d.omega0, d.alpha0)) * l -
          Rat(lt, d.alpha0);
  for (std::size_t i = 0; i < c.ci.size(); ++i)
    n += floor_div(c.ci[i] - d.left.legs[i].omega * l, d.left.legs[i].alpha);
  return n;
}

Rat two_node_Nt(const TwoNodeData& d, const TwoNodeLift& c, i64 l, i64 lt) {
  Rat n = Rat(c.ct0) + Rat(c.cbar, d.alpha0) - (Rat(d.right.b0) + Rat(d.omegat0, d.alpha0)) * lt -
          Rat(l, d.alpha0);
  for (std::size_t i = 0; i < c.cti.size(); ++i)
    n += floor_div(c.cti[i] - d.right.legs[i].omega * lt, d.right.legs[i].alpha);
  return n;
}

bool two_node_congruent(const TwoNodeData& d, i64 cbar, i64 l, i64 lt) {
  return mod(l + d.omegat0 * lt - cbar, d.alpha0) == 0;
}

namespace {

Point2 primitive(const Rat& x, const Rat& y) {
  Int den = boost::multiprecision::lcm(boost::multiprecision::denominator(x), boost::multiprecision::denominator(y));
  i64 a = to_i64(Int(x * den)), b = to_i64(Int(y * den));
  i64 g = gcd64(a, b);
  return {a / g, b / g};
}

struct Ctx {
  const TwoNodeData& d;
  const TwoNodeLift& c;
  TwoNodeLift zero;
  std::pair<Rat, Rat> cc;
  Point2 shift;

  Ctx(const TwoNodeData& dd, const TwoNodeLift& cc0) : d(dd), c(cc0) {
    zero.ci.assign(c.ci.size(), 0);
    zero.cti.assign(c.cti.size(), 0);
    auto raw = two_node_cc(d, c);
    shift = {floor_i64(raw.first), floor_i64(raw.second)};
    cc = {raw.first - shift.first, raw.second - shift.second};
  }
  bool cong(Point2 l) const { return two_node_congruent(d, c.cbar, l.first - shift.first, l.second - shift.second); }
  Rat N(Point2 l) const { return two_node_N(d, c, l.first - shift.first, l.second - shift.second); }
  Rat Nt(Point2 l) const { return two_node_Nt(d, c, l.first - shift.first, l.second - shift.second); }

  std::vector<Point2> box(Point2 v1, Point2 v2) const {
    const i64 det = v1.first * v2.second - v1.second * v2.first;
    i64 xs[4] = {0, v1.first, v2.first, v1.first + v2.first};
    i64 ys[4] = {0, v1.second, v2.second, v1.second + v2.second};
    std::vector<Point2> out;
    for (i64 l1 = *std::min_element(xs, xs + 4) - 2; l1 <= *std::max_element(xs, xs + 4) + 2; ++l1)
      for (i64 l2 = *std::min_element(ys, ys + 4) - 2; l2 <= *std::max_element(ys, ys + 4) + 2; ++l2) {
        Rat p1 = cc.first + l1, p2 = cc.second + l2;
        Rat q1 = (p1 * v2.second - p2 * v2.first) / det;
        Rat q2 = (Rat(v1.first) * p2 - Rat(v1.second) * p1) / det;
        if (q1 >= 0 && q1 < 1 && q2 >= 0 && q2 < 1) out.push_back({l1, l2});
      }
    return out;
  }

  bool condA(Point2 v) const {
    for (auto& l : d.left.legs)
      if (mod(l.omega * v.first, l.alpha) != 0) return false;
    return two_node_N(d, zero, v.first, v.second) == 0 && two_node_congruent(d, 0, v.first, v.second);
  }
  bool condB(Point2 v) const {
    for (auto& l : d.right.legs)
      if (mod(l.omega * v.second, l.alpha) != 0) return false;
    return two_node_Nt(d, zero, v.first, v.second) == 0 && two_node_congruent(d, 0, v.first, v.second);
  }
  bool condC(Point2 v1, Point2 v2) const {
    if (two_node_N(d, zero, v2.first, v2.second) < 0 || two_node_Nt(d, zero, v1.first, v1.second) < 0) return false;
    for (auto l : box(v1, v2)) {
      if (!cong(l)) continue;
      if (N({l.first + v2.first, l.second + v2.second}) < 0) return false;
      if (Nt({l.first + v1.first, l.second + v1.second}) < 0) return false;
    }
    return true;
  }
};

}  // namespace

bool two_node_v_valid(const TwoNodeData& d, const TwoNodeLift& c, Point2 v1, Point2 v2) {
  Ctx ctx(d, c);
  return ctx.condA(v1) && ctx.condB(v2) && ctx.condC(v1, v2);
}

TwoNodeMonoid two_node_pc(const TwoNodeData& d, const TwoNodeLift& c, std::optional<std::pair<Point2, Point2>> v) {
  Ctx ctx(d, c);
  TwoNodeMonoid m;
  m.cc = ctx.cc;
  m.shift = ctx.shift;
  if (v) {
    m.v1 = v->first;
    m.v2 = v->second;
  } else {
    const Point2 d1 = primitive(Rat(1, d.alpha0), -d.e), d2 = primitive(-d.et, Rat(1, d.alpha0));
    std::vector<Point2> as, bs;
    const i64 cap = std::min<i64>(10000, step_cap());
    for (i64 k = 1; k <= cap && (as.size() < 64 || bs.size() < 64); ++k) {
      Point2 a{k * d1.first, k * d1.second}, b{k * d2.first, k * d2.second};
      if (as.size() < 64 && ctx.condA(a)) as.push_back(a);
      if (bs.size() < 64 && ctx.condB(b)) bs.push_back(b);
    }
    bool found = false;
    for (std::size_t s = 0; s + 2 <= as.size() + bs.size() && !found; ++s)
      for (std::size_t ka = 0; ka <= s && !found; ++ka) {
        std::size_t kb = s - ka;
        if (ka >= as.size() || kb >= bs.size()) continue;
        if (ctx.condC(as[ka], bs[kb])) {
          m.v1 = as[ka];
          m.v2 = bs[kb];
          found = true;
        }
      }
    if (!found) throw CapExceeded("no admissible v1, v2 within the search cap");
  }
  for (auto l : ctx.box(m.v1, m.v2)) {
    if (!ctx.cong(l)) continue;
    m.box.push_back(l);
    if (ctx.N(l) < 0) m.sminus1.push_back(l);
    if (ctx.Nt(l) < 0) m.sminus2.push_back(l);
  }
  std::sort(m.sminus1.begin(), m.sminus1.end());
  std::sort(m.sminus2.begin(), m.sminus2.end());
  Int pc = 0;
  for (auto l : m.sminus1) {
    i64 n = floor_div(l.first, m.v1.first);
    pc += n;
    for (i64 j = 1; j <= n; ++j) m.fplus.push_back({l.first - j * m.v1.first, l.second - j * m.v1.second});
  }
  for (auto l : m.sminus2) {
    i64 n = floor_div(l.second, m.v2.second);
    pc += n;
    for (i64 j = 1; j <= n; ++j) m.fplus.push_back({l.first - j * m.v2.first, l.second - j * m.v2.second});
  }
  for (auto l : m.sminus1)
    if (std::binary_search(m.sminus2.begin(), m.sminus2.end(), l)) {
      pc += 1;
      m.fplus.push_back(l);
    }
  std::sort(m.fplus.begin(), m.fplus.end());
  m.pc = pc;
  return m;
}

Int two_node_pc_ne(const TwoNodeData& d) {
  auto residues = [](const SeifertData& s) {
    std::vector<Rat> out{Rat(0)};
    for (auto& l : s.legs) {
      std::vector<Rat> next;
      for (auto& r : out)
        for (i64 x = 0; x < l.alpha; ++x) next.push_back(r + Rat(x, l.alpha));
      out.swap(next);
    }
    return out;
  };
  const auto L = residues(d.left), R = residues(d.right);
  const Rat a0 = d.alpha0;
  Int total = 0;
  for (auto& S : L) {
    const Int si = floor(S);
    const Rat sr = S - Rat(si);
    for (auto& T : R) {
      const Int ti = floor(T);
      const Rat tr = T - Rat(ti);
      total += si * ti;
      for (Int k = 0; k < si; ++k) total += floor(-d.et * a0 * (Rat(k) + sr) + tr);
      for (Int k = 0; k < ti; ++k) total += floor(-d.e * a0 * (Rat(k) + tr) + sr);
    }
  }
  return total;
}

// ---------------------------------------------------------------- polynomial part

namespace {

void add_term(std::map<Vec, Int>& m, const Vec& e, const Int& c) {
  if (c == 0) return;
  auto& x = m[e];
  x += c;
  if (x == 0) m.erase(e);
}

Vec shifted(const Vec& e, const Vec& a, i64 k) {
  Vec r = e;
  axpy(r, a, k);
  return r;
}

// c t^e (t^{k a} - 1) / (1 - t^a) as a polynomial
void ratio_poly(std::map<Vec, Int>& out, const Vec& e, const Int& c, const Vec& a, i64 k) {
  if (k > 0)
    for (i64 j = 0; j < k; ++j) add_term(out, shifted(e, a, j), -c);
  else
    for (i64 j = k; j < 0; ++j) add_term(out, shifted(e, a, j), c);
}

}  // namespace

PolyPart2 polynomial_part_2var(const SeriesRep& s) {
  if (s.dim != 2 || s.denominator.size() != 2) throw ValidationError("expected two variables and two denominator factors");
  const Vec& a1 = s.denominator[0];
  const Vec& a2 = s.denominator[1];
  const i64 det = a1[0] * a2[1] - a1[1] * a2[0];
  if (det >= 0 || a1[0] <= 0 || a1[1] <= 0 || a2[0] <= 0 || a2[1] <= 0)
    throw ValidationError("a2 must lie strictly between a1 and the first axis");
  PolyPart2 p;
  std::map<Vec, Int> raw1, raw2;  // over (1 - t^a1) and (1 - t^a2)
  for (auto& m : s.numerator) {
    const Vec& b = m.exp;
    i64 k1 = floor_div(b[0] * a2[1] - b[1] * a2[0], det);
    i64 k2 = floor_div(a1[0] * b[1] - a1[1] * b[0], det);
    Vec bp = shifted(shifted(b, a1, -k1), a2, -k2);
    add_term(p.q, bp, m.coeff);
    // t^{k1 a1 + k2 a2} - 1 = (t^{k1 a1} - 1) t^{k2 a2} + (t^{k2 a2} - 1)
    ratio_poly(raw2, shifted(bp, a2, k2), m.coeff, a1, k1);
    ratio_poly(raw1, bp, m.coeff, a2, k2);
  }
  for (auto& [e, c] : raw1) {
    i64 k = floor_div(e[0], a1[0]);
    Vec ep = shifted(e, a1, -k);
    add_term(p.q1, ep, c);
    ratio_poly(p.fplus, ep, c, a1, k);
  }
  for (auto& [e, c] : raw2) {
    i64 k = floor_div(e[1], a2[1]);
    Vec ep = shifted(e, a2, -k);
    add_term(p.q2, ep, c);
    ratio_poly(p.fplus, ep, c, a2, k);
  }
  return p;
}

SeriesRep recompose(const SeriesRep& shape, const PolyPart2& parts) {
  const Vec& a1 = shape.denominator[0];
  const Vec& a2 = shape.denominator[1];
  std::map<Vec, Int> num;
  for (auto& [e, c] : parts.q) add_term(num, e, c);
  for (auto& [e, c] : parts.q1) {
    add_term(num, e, c);
    add_term(num, shifted(e, a2, 1), -c);
  }
  for (auto& [e, c] : parts.q2) {
    add_term(num, e, c);
    add_term(num, shifted(e, a1, 1), -c);
  }
  for (auto& [e, c] : parts.fplus) {
    add_term(num, e, c);
    add_term(num, shifted(e, a1, 1), -c);
    add_term(num, shifted(e, a2, 1), -c);
    add_term(num, shifted(shifted(e, a1, 1), a2, 1), c);
  }
  SeriesRep r = shape;
  r.numerator.clear();
  for (auto& [e, c] : num) r.numerator.push_back({c, e, {}});
  return r;
}

// ---------------------------------------------------------------- lens spaces

namespace {

Rat sawtooth(const Rat& x) {
  if (boost::multiprecision::denominator(x) == 1) return 0;
  return x - Rat(floor(x)) - Rat(1, 2);
}

}  // namespace

Rat dedekind_sum(i64 q, i64 p) {
  Rat s = 0;
  for (i64 l = 1; l < p; ++l) s += sawtooth(Rat(l, p)) * sawtooth(Rat(q * l, p));
  return s;
}

LensRecord lens_invariants(i64 p, i64 q, i64 a) {
  Lattice lat(lens_graph(p, q));
  i64 qp = 1;
  while (mod(qp * q, p) != 1 % p) ++qp;
  LensRecord r;
  r.chi_formula = Rat(a * (1 - p), 2 * p);
  for (i64 j = 1; j <= a; ++j) r.chi_formula += frac(Rat(j * qp, p));
  DualCycle l = lat.dual(lat.size() - 1) * a;
  DualCycle s = minimal_representative(lat, l);
  r.chi_direct = lat.chi(lat.k_can(), s);
  r.k2s_formula = 4 * (Rat(p - 1, 2 * p) - 3 * dedekind_sum(q, p));
  r.k2s_direct = lat.k_squared_plus_s();
  r.sw = -r.k2s_direct / 8 + lat.chi(lat.k_can(), lat.r_representative(l));
  return r;
}

}  // namespace latcoh
