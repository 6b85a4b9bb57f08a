#include "latcoh/ehrhart.hpp"

#include <numeric>

namespace latcoh {

Polytope polytope_of(const SeriesRep& s) {
  Polytope p;
  p.dim = s.dim;
  p.den = s.den;
  p.cols = s.denominator;
  p.labels = s.den_labels;
  p.factors = s.factors;
  return p;
}

Polytope polytope_of(const Lattice& lat) { return polytope_of(z_series(lat)); }

const char* facets_name(Facets f) { return f == Facets::TRemoved ? "T-removed" : "F-minus-T"; }

ClassLabel negate_label(const ClassLabel& h, const Vec& factors) {
  ClassLabel r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = mod(-h[i], factors[i]);
  return r;
}

namespace {

struct Walker {
  const Polytope& p;
  std::vector<int> coords;
  std::optional<ClassLabel> label;
  i64 steps = 0;

  Walker(const Polytope& pp, const std::vector<int>& cs, const std::optional<ClassLabel>& lab) : p(pp), label(lab) {
    if (cs.empty()) {
      coords.resize(p.dim);
      std::iota(coords.begin(), coords.end(), 0);
    } else {
      coords = cs;
    }
    for (auto& a : p.cols)
      for (int v : coords)
        if (a[v] <= 0) throw ValidationError("unbounded polytope: a column has a non-positive coordinate");
    if (label && p.labels.size() != p.cols.size()) throw ValidationError("polytope carries no class data");
  }

  void tick() {
    if (++steps > step_cap()) throw CapExceeded("lattice point enumeration exceeded the step cap");
  }

  bool match(const ClassLabel& lab) const { return !label || lab == *label; }

  ClassLabel step_label(const ClassLabel& lab, std::size_t i, i64 k) const {
    if (!label) return lab;
    ClassLabel r(lab.size());
    for (std::size_t j = 0; j < lab.size(); ++j) r[j] = mod(lab[j] + mod(k, p.factors[j]) * p.labels[i][j], p.factors[j]);
    return r;
  }

  ClassLabel zero_label() const { return label ? ClassLabel(label->size(), 0) : ClassLabel{}; }

  // Points x >= lo (componentwise, lo in {0,1}) whose partial sums satisfy `inside`,
  // which must be monotone: once false it stays false as coordinates grow.
  template <class Inside>
  i64 count(i64 lo, Inside inside) {
    const std::size_t d = p.cols.size();
    Vec s(p.dim, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (int v = 0; v < p.dim; ++v) s[v] = checked_add(s[v], checked_mul(lo, p.cols[i][v]));
    ClassLabel lab = zero_label();
    for (std::size_t i = 0; i < d; ++i) lab = step_label(lab, i, lo);
    i64 total = 0;
    std::function<void(std::size_t, Vec&, const ClassLabel&)> rec = [&](std::size_t i, Vec& cur, const ClassLabel& l) {
      if (i == d) {
        if (match(l)) ++total;
        return;
      }
      Vec t = cur;
      ClassLabel tl = l;
      while (inside(t)) {
        tick();
        rec(i + 1, t, tl);
        for (int v = 0; v < p.dim; ++v) t[v] = checked_add(t[v], p.cols[i][v]);
        tl = step_label(tl, i, 1);
      }
    };
    if (!inside(s)) return 0;
    rec(0, s, lab);
    return total;
  }
};

}  // namespace

i64 count_points(const Polytope& p, const Vec& l, Facets f, const std::optional<ClassLabel>& label,
                 const std::vector<int>& coords) {
  Walker w(p, coords, label);
  if (f == Facets::TRemoved)
    return w.count(0, [&](const Vec& s) {
      for (int v : w.coords)
        if (s[v] < l[v]) return true;
      return false;
    });
  return w.count(1, [&](const Vec& s) {
    for (int v : w.coords)
      if (s[v] <= l[v]) return true;
    return false;
  });
}

i64 count_points_ie(const Polytope& p, const Vec& l, Facets f, const std::optional<ClassLabel>& label,
                    const std::vector<int>& coords) {
  Walker w(p, coords, label);
  const std::size_t k = w.coords.size();
  if (k > 20) throw ValidationError("too many pieces for inclusion-exclusion");
  i64 total = 0;
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    std::vector<int> sub;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) sub.push_back(w.coords[j]);
    i64 c = f == Facets::TRemoved ? w.count(0,
                                            [&](const Vec& s) {
                                              for (int v : sub)
                                                if (s[v] >= l[v]) return false;
                                              return true;
                                            })
                                  : w.count(1, [&](const Vec& s) {
                                      for (int v : sub)
                                        if (s[v] > l[v]) return false;
                                      return true;
                                    });
    total += (sub.size() % 2 == 1 ? c : -c);
  }
  return total;
}

// ---------------------------------------------------------------- fitting

Rat eval(const MultiPoly& p, const std::vector<Rat>& x) {
  Rat r = 0;
  for (auto& [e, c] : p) {
    Rat m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (i64 k = 0; k < e[i]; ++k) m *= x[i];
    r += m;
  }
  return r;
}

MultiPoly reflect(const MultiPoly& p) {
  MultiPoly r;
  for (auto& [e, c] : p) {
    i64 deg = std::accumulate(e.begin(), e.end(), i64{0});
    r[e] = deg % 2 ? Rat(-c) : c;
  }
  return r;
}

namespace {

std::vector<Vec> compositions(int nu, int total) {
  std::vector<Vec> out;
  Vec cur(nu, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nu - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (nu == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(0, total);
  return out;
}

}  // namespace

std::optional<MultiPoly> fit_multivariate(const std::function<Rat(const Vec&)>& f, const Vec& base, i64 step,
                                          int degree) {
  const int nu = static_cast<int>(base.size());
  std::vector<Vec> monos, pts;
  for (int k = 0; k <= degree; ++k)
    for (auto& m : compositions(nu, k)) monos.push_back(m);
  pts = monos;
  auto at = [&](const Vec& m) {
    Vec x(nu);
    for (int i = 0; i < nu; ++i) x[i] = base[i] + step * m[i];
    return x;
  };
  auto row = [&](const Vec& x) {
    std::vector<Rat> r;
    for (auto& e : monos) {
      Rat v = 1;
      for (int i = 0; i < nu; ++i)
        for (i64 k = 0; k < e[i]; ++k) v *= x[i];
      r.push_back(v);
    }
    return r;
  };
  RMatrix a;
  std::vector<Rat> b;
  for (auto& m : pts) {
    Vec x = at(m);
    a.push_back(row(x));
    b.push_back(f(x));
  }
  auto c = solve(a, b);
  MultiPoly p;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (c[i] != 0) p[monos[i]] = c[i];
  for (int k = degree + 1; k <= degree + 2; ++k)
    for (auto& m : compositions(nu, k)) {
      Vec x = at(m);
      std::vector<Rat> xr(x.begin(), x.end());
      if (eval(p, xr) != f(x)) return std::nullopt;
    }
  return p;
}

RayFit fit_ray_quasipolynomial(const Polytope& p, const Vec& base, const Vec& dir, Facets f,
                               const std::optional<ClassLabel>& label, int degree, i64 period) {
  if (period < 1) throw ValidationError("period must be positive");
  RayFit out;
  out.base = base;
  out.dir = dir;
  out.period = period;
  auto value = [&](const Vec& lam) {
    Vec l = base;
    for (std::size_t v = 0; v < l.size(); ++v) l[v] = checked_add(l[v], checked_mul(lam[0], dir[v]));
    return Rat(count_points(p, l, f, label));
  };
  for (i64 r = 0; r < period; ++r) {
    const i64 start = r == 0 ? period : r;
    auto fit = fit_multivariate(value, {start}, period, degree);
    if (!fit)
      throw ValidationError("fit residual does not vanish on residue " + std::to_string(r) +
                            " (wall crossing or degree too small)");
    std::vector<Rat> coeffs(degree + 1);
    for (auto& [e, c] : *fit) coeffs[e[0]] = c;
    out.residues.push_back(coeffs);
  }
  return out;
}

ReciprocityReport reciprocity_check(const Polytope& p, const Vec& dir, const std::optional<ClassLabel>& h,
                                    int degree, i64 period) {
  ReciprocityReport rep;
  const Vec zero(p.dim, 0);
  std::optional<ClassLabel> mh;
  if (h) mh = negate_label(*h, p.factors);
  rep.t_removed = fit_ray_quasipolynomial(p, zero, dir, Facets::TRemoved, h, degree, period);
  rep.f_minus_t = fit_ray_quasipolynomial(p, zero, dir, Facets::FMinusT, mh, degree, period);
  const Rat sign = p.d() % 2 ? -1 : 1;
  rep.holds = true;
  for (i64 r = 0; r < period; ++r) {
    const auto& a = rep.t_removed.residues[r];
    const auto& b = rep.f_minus_t.residues[mod(-r, period)];
    for (int j = 0; j <= degree; ++j) {
      Rat reflected = (j % 2 ? -b[j] : b[j]) * sign;
      if (a[j] != reflected) rep.holds = false;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- node coefficients

namespace {

Rat factorial(i64 n) {
  Rat r = 1;
  for (i64 k = 2; k <= n; ++k) r *= k;
  return r;
}

Rat binom(i64 n, i64 k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

NodeCoefficients node_coefficients(const Lattice& lat, const Vec& base_in, i64 step) {
  if (lat.det() != 1) throw ValidationError("node coefficients need a graph with trivial H");
  const auto& g = lat.graph();
  NodeCoefficients out;
  out.nodes = g.nodes();
  const int nu = static_cast<int>(out.nodes.size());
  if (nu == 0) throw ValidationError("graph has no node");
  const Polytope p = polytope_of(lat);

  Vec dm2(nu);
  std::vector<Rat> kn(nu);  // (K, E*_n)
  for (int a = 0; a < nu; ++a) {
    dm2[a] = g.degree(out.nodes[a]) - 2;
    kn[a] = lat.pair(lat.k_can(), lat.dual(out.nodes[a]));
  }
  Vec base = base_in;
  if (base.empty())
    for (int a = 0; a < nu; ++a) base.push_back(dm2[a] + 1);
  if (static_cast<int>(base.size()) != nu) throw ValidationError("base needs one entry per node");

  out.J.assign(nu, std::vector<Rat>(nu));
  for (int a = 0; a < nu; ++a)
    for (int b = 0; b < nu; ++b) out.J[a][b] = lat.inverse_entry(out.nodes[a], out.nodes[b]);

  auto cycle_at = [&](const Vec& lam) {
    DualCycle l = lat.zero();
    for (int a = 0; a < nu; ++a) l = l + lat.dual(out.nodes[a]) * lam[a];
    return l;
  };
  std::map<Vec, i64> memo;
  auto count_at = [&](const Vec& lam) {
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;
    for (i64 x : lam)
      if (x <= 0) return memo[lam] = 0;
    return memo[lam] = count_points(p, cycle_at(lam).num, Facets::TRemoved);
  };

  // Delta(lambda) = sum_k (-1)^{|k|} prod binom(delta_n - 2, k_n) L(lambda - k)
  std::vector<Vec> ks{Vec(nu, 0)};
  for (int a = 0; a < nu; ++a) {
    std::vector<Vec> next;
    for (auto& k : ks)
      for (i64 j = 0; j <= dm2[a]; ++j) {
        Vec t = k;
        t[a] = j;
        next.push_back(t);
      }
    ks.swap(next);
  }
  auto delta = [&](const Vec& lam) {
    Rat s = 0;
    for (auto& k : ks) {
      Rat w = 1;
      Vec x(nu);
      i64 sk = 0;
      for (int a = 0; a < nu; ++a) {
        w *= binom(dm2[a], k[a]);
        x[a] = lam[a] - k[a];
        sk += k[a];
      }
      s += (sk % 2 ? -w : w) * count_at(x);
    }
    return s;
  };
  auto fit = fit_multivariate(delta, base, step, 2);
  if (!fit) throw ValidationError("node-dilation samples do not lie in one chamber");
  auto dcoeff = [&](const Vec& e) {
    auto it = fit->find(e);
    return it == fit->end() ? Rat(0) : it->second;
  };

  // sum_k (-1)^k binom(n, k) k^p
  auto moment = [](i64 n, i64 pw) {
    Rat s = 0;
    for (i64 k = 0; k <= n; ++k) {
      Rat t = binom(n, k);
      for (i64 j = 0; j < pw; ++j) t *= k;
      s += k % 2 ? -t : t;
    }
    return s;
  };
  // Delta only sees the coefficients with m >= delta - 2, so the coefficient of
  // lambda^q in Delta is triangular in the excess e = m - (delta - 2).
  std::vector<Vec> excess;
  for (int layer = 2; layer >= 0; --layer)
    for (auto& e : compositions(nu, layer)) excess.push_back(e);
  auto weight = [&](const Vec& e, const Vec& q) {
    Rat w = 1;
    i64 sp = 0;
    for (int a = 0; a < nu; ++a) {
      const i64 m = dm2[a] + e[a], pw = m - q[a];
      w *= binom(m, pw) * moment(dm2[a], pw) / factorial(m);
      sp += pw;
    }
    return sp % 2 ? Rat(-w) : w;
  };
  std::map<Vec, Rat> ahat;  // keyed by excess
  for (auto& q : excess) {
    Rat rest = dcoeff(q);
    for (auto& [e, val] : ahat) {
      bool ge = true;
      for (int a = 0; a < nu; ++a)
        if (e[a] < q[a]) ge = false;
      if (ge) rest -= val * weight(e, q);
    }
    ahat[q] = rest / weight(q, q);
  }
  for (auto& [e, val] : ahat) {
    Vec m = dm2;
    for (int a = 0; a < nu; ++a) m[a] += e[a];
    out.normalized[m] = val;
  }
  auto coeff = [&](const Vec& m) { return out.normalized.at(m); };

  out.top_ok = out.cross_ok = out.linear_ok = true;
  for (int a = 0; a < nu; ++a) {
    Vec e = dm2;
    e[a] += 2;
    if (coeff(e) != out.J[a][a]) out.top_ok = false;
    e = dm2;
    e[a] += 1;
    Rat lin = -kn[a] / 2;
    for (int b = 0; b < nu; ++b) lin += Rat(dm2[b]) * out.J[a][b] / 2;
    if (coeff(e) != lin) out.linear_ok = false;
    for (int b = a + 1; b < nu; ++b) {
      Vec c = dm2;
      c[a] += 1;
      c[b] += 1;
      if (coeff(c) != out.J[a][b]) out.cross_ok = false;
    }
  }
  Rat pc = coeff(dm2);
  for (int a = 0; a < nu; ++a) {
    pc += Rat(dm2[a]) * kn[a] / 4;
    pc -= Rat(dm2[a] * (3 * (dm2[a] + 2) - 7)) * out.J[a][a] / 24;
    for (int b = 0; b < nu; ++b)
      if (b != a) pc -= Rat(dm2[a] * dm2[b]) * out.J[a][b] / 8;
  }
  out.pc = pc;

  out.delta_ok = true;
  for (int layer = 0; layer <= 2; ++layer)
    for (auto& m : compositions(nu, layer)) {
      Vec lam(nu);
      for (int a = 0; a < nu; ++a) lam[a] = base[a] + step * m[a];
      if (delta(lam) - lat.chi(lat.k_can(), cycle_at(lam)) != pc) out.delta_ok = false;
    }
  return out;
}

SeifertEhrhart seifert_ne_coefficients(const Lattice& lat) {
  const auto nodes = lat.graph().nodes();
  if (nodes.size() != 1) throw ValidationError("expected a star-shaped graph with one node");
  const SeifertData sd = seifert_data(lat, nodes[0]);
  const Polytope p = polytope_of(lat);
  const int d = p.d();
  const Rat abs_e = -sd.e;
  SeifertEhrhart out;
  for (auto& leg : sd.legs) out.period = lcm64(out.period, to_i64(boost::multiprecision::denominator(Rat(abs_e * leg.alpha))));
  const int node = nodes[0];
  auto value = [&](const Vec& n) {
    Vec l(p.dim, 0);
    l[node] = checked_mul(n[0], p.den);
    return Rat(count_points(p, l, Facets::TRemoved, std::nullopt, {node}));
  };
  auto fit = fit_multivariate(value, {out.period}, out.period, d);
  if (!fit) throw ValidationError("fit residual does not vanish for the node polytope");
  out.normalized.assign(d + 1, 0);
  for (auto& [e, c] : *fit) out.normalized[e[0]] = c * factorial(e[0]);

  Rat prod = 1, inv = 0;
  i64 alpha = 1;
  for (auto& leg : sd.legs) {
    prod *= leg.alpha;
    inv += Rat(1, leg.alpha);
    alpha = lcm64(alpha, leg.alpha);
  }
  auto power = [](Rat x, int k) {
    Rat r = 1;
    while (k-- > 0) r *= x;
    return r;
  };
  const Rat s = -Rat(1, alpha) + inv;
  out.leading_ok = out.normalized[d] / power(abs_e, d) == prod;
  out.second_ok = out.normalized[d - 1] / power(abs_e, d - 1) == prod * s / 2;
  const Rat third = out.normalized[d - 2] / power(abs_e, d - 2);
  out.pc_ne = prod * (third / prod + Rat((d - 2) * (3 * d - 5), 24) - Rat(d - 2, 4) * s);
  return out;
}

}  // namespace latcoh
