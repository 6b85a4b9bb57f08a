#include "latcoh/plumbing.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

namespace latcoh {

int PlumbingGraph::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (vertices[i].id == id) return i;
  return -1;
}

std::vector<int> PlumbingGraph::nodes() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (degree(v) >= 3) out.push_back(v);
  return out;
}

std::vector<int> PlumbingGraph::ends() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> PlumbingGraph::path(int a, int b) const {
  std::vector<int> parent(size(), -2);
  std::deque<int> q{a};
  parent[a] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : nbrs[v])
      if (parent[w] == -2) {
        parent[w] = v;
        q.push_back(w);
      }
  }
  std::vector<int> out;
  for (int v = b; v != -1; v = parent[v]) out.push_back(v);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

PlumbingGraph build(std::vector<Vertex> vs, const std::vector<std::pair<int, int>>& es) {
  PlumbingGraph g;
  g.vertices = std::move(vs);
  g.nbrs.assign(g.vertices.size(), {});
  if (g.vertices.empty()) throw ValidationError("graph has no vertices");
  std::vector<int> uf(g.vertices.size());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto [a, b] : es) {
    int ra = find(a), rb = find(b);
    if (ra == rb) throw ValidationError("not a tree: edge " + g.vertices[a].id + "-" + g.vertices[b].id + " closes a cycle");
    uf[ra] = rb;
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
    g.nbrs[a].push_back(b);
    g.nbrs[b].push_back(a);
  }
  if (es.size() + 1 != g.vertices.size()) throw ValidationError("not a tree: graph is disconnected");
  for (auto& n : g.nbrs) std::sort(n.begin(), n.end());
  return g;
}

}  // namespace

PlumbingGraph make_graph(const std::vector<Vertex>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!idx.emplace(vertices[i].id, static_cast<int>(i)).second)
      throw ValidationError("duplicate vertex id '" + vertices[i].id + "'");
  std::vector<std::pair<int, int>> es;
  for (auto& [a, b] : edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw ValidationError("edge to unknown id '" + a + "'");
    if (ib == idx.end()) throw ValidationError("edge to unknown id '" + b + "'");
    es.emplace_back(ia->second, ib->second);
  }
  return build(vertices, es);
}

PlumbingGraph parse_graph(const std::string& text) {
  static const std::regex id_re("[A-Za-z0-9_]+");
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<Vertex> vs;
  std::map<std::string, int> idx;
  std::vector<std::pair<int, int>> es;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (tok[0] == "vertex") {
      if (tok.size() != 3) throw ValidationError(where + "expected 'vertex <id> <euler>'");
      if (!std::regex_match(tok[1], id_re)) throw ValidationError(where + "invalid id '" + tok[1] + "'");
      i64 e;
      try {
        std::size_t used = 0;
        e = std::stoll(tok[2], &used);
        if (used != tok[2].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError(where + "euler number must be an integer");
      }
      if (!idx.emplace(tok[1], static_cast<int>(vs.size())).second)
        throw ValidationError(where + "duplicate vertex id '" + tok[1] + "'");
      vs.push_back({tok[1], e});
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ValidationError(where + "expected 'edge <id> <id>'");
      std::pair<int, int> e;
      for (int k = 1; k <= 2; ++k) {
        auto it = idx.find(tok[k]);
        if (it == idx.end()) throw ValidationError(where + "edge to unknown id '" + tok[k] + "'");
        (k == 1 ? e.first : e.second) = it->second;
      }
      if (e.first == e.second) throw ValidationError(where + "not a tree: loop at '" + tok[1] + "'");
      es.push_back(e);
    } else {
      throw ValidationError(where + "unknown directive '" + tok[0] + "'");
    }
  }
  return build(vs, es);
}

PlumbingGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const PlumbingGraph& g) {
  std::ostringstream out;
  for (auto& v : g.vertices) out << "vertex " << v.id << " " << v.euler << "\n";
  for (auto [a, b] : g.edges) out << "edge " << g.vertices[a].id << " " << g.vertices[b].id << "\n";
  return out.str();
}

bool is_negative_definite(const IMatrix& m) {
  IMatrix neg = m;
  for (auto& r : neg)
    for (auto& x : r) x = -x;
  for (const auto& d : leading_minors(neg))
    if (d <= 0) return false;
  return true;
}

IntersectionForm intersection_form(const PlumbingGraph& g) {
  IntersectionForm f;
  f.s = g.size();
  f.m.assign(f.s, Vec(f.s, 0));
  for (int v = 0; v < f.s; ++v) f.m[v][v] = g.vertices[v].euler;
  for (auto [a, b] : g.edges) f.m[a][b] = f.m[b][a] = 1;
  if (!is_negative_definite(f.m)) throw ValidationError("not negative definite");
  IMatrix neg = f.m;
  for (auto& r : neg)
    for (auto& x : r) x = -x;
  f.det = bareiss_det(neg);
  return f;
}

// ---------------------------------------------------------------- DualCycle

std::vector<Rat> DualCycle::coeffs() const {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < num.size(); ++i) out.push_back(coeff(static_cast<int>(i)));
  return out;
}

bool DualCycle::integral() const {
  return std::all_of(num.begin(), num.end(), [&](i64 x) { return x % den == 0; });
}

DualCycle DualCycle::operator+(const DualCycle& o) const {
  DualCycle r{num, den};
  for (std::size_t i = 0; i < num.size(); ++i) r.num[i] = checked_add(r.num[i], o.num[i]);
  return r;
}

DualCycle DualCycle::operator-(const DualCycle& o) const {
  DualCycle r{num, den};
  for (std::size_t i = 0; i < num.size(); ++i) r.num[i] = checked_add(r.num[i], -o.num[i]);
  return r;
}

DualCycle DualCycle::operator*(i64 k) const {
  DualCycle r{num, den};
  for (auto& x : r.num) x = checked_mul(x, k);
  return r;
}

bool DualCycle::leq(const DualCycle& o) const {
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] > o.num[i]) return false;
  return true;
}

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(PlumbingGraph g) : g_(std::move(g)), form_(intersection_form(g_)), n_(g_.size()) {
  det_ = to_i64(form_.det);
  RMatrix inv = inverse(form_.m);
  adj_.assign(n_, Vec(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Rat x = -inv[i][j] * det_;
      if (boost::multiprecision::denominator(x) != 1) throw std::logic_error("adjugate not integral");
      adj_[i][j] = to_i64(boost::multiprecision::numerator(x));
    }
  Vec a(n_);
  for (int v = 0; v < n_; ++v) a[v] = -g_.vertices[v].euler - 2;
  kcan_ = from_pairings(a);

  Smith sm = smith_form(form_.m);
  for (std::size_t i = 0; i < sm.d.size(); ++i) {
    if (sm.d[i] <= 1) continue;
    i64 d = to_i64(sm.d[i]);
    group_.factors.push_back(d);
    Vec row(n_);
    for (int j = 0; j < n_; ++j) row[j] = to_i64(Int(((sm.u[i][j] % d) + d) % d));
    group_.u.push_back(row);
  }
  group_.order = 1;
  for (i64 d : group_.factors) group_.order *= d;
  if (group_.order != det_) throw std::logic_error("invariant factors disagree with det");
}

void Lattice::enumerate_classes() const {
  if (classes_done_) return;
  if (det_ > step_cap()) throw CapExceeded("discriminant group larger than the step cap");
  // breadth-first enumeration of L'/L through the generators E*_v
  std::deque<Vec> queue{Vec(n_, 0)};
  rep_index_[class_of_pairings(queue.front())] = 0;
  reps_.push_back(r_representative(from_pairings(queue.front())));
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    for (int v = 0; v < n_; ++v) {
      Vec nxt = cur;
      nxt[v] -= 1;
      auto lab = class_of_pairings(nxt);
      if (rep_index_.count(lab)) continue;
      rep_index_[lab] = static_cast<int>(reps_.size());
      reps_.push_back(r_representative(from_pairings(nxt)));
      queue.push_back(nxt);
    }
  }
  classes_done_ = true;
}

const std::vector<DualCycle>& Lattice::class_representatives() const {
  enumerate_classes();
  return reps_;
}

DualCycle Lattice::zero() const { return DualCycle{Vec(n_, 0), det_}; }

DualCycle Lattice::dual(int v) const {
  DualCycle d{Vec(n_), det_};
  for (int i = 0; i < n_; ++i) d.num[i] = adj_[i][v];
  return d;
}

std::vector<DualCycle> Lattice::dual_basis() const {
  std::vector<DualCycle> out;
  for (int v = 0; v < n_; ++v) out.push_back(dual(v));
  return out;
}

DualCycle Lattice::from_cycle(const Vec& x) const {
  DualCycle d{Vec(n_), det_};
  for (int i = 0; i < n_; ++i) d.num[i] = checked_mul(x[i], det_);
  return d;
}

DualCycle Lattice::from_pairings(const Vec& a) const {
  DualCycle d{Vec(n_, 0), det_};
  for (int i = 0; i < n_; ++i) {
    i64 s = 0;
    for (int j = 0; j < n_; ++j) s = checked_add(s, checked_mul(adj_[i][j], a[j]));
    d.num[i] = -s;
  }
  return d;
}

i64 Lattice::pair_with_E(const DualCycle& l, int j) const {
  i64 s = checked_mul(l.num[j], form_.m[j][j]);
  for (int w : g_.nbrs[j]) s = checked_add(s, l.num[w]);
  if (s % l.den != 0) throw std::logic_error("pairing with E_j not integral");
  return s / l.den;
}

i64 Lattice::pair_cycle_E(const Vec& x, int j) const {
  i64 s = x[j] * form_.m[j][j];
  for (int w : g_.nbrs[j]) s += x[w];
  return s;
}

Vec Lattice::pairings(const DualCycle& l) const {
  Vec a(n_);
  for (int j = 0; j < n_; ++j) a[j] = pair_with_E(l, j);
  return a;
}

Rat Lattice::pair(const DualCycle& a, const DualCycle& b) const {
  Vec pb = pairings(b);
  Int s = 0;
  for (int j = 0; j < n_; ++j) s += Int(a.num[j]) * pb[j];
  return Rat(s, Int(a.den));
}

Rat Lattice::chi(const DualCycle& k, const DualCycle& l) const { return -pair(l, l + k) / 2; }

Rat Lattice::k_squared_plus_s() const { return pair(kcan_, kcan_) + n_; }

Rat Lattice::k_squared_plus_s_closed() const {
  Rat r = 3 * n_ + 2;
  for (int v = 0; v < n_; ++v) r += form_.m[v][v];
  for (int v = 0; v < n_; ++v)
    for (int w = 0; w < n_; ++w) r -= Rat((2 - g_.degree(v)) * (2 - g_.degree(w))) * Rat(adj_[v][w], det_);
  return r;
}

ClassLabel Lattice::class_of_pairings(const Vec& a) const {
  ClassLabel lab;
  for (std::size_t i = 0; i < group_.factors.size(); ++i) {
    i64 d = group_.factors[i], s = 0;
    for (int j = 0; j < n_; ++j) s = (s + group_.u[i][j] * mod(a[j], d)) % d;
    lab.push_back(s);
  }
  return lab;
}

ClassLabel Lattice::class_of(const DualCycle& l) const { return class_of_pairings(pairings(l)); }

int Lattice::class_index(const DualCycle& l) const {
  enumerate_classes();
  return rep_index_.at(class_of(l));
}

DualCycle Lattice::r_representative(const DualCycle& l) const {
  DualCycle r = l;
  for (auto& x : r.num) x = mod(x, l.den);
  return r;
}

Int Lattice::complement_det(const std::vector<int>& removed) const {
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
  IMatrix sub(keep.size(), Vec(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) sub[i][j] = -form_.m[keep[i]][keep[j]];
  return bareiss_det(sub);
}

bool Lattice::subgraph_determinant_identity(int v, int w) const {
  // -det * (E*_v, E*_w) is the adjugate entry
  Rat lhs = -Rat(det_) * pair(dual(v), dual(w));
  return lhs == Rat(complement_det(g_.path(v, w)));
}

// ---------------------------------------------------------------- builders

namespace {

struct Builder {
  std::vector<Vertex> vs;
  std::vector<std::pair<std::string, std::string>> es;
  std::string add(const std::string& id, i64 e) {
    vs.push_back({id, e});
    return id;
  }
  std::string chain(const std::string& prefix, const Vec& ws, const std::string& start) {
    std::string prev = start;
    for (std::size_t k = 0; k < ws.size(); ++k) {
      auto id = add(prefix + std::to_string(k), ws[k]);
      if (!prev.empty()) es.emplace_back(prev, id);
      prev = id;
    }
    return prev;
  }
};

}  // namespace

PlumbingGraph chain_graph(const Vec& eulers) {
  Builder b;
  b.chain("v", eulers, "");
  return make_graph(b.vs, b.es);
}

PlumbingGraph star_graph(i64 center, const std::vector<Vec>& legs) {
  Builder b;
  b.add("c", center);
  for (std::size_t i = 0; i < legs.size(); ++i) b.chain("l" + std::to_string(i) + "_", legs[i], "c");
  return make_graph(b.vs, b.es);
}

PlumbingGraph two_node_graph(i64 b1, i64 b2, const Vec& connector,
                             const std::vector<Vec>& left, const std::vector<Vec>& right) {
  Builder b;
  b.add("n1", b1);
  b.add("n2", b2);
  auto last = b.chain("m", connector, "n1");
  b.es.emplace_back(last, "n2");
  for (std::size_t i = 0; i < left.size(); ++i) b.chain("L" + std::to_string(i) + "_", left[i], "n1");
  for (std::size_t i = 0; i < right.size(); ++i) b.chain("R" + std::to_string(i) + "_", right[i], "n2");
  return make_graph(b.vs, b.es);
}

Vec hirzebruch_expansion(i64 p, i64 q) {
  Vec ks;
  while (q != 0) {
    i64 k = ceil_div(p, q);
    ks.push_back(k);
    i64 r = k * q - p;
    p = q;
    q = r;
  }
  return ks;
}

PlumbingGraph lens_graph(i64 p, i64 q) {
  Vec ks = hirzebruch_expansion(p, q);
  for (auto& k : ks) k = -k;
  return chain_graph(ks);
}

PlumbingGraph ratmin_graph(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> deg(n, 0);
  std::vector<std::pair<std::string, std::string>> es;
  for (int v = 1; v < n; ++v) {
    ++deg[v];
    ++deg[parent[v]];
    es.emplace_back("v" + std::to_string(parent[v]), "v" + std::to_string(v));
  }
  std::vector<Vertex> vs;
  for (int v = 0; v < n; ++v) vs.push_back({"v" + std::to_string(v), deg[v] <= 1 ? -2 : -deg[v]});
  return make_graph(vs, es);
}

}  // namespace latcoh
