#include "latcoh/ehrhart.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/render.hpp"
#include "latcoh/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace latcoh;

namespace {

struct Options {
  std::string graph;
  std::string bad;
  std::string cls;
  std::string format = "json";
  std::string rect;
  std::string ray;
  int degree = -1;
  i64 period = 1;
  std::string facets = "T";
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(t);
  return out;
}

Vec parse_ints(const std::string& s, const char* what) {
  Vec out;
  for (auto& t : split(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ValidationError(std::string("invalid integer '") + t + "' in " + what);
    }
  }
  return out;
}

json rat(const Rat& r) { return to_string(r); }

json rats(const std::vector<Rat>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(rat(x));
  return a;
}

json cycle_json(const DualCycle& l) { return rats(l.coeffs()); }

json module_json(const GradedModule& m) {
  json pieces = json::array();
  for (auto& p : m.pieces) pieces.push_back({p.birth2, p.len});
  return {{"q", m.q}, {"tplus", m.tplus ? json(*m.tplus) : json(nullptr)}, {"pieces", pieces}};
}

json rect_json(const WeightRectangle& r) { return {{"nu", r.nu}, {"bound", r.bound}, {"weights", r.w}}; }

std::vector<std::string> id_list(const PlumbingGraph& g, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(g.vertices[v].id);
  return out;
}

std::vector<int> bad_set(const PlumbingGraph& g, const Options& o) {
  std::vector<int> bad;
  if (o.bad.empty()) {
    bad = g.nodes();
  } else {
    for (auto& id : split(o.bad)) {
      int v = g.index_of(id);
      if (v < 0) throw ValidationError("unknown vertex id '" + id + "' in --bad");
      bad.push_back(v);
    }
  }
  auto rep = validate_bad_vertices(g, bad);
  if (!rep.valid)
    throw ValidationError(std::string(o.bad.empty() ? "the nodes do not form" : "--bad is not") +
                          " a valid bad vertex set; pass a different set with --bad");
  return bad;
}

/// Class from --class: the reduced tuple for one or two nodes, or E*-coefficients.
DualCycle class_lift(const Lattice& lat, const std::string& text) {
  if (text.empty()) return lat.zero();
  Vec c = parse_ints(text, "--class");
  const auto& g = lat.graph();
  const auto nodes = g.nodes();
  if (nodes.size() == 2) {
    auto d = two_node_data(lat);
    if (c.size() == 3 + d.left.legs.size() + d.right.legs.size())
      return two_node_lift_cycle(lat, d, parse_two_node_lift(d, c));
  }
  if (nodes.size() == 1) {
    auto d = seifert_data(lat, nodes[0]);
    if (c.size() == 1 + d.legs.size()) return seifert_lift(lat, d, c);
  }
  if (static_cast<int>(c.size()) == lat.size()) {
    DualCycle l = lat.zero();
    for (int v = 0; v < lat.size(); ++v) l = l + lat.dual(v) * c[v];
    return l;
  }
  throw ValidationError("--class needs the reduced lift tuple or one E* coefficient per vertex");
}

std::string poly_text(const std::vector<Rat>& c) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    if (c[j] == 0) continue;
    Rat a = c[j];
    if (!out.empty()) out += a < 0 ? "-" : "+";
    else if (a < 0) out += "-";
    if (a < 0) a = -a;
    if (a != 1 || j == 0) out += to_string(a);
    if (j > 0) out += "λ";
    if (j > 1) {
      std::string e;
      for (int k = j; k > 0; k /= 10) e = sup[k % 10] + e;
      out += e;
    }
  }
  return out.empty() ? "0" : out;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

// ---------------------------------------------------------------- commands

void cmd_check(const Options& o) {
  Lattice lat(load_graph(o.graph));
  const auto& grp = lat.group();
  json j = {{"vertices", lat.size()},
            {"det", lat.det()},
            {"h_order", grp.order},
            {"invariant_factors", grp.factors},
            {"k_can", cycle_json(lat.k_can())},
            {"k2_plus_s", rat(lat.k_squared_plus_s())}};
  std::ostringstream t;
  t << "vertices " << lat.size() << "\ndet " << lat.det() << "\n|H| " << grp.order << " factors";
  for (auto f : grp.factors) t << ' ' << f;
  t << "\nk_can";
  for (auto& x : lat.k_can().coeffs()) t << ' ' << to_string(x);
  t << "\nK^2+|V| " << to_string(lat.k_squared_plus_s()) << "\n";
  emit(o, j, t.str());
}

void cmd_zmin(const Options& o) {
  Lattice lat(load_graph(o.graph));
  auto tr = laufer_trace(lat);
  json steps = json::array();
  for (auto& s : tr.steps) steps.push_back({{"added", lat.graph().vertices[s.added].id}, {"pairing", s.pairing}});
  Rat chi = lat.chi(lat.k_can(), lat.from_cycle(tr.terminal));
  json j = {{"zmin", tr.terminal}, {"chi", rat(chi)}, {"steps", steps}};
  std::ostringstream t;
  t << "zmin";
  for (auto x : tr.terminal) t << ' ' << x;
  t << "\nchi " << to_string(chi) << "\nsteps " << tr.steps.size() << "\n";
  emit(o, j, t.str());
}

void cmd_rational(const Options& o) {
  Lattice lat(load_graph(o.graph));
  auto w = is_rational(lat);
  json j = {{"rational", w.rational},   {"by_steps", w.by_steps},         {"by_chi", w.by_chi},
            {"zmin", w.zmin},           {"chi_zmin", rat(w.chi_zmin)},   {"failing_step", w.failing_step}};
  std::ostringstream t;
  t << (w.rational ? "rational" : "not rational") << "\nchi(zmin) " << to_string(w.chi_zmin) << "\n";
  emit(o, j, t.str());
}

WeightRectangle rectangle_for(XCycleEngine& eng, const Options& o) {
  Vec bound = o.rect.empty() ? bound_general(eng) : parse_ints(o.rect, "--rect");
  if (static_cast<int>(bound.size()) != eng.nu())
    throw ValidationError("--rect needs " + std::to_string(eng.nu()) + " entries");
  for (auto b : bound)
    if (b < 0) throw ValidationError("--rect entries must be non-negative");
  return weights_general(eng, bound);
}

void cmd_cohomology(const Options& o) {
  Lattice lat(load_graph(o.graph));
  auto bad = bad_set(lat.graph(), o);
  DualCycle lift = class_lift(lat, o.cls);
  SpinC cls = spinc_of(lat, lift);
  XCycleEngine eng(lat, bad, cls);
  auto rect = rectangle_for(eng, o);
  auto mods = modules_from_barcode(rect);
  auto eu = euler_characteristic(rect);
  MonotonePath path;
  i64 mp = min_path_eu(rect, &path);
  auto sw = sw_invariant(lat, lat.r_representative(lift), eu.eu_star);
  json jm = json::array();
  for (auto& m : mods) jm.push_back(module_json(m));
  json j = {{"bad", id_list(lat.graph(), bad)},
            {"class", lat.class_of(lift)},
            {"rectangle", rect_json(rect)},
            {"modules", jm},
            {"eu_h0", eu.eu_h0},
            {"eu_star", eu.eu_star},
            {"min_path_eu", mp},
            {"sw", {{"normalization", rat(sw.normalization)}, {"value", rat(sw.sw)}}}};
  std::ostringstream t;
  for (auto& m : mods) t << "H^" << m.q << " = " << m.str() << "\n";
  t << "eu(H^0) = " << eu.eu_h0 << "\neu(H*) = " << eu.eu_star << "\nmin path eu = " << mp
    << "\nsw = " << to_string(sw.sw) << "\n";
  emit(o, j, t.str());
}

json points_json(const std::vector<Point2>& ps) {
  json a = json::array();
  for (auto& p : ps) a.push_back({p.first, p.second});
  return a;
}

void cmd_pc(const Options& o) {
  Lattice lat(load_graph(o.graph));
  const auto& g = lat.graph();
  auto nodes = g.nodes();
  json j;
  std::ostringstream t;
  Int pc;
  DualCycle lift = lat.zero();
  if (nodes.size() > 2) throw ValidationError("pc unsupported; use cohomology eu");
  if (nodes.size() == 2) {
    auto d = two_node_data(lat);
    Vec flat = o.cls.empty() ? Vec(3 + d.left.legs.size() + d.right.legs.size(), 0) : parse_ints(o.cls, "--class");
    auto c = parse_two_node_lift(d, flat);
    lift = two_node_lift_cycle(lat, d, c);
    auto m = two_node_pc(d, c);
    pc = m.pc;
    j = {{"nodes", id_list(g, {d.n1, d.n2})},
         {"cc", {rat(m.cc.first), rat(m.cc.second)}},
         {"v1", {m.v1.first, m.v1.second}},
         {"v2", {m.v2.first, m.v2.second}},
         {"sminus1", points_json(m.sminus1)},
         {"sminus2", points_json(m.sminus2)},
         {"fplus", points_json(m.fplus)}};
    t << "c = (" << to_string(m.cc.first) << ", " << to_string(m.cc.second) << ")\nv1 = (" << m.v1.first << ", "
      << m.v1.second << ") v2 = (" << m.v2.first << ", " << m.v2.second << ")\n";
  } else {
    int node = -1;
    if (nodes.size() == 1) {
      node = nodes[0];
    } else {
      for (int v = 0; v < g.size() && node < 0; ++v)
        if (g.degree(v) == 2) node = v;
      if (node < 0) throw ValidationError("pc needs a node or an interior chain vertex");
    }
    auto d = seifert_data(lat, node);
    Vec c = o.cls.empty() ? Vec(1 + d.legs.size(), 0) : parse_ints(o.cls, "--class");
    if (c.size() != 1 + d.legs.size())
      throw ValidationError("--class needs " + std::to_string(1 + d.legs.size()) + " coefficients");
    lift = seifert_lift(lat, d, c);
    pc = seifert_pc(d, c);
    j = {{"node", g.vertices[node].id}, {"ctilde", rat(seifert_ctilde(d, c))}};
    t << "ctilde = " << to_string(seifert_ctilde(d, c)) << "\n";
  }
  auto sw = sw_invariant(lat, lat.r_representative(lift), to_i64(pc));
  j["class"] = lat.class_of(lift);
  j["pc"] = to_i64(pc);
  j["sw"] = {{"normalization", rat(sw.normalization)}, {"value", rat(sw.sw)}};
  t << "pc = " << pc << "\nsw = " << to_string(sw.sw) << "\n";
  emit(o, j, t.str());
}

void cmd_ehrhart(const Options& o) {
  Lattice lat(load_graph(o.graph));
  const auto& g = lat.graph();
  auto p = polytope_of(lat);
  DualCycle dir = lat.zero();
  if (o.ray.empty()) {
    auto nodes = g.nodes();
    dir = lat.dual(nodes.empty() ? 0 : nodes[0]);
  } else {
    Vec c = parse_ints(o.ray, "--ray");
    if (static_cast<int>(c.size()) != lat.size()) throw ValidationError("--ray needs one E* coefficient per vertex");
    for (int v = 0; v < lat.size(); ++v) dir = dir + lat.dual(v) * c[v];
  }
  if (o.facets != "T" && o.facets != "F") throw ValidationError("--facets must be T or F");
  const Facets f = o.facets == "T" ? Facets::TRemoved : Facets::FMinusT;
  const int degree = o.degree >= 0 ? o.degree : p.d();
  auto fit = fit_ray_quasipolynomial(p, Vec(lat.size(), 0), dir.num, f, std::nullopt, degree, o.period);
  json res = json::array();
  std::ostringstream t;
  for (i64 r = 0; r < fit.period; ++r) {
    res.push_back({{"ray", cycle_json(dir)},
                   {"period", fit.period},
                   {"residue", r},
                   {"coefficients", rats(fit.residues[r])}});
    if (fit.period > 1) t << "λ ≡ " << r << " (mod " << fit.period << "): ";
    t << poly_text(fit.residues[r]) << "\n";
  }
  json j = {{"convention", facets_name(f)}, {"fits", res}};
  emit(o, j, t.str());
}

void cmd_render(const Options& o) {
  Lattice lat(load_graph(o.graph));
  auto bad = bad_set(lat.graph(), o);
  XCycleEngine eng(lat, bad, spinc_of(lat, class_lift(lat, o.cls)));
  auto rect = rectangle_for(eng, o);
  if (rect.nu != 2) throw ValidationError("render needs two bad vertices, got " + std::to_string(rect.nu));
  if (o.format == "svg") {
    MonotonePath path;
    min_path_eu(rect, &path);
    std::cout << render_svg(rect, path);
  } else if (o.format == "text") {
    std::cout << render_ascii(rect);
  } else {
    std::cout << rect_json(rect).dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice cohomology and related invariants of negative definite plumbing graphs"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool with_bad) {
    sub->add_option("--graph", o.graph, "plumbing graph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", o.format, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
    if (with_bad) {
      sub->add_option("--bad", o.bad, "comma separated vertex ids (default: the nodes)");
      sub->add_option("--rect", o.rect, "rectangle bound, comma separated");
    }
    sub->add_option("--class", o.cls, "class lift, comma separated");
  };
  std::map<std::string, void (*)(const Options&)> commands;
  auto reg = [&](const char* name, const char* help, void (*fn)(const Options&), bool with_bad) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, with_bad);
    commands[name] = fn;
    return sub;
  };
  reg("check", "validate a graph and print lattice data", cmd_check, false);
  reg("zmin", "Laufer sequence and the fundamental cycle", cmd_zmin, false);
  reg("rational", "rationality test", cmd_rational, false);
  reg("cohomology", "lattice cohomology through the reduced rectangle", cmd_cohomology, true);
  reg("pc", "periodic constant of the series for one or two nodes", cmd_pc, false);
  auto* eh = reg("ehrhart", "fit the Ehrhart quasipolynomial along a ray", cmd_ehrhart, false);
  eh->add_option("--ray", o.ray, "E* coefficients of the ray direction");
  eh->add_option("--degree", o.degree, "polynomial degree (default: number of denominator factors)");
  eh->add_option("--period", o.period, "quasipolynomial period in the dilation");
  eh->add_option("--facets", o.facets, "T (T-removed) or F (F minus T)");
  reg("render", "draw the weight table (two bad vertices)", cmd_render, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    for (auto* sub : app.get_subcommands()) commands.at(sub->get_name())(o);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise LATCOH_STEP_CAP)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
