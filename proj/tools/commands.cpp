#include "cli.h"

#include "tamari/complex.h"
#include "tamari/paths.h"

#include <CLI11.hpp>
#include <json.hpp>
#include <fmt/core.h>

#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace tamari::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::size_t kMaxTrees = 5'000'000;

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string tuple(const std::vector<std::int64_t>& v) { return "(" + join_ints(v) + ")"; }

std::string point_str(const Point& x) {
  std::string s = "(";
  for (size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + rational_str(x[k]);
  return s + ")";
}

json pair_json(const IndexPair& p) {
  json j{{"I", p.I()}, {"J", p.J()}, {"mode", mode_name(p.mode())}};
  if (p.mode() == Mode::B) j["n"] = p.n();
  return j;
}

json arcs_json(const ArcGraph& g) {
  json a = json::array();
  for (const auto& x : g) a.push_back({x.i, x.j});
  return a;
}

json tree_json(const Tree& t, const IndexPair& p) { return {{"arcs", arcs_json(t)}, {"mode", mode_name(p.mode())}}; }

json point_json(const Point& x) {
  json a = json::array();
  for (const auto& c : x) a.push_back(rational_str(c));
  return a;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + *cfg.out);
  f << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError(cfg.subcommand + " supports --format " + list);
}

std::string header(const IndexPair& p) {
  std::string s = "pair " + p.str() + " mode " + mode_name(p.mode());
  if (p.mode() == Mode::B) s += " n " + std::to_string(p.n());
  s += "\n";
  if (p.mode() == Mode::A) {
    auto w = nu_of_pair(p).word();
    s += "nu " + (w.empty() ? std::string("(empty)") : w) + "\n";
  }
  return s;
}

void check_size(const RunConfig& cfg, const IndexPair& p) {
  int cap = cfg.max_size.value_or(24);
  if (p.size() > cap)
    throw UsageError(fmt::format("|I|+|J| = {} exceeds --max-size {}", p.size(), cap));
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  auto p = resolve_pair(cfg);
  check_size(cfg, p);
  auto trees = enumerate_trees(p, kMaxTrees);
  if (cfg.format == "json") {
    json j{{"schema_version", kSchemaVersion}, {"command", "enumerate"}, {"pair", pair_json(p)}};
    if (p.mode() == Mode::A) j["nu"] = nu_of_pair(p).word();
    json items = json::array();
    for (size_t k = 0; k < trees.size(); ++k) {
      json t = tree_json(trees[k], p);
      t["id"] = k + 1;
      if (p.mode() == Mode::A) t["path"] = rho(trees[k], p).word();
      items.push_back(t);
    }
    j["trees"] = items;
    j["count"] = trees.size();
    emit(cfg, out, j.dump(2) + "\n");
    return 0;
  }
  std::string s = header(p);
  for (size_t k = 0; k < trees.size(); ++k) {
    s += fmt::format("T{}  {}", k + 1, trees[k].str());
    if (p.mode() == Mode::A) {
      auto w = rho(trees[k], p).word();
      s += "  path " + (w.empty() ? std::string("(empty)") : w);
    }
    s += "\n";
  }
  s += fmt::format("count {}\n", trees.size());
  emit(cfg, out, s);
  return 0;
}

// ---------------------------------------------------------------- poset

int cmd_poset(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "dot"});
  auto p = resolve_pair(cfg);
  check_size(cfg, p);
  auto P = build_poset(p, kMaxTrees);
  auto rep = lattice_check(P.order);
  auto covers = P.order.cover_pairs();
  auto name = [](int x) { return "T" + std::to_string(x + 1); };
  if (cfg.format == "dot") {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> up;
    for (int x = 0; x < P.order.size(); ++x) {
      std::string l = name(x);
      if (p.mode() == Mode::A) {
        auto w = rho(P.trees[x], p).word();
        l += "\\n" + (w.empty() ? std::string("()") : w);
      } else {
        l += "\\n" + P.trees[x].str();
      }
      labels.push_back(l);
      up.push_back(P.order.up(x));
    }
    emit(cfg, out, FinitePoset(labels, up).dot("Hasse"));
    return 0;
  }
  auto names = [&](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + name(x);
    return s;
  };
  if (cfg.format == "json") {
    json j{{"schema_version", kSchemaVersion}, {"command", "poset"}, {"pair", pair_json(p)}};
    json el = json::array();
    for (size_t k = 0; k < P.trees.size(); ++k) {
      json t = tree_json(P.trees[k], p);
      t["id"] = k + 1;
      if (p.mode() == Mode::A) t["path"] = rho(P.trees[k], p).word();
      el.push_back(t);
    }
    json cv = json::array();
    for (auto [a, b] : covers) cv.push_back({a + 1, b + 1});
    auto ids = [](const std::vector<int>& v) {
      json a = json::array();
      for (int x : v) a.push_back(x + 1);
      return a;
    };
    j["elements"] = el;
    j["covers"] = cv;
    j["is_lattice"] = rep.is_lattice;
    j["minima"] = ids(rep.minima);
    j["maxima"] = ids(rep.maxima);
    emit(cfg, out, j.dump(2) + "\n");
    return 0;
  }
  std::string s = header(p);
  for (size_t k = 0; k < P.trees.size(); ++k) s += fmt::format("{}  {}\n", name((int)k), P.trees[k].str());
  for (auto [a, b] : covers) s += fmt::format("cover {} < {}\n", name(a), name(b));
  s += fmt::format("elements {}\ncovers {}\nlattice {}\nminima {}\nmaxima {}\n", P.trees.size(), covers.size(),
                   rep.is_lattice ? "true" : "false", names(rep.minima), names(rep.maxima));
  emit(cfg, out, s);
  return 0;
}

// ---------------------------------------------------------------- hvector

int cmd_hvector(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  auto p = resolve_pair(cfg);
  check_size(cfg, p);
  FlagComplex c(p);
  auto f = c.f_vector();
  auto hf = h_from_f(f, c.facet_size());
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> methods{{"f-transform", hf}};
  std::optional<std::vector<std::int64_t>> narayana;
  if (p.mode() == Mode::A) {
    narayana = narayana_vector(nu_of_pair(p));
    methods.push_back({"shelling", h_vector_shelling(p)});
    methods.push_back({"valleys", *narayana});
  } else {
    methods.push_back({"formula", type_b_h_vector(p)});
  }
  bool agree = true;
  for (const auto& m : methods) agree &= m.second == hf;
  if (cfg.format == "json") {
    json j{{"schema_version", kSchemaVersion}, {"command", "hvector"}, {"pair", pair_json(p)}};
    json g = json::array();
    for (const auto& a : c.ground()) g.push_back({a.i, a.j});
    json facets = json::array();
    for (const auto& t : enumerate_trees(p, kMaxTrees)) facets.push_back(arcs_json(t));
    j["ground"] = g;
    j["facets"] = facets;
    j["f_vector"] = f;
    j["h_vector"] = hf;
    j["narayana"] = narayana ? json(*narayana) : json(nullptr);
    json m = json::object();
    for (const auto& [k, v] : methods) m[k] = v;
    j["methods"] = m;
    j["agree"] = agree;
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    std::string s = header(p);
    s += "f-vector " + tuple(f) + "\n";
    for (const auto& [k, v] : methods) s += fmt::format("h-vector {:<12}{}\n", k, tuple(v));
    s += fmt::format("agree {}\n", agree ? "true" : "false");
    emit(cfg, out, s);
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------- tropical

int cmd_tropical(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json", "svg"});
  auto p = resolve_pair(cfg);
  check_size(cfg, p);
  auto h = resolve_height(cfg, p);
  auto gc = build_geometric_complex(p, h);
  auto P = build_poset(p, kMaxTrees);
  if (cfg.format == "svg") {
    emit(cfg, out, complex_svg(gc, P.order));
    return 0;
  }
  std::optional<bool> oriented;
  std::optional<OrientationConflict> conflict;
  if (p.mode() == Mode::A)
    oriented = orientation_check(gc, P.order);
  else
    conflict = find_orientation_conflict(gc, P.order);
  auto pred = support_convex_predicate(p);
  std::optional<SupportVerdict> oracle;
  if (gc.ambient_dim() == 2) oracle = convexity_oracle_2d(gc);

  if (cfg.format == "json") {
    json j{{"schema_version", kSchemaVersion}, {"command", "tropical"}, {"pair", pair_json(p)}};
    j["height"] = h.table();
    json apexes = json::array();
    for (int i : p.I()) {
      json row = json::array();
      for (const auto& x : apex_normalized(i, h)) row.push_back(x.str());
      apexes.push_back({{"i", i}, {"coords", row}});
    }
    j["apexes"] = apexes;
    json coord_labels = json::array();
    for (size_t b = 0; b + 1 < p.J().size(); ++b) coord_labels.push_back(p.J()[b]);
    j["coordinates"] = coord_labels;
    json vs = json::array();
    for (size_t t = 0; t < gc.trees.size(); ++t)
      vs.push_back({{"id", t + 1}, {"tree", arcs_json(gc.trees[t])}, {"coords", point_json(gc.coords[t])}});
    j["vertices"] = vs;
    json cells = json::array();
    for (const auto& c : gc.cells) {
      json ids = json::array();
      for (int v : c.vertices) ids.push_back(v + 1);
      cells.push_back({{"forest", arcs_json(c.forest)}, {"dim", c.dim}, {"vertices", ids}});
    }
    j["cells"] = cells;
    j["f_vector"] = gc.f_vector();
    json checks{{"support_predicate", {{"convex", pred.convex}, {"dim", pred.dim}}}};
    if (oracle) checks["support_oracle"] = {{"convex", oracle->convex}, {"dim", oracle->dim}};
    if (oriented) checks["orientation"] = *oriented;
    if (p.mode() == Mode::B) {
      if (conflict)
        checks["orientation_conflict"] = {{"up", {conflict->up.lower + 1, conflict->up.upper + 1}},
                                          {"down", {conflict->down.lower + 1, conflict->down.upper + 1}},
                                          {"coordinate", p.J()[conflict->coordinate]}};
      else
        checks["orientation_conflict"] = nullptr;
    }
    j["checks"] = checks;
    emit(cfg, out, j.dump(2) + "\n");
    return 0;
  }
  std::string s = header(p);
  std::string axes;
  for (size_t b = 0; b + 1 < p.J().size(); ++b) axes += (axes.empty() ? "" : ",") + std::to_string(p.J()[b]);
  s += "coordinates x_j for j in (" + axes + "), x_" + std::to_string(p.J().back()) + " = 0\n";
  for (int i : p.I()) {
    std::string row;
    for (const auto& x : apex_normalized(i, h)) row += (row.empty() ? "" : ",") + x.str();
    s += fmt::format("apex {}  ({})\n", i, row);
  }
  for (size_t t = 0; t < gc.trees.size(); ++t)
    s += fmt::format("T{}  {}  {}\n", t + 1, point_str(gc.coords[t]), gc.trees[t].str());
  s += "f-vector " + tuple(gc.f_vector()) + "\n";
  if (oriented) s += fmt::format("orientation {}\n", *oriented ? "componentwise decreasing along covers" : "FAILS");
  if (p.mode() == Mode::B) {
    if (conflict)
      s += fmt::format("orientation conflict: x_{} rises along T{} < T{} and falls along T{} < T{}\n",
                       p.J()[conflict->coordinate], conflict->up.lower + 1, conflict->up.upper + 1,
                       conflict->down.lower + 1, conflict->down.upper + 1);
    else
      s += "orientation no conflicting covers\n";
  }
  s += fmt::format("support predicate {} dim {}\n", pred.convex ? "convex" : "not convex", pred.dim);
  if (oracle) s += fmt::format("support oracle    {} dim {}\n", oracle->convex ? "convex" : "not convex", oracle->dim);
  emit(cfg, out, s);
  return oriented && !*oriented ? 1 : 0;
}

// ---------------------------------------------------------------- check

struct Row {
  std::string name;
  std::string status;  // pass, fail, finding, skip
  std::string detail;
};

Row verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? "pass" : "fail", std::move(detail)};
}

std::vector<Row> check_pair(const IndexPair& p, const HeightFunction& h, bool with_links) {
  std::vector<Row> rows;
  auto P = build_poset(p);
  const auto& trees = P.trees;
  std::size_t expected = p.mode() == Mode::A ? enumerate_paths_above(nu_of_pair(p)).size()
                                              : static_cast<std::size_t>(staircase_trees(p).size());
  rows.push_back(verdict("tree count", trees.size() == expected && staircase_trees(p).size() == expected,
                         fmt::format("{} trees, {} expected", trees.size(), expected)));
  auto tri = verify_triangulation(trees, p);
  rows.push_back(verdict("triangulation", tri.ok(), tri.pairwise_proper ? "no alternating cycles" : "alternating cycle"));
  auto bad = height_violation(h);
  rows.push_back(verdict("height", !bad,
                         bad ? fmt::format("exchange fails at ({},{}) ({},{})", bad->a.i, bad->a.j, bad->b.i, bad->b.j)
                             : "strict exchange inequalities hold"));
  rows.push_back(verdict("regularity", verify_regular(trees, h), "exchange inequality on facet edges"));

  auto hf = h_vector_f(p);
  if (p.mode() == Mode::A) {
    auto iso = verify_flip_path_iso(p);
    rows.push_back(verdict("rho isomorphism", iso.ok(), iso.detail.empty() ? "flips match nu-covers" : iso.detail));
    auto hs = h_vector_shelling(p);
    auto hv = narayana_vector(nu_of_pair(p));
    rows.push_back(verdict("h-vector", hs == hf && hv == hf, "f " + tuple(hf) + " shelling " + tuple(hs) + " valleys " + tuple(hv)));
    auto lat = lattice_check(P.order);
    rows.push_back(verdict("lattice", lat.is_lattice, lat.is_lattice ? "lattice" : "meet or join missing"));
    rows.push_back(verdict("reverse duality", verify_reverse_duality(p).ok(), "mirror reverses covers"));
  } else {
    auto hb = type_b_h_vector(p);
    rows.push_back(verdict("h-vector", hb == hf, "f " + tuple(hf) + " formula " + tuple(hb)));
    auto lat = lattice_check(P.order);
    rows.push_back({"lattice", lat.is_lattice ? "pass" : "finding",
                    lat.is_lattice ? "lattice"
                                   : fmt::format("not a lattice: {} minima, {} maxima", lat.minima.size(),
                                                 lat.maxima.size())});
    std::vector<Tree> order;
    for (int x : P.order.linear_extension()) order.push_back(trees[x]);
    bool shell = is_shelling_order(order);
    rows.push_back({"shelling", shell ? "pass" : "finding",
                    shell ? "linear extension is a shelling" : "linear extension is not a shelling order"});
  }

  if (!bad) {
    auto gc = build_geometric_complex(p, h);
    bool dims = true;
    for (const auto& c : gc.cells) {
      std::vector<Point> v;
      for (int t : c.vertices) v.push_back(gc.coords[t]);
      dims &= affine_dimension(v) == c.dim;
    }
    rows.push_back(verdict("cells", dims && gc.cells.size() == interior_faces(p).size(),
                           fmt::format("{} cells, f-vector {}", gc.cells.size(), tuple(gc.f_vector()))));
    if (p.mode() == Mode::A) {
      rows.push_back(verdict("orientation", orientation_check(gc, P.order), "coordinates decrease along covers"));
    } else {
      auto c = find_orientation_conflict(gc, P.order);
      rows.push_back({"orientation", c ? "finding" : "pass",
                      c ? fmt::format("x_{} rises along T{}<T{} and falls along T{}<T{}", p.J()[c->coordinate],
                                      c->up.lower + 1, c->up.upper + 1, c->down.lower + 1, c->down.upper + 1)
                        : "coordinates monotone along covers"});
    }
    if (gc.ambient_dim() == 2) {
      auto pr = support_convex_predicate(p);
      auto orc = convexity_oracle_2d(gc);
      bool agree = pr.convex == orc.convex && (!pr.convex || pr.dim == orc.dim);
      rows.push_back(verdict("support", agree, fmt::format("predicate {} oracle {}", pr.convex ? "convex" : "not convex",
                                                           orc.convex ? "convex" : "not convex")));
    }
  } else {
    rows.push_back({"cells", "skip", "height is not valid"});
  }

  if (with_links) {
    FlagComplex c(p);
    std::size_t faces = 0, bad_faces = 0;
    c.for_each_face([&](const Forest& f) {
      if (faces++ < 20000 && !verify_link_decomposition(f, p)) ++bad_faces;
    });
    rows.push_back(verdict("links", bad_faces == 0,
                           fmt::format("{} faces checked", std::min<std::size_t>(faces, 20000))));
  }
  return rows;
}

std::string rows_text(const std::vector<Row>& rows) {
  std::string s;
  for (const auto& r : rows) {
    std::string tag = r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : r.status == "skip" ? "SKIP" : "NOTE";
    s += fmt::format("{}  {:<16} {}\n", tag, r.name, r.detail);
  }
  return s;
}

json rows_json(const std::vector<Row>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
  return a;
}

std::vector<IndexPair> sweep_pairs(int max_size) {
  std::vector<IndexPair> out;
  std::vector<std::string> words{""};
  for (size_t k = 0; k < words.size(); ++k) {
    out.push_back(pair_of_nu(LatticePath::from_word(words[k])));
    if ((int)words[k].size() + 2 < max_size) {
      words.push_back(words[k] + "E");
      words.push_back(words[k] + "N");
    }
  }
  for (int n = 1; n <= std::min(4, max_size); ++n)
    for (int a = 1; a < (1 << (n + 1)); ++a)
      for (int b = 1; b < (1 << (n + 1)); ++b) {
        std::vector<int> I, J;
        for (int v = 0; v <= n; ++v) {
          if (a >> v & 1) I.push_back(v);
          if (b >> v & 1) J.push_back(v);
        }
        if ((int)(I.size() + J.size()) <= max_size) out.push_back(IndexPair::make(I, J, Mode::B, n));
      }
  return out;
}

int cmd_check_all(const RunConfig& cfg, std::ostream& out) {
  int max_size = cfg.max_size.value_or(9);
  auto pairs = sweep_pairs(max_size);
  std::vector<std::vector<Row>> results(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < pairs.size();) {
      try {
        results[k] = check_pair(pairs[k], default_height(pairs[k]), false);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  int jobs = cfg.jobs > 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  struct Tally {
    int pass = 0, finding = 0, fail = 0;
    std::string first_failure;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tally;
  int crashed = 0;
  for (size_t k = 0; k < pairs.size(); ++k) {
    if (!errors[k].empty()) ++crashed;
    for (const auto& r : results[k]) {
      std::string key = mode_name(pairs[k].mode()) + " " + r.name;
      if (!tally.count(key)) order.push_back(key);
      auto& t = tally[key];
      if (r.status == "pass") ++t.pass;
      if (r.status == "finding") ++t.finding;
      if (r.status == "fail" && t.fail++ == 0) t.first_failure = pairs[k].str();
    }
  }
  bool ok = crashed == 0;
  for (const auto& [k, t] : tally) ok &= t.fail == 0;
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& k : order) {
      const auto& t = tally[k];
      rows.push_back({{"check", k}, {"pass", t.pass}, {"finding", t.finding}, {"fail", t.fail}});
    }
    json j{{"schema_version", kSchemaVersion}, {"command", "check"}, {"max_size", max_size},
           {"pairs", pairs.size()}, {"rows", rows}, {"errors", crashed}, {"ok", ok}};
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    std::string s = fmt::format("{} pairs with |I|+|J| <= {}\n", pairs.size(), max_size);
    for (const auto& k : order) {
      const auto& t = tally[k];
      s += fmt::format("{}  {:<20} pass {:>5}  finding {:>5}  fail {:>3}{}\n", t.fail ? "FAIL" : "PASS", k, t.pass,
                       t.finding, t.fail, t.fail ? "  first at " + t.first_failure : "");
    }
    if (crashed) s += fmt::format("FAIL  {} pairs raised errors\n", crashed);
    s += ok ? "summary PASS\n" : "summary FAIL\n";
    emit(cfg, out, s);
  }
  return ok ? 0 : 1;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.all) {
    if (cfg.pair || cfg.nu) throw UsageError("--all sweeps every pair; do not pass --pair or --nu");
    return cmd_check_all(cfg, out);
  }
  auto p = resolve_pair(cfg);
  check_size(cfg, p);
  auto rows = check_pair(p, resolve_height(cfg, p), true);
  bool ok = std::none_of(rows.begin(), rows.end(), [](const Row& r) { return r.status == "fail"; });
  if (cfg.format == "json") {
    json j{{"schema_version", kSchemaVersion}, {"command", "check"}, {"pair", pair_json(p)},
           {"checks", rows_json(rows)}, {"ok", ok}};
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    emit(cfg, out, header(p) + rows_text(rows) + (ok ? "summary PASS\n" : "summary FAIL\n"));
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- render

int cmd_render(const RunConfig& cfg, std::ostream& out) {
  RunConfig c = cfg;
  if (c.format == "text") c.format = "svg";
  require_format(c, {"svg", "dot"});
  auto p = resolve_pair(c);
  check_size(c, p);
  auto trees = enumerate_trees(p, kMaxTrees);
  emit(c, out, c.format == "svg" ? tree_svg(trees, p) : trees_dot(trees, p));
  return 0;
}

}  // namespace

IndexPair resolve_pair(const RunConfig& cfg) {
  if (cfg.pair.has_value() == cfg.nu.has_value()) throw UsageError("give exactly one of --pair and --nu");
  if (cfg.nu) {
    if (cfg.mode_given && cfg.mode != Mode::A) throw UsageError("--nu describes a type A pair; drop --mode B");
    if (cfg.n) throw UsageError("--n applies to --pair in mode B");
    try {
      return pair_of_nu(LatticePath::parse(*cfg.nu));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --nu: ") + e.what());
    }
  }
  if (cfg.n && cfg.mode != Mode::B) throw UsageError("--n applies to mode B");
  try {
    return IndexPair::parse(*cfg.pair, cfg.mode, cfg.n);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --pair: ") + e.what());
  }
}

HeightFunction resolve_height(const RunConfig& cfg, const IndexPair& p) {
  if (!cfg.height_file) return default_height(p);
  std::ifstream f(*cfg.height_file);
  if (!f) throw UsageError("cannot read " + *cfg.height_file);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad height file: ") + e.what());
  }
  const json& table = j.is_object() ? j.at("height") : j;
  if (!table.is_array()) throw UsageError("height file: expected an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table) {
    if (!r.is_array()) throw UsageError("height file: every row must be an array");
    rows.emplace_back();
    for (const auto& x : r) {
      if (x.is_string())
        rows.back().push_back(x.get<std::string>());
      else if (x.is_number_integer())
        rows.back().push_back(std::to_string(x.get<std::int64_t>()));
      else
        throw UsageError("height file: entries are integers or strings like \"-3/2\" and \"inf\"");
    }
  }
  try {
    return HeightFunction::from_table(p, rows);
  } catch (const std::exception& e) {
    throw UsageError(std::string("height file: ") + e.what());
  }
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.subcommand == "poset") return cmd_poset(cfg, out);
    if (cfg.subcommand == "hvector") return cmd_hvector(cfg, out);
    if (cfg.subcommand == "tropical") return cmd_tropical(cfg, out);
    if (cfg.subcommand == "check") return cmd_check(cfg, out);
    if (cfg.subcommand == "render") return cmd_render(cfg, out);
    throw UsageError("unknown subcommand " + cfg.subcommand);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tamari lattices, (I,J)-trees and their tropical realizations", "tamari"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "A";
  const std::vector<std::pair<std::string, std::string>> subs{
      {"enumerate", "list trees (and nu-paths) in canonical order"},
      {"poset", "Hasse diagram and lattice report"},
      {"hvector", "f- and h-vectors by every applicable method"},
      {"tropical", "tropical realization: vertices, cells, checks"},
      {"check", "run the verification suite"},
      {"render", "draw the trees"}};
  for (const auto& [name, help] : subs) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("--pair", cfg.pair, "index sets, e.g. \"I=0,1,3;J=2,5\"");
    s->add_option("--nu", cfg.nu, "lattice path, e.g. ENEENEE or \"(NE^2)^3\"");
    s->add_option("--mode", mode, "A (linear) or B (cyclic)")->check(CLI::IsMember({"A", "B", "a", "b"}));
    s->add_option("--n", cfg.n, "cycle length minus one in mode B");
    s->add_option("--height", cfg.height_file, "JSON height table, rows over I, columns over J");
    s->add_option("--format", cfg.format, "text, json, dot or svg")
        ->check(CLI::IsMember({"text", "json", "dot", "svg"}));
    s->add_option("--out", cfg.out, "write to this file");
    s->add_option("--jobs", cfg.jobs, "worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    s->add_option("--max-size", cfg.max_size, "largest |I|+|J| (check --all sweeps up to it)")
        ->check(CLI::PositiveNumber);
    if (name == "check") s->add_flag("--all", cfg.all, "sweep every small pair");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.mode_given = app.get_subcommands().front()->count("--mode") > 0;
  cfg.mode = parse_mode(mode);
  return execute(cfg, out, err);
}

}  // namespace tamari::cli
