// One line per acceptance criterion. Exit status is the number of failures.

#include "oracles.h"

#include "tamari/complex.h"
#include "tamari/heights.h"
#include "tamari/paths.h"
#include "tamari/poset.h"
#include "tamari/tropical.h"
#include "tamari/trees.h"

#include <fmt/core.h>

#include <chrono>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using namespace tamari;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<IndexPair> mode_a_pairs(int max_size) {
  std::vector<IndexPair> out;
  for (const auto& w : oracle::all_words(max_size - 2)) out.push_back(pair_of_nu(LatticePath::from_word(w)));
  return out;
}

std::vector<std::string> point_strs(const std::vector<Point>& pts) {
  std::vector<std::string> s;
  for (const auto& p : pts) {
    std::string t = "(";
    for (size_t k = 0; k < p.size(); ++k) t += (k ? "," : "") + rational_str(p[k]);
    s.push_back(t + ")");
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::int64_t> trim(std::vector<std::int64_t> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

std::vector<std::pair<int, int>> covers_of_poset(const FinitePoset& P) { return P.cover_pairs(); }

// ---------------------------------------------------------------------------

Outcome worked_example() {
  Outcome o;
  auto p = IndexPair::make({0, 1, 3, 4, 6, 7}, {2, 5, 8});
  auto h = make_height(p, [](int i, int j) {
    return i > j ? ExtRat::infinity() : ExtRat(-std::int64_t(j - i) * (j - i));
  });
  auto gc = build_geometric_complex(p, h);
  if (gc.trees.size() != 7) o.fail(fmt::format("{} trees", gc.trees.size()));
  std::vector<Point> want;
  for (auto [x, y] : std::vector<std::pair<int, int>>{{48, 15}, {48, 21}, {48, 33}, {54, 39}, {60, 15}, {60, 21}, {60, 39}})
    want.push_back({Rational(x), Rational(y)});
  if (point_strs(gc.coords) != point_strs(want)) o.fail("coordinates differ");
  if (o.ok) o.detail = "7 trees, coordinates exact";
  return o;
}

Outcome type_b_h_vector() {
  Outcome o;
  int count = 0;
  for (const auto& I : oracle::subsets(4))
    for (const auto& J : oracle::subsets(4)) {
      auto p = IndexPair::make(I, J, Mode::B, 4);
      std::vector<std::int64_t> want;
      for (int k = 0; k <= 4; ++k) want.push_back(oracle::choose((int)I.size() - 1, k) * oracle::choose((int)J.size() - 1, k));
      want = trim(want);
      if (h_vector_f(p) != want) o.fail("h-vector mismatch at " + p.str());
      std::int64_t total = 0;
      for (auto x : want) total += x;
      if ((std::int64_t)enumerate_trees(p).size() != total) o.fail("facet count mismatch at " + p.str());
      ++count;
    }
  if (o.ok) o.detail = fmt::format("{} pairs", count);
  return o;
}

Outcome cyclic_counts() {
  Outcome o;
  std::string counts;
  for (int n = 1; n <= 6; ++n) {
    auto p = full_pair(n, Mode::B);
    auto trees = enumerate_trees(p);
    counts += fmt::format("{}{}", n > 1 ? "," : "", trees.size());
    if ((std::int64_t)trees.size() != oracle::choose(2 * n, n)) o.fail(fmt::format("n={}: {}", n, trees.size()));
    if (n <= 5) {
      auto bfs = oracle::flip_bfs(trees.front().arcs(), p);
      if (bfs.size() != trees.size()) o.fail(fmt::format("n={}: flip graph reaches {}", n, bfs.size()));
    }
  }
  if (o.ok) o.detail = "counts " + counts;
  return o;
}

Outcome bijection_transport() {
  Outcome o;
  int pairs = 0, trees_seen = 0;
  for (const auto& p : mode_a_pairs(10)) {
    auto nu = nu_of_pair(p);
    auto trees = enumerate_trees(p);
    auto paths = oracle::paths_above(nu.word());
    std::set<std::string> image;
    for (const auto& t : trees) image.insert(rho(t, p).word());
    if (image.size() != trees.size() || image != std::set<std::string>(paths.begin(), paths.end()))
      o.fail("rho not bijective at " + p.str());
    for (const auto& t : trees) {
      std::set<std::string> up;
      for (const auto& f : flips(t, p))
        if (f.increasing) up.insert(rho(f.result, p).word());
      auto cov = oracle::nu_covers(rho(t, p).word(), nu.word());
      if (up != std::set<std::string>(cov.begin(), cov.end())) o.fail("flip/cover mismatch at " + p.str());
      if (rho_inv(rho(t, p), p) != t) o.fail("rho_inv mismatch at " + p.str());
    }
    if (!verify_flip_path_iso(p).ok()) o.fail("library iso check fails at " + p.str());
    ++pairs;
    trees_seen += (int)trees.size();
  }
  if (o.ok) o.detail = fmt::format("{} pairs, {} trees", pairs, trees_seen);
  return o;
}

Outcome h_vector_agreement() {
  Outcome o;
  int pairs = 0;
  for (const auto& p : mode_a_pairs(10)) {
    auto nu = nu_of_pair(p);
    auto a = h_vector_shelling(p), b = h_vector_f(p), c = narayana_vector(nu);
    auto d = oracle::valley_histogram(nu.word());
    if (a != b || b != c || c != d) o.fail("disagreement at " + p.str());
    ++pairs;
  }
  for (int n = 1; n <= 6; ++n) {
    std::string w;
    for (int k = 0; k < n; ++k) w += "NE";
    auto nu = LatticePath::from_word(w);
    auto p = pair_of_nu(nu);
    auto row = oracle::narayana_row(n);
    if (narayana_vector(nu) != row) o.fail(fmt::format("valleys of (NE)^{} differ from Narayana", n));
    if (h_vector_f(p) != row) o.fail(fmt::format("f-transform of (NE)^{} differs from Narayana", n));
    if (h_vector_shelling(p) != row) o.fail(fmt::format("shelling of (NE)^{} differs from Narayana", n));
  }
  if (o.ok) o.detail = fmt::format("{} pairs, Narayana rows n<=6", pairs);
  return o;
}

Outcome lattices() {
  Outcome o;
  int pairs = 0;
  for (const auto& p : mode_a_pairs(9)) {
    auto P = build_poset(p);
    oracle::Order ord(P.order.size(), covers_of_poset(P.order));
    if (!ord.is_lattice() || !lattice_check(P.order).is_lattice) o.fail("not a lattice: " + p.str());
    auto mins = ord.minima();
    if (mins.size() != 1 || P.trees[mins[0]] != t_min(p) || ord.maxima().size() != 1)
      o.fail("extrema wrong at " + p.str());
    ++pairs;
  }
  auto check_b = [&](std::vector<int> I, std::vector<int> J, size_t mins, size_t maxs) {
    auto p = IndexPair::make(I, J, Mode::B, 4);
    auto P = build_poset(p);
    oracle::Order ord(P.order.size(), covers_of_poset(P.order));
    if (ord.minima().size() != mins || ord.maxima().size() != maxs)
      o.fail(fmt::format("{}: {} minima, {} maxima", p.str(), ord.minima().size(), ord.maxima().size()));
    auto rep = lattice_check(P.order);
    if (rep.is_lattice || rep.minima.size() != mins || rep.maxima.size() != maxs) o.fail("library report at " + p.str());
  };
  check_b({1, 2, 4}, {0, 3}, 1, 2);
  check_b({0, 3, 4}, {1, 2}, 2, 1);
  if (o.ok) o.detail = fmt::format("{} type A lattices; two maxima / two minima reproduced", pairs);
  return o;
}

Outcome triangulations() {
  Outcome o;
  int pairs = 0;
  for (const auto& p : mode_a_pairs(10)) {
    auto trees = enumerate_trees(p);
    auto rep = verify_triangulation(trees, p);
    auto h = default_height(p);
    if (!rep.all_spanning || !rep.pairwise_proper) o.fail("improper triangulation at " + p.str());
    if (trees.size() != staircase_trees(p).size() || trees.size() != oracle::paths_above(nu_of_pair(p).word()).size())
      o.fail("facet count differs from staircase at " + p.str());
    if (!is_valid_height(h) || !verify_regular(trees, h)) o.fail("regularity fails at " + p.str());
    ++pairs;
  }
  std::vector<IndexPair> cyclic;
  for (const auto& I : oracle::subsets(4))
    for (const auto& J : oracle::subsets(4)) cyclic.push_back(IndexPair::make(I, J, Mode::B, 4));
  for (int n = 1; n <= 5; ++n) cyclic.push_back(full_pair(n, Mode::B));
  for (const auto& p : cyclic) {
    const int ni = (int)p.I().size(), nj = (int)p.J().size();
    auto trees = enumerate_trees(p);
    auto rep = verify_triangulation(trees, p);
    auto h = default_height(p);
    if (!rep.all_spanning || !rep.pairwise_proper) o.fail("improper triangulation at " + p.str());
    if ((std::int64_t)trees.size() != oracle::choose(ni + nj - 2, ni - 1) ||
        trees.size() != staircase_trees(p).size())
      o.fail("facet count differs from staircase at " + p.str());
    if (!is_valid_height(h) || !verify_regular(trees, h)) o.fail("regularity fails at " + p.str());
    ++pairs;
  }
  if (o.ok) o.detail = fmt::format("{} pairs in both modes", pairs);
  return o;
}

// Sign of the change of each coordinate along a cover: -1, 0 or 1.
std::vector<int> signs(const Point& lo, const Point& hi) {
  std::vector<int> s;
  for (size_t k = 0; k < lo.size(); ++k) s.push_back(hi[k] < lo[k] ? -1 : hi[k] > lo[k] ? 1 : 0);
  return s;
}

Outcome orientation() {
  Outcome o;
  int pairs = 0, covers = 0;
  for (const auto& p : mode_a_pairs(10)) {
    auto gc = build_geometric_complex(p, default_height(p));
    auto P = build_poset(p);
    if (gc.trees != P.trees) o.fail("tree order mismatch");
    for (auto [x, y] : P.order.cover_pairs()) {
      auto s = signs(gc.coords[x], gc.coords[y]);
      bool down = std::count(s.begin(), s.end(), 1) == 0 && std::count(s.begin(), s.end(), -1) > 0;
      if (!down) o.fail("cover not decreasing at " + p.str());
      ++covers;
    }
    if (!orientation_check(gc, P.order)) o.fail("library orientation check fails at " + p.str());
    ++pairs;
  }
  auto p = IndexPair::make({0, 1, 3, 4, 6, 7}, {2, 5, 8}, Mode::B, 8);
  auto gc = build_geometric_complex(p, default_height(p));
  auto P = build_poset(p);
  bool conflict = false;
  auto cp = P.order.cover_pairs();
  for (auto [a, b] : cp)
    for (auto [c, d] : cp) {
      auto s = signs(gc.coords[a], gc.coords[b]), t = signs(gc.coords[c], gc.coords[d]);
      for (size_t k = 0; k < s.size(); ++k)
        if (s[k] == 1 && t[k] == -1) conflict = true;
    }
  if (!conflict || !find_orientation_conflict(gc, P.order)) o.fail("no conflicting covers in the cyclic instance");
  if (exists_orienting_functional_2d(gc, P.order)) o.fail("cyclic instance admits an orienting functional");
  if (o.ok) o.detail = fmt::format("{} pairs, {} covers; cyclic conflict found", pairs, covers);
  return o;
}

SupportVerdict oracle_verdict(const GeometricComplex& gc) {
  std::vector<std::vector<Rational>> all(gc.coords.begin(), gc.coords.end());
  Rational sum = 0;
  bool has2 = false, has1 = false;
  for (const auto& c : gc.cells) {
    has1 |= c.dim == 1;
    if (c.dim != 2) continue;
    has2 = true;
    std::vector<std::vector<Rational>> v;
    for (int t : c.vertices) v.push_back(gc.coords[t]);
    sum += oracle::hull_area2(v);
  }
  if (has2) return {sum == oracle::hull_area2(all), 2};
  if (!has1) return {true, 0};
  // a graph: convex iff collinear and connected
  const auto& c = gc.coords;
  for (size_t a = 1; a < c.size(); ++a)
    for (size_t b = a + 1; b < c.size(); ++b)
      if ((c[a][0] - c[0][0]) * (c[b][1] - c[0][1]) != (c[a][1] - c[0][1]) * (c[b][0] - c[0][0])) return {false, 1};
  std::vector<int> comp(c.size());
  std::iota(comp.begin(), comp.end(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& cell : gc.cells)
      if (cell.dim == 1) {
        int u = cell.vertices[0], v = cell.vertices[1], m = std::min(comp[u], comp[v]);
        if (comp[u] != m || comp[v] != m) comp[u] = comp[v] = m, changed = true;
      }
  }
  return {std::all_of(comp.begin(), comp.end(), [](int x) { return x == 0; }), 1};
}

Outcome support_convexity() {
  Outcome o;
  std::vector<IndexPair> cases;
  std::set<std::string> seen;
  auto add = [&](const IndexPair& p) {
    if (seen.insert(p.str() + mode_name(p.mode())).second) cases.push_back(p);
  };
  for (const auto& w : oracle::all_words(7))
    if (std::count(w.begin(), w.end(), 'N') == 2) add(pair_of_nu(LatticePath::from_word(w)));
  for (const auto& I : oracle::subsets(6))
    for (const auto& J : oracle::subsets(6))
      if (J.size() == 3 && I.size() <= 6 && I.front() <= J.front() && J.back() >= I.back())
        add(IndexPair::make(I, J));
  int a_count = (int)cases.size();
  for (const auto& I : oracle::subsets(5))
    for (const auto& J : oracle::subsets(5))
      if (J.size() == 3 && I.size() <= 5) add(IndexPair::make(I, J, Mode::B, 5));
  int convex = 0;
  for (const auto& p : cases) {
    auto gc = build_geometric_complex(p, default_height(p));
    auto pred = support_convex_predicate(p);
    auto lib = convexity_oracle_2d(gc);
    auto ref = oracle_verdict(gc);
    if (pred.convex != ref.convex || lib.convex != ref.convex) {
      o.fail(fmt::format("{} {}: predicate {} oracle {}", mode_name(p.mode()), p.str(), pred.convex, ref.convex));
      continue;
    }
    if (pred.convex && pred.dim != ref.dim)
      o.fail(fmt::format("{} {}: dimension {} vs {}", mode_name(p.mode()), p.str(), pred.dim, ref.dim));
    convex += pred.convex;
  }
  if (o.ok)
    o.detail = fmt::format("{} type A + {} type B pairs, {} convex", a_count, (int)cases.size() - a_count, convex);
  return o;
}

Outcome canopy_and_duality() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    auto rep = canopy_fiber_report(n);
    if (!rep.ok()) o.fail(fmt::format("canopy report fails for n={}", n));
    auto big = build_poset(full_pair(n));
    oracle::Order ord(big.order.size(), big.order.cover_pairs());
    std::size_t total = 0;
    for (const auto& f : rep.fibers) {
      total += f.members.size();
      if (f.members.size() != enumerate_trees(f.canopy).size()) o.fail("fiber size differs from Tam(I,J)");
      // interval: everything between the fiber's min and max lies in it
      int lo = -1, hi = -1;
      for (int x : f.members) {
        bool is_min = true, is_max = true;
        for (int y : f.members) is_min &= ord.le[x][y], is_max &= ord.le[y][x];
        if (is_min) lo = x;
        if (is_max) hi = x;
      }
      if (lo < 0 || hi < 0) {
        o.fail("fiber without extrema");
        continue;
      }
      std::size_t between = 0;
      for (int z = 0; z < ord.n; ++z) between += ord.le[lo][z] && ord.le[z][hi];
      if (between != f.members.size()) o.fail("fiber is not an interval");
    }
    if ((std::int64_t)total != oracle::catalan(n) || (std::int64_t)rep.fibers.size() != (1 << (n - 1)))
      o.fail(fmt::format("fibers do not partition for n={}", n));
  }
  int pairs = 0;
  for (const auto& p : mode_a_pairs(9)) {
    if (!verify_reverse_duality(p).ok()) o.fail("duality fails at " + p.str());
    auto P = build_poset(p), Q = build_poset(reverse_pair(p));
    std::set<std::pair<Tree, Tree>> down;
    for (auto [x, y] : Q.order.cover_pairs()) down.insert({Q.trees[y], Q.trees[x]});
    for (auto [x, y] : P.order.cover_pairs())
      if (!down.count({mirror_tree(P.trees[x], p), mirror_tree(P.trees[y], p)})) o.fail("mirror keeps a cover at " + p.str());
    if (down.size() != P.order.cover_pairs().size()) o.fail("cover counts differ at " + p.str());
    ++pairs;
  }
  if (o.ok) o.detail = fmt::format("fibers n<=5, duality on {} pairs", pairs);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
    double budget;  // seconds, 0 for none
  };
  std::vector<Criterion> all = {
      {"worked example", worked_example, 1},
      {"type B h-vector", type_b_h_vector, 30},
      {"cyclic tree counts", cyclic_counts, 0},
      {"bijection and order isomorphism", bijection_transport, 120},
      {"three-way h-vector agreement", h_vector_agreement, 0},
      {"lattice properties", lattices, 0},
      {"triangulation certificates", triangulations, 0},
      {"orientation", orientation, 0},
      {"support convexity", support_convexity, 300},
      {"canopy structure and duality", canopy_and_duality, 0},
  };
  int failures = 0, k = 0;
  for (const auto& c : all) {
    ++k;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) o.fail(fmt::format("took {:.2f}s, budget {}s", secs, c.budget));
    failures += !o.ok;
    fmt::print("{} {:2d} {:<34} {:8.2f}s  {}\n", o.ok ? "PASS" : "FAIL", k, c.name, secs, o.detail);
    std::fflush(stdout);
  }
  return failures;
}
