#include "tamari/heights.h"

#include "tamari/paths.h"

#include <algorithm>
#include <set>

namespace tamari {

HeightFunction::HeightFunction(IndexPair p)
    : pair_(std::move(p)), h_(pair_.I().size(), std::vector<ExtRat>(pair_.J().size())) {}

const ExtRat& HeightFunction::operator()(int i, int j) const {
  int a = pair_.pos_i(i), b = pair_.pos_j(j);
  if (a < 0 || b < 0) throw ValidationError("height requested outside I x J");
  return h_[a][b];
}

void HeightFunction::set(int i, int j, ExtRat v) {
  int a = pair_.pos_i(i), b = pair_.pos_j(j);
  if (a < 0 || b < 0) throw ValidationError("height assigned outside I x J");
  h_[a][b] = std::move(v);
}

std::vector<std::vector<std::string>> HeightFunction::table() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : h_) {
    out.emplace_back();
    for (const auto& x : row) out.back().push_back(x.str());
  }
  return out;
}

HeightFunction HeightFunction::from_table(const IndexPair& p,
                                          const std::vector<std::vector<std::string>>& rows) {
  HeightFunction h(p);
  if (rows.size() != p.I().size()) throw ValidationError("height table: wrong number of rows");
  for (size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != p.J().size()) throw ValidationError("height table: wrong row length");
    for (size_t b = 0; b < rows[a].size(); ++b) h.h_[a][b] = ExtRat::parse(rows[a][b]);
  }
  return h;
}

HeightFunction default_height(const IndexPair& p) {
  if (p.mode() == Mode::A)
    return make_height(p, [](int i, int j) {
      return i > j ? ExtRat::infinity() : ExtRat(-std::int64_t(j - i) * (j - i));
    });
  int m = p.n() + 1;
  return make_height(p, [m, &p](int i, int j) {
    std::int64_t l = arc_length({i, j}, p.n());
    return ExtRat(l * (2 * m - l));
  });
}

std::optional<HeightViolation> height_violation(const HeightFunction& h) {
  const auto& p = h.pair();
  auto ground = ground_arcs(p);
  for (size_t x = 0; x < ground.size(); ++x)
    for (size_t y = x + 1; y < ground.size(); ++y) {
      const auto &a = ground[x], &b = ground[y];
      if (a.i == b.i || a.j == b.j || crosses(a, b, p)) continue;
      if (!(h(a) + h(b) < h(b.i, a.j) + h(a.i, b.j))) return HeightViolation{a, b};
    }
  return std::nullopt;
}

bool is_valid_height(const HeightFunction& h) { return !height_violation(h); }

bool verify_regular(const std::vector<Tree>& trees, const HeightFunction& h) {
  std::set<std::pair<Arc, Arc>> seen;
  for (const auto& t : trees) {
    const auto& arcs = t.arcs();
    for (size_t x = 0; x < arcs.size(); ++x)
      for (size_t y = x + 1; y < arcs.size(); ++y) {
        const auto &a = arcs[x], &b = arcs[y];
        if (a.i == b.i || a.j == b.j || !seen.insert({a, b}).second) continue;
        if (!(h(a) + h(b) < h(b.i, a.j) + h(a.i, b.j))) return false;
      }
  }
  return true;
}

bool intersect_properly(const Tree& t1, const Tree& t2, const IndexPair& p) {
  // Orient t1 arcs I -> J and t2 arcs J -> I. A cycle alternating between
  // the two trees is a directed closed walk through an arc that is not shared.
  const int V = p.size();
  std::vector<std::vector<int>> out(V);
  for (const auto& a : t1) out[p.vertex_i(a.i)].push_back(p.vertex_j(a.j));
  for (const auto& a : t2) out[p.vertex_j(a.j)].push_back(p.vertex_i(a.i));
  auto reaches = [&](int s, int target) {
    std::vector<char> vis(V, 0);
    std::vector<int> st{s};
    vis[s] = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      if (x == target) return true;
      for (int y : out[x])
        if (!vis[y]) vis[y] = 1, st.push_back(y);
    }
    return false;
  };
  for (const auto& a : t1)
    if (!t2.contains(a) && reaches(p.vertex_j(a.j), p.vertex_i(a.i))) return false;
  for (const auto& a : t2)
    if (!t1.contains(a) && reaches(p.vertex_i(a.i), p.vertex_j(a.j))) return false;
  return true;
}

TriangulationReport verify_triangulation(const std::vector<Tree>& trees, const IndexPair& p) {
  TriangulationReport r;
  r.count = trees.size();
  r.all_spanning = std::all_of(trees.begin(), trees.end(),
                               [&](const Tree& t) { return is_spanning_tree(t, p); });
  r.pairwise_proper = true;
  for (size_t x = 0; x < trees.size() && r.pairwise_proper; ++x)
    for (size_t y = x + 1; y < trees.size(); ++y)
      if (!intersect_properly(trees[x], trees[y], p)) {
        r.pairwise_proper = false;
        break;
      }
  r.expected = p.mode() == Mode::A
                   ? enumerate_paths_above(nu_of_pair(p)).size()
                   : static_cast<std::size_t>(binomial(p.size() - 2, static_cast<int>(p.I().size()) - 1));
  r.count_matches = r.count == r.expected;
  return r;
}

std::vector<Tree> staircase_trees(const IndexPair& p) {
  const auto& I = p.I();
  const auto& J = p.J();
  std::vector<Tree> out;
  std::vector<Arc> cur;
  auto ok = [&](size_t a, size_t b) { return p.mode() == Mode::B || I[a] <= J[b]; };
  auto rec = [&](auto&& self, size_t a, size_t b) -> void {
    if (!ok(a, b)) return;
    cur.push_back({I[a], J[b]});
    if (a + 1 == I.size() && b + 1 == J.size()) out.emplace_back(cur);
    if (a + 1 < I.size()) self(self, a + 1, b);
    if (b + 1 < J.size()) self(self, a, b + 1);
    cur.pop_back();
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tamari
