#include "tamari/trees.h"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tamari {

int arc_length(const Arc& a, int n) {
  int m = n + 1;
  return ((a.j - a.i) % m + m) % m;
}

bool crosses(const Arc& a, const Arc& b, Mode mode, int n) {
  if (a.i == b.i || a.j == b.j) return false;
  if (mode == Mode::A) {
    // i < i' <= j < j', in either order
    auto one = [](const Arc& x, const Arc& y) { return x.i < y.i && y.i <= x.j && x.j < y.j; };
    return one(a, b) || one(b, a);
  }
  int m = n + 1;
  auto len = [m](int i, int j) { return ((j - i) % m + m) % m; };
  int l_ij = len(a.i, a.j), l_ipjp = len(b.i, b.j);
  int l_ipj = len(b.i, a.j), l_ijp = len(a.i, b.j);
  return (l_ipj < l_ij && l_ipj < l_ipjp) || (l_ijp < l_ij && l_ijp < l_ipjp);
}

bool is_ground_arc(const Arc& a, const IndexPair& p) {
  if (!p.has_i(a.i) || !p.has_j(a.j)) return false;
  return p.mode() == Mode::B || a.i <= a.j;
}

std::vector<Arc> ground_arcs(const IndexPair& p) {
  std::vector<Arc> out;
  for (int i : p.I())
    for (int j : p.J())
      if (p.mode() == Mode::B || i <= j) out.push_back({i, j});
  return out;
}

ArcGraph::ArcGraph(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

bool ArcGraph::contains(const Arc& a) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

void ArcGraph::insert(const Arc& a) {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) arcs_.insert(it, a);
}

void ArcGraph::erase(const Arc& a) {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it != arcs_.end() && *it == a) arcs_.erase(it);
}

bool ArcGraph::subset_of(const ArcGraph& other) const {
  return std::includes(other.arcs_.begin(), other.arcs_.end(), arcs_.begin(), arcs_.end());
}

std::string ArcGraph::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < arcs_.size(); ++k)
    os << (k ? " " : "") << "(" << arcs_[k].i << "," << arcs_[k].j << ")";
  return os.str();
}

bool is_non_crossing(const ArcGraph& g, const IndexPair& p) {
  const auto& a = g.arcs();
  for (size_t x = 0; x < a.size(); ++x)
    for (size_t y = x + 1; y < a.size(); ++y)
      if (crosses(a[x], a[y], p)) return false;
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int component_count(const ArcGraph& g, const IndexPair& p) {
  UnionFind uf(p.size());
  int comps = p.size();
  for (const auto& a : g)
    if (uf.unite(p.vertex_i(a.i), p.vertex_j(a.j))) --comps;
  return comps;
}

bool is_spanning_tree(const ArcGraph& g, const IndexPair& p) {
  if ((int)g.size() != p.size() - 1) return false;
  for (const auto& a : g)
    if (!p.has_i(a.i) || !p.has_j(a.j)) return false;
  return component_count(g, p) == 1;
}

bool is_tree(const ArcGraph& g, const IndexPair& p) {
  for (const auto& a : g)
    if (!is_ground_arc(a, p)) return false;
  return is_spanning_tree(g, p) && is_non_crossing(g, p);
}

std::vector<int> degrees(const ArcGraph& g, const IndexPair& p) {
  std::vector<int> d(p.size(), 0);
  for (const auto& a : g) {
    ++d[p.vertex_i(a.i)];
    ++d[p.vertex_j(a.j)];
  }
  return d;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct MaximalSets {
  const std::vector<Arc>& ground;
  std::vector<Bits> compat;
  std::size_t max_count;
  std::vector<Tree> out;
  std::vector<Arc> current;

  void run(Bits P, Bits X) {
    if (P.none()) {
      if (X.none()) {
        if (out.size() >= max_count)
          throw std::length_error("tree enumeration exceeds the size limit");
        out.emplace_back(current);
      }
      return;
    }
    for (auto x = X.find_first(); x != Bits::npos; x = X.find_next(x))
      if (P.is_subset_of(compat[x])) return;
    for (auto v = P.find_first(); v != Bits::npos; v = P.find_next(v)) {
      current.push_back(ground[v]);
      run(P & compat[v], X & compat[v]);
      current.pop_back();
      P.reset(v);
      X.set(v);
    }
  }
};

}  // namespace

std::vector<Tree> enumerate_trees(const IndexPair& p, std::size_t max_count) {
  auto ground = ground_arcs(p);
  const auto m = ground.size();
  MaximalSets ms{ground, std::vector<Bits>(m, Bits(m)), max_count, {}, {}};
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      if (x != y && !crosses(ground[x], ground[y], p)) ms.compat[x].set(y);
  Bits P(m), X(m);
  P.set();
  ms.run(P, X);
  std::sort(ms.out.begin(), ms.out.end());
  return std::move(ms.out);
}

Tree t_min(const IndexPair& p) {
  if (p.mode() != Mode::A) throw ValidationError("t_min is defined in mode A");
  Tree t;
  for (int i : p.I()) {
    auto it = std::lower_bound(p.J().begin(), p.J().end(), i);
    t.insert({i, *it});
  }
  for (int j : p.J()) t.insert({p.I().front(), j});
  return t;
}

std::optional<Arc> flip_partner(const Tree& t, const Arc& a, const IndexPair& p) {
  Tree rest = t;
  rest.erase(a);
  for (const auto& f : ground_arcs(p)) {
    if (f == a || t.contains(f)) continue;
    bool ok = true;
    for (const auto& e : rest)
      if (crosses(e, f, p)) {
        ok = false;
        break;
      }
    if (ok) return f;
  }
  return std::nullopt;
}

std::vector<FlipRecord> flips(const Tree& t, const IndexPair& p) {
  std::vector<FlipRecord> out;
  for (const auto& a : t) {
    auto f = flip_partner(t, a, p);
    if (!f) continue;
    FlipRecord r;
    r.out = a;
    r.in = *f;
    r.increasing = p.mode() == Mode::A ? (f->i > a.i && f->j > a.j) : f->i > a.i;
    r.result = t;
    r.result.erase(a);
    r.result.insert(*f);
    out.push_back(std::move(r));
  }
  return out;
}

IndexPair canopy(const Tree& t, const IndexPair& full) {
  auto d = degrees(t, full);
  std::vector<int> I, J;
  for (int v : full.I())
    if (d[full.vertex_i(v)] >= 2) I.push_back(v);
  for (int v : full.J())
    if (d[full.vertex_j(v)] >= 2) J.push_back(v);
  return IndexPair::make(I, J, Mode::A);
}

Tree complete_tree(const Tree& t, const IndexPair& p) {
  Tree out = t;
  for (int k = 0; k <= p.n(); ++k) {
    bool hi = p.has_i(k), hj = p.has_j(k);
    if (!hi && !hj)
      throw ValidationError("complete_tree: neither " + std::to_string(k) + " nor its bar is present");
    if (!hi || !hj) out.insert({k, k});
  }
  return out;
}

Arc mirror_arc(const Arc& a, const IndexPair& p) {
  int c = p.mode() == Mode::B ? p.n() : std::min(p.I().front(), p.J().front()) + p.n();
  return {c - a.j, c - a.i};
}

Tree mirror_tree(const Tree& t, const IndexPair& p) {
  std::vector<Arc> arcs;
  for (const auto& a : t) arcs.push_back(mirror_arc(a, p));
  return Tree(std::move(arcs));
}

}  // namespace tamari
