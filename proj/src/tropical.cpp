#include "tamari/tropical.h"

#include <algorithm>
#include <map>
#include <set>

namespace tamari {

std::vector<ExtRat> apex(int i, const HeightFunction& h) {
  std::vector<ExtRat> out;
  for (int j : h.pair().J()) out.push_back(h(i, j));
  return out;
}

std::vector<ExtRat> apex_normalized(int i, const HeightFunction& h) {
  auto row = apex(i, h);
  ExtRat base = row.back();
  for (auto& x : row) x = x - base;
  return row;
}

Point vertex_coords(const Tree& t, const HeightFunction& h) {
  const auto& p = h.pair();
  const int V = p.size(), nI = static_cast<int>(p.I().size());
  std::vector<std::vector<std::pair<int, Arc>>> adj(V);
  for (const auto& a : t) {
    adj[p.vertex_i(a.i)].push_back({p.vertex_j(a.j), a});
    adj[p.vertex_j(a.j)].push_back({p.vertex_i(a.i), a});
  }
  std::vector<Rational> pot(V);
  std::vector<char> seen(V, 0);
  int root = p.vertex_j(p.J().back());
  std::vector<int> st{root};
  seen[root] = 1;
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    for (const auto& [y, a] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      const auto& w = h(a);
      if (!w.is_finite()) throw ValidationError("tree uses an arc of infinite height");
      // stepping from y towards the root: J -> I adds h, I -> J subtracts h
      pot[y] = pot[x] + (y >= nI ? w.value() : Rational(-w.value()));
      st.push_back(y);
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != V) throw ValidationError("vertex_coords: not a spanning tree");
  Point out;
  for (size_t b = 0; b + 1 < p.J().size(); ++b) out.push_back(pot[nI + b]);
  return out;
}

namespace {

Rational coord(const Point& x, const IndexPair& p, int j) {
  int b = p.pos_j(j);
  return b + 1 == (int)p.J().size() ? Rational(0) : x[b];
}

}  // namespace

bool satisfies_cell_inequalities(const Point& x, const Tree& t, const HeightFunction& h) {
  const auto& p = h.pair();
  for (const auto& a : t)
    for (int k : p.J()) {
      ExtRat rhs = h(a.i, k) - h(a);
      ExtRat lhs(coord(x, p, k) - coord(x, p, a.j));
      if (lhs > rhs) return false;
      if ((lhs == rhs) != t.contains({a.i, k})) return false;
    }
  return true;
}

std::vector<std::int64_t> GeometricComplex::f_vector() const {
  std::vector<std::int64_t> f(ambient_dim() + 1, 0);
  for (const auto& c : cells) {
    if (c.dim >= (int)f.size()) f.resize(c.dim + 1, 0);
    ++f[c.dim];
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

Cell cell_of_forest(const Forest& f, const GeometricComplex& gc) {
  Cell c{f, {}, component_count(f, gc.pair) - 1};
  for (size_t t = 0; t < gc.trees.size(); ++t)
    if (f.subset_of(gc.trees[t])) c.vertices.push_back(static_cast<int>(t));
  return c;
}

GeometricComplex build_geometric_complex(const IndexPair& p, const HeightFunction& h) {
  if (!(h.pair() == p)) throw ValidationError("height belongs to another pair");
  if (auto v = height_violation(h))
    throw ValidationError("height violates the exchange inequality at (" + std::to_string(v->a.i) + "," +
                          std::to_string(v->a.j) + ") (" + std::to_string(v->b.i) + "," +
                          std::to_string(v->b.j) + ")");
  GeometricComplex gc{p, h, enumerate_trees(p), {}, {}};
  for (const auto& t : gc.trees) gc.coords.push_back(vertex_coords(t, h));
  for (const auto& f : interior_faces(p)) gc.cells.push_back(cell_of_forest(f, gc));
  return gc;
}

namespace {

/// Row-reduces m in place; returns the rank.
int row_reduce(std::vector<std::vector<Rational>>& m, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < (int)m.size(); ++c) {
    int piv = -1;
    for (int r = rank; r < (int)m.size(); ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (int r = 0; r < (int)m.size(); ++r)
      if (r != rank && m[r][c] != 0) {
        Rational f = m[r][c];
        for (size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

}  // namespace

int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> m;
  for (size_t k = 1; k < pts.size(); ++k) {
    std::vector<Rational> row;
    for (size_t c = 0; c < pts[k].size(); ++c) row.push_back(pts[k][c] - pts[0][c]);
    m.push_back(std::move(row));
  }
  return row_reduce(m, static_cast<int>(pts[0].size()));
}

std::vector<Point> h_description_vertices(const Forest& f, const HeightFunction& h) {
  const auto& p = h.pair();
  const int d = static_cast<int>(p.J().size()) - 1;
  struct Ineq {
    std::vector<Rational> a;
    Rational b;
  };
  std::vector<Ineq> rows;
  for (const auto& arc : f)
    for (int k : p.J()) {
      if (k == arc.j) continue;
      ExtRat rhs = h(arc.i, k) - h(arc);
      if (rhs.is_inf()) continue;
      Ineq q{std::vector<Rational>(d, 0), rhs.value()};
      int bk = p.pos_j(k), bj = p.pos_j(arc.j);
      if (bk < d) q.a[bk] += 1;
      if (bj < d) q.a[bj] -= 1;
      rows.push_back(std::move(q));
    }
  std::set<Point> out;
  if (d == 0) return {Point{}};
  std::vector<int> pick(d);
  auto feasible = [&](const Point& x) {
    for (const auto& q : rows) {
      Rational s = 0;
      for (int c = 0; c < d; ++c) s += q.a[c] * x[c];
      if (s > q.b) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == d) {
      std::vector<std::vector<Rational>> m;
      for (int r : pick) {
        auto row = rows[r].a;
        row.push_back(rows[r].b);
        m.push_back(std::move(row));
      }
      if (row_reduce(m, d) < d) return;
      Point x(d);
      for (int c = 0; c < d; ++c) x[c] = m[c][d];
      if (feasible(x)) out.insert(std::move(x));
      return;
    }
    for (int r = start; r < (int)rows.size(); ++r) {
      pick[depth] = r;
      self(self, r + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return {out.begin(), out.end()};
}

namespace {

std::vector<std::pair<CoverStep, Point>> cover_deltas(const GeometricComplex& gc, const FinitePoset& P) {
  std::vector<std::pair<CoverStep, Point>> out;
  for (auto [x, y] : P.cover_pairs()) {
    Point d;
    for (size_t c = 0; c < gc.coords[x].size(); ++c) d.push_back(gc.coords[y][c] - gc.coords[x][c]);
    out.push_back({{x, y}, std::move(d)});
  }
  return out;
}

}  // namespace

bool orientation_check(const GeometricComplex& gc, const FinitePoset& P) {
  for (const auto& [step, d] : cover_deltas(gc, P)) {
    bool strict = false;
    for (const auto& v : d) {
      if (v > 0) return false;
      if (v < 0) strict = true;
    }
    if (!strict) return false;
  }
  return true;
}

std::optional<OrientationConflict> find_orientation_conflict(const GeometricComplex& gc,
                                                             const FinitePoset& P) {
  auto deltas = cover_deltas(gc, P);
  for (int c = 0; c < gc.ambient_dim(); ++c)
    for (const auto& [s1, d1] : deltas)
      if (d1[c] > 0)
        for (const auto& [s2, d2] : deltas)
          if (d2[c] < 0) return OrientationConflict{s1, s2, c};
  return std::nullopt;
}

bool exists_orienting_functional_2d(const GeometricComplex& gc, const FinitePoset& P) {
  if (gc.ambient_dim() != 2) throw ValidationError("planar complex required");
  std::vector<Point> ds;
  for (auto& [s, d] : cover_deltas(gc, P)) ds.push_back(d);
  if (ds.empty()) return true;
  // If a strict functional exists, one is found among the d's themselves or
  // among the rotations of differences of two boundary rays.
  std::vector<Point> cand;
  for (const auto& a : ds) {
    cand.push_back(a);
    for (const auto& b : ds) {
      Point diff{a[0] - b[0], a[1] - b[1]};
      cand.push_back({-diff[1], diff[0]});
    }
  }
  for (const auto& c : cand) {
    bool ok = true;
    for (const auto& d : ds)
      if (!(c[0] * d[0] + c[1] * d[1] > 0)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

SupportVerdict support_convex_predicate(const IndexPair& p) {
  const auto& I = p.I();
  const auto& J = p.J();
  if (p.mode() == Mode::A) {
    if (I.size() == 1) return {true, 0};
    std::vector<int> Jp;
    for (int j : J) {
      auto before = std::upper_bound(I.begin(), I.end(), j) - I.begin();
      if (before >= 2) Jp.push_back(j);
    }
    std::vector<Node> seq;
    for (int i : I) seq.push_back({i, Side::I});
    for (int j : Jp)
      if (j != J.back()) seq.push_back({j, Side::J});
    std::sort(seq.begin(), seq.end());
    bool convex = true;
    for (size_t k = 1; k < seq.size(); ++k)
      if (seq[k].side == Side::J && seq[k - 1].side == Side::J) convex = false;
    return {convex, static_cast<int>(Jp.size()) - 1};
  }
  if (I.size() == 1 || J.size() == 1) return {true, 0};
  if (J.size() == 2) return {true, 1};
  auto m = p.merged();
  bool convex = true;
  for (size_t k = 0; k < m.size(); ++k)
    if (m[k].side == Side::J && m[(k + 1) % m.size()].side == Side::J) convex = false;
  return {convex, static_cast<int>(J.size()) - 1};
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Twice the area of the convex hull.
Rational hull_area2(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  std::vector<Point> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  Rational a = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& u = h[i];
    const auto& v = h[(i + 1) % h.size()];
    a += u[0] * v[1] - u[1] * v[0];
  }
  return a < 0 ? Rational(-a) : a;
}

}  // namespace

SupportVerdict convexity_oracle_2d(const GeometricComplex& gc) {
  if (gc.ambient_dim() != 2) throw ValidationError("planar complex required");
  const auto& pts = gc.coords;
  int hull_dim = affine_dimension(pts);
  Rational sum = 0;
  bool has2 = false;
  for (const auto& c : gc.cells) {
    if (c.dim != 2) continue;
    has2 = true;
    std::vector<Point> v;
    for (int t : c.vertices) v.push_back(pts[t]);
    sum += hull_area2(v);
  }
  if (has2) return {sum == hull_area2(pts), 2};
  if (hull_dim <= 0) return {true, 0};
  if (hull_dim == 2) return {false, 1};
  // collinear: the edges must cover the segment between the extreme points
  int axis = 1;
  for (const auto& q : pts)
    if (q[0] != pts[0][0]) axis = 0;
  std::vector<std::pair<Rational, Rational>> iv;
  Rational lo = pts[0][axis], hi = pts[0][axis];
  for (const auto& q : pts) lo = std::min(lo, q[axis]), hi = std::max(hi, q[axis]);
  for (const auto& c : gc.cells)
    if (c.dim == 1) {
      Rational a = pts[c.vertices[0]][axis], b = pts[c.vertices[1]][axis];
      iv.push_back({std::min(a, b), std::max(a, b)});
    }
  std::sort(iv.begin(), iv.end());
  Rational reach = lo;
  for (const auto& [a, b] : iv) {
    if (a > reach) break;
    reach = std::max(reach, b);
  }
  return {reach == hi, 1};
}

std::vector<std::vector<int>> cayley_cell(const Tree& t, const IndexPair& p) {
  std::vector<std::vector<int>> out(p.I().size());
  for (const auto& a : t) out[p.pos_i(a.i)].push_back(a.j);
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

bool is_fine_mixed_cell(const std::vector<std::vector<int>>& cell, const IndexPair& p) {
  long s = 0;
  for (const auto& v : cell) {
    if (v.empty()) return false;
    s += static_cast<long>(v.size()) - 1;
  }
  return s == static_cast<long>(p.J().size()) - 1;
}

std::vector<std::int64_t> associahedron_f_vector(int d) {
  const int N = d + 3;
  std::vector<std::pair<int, int>> diag;
  for (int a = 0; a < N; ++a)
    for (int b = a + 2; b < N; ++b)
      if (!(a == 0 && b == N - 1)) diag.push_back({a, b});
  auto cross_d = [](std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  std::vector<std::int64_t> by_size(d + 1, 0);
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    ++by_size[cur.size()];
    for (size_t k = start; k < diag.size(); ++k) {
      bool ok = std::none_of(cur.begin(), cur.end(), [&](int c) { return cross_d(diag[c], diag[k]); });
      if (!ok) continue;
      cur.push_back(static_cast<int>(k));
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<std::int64_t> f(d + 1);
  for (int k = 0; k <= d; ++k) f[k] = by_size[d - k];
  return f;
}

std::vector<std::int64_t> cyclohedron_f_vector(int d) {
  std::vector<std::int64_t> f(d + 1);
  for (int k = 0; k <= d; ++k) f[k] = binomial(d, k) * binomial(2 * d - k, d);
  return f;
}

std::vector<CellProduct> cell_products_report(const GeometricComplex& gc) {
  const auto& p = gc.pair;
  std::vector<CellProduct> out;
  for (const auto& cell : gc.cells) {
    CellProduct cp;
    cp.forest = cell.forest;
    auto factors = link_decomposition(cell.forest, p);
    struct Local {
      std::map<Arc, Arc> from_original;
      std::optional<Arc> owner_local;
      std::set<Forest> interior;
    };
    std::vector<Local> loc(factors.size());
    std::map<Arc, int> owner_of;
    bool ok = true;
    std::int64_t product = 1;
    cp.factors_match_reference = true;
    for (size_t k = 0; k < factors.size(); ++k) {
      const auto& lf = factors[k];
      Arc top{lf.pair.I().front(), lf.pair.J().back()};
      if (lf.removes_owner) loc[k].owner_local = top;
      for (const auto& a : ground_arcs(lf.pair)) {
        if (loc[k].owner_local && a == *loc[k].owner_local) continue;
        Arc o = lf.to_original(a);
        loc[k].from_original[o] = a;
        if (!owner_of.emplace(o, static_cast<int>(k)).second) ok = false;
      }
      std::vector<std::int64_t> f;
      for (const auto& g : interior_faces(lf.pair)) {
        loc[k].interior.insert(g);
        int dim = component_count(g, lf.pair) - 1;
        if (dim >= (int)f.size()) f.resize(dim + 1, 0);
        ++f[dim];
      }
      product *= static_cast<std::int64_t>(loc[k].interior.size());
      bool cyclic = lf.pair.mode() == Mode::B;
      int dim = static_cast<int>(f.size()) - 1;
      auto ref = cyclic ? cyclohedron_f_vector(dim) : associahedron_f_vector(dim);
      if (ref != f) cp.factors_match_reference = false;
      if (dim > 0) cp.factors.push_back({cyclic, dim, lf.pair, f});
    }
    std::set<std::vector<Forest>> images;
    std::int64_t count = 0;
    for (const auto& other : gc.cells) {
      if (!cell.forest.subset_of(other.forest)) continue;
      ++count;
      std::vector<std::vector<Arc>> parts(factors.size());
      for (size_t k = 0; k < factors.size(); ++k)
        if (loc[k].owner_local) parts[k].push_back(*loc[k].owner_local);
      for (const auto& a : other.forest) {
        auto it = owner_of.find(a);
        if (it == owner_of.end()) {
          ok = false;
          continue;
        }
        parts[it->second].push_back(loc[it->second].from_original.at(a));
      }
      std::vector<Forest> tuple;
      for (size_t k = 0; k < factors.size(); ++k) {
        Forest g(parts[k]);
        if (!loc[k].interior.count(g)) ok = false;
        tuple.push_back(std::move(g));
      }
      if (!images.insert(std::move(tuple)).second) ok = false;
    }
    cp.face_poset_factors = ok && count == product;
    out.push_back(std::move(cp));
  }
  return out;
}

}  // namespace tamari
