#include "tamari/complex.h"

#include "tamari/exact.h"
#include "tamari/poset.h"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>

namespace tamari {

using Bits = boost::dynamic_bitset<>;

FlagComplex::FlagComplex(IndexPair p) : pair_(std::move(p)), ground_(ground_arcs(pair_)) {
  const auto m = ground_.size();
  compat_.assign(m, std::vector<char>(m, 0));
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      compat_[x][y] = x != y && !crosses(ground_[x], ground_[y], pair_);
}

int FlagComplex::arc_index(const Arc& a) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), a);
  return it != ground_.end() && *it == a ? static_cast<int>(it - ground_.begin()) : -1;
}

namespace {

std::vector<Bits> compat_bits(const FlagComplex& c) {
  const auto m = c.ground().size();
  std::vector<Bits> out(m, Bits(m));
  for (size_t x = 0; x < m; ++x)
    for (size_t y = x + 1; y < m; ++y)
      if (c.compatible(x, y)) out[x].set(y);
  return out;
}

}  // namespace

void FlagComplex::for_each_face(const std::function<void(const Forest&)>& f) const {
  const auto m = ground_.size();
  auto later = compat_bits(*this);
  std::vector<Arc> cur;
  auto rec = [&](auto&& self, const Bits& cand) -> void {
    f(Forest(cur));
    for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
      cur.push_back(ground_[v]);
      self(self, cand & later[v]);
      cur.pop_back();
    }
  };
  Bits all(m);
  all.set();
  rec(rec, all);
}

std::vector<Forest> FlagComplex::faces(int k) const {
  std::vector<Forest> out;
  for_each_face([&](const Forest& g) {
    if ((int)g.size() == k) out.push_back(g);
  });
  return out;
}

std::vector<std::int64_t> FlagComplex::f_vector() const {
  const auto m = ground_.size();
  auto later = compat_bits(*this);
  std::vector<std::int64_t> f(facet_size() + 1, 0);
  auto rec = [&](auto&& self, const Bits& cand, int depth) -> void {
    if (depth >= (int)f.size()) f.resize(depth + 1, 0);
    ++f[depth];
    for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v))
      self(self, cand & later[v], depth + 1);
  };
  Bits all(m);
  all.set();
  rec(rec, all, 0);
  return f;
}

std::vector<Arc> FlagComplex::cone_points() const {
  std::vector<Arc> out;
  for (size_t x = 0; x < ground_.size(); ++x) {
    bool all = true;
    for (size_t y = 0; y < ground_.size(); ++y)
      if (x != y && !compat_[x][y]) all = false;
    if (all) out.push_back(ground_[x]);
  }
  return out;
}

bool is_interior_face(const Forest& f, const IndexPair& p) {
  if (p.mode() == Mode::A && !f.contains({p.I().front(), p.J().back()})) return false;
  auto d = degrees(f, p);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == 0; });
}

std::vector<Forest> interior_faces(const IndexPair& p) {
  FlagComplex c(p);
  std::vector<Forest> out;
  c.for_each_face([&](const Forest& f) {
    if (is_interior_face(f, p)) out.push_back(f);
  });
  return out;
}

namespace {

void trim(std::vector<std::int64_t>& h) {
  while (h.size() > 1 && h.back() == 0) h.pop_back();
}

}  // namespace

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f, int d) {
  std::vector<std::int64_t> h(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      std::int64_t fi = i < (int)f.size() ? f[i] : 0;
      std::int64_t term = binomial(d - i, k - i) * fi;
      h[k] += ((k - i) % 2 ? -term : term);
    }
  trim(h);
  return h;
}

std::vector<std::int64_t> h_vector_f(const IndexPair& p) {
  FlagComplex c(p);
  return h_from_f(c.f_vector(), c.facet_size());
}

std::vector<int> restriction_sizes(const std::vector<Tree>& order) {
  std::vector<int> out;
  for (size_t m = 0; m < order.size(); ++m) {
    int r = 0;
    for (const auto& e : order[m]) {
      Tree rest = order[m];
      rest.erase(e);
      for (size_t l = 0; l < m; ++l)
        if (rest.subset_of(order[l])) {
          ++r;
          break;
        }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<std::int64_t> h_vector_shelling(const IndexPair& p) {
  if (p.mode() != Mode::A) throw ValidationError("shelling h-vector is computed in mode A");
  auto tp = build_poset(p);
  std::vector<Tree> order;
  for (int x : tp.order.linear_extension(true)) order.push_back(tp.trees[x]);
  std::vector<std::int64_t> h(p.size(), 0);
  for (int r : restriction_sizes(order)) ++h[r];
  trim(h);
  return h;
}

std::vector<std::int64_t> narayana_vector(const LatticePath& nu) {
  std::vector<std::int64_t> h(nu.length() + 1, 0);
  for (const auto& mu : enumerate_paths_above(nu)) ++h[valley_count(mu)];
  trim(h);
  return h;
}

std::vector<std::int64_t> type_b_h_vector(const IndexPair& p) {
  int a = static_cast<int>(p.I().size()) - 1, b = static_cast<int>(p.J().size()) - 1;
  std::vector<std::int64_t> h;
  for (int k = 0; k <= std::min(a, b); ++k) h.push_back(binomial(a, k) * binomial(b, k));
  trim(h);
  return h;
}

namespace {

std::vector<Arc> intersect(const Tree& a, const Tree& b) {
  std::vector<Arc> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool is_shelling_order(const std::vector<Tree>& order) {
  for (size_t m = 1; m < order.size(); ++m) {
    const auto& Fm = order[m];
    for (size_t l = 0; l < m; ++l) {
      auto lm = intersect(order[l], Fm);
      bool found = false;
      for (size_t k = 0; k < m && !found; ++k) {
        auto km = intersect(order[k], Fm);
        if (km.size() + 1 == Fm.size() && std::includes(km.begin(), km.end(), lm.begin(), lm.end()))
          found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

// ---- links ----

Arc LinkFactor::to_original(const Arc& a) const {
  if (period == 0) return a;
  return {a.i % period, a.j % period};
}

namespace {

/// Positions on the line (mode A) or on a cycle of length 2(n+1) (mode B):
/// value v sits at 2v on the I-side and 2v+1 on the J-side.
struct Geometry {
  const IndexPair& p;
  int M() const { return 2 * (p.n() + 1); }
  int start(const Arc& a) const { return 2 * a.i; }
  int len(const Arc& a) const {
    return p.mode() == Mode::A ? 2 * a.j + 1 - 2 * a.i : 2 * arc_length(a, p.n()) + 1;
  }
  int offset(int from, int pos) const {
    if (p.mode() == Mode::A) return pos - from;
    return ((pos - from) % M() + M()) % M();
  }
  /// b is nested in a (closed intervals), b != a.
  bool strictly_inside(const Arc& b, const Arc& a) const {
    if (a == b) return false;
    int off = offset(start(a), start(b));
    return off >= 0 && off + len(b) <= len(a);
  }
  /// pos lies strictly between the endpoints of b.
  bool in_open(int pos, const Arc& b) const {
    int off = offset(start(b), pos);
    return off > 0 && off < len(b);
  }
};

LinkFactor region_factor(const Arc& a, const Forest& f, const IndexPair& p, const Geometry& g) {
  std::vector<Arc> inner;
  for (const auto& b : f)
    if (g.strictly_inside(b, a)) inner.push_back(b);
  std::vector<int> I, J;
  for (int off = 0; off <= g.len(a); ++off) {
    int pos = g.start(a) + off;
    int wrapped = p.mode() == Mode::A ? pos : pos % g.M();
    if (std::any_of(inner.begin(), inner.end(), [&](const Arc& b) { return g.in_open(wrapped, b); }))
      continue;
    int v = wrapped / 2;
    bool is_j = wrapped % 2;
    if (is_j ? !p.has_j(v) : !p.has_i(v)) continue;
    (is_j ? J : I).push_back(pos / 2);
  }
  LinkFactor lf;
  lf.pair = IndexPair::make(I, J, Mode::A);
  lf.owner = a;
  lf.period = p.mode() == Mode::B ? p.n() + 1 : 0;
  return lf;
}

}  // namespace

std::vector<LinkFactor> link_decomposition(const Forest& f, const IndexPair& p) {
  if (!is_non_crossing(f, p)) throw ValidationError("link_decomposition: not a face");
  for (const auto& a : f)
    if (!is_ground_arc(a, p)) throw ValidationError("link_decomposition: arc outside the ground set");
  Geometry g{p};
  std::vector<LinkFactor> out;
  if (p.mode() == Mode::A) {
    Arc root{p.I().front(), p.J().back()};
    for (const auto& a : f) {
      if (a == root) continue;
      auto lf = region_factor(a, f, p, g);
      lf.removes_owner = true;
      out.push_back(std::move(lf));
    }
    Forest with_root = f;
    with_root.insert(root);
    auto lf = region_factor(root, with_root, p, g);
    lf.owner.reset();
    out.push_back(std::move(lf));
    return out;
  }
  for (const auto& a : f) {
    auto lf = region_factor(a, f, p, g);
    lf.removes_owner = true;
    out.push_back(std::move(lf));
  }
  std::vector<int> I, J;
  auto covered = [&](int pos) {
    return std::any_of(f.begin(), f.end(), [&](const Arc& b) { return g.in_open(pos, b); });
  };
  for (int v : p.I())
    if (!covered(2 * v)) I.push_back(v);
  for (int v : p.J())
    if (!covered(2 * v + 1)) J.push_back(v);
  LinkFactor res;
  res.pair = IndexPair::make(I, J, Mode::B, p.n());
  out.push_back(std::move(res));
  return out;
}

bool verify_link_decomposition(const Forest& f, const IndexPair& p) {
  auto factors = link_decomposition(f, p);
  FlagComplex full(p);
  std::set<Forest> star;
  full.for_each_face([&](const Forest& gface) {
    if (!f.subset_of(gface)) return;
    std::vector<Arc> link;
    for (const auto& a : gface)
      if (!f.contains(a)) link.push_back(a);
    const auto& fa = f.arcs();
    for (std::size_t mask = 0; mask < (std::size_t(1) << fa.size()); ++mask) {
      auto arcs = link;
      for (std::size_t k = 0; k < fa.size(); ++k)
        if (mask >> k & 1) arcs.push_back(fa[k]);
      star.insert(Forest(arcs));
    }
  });
  std::set<Forest> join{Forest()};
  for (const auto& lf : factors) {
    FlagComplex fc(lf.pair);
    std::optional<Arc> removed;
    if (lf.removes_owner) removed = Arc{lf.pair.I().front(), lf.pair.J().back()};
    std::vector<Forest> local;
    bool clash = false;
    fc.for_each_face([&](const Forest& h) {
      if (removed && h.contains(*removed)) return;
      std::vector<Arc> arcs;
      for (const auto& a : h) arcs.push_back(lf.to_original(a));
      Forest mapped(arcs);
      if (mapped.size() != h.size()) clash = true;
      local.push_back(std::move(mapped));
    });
    if (clash) return false;
    std::set<Forest> next;
    for (const auto& x : join)
      for (const auto& y : local) {
        std::vector<Arc> arcs(x.begin(), x.end());
        arcs.insert(arcs.end(), y.begin(), y.end());
        Forest z(arcs);
        if (z.size() != x.size() + y.size()) return false;
        next.insert(std::move(z));
      }
    join = std::move(next);
  }
  return join == star;
}

}  // namespace tamari
