#include "tamari/poset.h"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tamari {

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

BitRow& BitRow::operator|=(const BitRow& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

BitRow BitRow::operator&(const BitRow& o) const {
  BitRow r = *this;
  for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
  return r;
}

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<int>> up)
    : labels_(std::move(labels)), up_(std::move(up)) {
  const int n = size();
  if ((int)up_.size() != n) throw std::invalid_argument("FinitePoset: size mismatch");
  down_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    std::sort(up_[x].begin(), up_[x].end());
    up_[x].erase(std::unique(up_[x].begin(), up_[x].end()), up_[x].end());
    for (int y : up_[x]) down_[y].push_back(x);
  }
  auto order = linear_extension();
  if ((int)order.size() != n) throw std::invalid_argument("FinitePoset: cover relation has a cycle");
  above_.assign(n, BitRow(n));
  below_.assign(n, BitRow(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    above_[x].set(x);
    for (int y : up_[x]) above_[x] |= above_[y];
  }
  for (int x : order) {
    below_[x].set(x);
    for (int y : down_[x]) below_[x] |= below_[y];
  }
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y : up_[x]) out.push_back({x, y});
  return out;
}

std::vector<int> FinitePoset::minima() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> FinitePoset::maxima() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> FinitePoset::linear_extension(bool reversed) const {
  const int n = size();
  const auto& fwd = reversed ? down_ : up_;
  const auto& back = reversed ? up_ : down_;
  std::vector<int> indeg(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int x = 0; x < n; ++x) {
    indeg[x] = static_cast<int>(back[x].size());
    if (indeg[x] == 0) ready.push(x);
  }
  std::vector<int> out;
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    out.push_back(x);
    for (int y : fwd[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  return out;
}

std::optional<int> FinitePoset::join(int x, int y) const {
  auto U = above_[x] & above_[y];
  auto c = U.count();
  for (int z = 0; z < size(); ++z)
    if (U.test(z) && above_[z].count() == c) return z;
  return std::nullopt;
}

std::optional<int> FinitePoset::meet(int x, int y) const {
  auto D = below_[x] & below_[y];
  auto c = D.count();
  for (int z = 0; z < size(); ++z)
    if (D.test(z) && below_[z].count() == c) return z;
  return std::nullopt;
}

std::string FinitePoset::dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (int x = 0; x < size(); ++x) os << "  n" << x << " [label=\"" << labels_[x] << "\"];\n";
  for (auto [x, y] : cover_pairs()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

LatticeReport lattice_check(const FinitePoset& P) {
  LatticeReport r;
  r.minima = P.minima();
  r.maxima = P.maxima();
  for (int x = 0; x < P.size(); ++x)
    for (int y = x + 1; y < P.size(); ++y) {
      if (!r.missing_join && !P.join(x, y)) r.missing_join = {x, y};
      if (!r.missing_meet && !P.meet(x, y)) r.missing_meet = {x, y};
    }
  r.is_lattice = P.size() > 0 && !r.missing_join && !r.missing_meet;
  return r;
}

int TreePoset::index_of(const Tree& t) const {
  auto it = std::lower_bound(trees.begin(), trees.end(), t);
  return it != trees.end() && *it == t ? static_cast<int>(it - trees.begin()) : -1;
}

TreePoset build_poset(const IndexPair& p, std::size_t max_size) {
  TreePoset tp{p, enumerate_trees(p, max_size), {}};
  std::vector<std::string> labels;
  std::vector<std::vector<int>> up(tp.trees.size());
  for (std::size_t x = 0; x < tp.trees.size(); ++x) {
    labels.push_back(tp.trees[x].str());
    for (const auto& f : flips(tp.trees[x], p)) {
      if (!f.increasing) continue;
      int y = tp.index_of(f.result);
      if (y < 0) throw std::logic_error("flip left the tree set");
      up[x].push_back(y);
    }
  }
  tp.order = FinitePoset(std::move(labels), std::move(up));
  return tp;
}

PathPoset build_path_poset(const LatticePath& nu, std::size_t max_size) {
  PathPoset pp{nu, enumerate_paths_above(nu, max_size), {}};
  std::vector<std::string> labels;
  std::vector<std::vector<int>> up(pp.paths.size());
  for (std::size_t x = 0; x < pp.paths.size(); ++x) {
    labels.push_back(pp.paths[x].word().empty() ? "()" : pp.paths[x].word());
    for (const auto& c : covers_of(pp.paths[x], nu)) {
      auto it = std::lower_bound(pp.paths.begin(), pp.paths.end(), c.result);
      if (it == pp.paths.end() || *it != c.result) throw std::logic_error("cover left the path set");
      up[x].push_back(static_cast<int>(it - pp.paths.begin()));
    }
  }
  pp.order = FinitePoset(std::move(labels), std::move(up));
  return pp;
}

IsoReport verify_flip_path_iso(const IndexPair& p) {
  IsoReport r;
  auto tp = build_poset(p);
  auto pp = build_path_poset(nu_of_pair(p));
  std::vector<int> image(tp.trees.size(), -1);
  std::vector<char> hit(pp.paths.size(), 0);
  r.bijective = tp.trees.size() == pp.paths.size();
  for (std::size_t x = 0; x < tp.trees.size(); ++x) {
    auto mu = rho(tp.trees[x], p);
    auto it = std::lower_bound(pp.paths.begin(), pp.paths.end(), mu);
    if (it == pp.paths.end() || *it != mu) {
      r.bijective = false;
      r.detail = "rho(" + tp.trees[x].str() + ") = " + mu.word() + " is not above nu";
      continue;
    }
    image[x] = static_cast<int>(it - pp.paths.begin());
    if (hit[image[x]]++) {
      r.bijective = false;
      r.detail = "rho is not injective at " + mu.word();
    }
  }
  if (!r.bijective) return r;
  std::set<std::pair<int, int>> a, b;
  for (auto [x, y] : tp.order.cover_pairs()) a.insert({image[x], image[y]});
  for (auto e : pp.order.cover_pairs()) b.insert(e);
  r.covers_match = a == b;
  if (!r.covers_match) r.detail = "flip covers and path covers differ";
  return r;
}

bool CanopyReport::ok() const {
  if (!canopy_monotone) return false;
  for (const auto& f : fibers)
    if (!f.is_interval || !f.iso_to_canopy_poset) return false;
  return true;
}

IndexPair full_pair(int n, Mode mode) {
  std::vector<int> v(n + 1);
  for (int k = 0; k <= n; ++k) v[k] = k;
  return IndexPair::make(v, v, mode, mode == Mode::B ? std::optional<int>(n) : std::nullopt);
}

CanopyReport canopy_fiber_report(int n) {
  auto full = full_pair(n);
  auto big = build_poset(full);
  const auto& P = big.order;
  CanopyReport rep;
  std::vector<IndexPair> can;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> fiber_of;
  for (const auto& t : big.trees) {
    auto c = canopy(t, full);
    can.push_back(c);
    auto key = std::make_pair(c.I(), c.J());
    if (!fiber_of.count(key)) {
      fiber_of[key] = static_cast<int>(rep.fibers.size());
      rep.fibers.push_back({c, {}, false, false});
    }
    rep.fibers[fiber_of[key]].members.push_back(static_cast<int>(&t - big.trees.data()));
  }
  rep.canopy_monotone = true;
  for (auto [x, y] : P.cover_pairs()) {
    // an increasing flip can only move nodes from J to I
    const auto& lo = can[x].I();
    const auto& hi = can[y].I();
    if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) rep.canopy_monotone = false;
  }
  for (auto& f : rep.fibers) {
    std::set<int> mem(f.members.begin(), f.members.end());
    std::optional<int> lo, hi;
    for (int x : f.members) {
      if (std::all_of(f.members.begin(), f.members.end(), [&](int y) { return P.leq(x, y); })) lo = x;
      if (std::all_of(f.members.begin(), f.members.end(), [&](int y) { return P.leq(y, x); })) hi = x;
    }
    if (lo && hi) {
      f.is_interval = true;
      for (int z = 0; z < P.size(); ++z)
        if (P.leq(*lo, z) && P.leq(z, *hi) && !mem.count(z)) f.is_interval = false;
    }
    auto small = build_poset(f.canopy);
    std::vector<int> image;
    std::set<int> seen;
    bool bij = small.trees.size() == f.members.size();
    for (int x : f.members) {
      std::vector<Arc> keep;
      for (const auto& a : big.trees[x])
        if (f.canopy.has_i(a.i) && f.canopy.has_j(a.j)) keep.push_back(a);
      int y = small.index_of(Tree(keep));
      if (y < 0 || !seen.insert(y).second) bij = false;
      image.push_back(y);
    }
    f.iso_to_canopy_poset = bij;
    for (std::size_t a = 0; bij && a < f.members.size(); ++a)
      for (std::size_t b = 0; b < f.members.size(); ++b)
        if (P.leq(f.members[a], f.members[b]) != small.order.leq(image[a], image[b]))
          f.iso_to_canopy_poset = false;
  }
  return rep;
}

DualityReport verify_reverse_duality(const IndexPair& p) {
  DualityReport r;
  auto P = build_poset(p);
  auto Q = build_poset(reverse_pair(p));
  std::vector<int> image;
  std::set<int> seen;
  r.bijective = P.trees.size() == Q.trees.size();
  for (const auto& t : P.trees) {
    int y = Q.index_of(mirror_tree(t, p));
    if (y < 0 || !seen.insert(y).second) r.bijective = false;
    image.push_back(y);
  }
  if (!r.bijective) return r;
  std::set<std::pair<int, int>> a, b;
  for (auto [x, y] : P.order.cover_pairs()) a.insert({image[y], image[x]});
  for (auto e : Q.order.cover_pairs()) b.insert(e);
  r.reverses_covers = a == b;
  return r;
}

}  // namespace tamari
