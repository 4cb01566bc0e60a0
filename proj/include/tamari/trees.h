#pragma once

#include "tamari/index_pair.h"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tamari {

/// An arc (i, j-bar) between an I-node and a J-node.
struct Arc {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Length (j - i) mod (n + 1).
int arc_length(const Arc& a, int n);

/// Crossing predicate. Arcs sharing an endpoint never cross.
bool crosses(const Arc& a, const Arc& b, Mode mode, int n);
inline bool crosses(const Arc& a, const Arc& b, const IndexPair& p) {
  return crosses(a, b, p.mode(), p.n());
}

/// Mode A: i precedes j-bar. Mode B: always.
bool is_ground_arc(const Arc& a, const IndexPair& p);
/// Arcs of the ground set in canonical (i, j) order.
std::vector<Arc> ground_arcs(const IndexPair& p);

/// A set of arcs kept sorted in canonical order.
class ArcGraph {
 public:
  ArcGraph() = default;
  explicit ArcGraph(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains(const Arc& a) const;
  void insert(const Arc& a);
  void erase(const Arc& a);
  /// Every arc of *this lies in other.
  bool subset_of(const ArcGraph& other) const;

  auto begin() const { return arcs_.begin(); }
  auto end() const { return arcs_.end(); }

  /// "(0,2) (0,5) (1,2)"
  std::string str() const;

  friend auto operator<=>(const ArcGraph&, const ArcGraph&) = default;

 private:
  std::vector<Arc> arcs_;
};

using Tree = ArcGraph;
using Forest = ArcGraph;

/// Pairwise non-crossing ground arcs.
bool is_non_crossing(const ArcGraph& g, const IndexPair& p);
/// Spanning tree of the complete bipartite graph on I u J.
bool is_spanning_tree(const ArcGraph& g, const IndexPair& p);
/// Non-crossing spanning tree made of ground arcs.
bool is_tree(const ArcGraph& g, const IndexPair& p);

/// Degree of every node, indexed by IndexPair vertex ids.
std::vector<int> degrees(const ArcGraph& g, const IndexPair& p);
/// Number of connected components on the node set I u J.
int component_count(const ArcGraph& g, const IndexPair& p);

/// All trees, by backtracking insertion in canonical arc order. The result
/// is sorted. Throws if the count would exceed max_count.
std::vector<Tree> enumerate_trees(const IndexPair& p, std::size_t max_count = 5'000'000);

/// Arcs (i, min{j-bar after i}) together with (min I, j-bar) for every j.
/// Mode A only.
Tree t_min(const IndexPair& p);

struct FlipRecord {
  Arc out;
  Arc in;
  bool increasing = false;
  Tree result;
};

/// The arc that replaces `a` in `t`, if any.
std::optional<Arc> flip_partner(const Tree& t, const Arc& a, const IndexPair& p);
/// All flips of t, in canonical order of the removed arc.
std::vector<FlipRecord> flips(const Tree& t, const IndexPair& p);

/// Non-leaf nodes of an ([n],[n]) tree, as the pair (I, J).
IndexPair canopy(const Tree& t, const IndexPair& full);
/// Adds each node of [n] u [n-bar] missing from p as a leaf. Requires that
/// for every k, k is in I or k-bar is in J.
Tree complete_tree(const Tree& t, const IndexPair& p);

/// (i, j-bar) goes to (c - j, (c - i)-bar), matching reverse_pair.
Arc mirror_arc(const Arc& a, const IndexPair& p);
Tree mirror_tree(const Tree& t, const IndexPair& p);

}  // namespace tamari

template <>
struct std::hash<tamari::ArcGraph> {
  std::size_t operator()(const tamari::ArcGraph& g) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& a : g) {
      h = (h ^ static_cast<std::size_t>(a.i * 131 + a.j)) * 1099511628211ull;
    }
    return h;
  }
};
