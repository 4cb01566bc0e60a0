#pragma once

#include "tamari/exact.h"
#include "tamari/index_pair.h"
#include "tamari/trees.h"

#include <optional>
#include <string>
#include <vector>

namespace tamari {

/// A height for every arc of I x J, stored as a table indexed by positions
/// in I and J. Arcs outside the ground set may be +infinity.
class HeightFunction {
 public:
  HeightFunction() = default;
  explicit HeightFunction(IndexPair p);

  const IndexPair& pair() const { return pair_; }
  const ExtRat& operator()(int i, int j) const;
  const ExtRat& operator()(const Arc& a) const { return (*this)(a.i, a.j); }
  void set(int i, int j, ExtRat v);

  /// Rows indexed by I, columns by J; entries "p/q" or "inf".
  std::vector<std::vector<std::string>> table() const;
  static HeightFunction from_table(const IndexPair& p,
                                   const std::vector<std::vector<std::string>>& rows);

 private:
  IndexPair pair_;
  std::vector<std::vector<ExtRat>> h_;
};

/// Mode A: -(j - i)^2, or +infinity when i > j.
/// Mode B: l(2(n+1) - l) with l the arc length.
HeightFunction default_height(const IndexPair& p);
/// Any height given by a function of (i, j).
template <class F>
HeightFunction make_height(const IndexPair& p, F&& f) {
  HeightFunction h(p);
  for (int i : p.I())
    for (int j : p.J()) h.set(i, j, f(i, j));
  return h;
}

/// For every non-crossing pair of ground arcs (i,j), (i',j') with distinct
/// endpoints: h(i,j) + h(i',j') < h(i',j) + h(i,j').
struct HeightViolation {
  Arc a, b;
};
std::optional<HeightViolation> height_violation(const HeightFunction& h);
bool is_valid_height(const HeightFunction& h);

/// Exchange inequality on every pair of arcs sharing a facet.
bool verify_regular(const std::vector<Tree>& trees, const HeightFunction& h);

/// True when no cycle alternates between arcs of t1 and arcs of t2, i.e. the
/// simplices meet in a common face.
bool intersect_properly(const Tree& t1, const Tree& t2, const IndexPair& p);

struct TriangulationReport {
  bool all_spanning = false;
  bool pairwise_proper = false;
  bool count_matches = false;
  std::size_t count = 0, expected = 0;
  bool ok() const { return all_spanning && pairwise_proper && count_matches; }
};
/// Expected count: nu-paths (mode A) or C(|I|+|J|-2, |I|-1) (mode B).
TriangulationReport verify_triangulation(const std::vector<Tree>& trees, const IndexPair& p);

/// Monotone staircases of the I x J grid. Mode A keeps those made of
/// increasing arcs; mode B keeps all of them.
std::vector<Tree> staircase_trees(const IndexPair& p);

}  // namespace tamari
