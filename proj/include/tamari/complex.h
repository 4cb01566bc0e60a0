#pragma once

#include "tamari/index_pair.h"
#include "tamari/paths.h"
#include "tamari/trees.h"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tamari {

/// The flag complex of non-crossing ground arcs: faces are forests,
/// facets are trees.
class FlagComplex {
 public:
  explicit FlagComplex(IndexPair p);

  const IndexPair& pair() const { return pair_; }
  const std::vector<Arc>& ground() const { return ground_; }
  /// Index of an arc in the ground set, or -1.
  int arc_index(const Arc& a) const;
  bool compatible(int x, int y) const { return compat_[x][y]; }

  /// Every face (including the empty one) in lexicographic order of its arc list.
  void for_each_face(const std::function<void(const Forest&)>& f) const;
  /// Faces with k arcs.
  std::vector<Forest> faces(int k) const;
  /// f[k] is the number of faces with k arcs; f[0] = 1.
  std::vector<std::int64_t> f_vector() const;
  /// Facet size |I| + |J| - 1.
  int facet_size() const { return pair_.size() - 1; }

  /// Arcs lying in every facet.
  std::vector<Arc> cone_points() const;

 private:
  IndexPair pair_;
  std::vector<Arc> ground_;
  std::vector<std::vector<char>> compat_;
};

/// Mode A: contains (min I, max J) and covers every node. Mode B: covers every node.
bool is_interior_face(const Forest& f, const IndexPair& p);
std::vector<Forest> interior_faces(const IndexPair& p);

/// h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_(i-1), trailing zeros removed.
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f, int d);
std::vector<std::int64_t> h_vector_f(const IndexPair& p);

/// Restriction sets along the opposite of the Tamari order (maxima first,
/// smallest index on ties). Mode A.
std::vector<std::int64_t> h_vector_shelling(const IndexPair& p);
/// Histogram of valley counts over the paths above nu.
std::vector<std::int64_t> narayana_vector(const LatticePath& nu);
/// C(|I|-1, k) C(|J|-1, k).
std::vector<std::int64_t> type_b_h_vector(const IndexPair& p);

/// |R(F_m)| for each facet of a facet order.
std::vector<int> restriction_sizes(const std::vector<Tree>& order);
/// Each F_m meets the union of its predecessors in a pure codimension-one subcomplex.
bool is_shelling_order(const std::vector<Tree>& order);

/// One join factor of the closed star of a face.
struct LinkFactor {
  IndexPair pair;            ///< mode A sub-pair in unrolled values, or the residual mode B pair
  std::optional<Arc> owner;  ///< arc of F whose interval produced the factor; empty for the root
  bool removes_owner = false;
  /// Maps an arc of the factor back to the original pair.
  Arc to_original(const Arc& a) const;
  int period = 0;  ///< n + 1 in mode B, 0 in mode A
};

/// Factors of link(F) * F following the interval structure of F.
std::vector<LinkFactor> link_decomposition(const Forest& f, const IndexPair& p);
/// Faces of the closed star of F, computed by brute force, equal the join
/// of the factor complexes.
bool verify_link_decomposition(const Forest& f, const IndexPair& p);

}  // namespace tamari
