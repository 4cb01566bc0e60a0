#pragma once

#include "tamari/index_pair.h"
#include "tamari/paths.h"
#include "tamari/trees.h"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamari {

/// Dense bitset used for order ideals and filters.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t k) { w_[k >> 6] |= std::uint64_t(1) << (k & 63); }
  bool test(std::size_t k) const { return (w_[k >> 6] >> (k & 63)) & 1; }
  std::size_t count() const;
  BitRow& operator|=(const BitRow& o);
  BitRow operator&(const BitRow& o) const;
  bool operator==(const BitRow& o) const { return w_ == o.w_; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// A finite poset given by its cover relation, with labelled elements.
class FinitePoset {
 public:
  FinitePoset() = default;
  /// up[x] lists the y with x covered by y. Throws if the relation has a cycle.
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<int>> up);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& up(int x) const { return up_[x]; }
  const std::vector<int>& down(int x) const { return down_[x]; }
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool leq(int x, int y) const { return above_[x].test(y); }
  /// {y : x <= y}
  const BitRow& filter(int x) const { return above_[x]; }
  const BitRow& ideal(int x) const { return below_[x]; }

  std::vector<int> minima() const;
  std::vector<int> maxima() const;
  /// Topological order, ties broken by smallest index. If reversed, maxima first.
  std::vector<int> linear_extension(bool reversed = false) const;

  std::optional<int> join(int x, int y) const;
  std::optional<int> meet(int x, int y) const;

  /// Hasse diagram in DOT, edges pointing upward.
  std::string dot(const std::string& name = "P") const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<BitRow> above_, below_;
};

struct LatticeReport {
  bool is_lattice = false;
  std::vector<int> minima, maxima;
  /// First pair (in index order) without a join or without a meet.
  std::optional<std::pair<int, int>> missing_join, missing_meet;
};
LatticeReport lattice_check(const FinitePoset& P);

/// Trees of p ordered by increasing flips.
struct TreePoset {
  IndexPair pair;
  std::vector<Tree> trees;
  FinitePoset order;
  int index_of(const Tree& t) const;
};
TreePoset build_poset(const IndexPair& p, std::size_t max_size = 5'000'000);

/// Paths weakly above nu ordered by covers_of.
struct PathPoset {
  LatticePath nu;
  std::vector<LatticePath> paths;
  FinitePoset order;
};
PathPoset build_path_poset(const LatticePath& nu, std::size_t max_size = 5'000'000);

/// rho is a bijection onto nu-paths carrying increasing flips exactly to covers.
struct IsoReport {
  bool bijective = false;
  bool covers_match = false;
  bool ok() const { return bijective && covers_match; }
  std::string detail;
};
IsoReport verify_flip_path_iso(const IndexPair& p);

/// Canopy fibers of the ([n],[n]) poset.
struct CanopyFiber {
  IndexPair canopy;
  std::vector<int> members;  ///< indices into the big poset
  bool is_interval = false;
  bool iso_to_canopy_poset = false;
};
struct CanopyReport {
  std::vector<CanopyFiber> fibers;
  bool canopy_monotone = false;
  bool ok() const;
};
CanopyReport canopy_fiber_report(int n);

/// The mirror map on trees is an anti-isomorphism onto the reverse pair.
struct DualityReport {
  bool bijective = false;
  bool reverses_covers = false;
  bool ok() const { return bijective && reverses_covers; }
};
DualityReport verify_reverse_duality(const IndexPair& p);

/// ([n],[n]) in mode A.
IndexPair full_pair(int n, Mode mode = Mode::A);

}  // namespace tamari
