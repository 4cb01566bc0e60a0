#pragma once

#include "tamari/index_pair.h"
#include "tamari/trees.h"

#include <string>
#include <string_view>
#include <vector>

namespace tamari {

/// A word over {N, E}, read as a lattice path from the origin.
class LatticePath {
 public:
  LatticePath() = default;
  /// Accepts plain words and the shorthand "(NE^2)^3", with nesting.
  static LatticePath parse(std::string_view text);
  static LatticePath from_word(std::string word);

  const std::string& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  int east() const;
  int north() const;
  char operator[](std::size_t k) const { return word_[k]; }

  /// Point after k steps, as (x, y).
  std::pair<int, int> point(std::size_t k) const;
  /// Swaps N and E and reverses the word.
  LatticePath transpose() const;

  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::string word_;
};

/// Step k is E iff the (k+1)-st node in the total order lies in I.
LatticePath nu_of_pair(const IndexPair& p);
/// I = {0} u {k : step k is E}, J = {k : step k is N} u {a + b + 1}.
IndexPair pair_of_nu(const LatticePath& nu);

/// Same endpoint and every prefix has at least as many N steps.
bool is_path_above(const LatticePath& mu, const LatticePath& nu);
/// Lexicographic order with E < N.
std::vector<LatticePath> enumerate_paths_above(const LatticePath& nu,
                                               std::size_t max_count = 5'000'000);

/// Rightmost x-coordinate of nu at each height.
std::vector<int> rightmost_x(const LatticePath& nu);
/// Horizontal distance from the point after k steps of mu to nu.
int horiz(const LatticePath& mu, std::size_t k, const LatticePath& nu);

/// Indices k such that the point after k steps is a valley (E then N).
std::vector<std::size_t> valley_points(const LatticePath& mu);
int valley_count(const LatticePath& mu);

struct PathCover {
  std::size_t valley = 0;  ///< point index of the rotated valley
  std::size_t until = 0;   ///< point index of q
  LatticePath result;
};
/// One cover per valley, left to right.
std::vector<PathCover> covers_of(const LatticePath& mu, const LatticePath& nu);

/// For each j in order emit deg(j) - 1 E steps and one N; the last N is dropped.
LatticePath rho(const Tree& t, const IndexPair& p);

/// The lattice point matched to each arc: at height k, the l-th point from
/// the left corresponds to the l-th arc at the k-th J-node, by decreasing i.
struct RhoMatch {
  LatticePath path;
  std::vector<std::pair<std::size_t, Arc>> point_arc;  ///< (point index, arc)
};
RhoMatch rho_with_points(const Tree& t, const IndexPair& p);

/// Inverse of rho: the k-th J-node gets as many arcs as mu has points at
/// height k - 1, attached as far right as non-crossing allows.
Tree rho_inv(const LatticePath& mu, const IndexPair& p);

}  // namespace tamari
