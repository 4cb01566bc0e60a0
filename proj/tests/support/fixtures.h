#pragma once

// Families of pairs shared by the unit tests.

#include "tamari/index_pair.h"
#include "tamari/paths.h"

#include "oracles.h"

#include <vector>

namespace fixture {

using tamari::IndexPair;

inline const IndexPair& example() {
  static const IndexPair p = IndexPair::parse("I=0,1,3,4,6,7;J=2,5,8");
  return p;
}

inline const IndexPair& cyclic_example() {
  static const IndexPair p = IndexPair::parse("I=0,3,4;J=1,2", tamari::Mode::B, 4);
  return p;
}

/// Every mode A pair with |I| + |J| <= max_size, up to translation.
inline std::vector<IndexPair> mode_a_pairs(int max_size) {
  std::vector<IndexPair> out;
  for (const auto& w : oracle::all_words(max_size - 2))
    out.push_back(tamari::pair_of_nu(tamari::LatticePath::from_word(w)));
  return out;
}

/// Every mode B pair of subsets of [n].
inline std::vector<IndexPair> mode_b_pairs(int n, int max_size = 1 << 20) {
  std::vector<IndexPair> out;
  for (const auto& I : oracle::subsets(n))
    for (const auto& J : oracle::subsets(n))
      if (static_cast<int>(I.size() + J.size()) <= max_size)
        out.push_back(IndexPair::make(I, J, tamari::Mode::B, n));
  return out;
}

}  // namespace fixture
