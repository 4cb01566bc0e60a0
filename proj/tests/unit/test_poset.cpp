#include <doctest.h>

#include "tamari/paths.h"
#include "tamari/poset.h"

#include "fixtures.h"
#include "oracles.h"

#include <algorithm>

using namespace tamari;

namespace {

oracle::Order closure(const FinitePoset& P) { return oracle::Order(P.size(), P.cover_pairs()); }

FinitePoset diamond() {
  return FinitePoset({"0", "a", "b", "1"}, {{1, 2}, {3}, {3}, {}});
}

}  // namespace

TEST_CASE("finite posets") {
  auto P = diamond();
  CHECK(P.size() == 4);
  CHECK(P.leq(0, 3));
  CHECK_FALSE(P.leq(1, 2));
  CHECK(P.minima() == std::vector<int>{0});
  CHECK(P.maxima() == std::vector<int>{3});
  CHECK(P.join(1, 2) == 3);
  CHECK(P.meet(1, 2) == 0);
  CHECK(P.filter(1).count() == 2);
  CHECK(P.ideal(3).count() == 4);
  CHECK(P.linear_extension() == std::vector<int>{0, 1, 2, 3});
  CHECK(P.linear_extension(true) == std::vector<int>{3, 1, 2, 0});
  CHECK(lattice_check(P).is_lattice);

  auto bowtie = FinitePoset({"a", "b", "c", "d"}, {{2, 3}, {2, 3}, {}, {}});
  auto r = lattice_check(bowtie);
  CHECK_FALSE(r.is_lattice);
  CHECK(r.missing_join == std::pair{0, 1});
  CHECK_FALSE(bowtie.join(0, 1).has_value());

  CHECK_THROWS(FinitePoset({"a", "b"}, {{1}, {0}}));

  auto dot = P.dot("D");
  CHECK(dot.find("digraph D") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 4);
}

TEST_CASE("tree posets on small pairs") {
  auto five = build_poset(full_pair(3));
  CHECK(five.trees.size() == 5);
  CHECK(lattice_check(five.order).is_lattice);

  auto ex = build_poset(fixture::example());
  CHECK(ex.trees.size() == 7);
  CHECK(ex.order.minima() == std::vector<int>{ex.index_of(t_min(fixture::example()))});
  CHECK(lattice_check(ex.order).is_lattice);

  auto one = build_poset(IndexPair::parse("I=0;J=1"));
  CHECK(one.trees.size() == 1);
  CHECK(one.order.cover_pairs().empty());

  auto b3 = build_poset(full_pair(3, Mode::B));
  CHECK(b3.trees.size() == 20);
  CHECK(lattice_check(b3.order).is_lattice);
  CHECK(closure(b3.order).is_lattice());
}

TEST_CASE("cyclic pairs that are not lattices") {
  const auto& p = fixture::cyclic_example();
  auto P = build_poset(p);
  CHECK(P.trees.size() == 3);
  auto r = lattice_check(P.order);
  CHECK_FALSE(r.is_lattice);
  CHECK(r.minima.size() == 2);
  CHECK(r.maxima.size() == 1);
  CHECK_FALSE(closure(P.order).is_lattice());

  auto q = reverse_pair(p);
  auto Q = build_poset(q);
  // The reversed pair is a three-element chain, so reversal is no duality here.
  CHECK(Q.trees.size() == 3);
  CHECK(Q.order.cover_pairs().size() == 2);
  CHECK(lattice_check(Q.order).is_lattice);
  CHECK_FALSE(verify_reverse_duality(p).ok());
}

TEST_CASE("reversal does not dualize cyclic posets") {
  auto p = IndexPair::parse("I=1,2,4;J=0,3", Mode::B, 4);
  auto P = build_poset(p);
  CHECK(P.trees.size() == 3);
  CHECK(P.order.maxima().size() == 2);
  CHECK_FALSE(lattice_check(P.order).is_lattice);
  auto q = reverse_pair(p);
  CHECK(q == IndexPair::make({1, 4}, {0, 2, 3}, Mode::B, 4));
  auto Q = build_poset(q);
  CHECK(Q.order.cover_pairs().size() == 2);
  CHECK(Q.order.minima().size() == 1);
  CHECK(Q.order.maxima().size() == 1);
  CHECK_FALSE(verify_reverse_duality(p).ok());
}

TEST_CASE("covers are flips and agree with the closure") {
  for (const auto& q : fixture::mode_a_pairs(8)) {
    auto P = build_poset(q);
    auto O = closure(P.order);
    CHECK(O.is_lattice());
    for (auto [a, b] : P.order.cover_pairs()) CHECK(O.covers(a, b));
    for (int t = 0; t < P.order.size(); ++t) {
      CHECK(static_cast<int>(P.order.up(t).size()) == valley_count(rho(P.trees[t], q)));
      for (int u = 0; u < P.order.size(); ++u) CHECK(P.order.leq(t, u) == static_cast<bool>(O.le[t][u]));
    }
  }
  for (const auto& q : fixture::mode_b_pairs(3)) {
    auto P = build_poset(q);
    auto sum = [&](int t) {
      int s = 0;
      for (const auto& x : P.trees[t]) s += x.i;
      return s;
    };
    for (auto [a, b] : P.order.cover_pairs()) CHECK(sum(a) < sum(b));
  }
}

TEST_CASE("path posets match tree posets") {
  for (const auto& w : oracle::all_words(7)) {
    auto nu = LatticePath::from_word(w);
    auto pp = build_path_poset(nu);
    auto tp = build_poset(pair_of_nu(nu));
    REQUIRE(pp.paths.size() == tp.trees.size());
    CHECK(pp.order.cover_pairs().size() == tp.order.cover_pairs().size());
    CHECK(verify_flip_path_iso(pair_of_nu(nu)).ok());
  }
}

TEST_CASE("canopy fibers") {
  auto r1 = canopy_fiber_report(1);
  CHECK(r1.ok());
  CHECK(r1.fibers.size() == 1);
  CHECK(r1.fibers[0].members.size() == 1);

  auto r2 = canopy_fiber_report(2);
  CHECK(r2.ok());
  CHECK(r2.fibers.size() == 2);

  for (int n = 1; n <= 5; ++n) {
    auto r = canopy_fiber_report(n);
    CHECK(r.ok());
    CHECK(r.canopy_monotone);
    CHECK(r.fibers.size() == static_cast<size_t>(1) << (n - 1));
    std::size_t total = 0;
    for (const auto& f : r.fibers) {
      total += f.members.size();
      CHECK(f.is_interval);
      CHECK(f.iso_to_canopy_poset);
    }
    CHECK(static_cast<std::int64_t>(total) == oracle::catalan(n));
  }
}

TEST_CASE("reverse duality") {
  CHECK(verify_reverse_duality(full_pair(3)).ok());
  CHECK(verify_reverse_duality(fixture::example()).ok());
  for (const auto& q : fixture::mode_a_pairs(7)) CHECK(verify_reverse_duality(q).ok());
}

TEST_CASE("size limit") {
  CHECK_THROWS(build_poset(full_pair(7), 50));
}
