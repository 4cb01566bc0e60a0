#include <doctest.h>

#include "tamari/heights.h"
#include "tamari/paths.h"
#include "tamari/poset.h"
#include "tamari/tropical.h"

#include "fixtures.h"
#include "oracles.h"

#include <algorithm>
#include <map>

using namespace tamari;

namespace {

std::vector<std::int64_t> dissections(int d) {
  // faces of the d-dimensional associahedron counted by dissections of an m-gon
  const int m = d + 3;
  std::vector<std::int64_t> f;
  for (int k = 0; k <= d; ++k) {
    int j = d - k;
    f.push_back(oracle::choose(m - 3, j) * oracle::choose(m + j - 1, j) / (j + 1));
  }
  return f;
}

GeometricComplex complex_of(const IndexPair& p) { return build_geometric_complex(p, default_height(p)); }

Point pt(std::initializer_list<int> xs) {
  Point p;
  for (int x : xs) p.push_back(Rational(x));
  return p;
}

}  // namespace

TEST_CASE("apexes") {
  auto h = default_height(fixture::example());
  CHECK(apex_normalized(0, h) == std::vector<ExtRat>{60, 39, 0});
  CHECK(apex_normalized(4, h) == std::vector<ExtRat>{ExtRat::infinity(), 15, 0});
  CHECK(apex(0, h) == std::vector<ExtRat>{-4, -25, -64});
}

TEST_CASE("vertex coordinates of the worked example") {
  auto gc = complex_of(fixture::example());
  std::set<Point> got(gc.coords.begin(), gc.coords.end());
  std::set<Point> want{pt({60, 39}), pt({60, 21}), pt({60, 15}), pt({54, 39}),
                       pt({48, 33}), pt({48, 21}), pt({48, 15})};
  CHECK(got == want);
  Tree t({{0, 8}, {1, 2}, {1, 5}, {1, 8}, {3, 5}, {4, 5}, {6, 8}, {7, 8}});
  CHECK(vertex_coords(t, gc.height) == pt({48, 33}));
  CHECK(vertex_coords(Tree({{0, 1}}), default_height(IndexPair::parse("I=0;J=1"))).empty());
  CHECK(gc.f_vector() == std::vector<std::int64_t>{7, 8, 2});
}

TEST_CASE("cell inequalities") {
  for (const auto& q : fixture::mode_a_pairs(8)) {
    auto h = default_height(q);
    for (const auto& t : enumerate_trees(q)) {
      auto x = vertex_coords(t, h);
      CHECK(satisfies_cell_inequalities(x, t, h));
      if (!x.empty()) {
        x[0] += 1;
        CHECK_FALSE(satisfies_cell_inequalities(x, t, h));
      }
    }
  }
  for (const auto& q : fixture::mode_b_pairs(3, 6)) {
    auto h = default_height(q);
    for (const auto& t : enumerate_trees(q)) CHECK(satisfies_cell_inequalities(vertex_coords(t, h), t, h));
  }
}

TEST_CASE("cells") {
  auto check_cells = [](const IndexPair& q) {
    auto gc = complex_of(q);
    for (const auto& c : gc.cells) {
      std::vector<Point> vs;
      for (int v : c.vertices) vs.push_back(gc.coords[v]);
      CHECK(affine_dimension(vs) == c.dim);
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      CHECK(h_description_vertices(c.forest, gc.height) == vs);
      auto again = cell_of_forest(c.forest, gc);
      CHECK(again.vertices == c.vertices);
      for (int v : c.vertices) CHECK(c.forest.subset_of(gc.trees[v]));
    }
  };
  check_cells(fixture::example());
  for (const auto& q : fixture::mode_a_pairs(6)) check_cells(q);
  check_cells(fixture::cyclic_example());
  check_cells(full_pair(2, Mode::B));
}

TEST_CASE("edges are the Hasse diagram") {
  auto check = [](const IndexPair& q) {
    auto gc = complex_of(q);
    auto P = build_poset(q);
    std::set<std::pair<int, int>> edges, hasse;
    for (const auto& c : gc.cells)
      if (c.dim == 1) edges.insert(std::minmax(c.vertices[0], c.vertices[1]));
    REQUIRE(gc.trees == P.trees);
    for (auto [a, b] : P.order.cover_pairs()) hasse.insert(std::minmax(a, b));
    CHECK(edges == hasse);
  };
  check(fixture::example());
  for (const auto& q : fixture::mode_a_pairs(8)) check(q);
  for (int n = 1; n <= 3; ++n) check(full_pair(n, Mode::B));
}

TEST_CASE("associahedra and cyclohedra") {
  for (int n = 1; n <= 5; ++n) {
    auto f = complex_of(full_pair(n)).f_vector();
    CHECK(f == associahedron_f_vector(n - 1));
    CHECK(f == dissections(n - 1));
  }
  CHECK(cyclohedron_f_vector(2) == std::vector<std::int64_t>{6, 6, 1});
  CHECK(cyclohedron_f_vector(3) == std::vector<std::int64_t>{20, 30, 12, 1});
  for (int n = 1; n <= 4; ++n) {
    auto f = complex_of(full_pair(n, Mode::B)).f_vector();
    CHECK(f == cyclohedron_f_vector(n));
    CHECK(f.front() == oracle::choose(2 * n, n));
  }
}

TEST_CASE("invalid heights are refused") {
  const auto& p = fixture::example();
  auto flat = make_height(p, [](int i, int j) { return i < j ? ExtRat(0) : ExtRat::infinity(); });
  CHECK_THROWS_AS(build_geometric_complex(p, flat), ValidationError);
}

TEST_CASE("orientation") {
  auto gc = complex_of(fixture::example());
  auto P = build_poset(fixture::example());
  CHECK(orientation_check(gc, P.order));
  CHECK_FALSE(find_orientation_conflict(gc, P.order));
  CHECK(exists_orienting_functional_2d(gc, P.order));
  for (const auto& q : fixture::mode_a_pairs(8)) CHECK(orientation_check(complex_of(q), build_poset(q).order));

  const auto& c = fixture::cyclic_example();
  auto gb = complex_of(c);
  auto Q = build_poset(c);
  CHECK_FALSE(orientation_check(gb, Q.order));
  auto conflict = find_orientation_conflict(gb, Q.order);
  REQUIRE(conflict);
  auto delta = [&](const CoverStep& s) {
    return gb.coords[s.upper][conflict->coordinate] - gb.coords[s.lower][conflict->coordinate];
  };
  CHECK(delta(conflict->up) > 0);
  CHECK(delta(conflict->down) < 0);

  auto wrapped = fixture::example().with_mode(Mode::B, 8);
  auto gw = complex_of(wrapped);
  auto W = build_poset(wrapped);
  CHECK(find_orientation_conflict(gw, W.order));
  CHECK_FALSE(exists_orienting_functional_2d(gw, W.order));
}

TEST_CASE("support convexity") {
  CHECK_FALSE(support_convex_predicate(IndexPair::make({0, 1, 2, 3}, {4, 5, 6})).convex);
  CHECK_FALSE(support_convex_predicate(IndexPair::make({0, 1}, {2, 3, 4})).convex);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto w = "(NE^" + std::to_string(m) + ")^" + std::to_string(n);
      CHECK(support_convex_predicate(pair_of_nu(LatticePath::parse(w))).convex);
    }
  auto v = support_convex_predicate(fixture::example());
  CHECK(v.convex);
  CHECK(v.dim == 2);

  for (const auto& q : fixture::mode_a_pairs(8)) {
    if (q.J().size() != 3) continue;
    auto a = support_convex_predicate(q);
    auto b = convexity_oracle_2d(complex_of(q));
    CHECK(a.convex == b.convex);
    if (a.convex) CHECK(a.dim == b.dim);
  }
}

TEST_CASE("Cayley cells") {
  const auto& p = fixture::example();
  auto c = cayley_cell(t_min(p), p);
  CHECK(c == std::vector<std::vector<int>>{{2, 5, 8}, {2}, {5}, {5}, {8}, {8}});
  CHECK(is_fine_mixed_cell(c, p));
  for (const auto& q : fixture::mode_a_pairs(8)) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& t : enumerate_trees(q)) {
      auto cell = cayley_cell(t, q);
      CHECK(is_fine_mixed_cell(cell, q));
      CHECK(seen.insert(cell).second);
    }
  }
}

TEST_CASE("cells are products") {
  auto gc = complex_of(fixture::example());
  auto report = cell_products_report(gc);
  CHECK(report.size() == gc.cells.size());
  std::map<std::vector<int>, int> shapes;
  for (const auto& c : report) {
    CHECK(c.face_poset_factors);
    CHECK(c.factors_match_reference);
    std::vector<int> dims;
    for (const auto& f : c.factors) dims.push_back(f.dim);
    std::sort(dims.begin(), dims.end());
    ++shapes[dims];
  }
  CHECK(shapes[{}] == 7);
  CHECK(shapes[{1}] == 8);
  CHECK(shapes[{1, 1}] == 1);
  CHECK(shapes[{2}] == 1);

  for (const auto& c : cell_products_report(complex_of(fixture::cyclic_example()))) {
    CHECK(c.face_poset_factors);
    CHECK(c.factors_match_reference);
  }
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension({}) == -1);
  CHECK(affine_dimension({pt({1, 2})}) == 0);
  CHECK(affine_dimension({pt({0, 0}), pt({1, 1}), pt({2, 2})}) == 1);
  CHECK(affine_dimension({pt({0, 0}), pt({1, 0}), pt({0, 1})}) == 2);
}
