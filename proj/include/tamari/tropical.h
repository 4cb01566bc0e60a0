#pragma once

#include "tamari/complex.h"
#include "tamari/exact.h"
#include "tamari/heights.h"
#include "tamari/poset.h"
#include "tamari/trees.h"

#include <optional>
#include <string>
#include <vector>

namespace tamari {

using Point = std::vector<Rational>;

/// The row (h(i, j))_j.
std::vector<ExtRat> apex(int i, const HeightFunction& h);
/// The same row shifted so that the entry at max J is 0.
std::vector<ExtRat> apex_normalized(int i, const HeightFunction& h);

/// g(T)_k is the signed path cost from k to max J in T: stepping J -> I adds
/// h, stepping I -> J subtracts h. One coordinate per J-node except max J.
Point vertex_coords(const Tree& t, const HeightFunction& h);

/// x_k - x_j <= h(i,k) - h(i,j) for every (i,j) in t and every k, with
/// equality exactly when (i,k) is in t.
bool satisfies_cell_inequalities(const Point& x, const Tree& t, const HeightFunction& h);

struct Cell {
  Forest forest;
  std::vector<int> vertices;  ///< tree indices
  int dim = 0;                ///< components of the forest minus one
};

/// Bounded cells of the tropical complex: one per interior face.
struct GeometricComplex {
  IndexPair pair;
  HeightFunction height;
  std::vector<Tree> trees;
  std::vector<Point> coords;  ///< coords[t] = vertex_coords(trees[t])
  std::vector<Cell> cells;
  int ambient_dim() const { return static_cast<int>(pair.J().size()) - 1; }
  std::vector<std::int64_t> f_vector() const;
};

/// Throws ValidationError if h is not a valid height.
GeometricComplex build_geometric_complex(const IndexPair& p, const HeightFunction& h);
Cell cell_of_forest(const Forest& f, const GeometricComplex& gc);

/// Dimension of the affine hull.
int affine_dimension(const std::vector<Point>& pts);

/// Vertices of {x : x_k - x_j <= h(i,k) - h(i,j), (i,j) in f}, found by solving
/// every square subsystem of tight inequalities. Sorted, without repeats.
std::vector<Point> h_description_vertices(const Forest& f, const HeightFunction& h);

struct CoverStep {
  int lower = 0, upper = 0;
};
/// Along every cover every coordinate weakly decreases and one strictly decreases.
bool orientation_check(const GeometricComplex& gc, const FinitePoset& P);
/// Two covers and a coordinate that increases along one and decreases along the other.
struct OrientationConflict {
  CoverStep up, down;
  int coordinate = 0;
};
std::optional<OrientationConflict> find_orientation_conflict(const GeometricComplex& gc,
                                                             const FinitePoset& P);
/// Whether some linear functional increases strictly along every cover.
/// Requires a planar complex (|J| = 3).
bool exists_orienting_functional_2d(const GeometricComplex& gc, const FinitePoset& P);

struct SupportVerdict {
  bool convex = false;
  int dim = 0;
};
/// Combinatorial convexity criterion for the support of the complex.
SupportVerdict support_convex_predicate(const IndexPair& p);
/// Planar oracle (|J| = 3): the 2-cells tile the convex hull of all vertices,
/// or, without 2-cells, the edges cover a segment.
SupportVerdict convexity_oracle_2d(const GeometricComplex& gc);

/// Neighbour set of each i in order: the Minkowski cell of the Cayley trick.
std::vector<std::vector<int>> cayley_cell(const Tree& t, const IndexPair& p);
/// Sum over i of (|N(i)| - 1) equals |J| - 1.
bool is_fine_mixed_cell(const std::vector<std::vector<int>>& cell, const IndexPair& p);

/// f-vector of a d-dimensional associahedron, f[k] = number of k-faces,
/// from dissections of a (d+3)-gon.
std::vector<std::int64_t> associahedron_f_vector(int d);
/// f-vector of a d-dimensional cyclohedron: C(d,k) C(2d-k, d).
std::vector<std::int64_t> cyclohedron_f_vector(int d);

struct ProductFactor {
  bool cyclic = false;
  int dim = 0;
  IndexPair pair;
  std::vector<std::int64_t> f;
};
struct CellProduct {
  Forest forest;
  std::vector<ProductFactor> factors;  ///< only factors of positive dimension
  bool face_poset_factors = false;     ///< faces of the cell biject with tuples of factor faces
  bool factors_match_reference = false;
};
std::vector<CellProduct> cell_products_report(const GeometricComplex& gc);

}  // namespace tamari
