#pragma once

// Exact lattice geometry in dimension 2 and 3: convex hulls with facet
// descriptions, lattice-point enumeration, Fano/reflexive predicates, polar
// duals and unimodular charts of facets of 3-dimensional polytopes.

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "fanolab/ring.hpp"

namespace fanolab {

// Integer vector of length 2 or 3.
class LatticeVector {
 public:
  LatticeVector(std::initializer_list<long> coords);
  explicit LatticeVector(std::span<const Integer> coords);
  static LatticeVector zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const { return {coords_.data(), dim_}; }

  bool is_zero() const;
  // gcd of the coordinates (0 for the zero vector).
  Integer content() const;
  bool is_primitive() const { return content() == 1; }
  // Divides out the content; the zero vector is returned unchanged.
  LatticeVector primitive() const;

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  LatticeVector operator*(const Integer& factor) const;
  // Exact division of every coordinate.
  LatticeVector divided_by(const Integer& divisor) const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  // Lexicographic; vectors of different dimension order by dimension first.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

 private:
  LatticeVector() = default;

  std::array<Integer, 3> coords_{};
  std::size_t dim_ = 0;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
LatticeVector cross(const LatticeVector& a, const LatticeVector& b);
// det[b-a, c-a] for 2D points.
Integer orient2d(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c);
// det[b-a, c-a, d-a] for 3D points.
Integer orient3d(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c,
                 const LatticeVector& d);

std::string to_string(const LatticeVector& v);

// Half-space <normal, x> >= offset with a primitive inward normal.  The
// vertex indices refer to LatticePolytope::vertices(); for 3-dimensional
// polytopes they are listed in cyclic order around the facet.
struct Facet {
  LatticeVector normal;
  Integer offset;
  std::vector<std::size_t> vertices;
};

class LatticePolytope {
 public:
  std::size_t dim() const { return dim_; }
  // Lexicographically sorted.
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  // Sorted lexicographically by normal.
  const std::vector<Facet>& facets() const { return facets_; }
  // Pairs of vertex indices (i < j), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  // 2D only: vertex indices in counter-clockwise order starting at vertices()[0].
  std::vector<std::size_t> cyclic_order() const;

  bool contains(const LatticeVector& point) const;
  bool strictly_contains(const LatticeVector& point) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  friend LatticePolytope convex_hull(std::span<const LatticeVector> points);
  LatticePolytope() = default;

  std::size_t dim_ = 0;
  std::vector<LatticeVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Throws EmptyInput, DimensionMismatch (mixed lengths) or NotFullDimensional.
LatticePolytope convex_hull(std::span<const LatticeVector> points);
LatticePolytope convex_hull(std::initializer_list<LatticeVector> points);

// All integer points of the polytope in lexicographic order.
std::vector<LatticeVector> lattice_points(const LatticePolytope& polytope);

bool is_fano(const LatticePolytope& polytope);

struct RationalPoint {
  std::vector<Rational> coords;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

std::string to_string(const RationalPoint& p);

struct RationalPolytope {
  // Lexicographically sorted.
  std::vector<RationalPoint> vertices;

  bool is_integral() const;
  // Throws NotReflexive when some vertex is not integral.
  LatticePolytope to_lattice_polytope() const;
};

// The polar polytope {y : <y, x> >= -1 for all x in P}.  Throws NotFano.
RationalPolytope dual_polytope(const LatticePolytope& polytope);
// Throws NotFano.
bool is_reflexive(const LatticePolytope& polytope);

// gcd of the coordinates of b - a.  Throws DegenerateEdge when a == b.
Integer lattice_length(const LatticeVector& a, const LatticeVector& b);

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Integer determinant() const;  // square, n <= 3
  LatticeVector operator*(const LatticeVector& v) const;
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

// x -> matrix * x + translation with matrix in GL_n(Z).
class AffineUnimodularMap {
 public:
  // Throws NotUnimodular unless det(matrix) = +-1.
  AffineUnimodularMap(IntegerMatrix matrix, LatticeVector translation);
  static AffineUnimodularMap linear(IntegerMatrix matrix);

  const IntegerMatrix& matrix() const { return matrix_; }
  const LatticeVector& translation() const { return translation_; }
  std::size_t dim() const { return matrix_.rows(); }

  LatticeVector operator()(const LatticeVector& x) const;
  LatticeVector apply_linear(const LatticeVector& x) const { return matrix_ * x; }
  AffineUnimodularMap inverse() const;
  // (this o other)(x) = this(other(x)).
  AffineUnimodularMap compose(const AffineUnimodularMap& other) const;
  LatticePolytope apply(const LatticePolytope& polytope) const;

 private:
  IntegerMatrix matrix_;
  LatticeVector translation_;
};

// Inverse of a unimodular integer matrix (n <= 3).
IntegerMatrix unimodular_inverse(const IntegerMatrix& matrix);

// Affine lattice isomorphism between the affine lattice of one facet of a
// 3-dimensional polytope and Z^2.  A point p of the facet plane is written
// p = origin + u * e1 + v * e2 where (e1, e2) is a basis of the facet's
// direction lattice; the chart coordinates of p are (u, v).
class FacetChart {
 public:
  std::size_t facet_index() const { return facet_index_; }
  const LatticeVector& origin() const { return origin_; }
  const LatticeVector& first_basis_vector() const { return e1_; }
  const LatticeVector& second_basis_vector() const { return e2_; }

  // Throws DimensionMismatch if the point is off the facet plane.
  LatticeVector to_chart(const LatticeVector& point) const;
  LatticeVector from_chart(const LatticeVector& chart_point) const;
  // Same as above for direction vectors parallel to the facet.
  LatticeVector direction_to_chart(const LatticeVector& direction) const;
  LatticeVector direction_from_chart(const LatticeVector& chart_direction) const;

  // The facet as a 2D lattice polygon in chart coordinates.
  const LatticePolytope& image() const { return image_; }

 private:
  friend FacetChart facet_chart(const LatticePolytope& polytope, std::size_t facet_index);
  FacetChart(std::size_t index, LatticeVector origin, LatticeVector e1, LatticeVector e2,
             IntegerMatrix inverse_basis, LatticePolytope image)
      : facet_index_(index),
        origin_(std::move(origin)),
        e1_(std::move(e1)),
        e2_(std::move(e2)),
        inverse_basis_(std::move(inverse_basis)),
        image_(std::move(image)) {}

  std::size_t facet_index_;
  LatticeVector origin_;
  LatticeVector e1_;
  LatticeVector e2_;
  IntegerMatrix inverse_basis_;
  LatticePolytope image_;
};

// Throws DimensionMismatch unless the polytope is 3-dimensional and BadIndex
// for an out-of-range facet.
FacetChart facet_chart(const LatticePolytope& polytope, std::size_t facet_index);

}  // namespace fanolab
