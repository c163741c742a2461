#pragma once

// Minkowski sums of lattice polygons, A-triangle recognition and exhaustive
// enumeration of Minkowski decompositions into A-triangles.
//
// Polygons here may degenerate to segments (and, transiently, points) since
// unit segments are legitimate summands.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fanolab/lattice.hpp"

namespace fanolab {

class LatticePolygon {
 public:
  // Convex hull of arbitrary 2D points; collinear input yields a segment.
  // Throws EmptyInput or DimensionMismatch.
  static LatticePolygon hull(std::span<const LatticeVector> points);
  static LatticePolygon hull(std::initializer_list<LatticeVector> points);
  static LatticePolygon from_polytope(const LatticePolytope& polytope);

  // Lexicographically sorted.
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  // Counter-clockwise starting at the lexicographic minimum.
  std::vector<LatticeVector> cyclic_vertices() const;
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  LatticePolygon translated(const LatticeVector& shift) const;
  // Translate so that the lexicographically smallest vertex (equivalently the
  // smallest lattice point) sits at the origin.
  LatticePolygon normalized() const;
  std::vector<LatticeVector> lattice_points() const;
  // Primitive edge directions with their lattice lengths, counter-clockwise.
  // A segment contributes both orientations; a point has no edges.
  std::vector<std::pair<LatticeVector, Integer>> edge_sequence() const;
  // Throws NotFullDimensional for segments and points.
  LatticePolytope to_polytope() const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
  friend std::strong_ordering operator<=>(const LatticePolygon& a, const LatticePolygon& b);

 private:
  explicit LatticePolygon(std::vector<LatticeVector> sorted_vertices) : vertices_(std::move(sorted_vertices)) {}

  std::vector<LatticeVector> vertices_;
};

std::string to_string(const LatticePolygon& polygon);

struct ATriangle {
  enum class Kind { UnitSegment, Triangle };
  Kind kind;
  // The l of conv{(0,0),(0,1),(l,0)}; 1 for unit segments.
  Integer length;
  // Carries the polygon onto conv{(0,0),(1,0)} or conv{(0,0),(0,1),(l,0)}.
  AffineUnimodularMap to_standard;
};

// Returns std::nullopt unless the polygon is a unit segment or is affinely
// unimodularly equivalent to conv{(0,0),(0,1),(l,0)} for some l >= 1.
std::optional<ATriangle> is_a_triangle(const LatticePolygon& polygon);

// Summands translation-normalized and sorted by (vertex count, vertices).
class MinkowskiDecomposition {
 public:
  explicit MinkowskiDecomposition(std::vector<LatticePolygon> summands);

  const std::vector<LatticePolygon>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }

  friend bool operator==(const MinkowskiDecomposition&, const MinkowskiDecomposition&) = default;
  friend auto operator<=>(const MinkowskiDecomposition& a, const MinkowskiDecomposition& b) {
    return a.summands_ <=> b.summands_;
  }

 private:
  std::vector<LatticePolygon> summands_;
};

std::string to_string(const MinkowskiDecomposition& decomposition);

// Throws EmptyInput.
LatticePolygon minkowski_sum(std::span<const LatticePolygon> parts);
LatticePolygon minkowski_sum(std::initializer_list<LatticePolygon> parts);

// True iff the summands add up to the polygon up to a single translation.
bool sums_to(const MinkowskiDecomposition& decomposition, const LatticePolygon& polygon);

inline constexpr std::size_t kMaxDecompositionEdges = 12;
inline constexpr long kMaxDecompositionUnitEdges = 36;

// All decompositions into A-triangles up to translation and reordering,
// sorted.  Throws TooLarge beyond kMaxDecompositionEdges edges (or
// kMaxDecompositionUnitEdges unit edge vectors).
std::vector<MinkowskiDecomposition> enumerate_a_triangle_decompositions(const LatticePolygon& polygon);

// True iff the polygon is not a Minkowski sum of two lattice polygons that are
// not points.
bool is_indecomposable(const LatticePolygon& polygon);

// True iff every summand is Minkowski-indecomposable over the lattice.
bool is_maximal(const MinkowskiDecomposition& decomposition);

}  // namespace fanolab
