#include "fanolab/fixtures.hpp"

namespace fanolab::fixtures {

std::vector<LatticeVector> hexagon_points() {
  return {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
}

std::vector<LatticeVector> pyramid_points() {
  return {{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -1, 1}, {0, 0, -1}};
}

LatticePolytope hexagon() { return convex_hull(hexagon_points()); }

LatticePolytope pyramid() { return convex_hull(pyramid_points()); }

MinkowskiDecomposition hexagon_segments() {
  return MinkowskiDecomposition({LatticePolygon::hull({{0, 0}, {1, 0}}),
                                 LatticePolygon::hull({{0, 0}, {0, 1}}),
                                 LatticePolygon::hull({{0, 0}, {-1, -1}})});
}

MinkowskiDecomposition hexagon_triangles() {
  return MinkowskiDecomposition({LatticePolygon::hull({{0, 0}, {-1, 0}, {-1, -1}}),
                                 LatticePolygon::hull({{0, 0}, {1, 0}, {1, 1}})});
}

}  // namespace fanolab::fixtures
