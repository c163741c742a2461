#pragma once

// The running example: the hexagon F of the degree 6 del Pezzo surface, the
// pyramid P over it, and the two maximal Minkowski decompositions of F.

#include <vector>

#include "fanolab/lattice.hpp"
#include "fanolab/minkowski.hpp"

namespace fanolab::fixtures {

std::vector<LatticeVector> hexagon_points();
std::vector<LatticeVector> pyramid_points();
LatticePolytope hexagon();
LatticePolytope pyramid();

// conv{0,(1,0)} + conv{0,(0,1)} + conv{0,(-1,-1)}
MinkowskiDecomposition hexagon_segments();
// conv{0,(-1,0),(-1,-1)} + conv{0,(1,0),(1,1)}
MinkowskiDecomposition hexagon_triangles();

}  // namespace fanolab::fixtures
