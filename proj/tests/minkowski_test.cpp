#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "fanolab/error.hpp"
#include "fanolab/fixtures.hpp"
#include "fanolab/minkowski.hpp"
#include "support.hpp"

namespace fanolab {
namespace {

LatticePolygon seg(long x, long y) { return LatticePolygon::hull({{0, 0}, {x, y}}); }

LatticePolygon hexagon_polygon() { return LatticePolygon::hull(fixtures::hexagon_points()); }

// --- Independent oracle --------------------------------------------------
// Unit edge vectors are read off the boundary walk, all set partitions are
// enumerated with restricted growth strings, and each block is accepted if it
// sums to zero and the polygon it bounds is a unit segment or a triangle whose
// longest edge has lattice length equal to twice its area.

std::vector<LatticeVector> boundary_unit_edges(const LatticePolygon& p) {
  std::vector<LatticeVector> out;
  auto cyc = p.cyclic_vertices();
  if (cyc.size() == 2) cyc = {cyc[0], cyc[1]};
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    LatticeVector d = cyc[(i + 1) % cyc.size()] - cyc[i];
    Integer g = d.content();
    LatticeVector u = d.divided_by(g);
    for (Integer k = 0; k < g; ++k) out.push_back(u);
  }
  return out;
}

double angle(const LatticeVector& v) { return std::atan2(v[1].get_d(), v[0].get_d()); }

LatticePolygon polygon_from_block(std::vector<LatticeVector> edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const LatticeVector& a, const LatticeVector& b) { return angle(a) < angle(b); });
  std::vector<LatticeVector> pts{LatticeVector{0, 0}};
  for (const auto& e : edges) pts.push_back(pts.back() + e);
  return LatticePolygon::hull(pts).normalized();
}

bool oracle_is_a_triangle(const LatticePolygon& p) {
  const auto& v = p.vertices();
  if (v.size() == 2) return (v[1] - v[0]).content() == 1;
  if (v.size() != 3) return false;
  Integer twice_area = abs(orient2d(v[0], v[1], v[2]));
  Integer longest = 0;
  for (int i = 0; i < 3; ++i) longest = std::max(longest, (v[(i + 1) % 3] - v[i]).content());
  return longest == twice_area;
}

std::set<MinkowskiDecomposition> oracle_decompositions(const LatticePolygon& p) {
  const auto edges = boundary_unit_edges(p);
  const std::size_t n = edges.size();
  std::set<MinkowskiDecomposition> out;
  std::vector<std::size_t> label(n, 0);
  while (true) {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<LatticeVector>> parts(blocks);
    for (std::size_t i = 0; i < n; ++i) parts[label[i]].push_back(edges[i]);
    bool ok = true;
    std::vector<LatticePolygon> summands;
    for (const auto& part : parts) {
      LatticeVector sum = LatticeVector::zero(2);
      for (const auto& e : part) sum = sum + e;
      if (!sum.is_zero()) {
        ok = false;
        break;
      }
      LatticePolygon q = polygon_from_block(part);
      if (!oracle_is_a_triangle(q)) {
        ok = false;
        break;
      }
      summands.push_back(q);
    }
    if (ok) out.insert(MinkowskiDecomposition(summands));
    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + i);
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

std::multiset<LatticeVector> unit_edge_multiset(const LatticePolygon& p) {
  auto e = boundary_unit_edges(p);
  return {e.begin(), e.end()};
}

// --- Tests -----------------------------------------------------------------

TEST(LatticePolygon, HullAndDegenerateShapes) {
  LatticePolygon s = LatticePolygon::hull({{0, 0}, {2, 2}, {1, 1}});
  EXPECT_TRUE(s.is_segment());
  EXPECT_EQ(s.lattice_points().size(), 3u);
  EXPECT_TRUE(LatticePolygon::hull({{3, 4}, {3, 4}}).is_point());
  LatticePolygon f = hexagon_polygon();
  EXPECT_EQ(f.vertices().size(), 6u);
  EXPECT_EQ(f.lattice_points().size(), 7u);
  EXPECT_EQ(f.cyclic_vertices().front(), (LatticeVector{-1, -1}));
  EXPECT_EQ(to_string(seg(1, 0)), "conv{(0,0),(1,0)}");
}

TEST(LatticePolygon, EdgeSequenceOfHexagon) {
  auto edges = hexagon_polygon().edge_sequence();
  ASSERT_EQ(edges.size(), 6u);
  LatticeVector sum = LatticeVector::zero(2);
  for (const auto& [d, len] : edges) {
    EXPECT_TRUE(d.is_primitive());
    EXPECT_EQ(len, 1);
    sum = sum + d;
  }
  EXPECT_TRUE(sum.is_zero());
  auto s = seg(2, 0).edge_sequence();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].second, 2);
  EXPECT_EQ(s[0].first, -s[1].first);
}

TEST(ATriangle, Examples) {
  auto unit = is_a_triangle(seg(1, 0));
  ASSERT_TRUE(unit);
  EXPECT_EQ(unit->kind, ATriangle::Kind::UnitSegment);
  EXPECT_FALSE(is_a_triangle(seg(2, 0)));
  EXPECT_FALSE(is_a_triangle(LatticePolygon::hull({{1, 1}})));

  auto a1 = is_a_triangle(LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}}));
  ASSERT_TRUE(a1);
  EXPECT_EQ(a1->kind, ATriangle::Kind::Triangle);
  EXPECT_EQ(a1->length, 1);

  auto a3 = is_a_triangle(LatticePolygon::hull({{0, 0}, {3, 0}, {0, 1}}));
  ASSERT_TRUE(a3);
  EXPECT_EQ(a3->length, 3);

  EXPECT_FALSE(is_a_triangle(LatticePolygon::hull({{0, 0}, {2, 0}, {0, 2}})));
  EXPECT_FALSE(is_a_triangle(LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  // Twice-area 3 with all edges primitive.
  EXPECT_FALSE(is_a_triangle(LatticePolygon::hull({{1, 0}, {0, 1}, {-1, -1}})));
}

TEST(ATriangle, NormalFormMapHitsTheStandardShape) {
  std::mt19937_64 rng(5);
  for (long l = 1; l <= 5; ++l) {
    LatticePolygon standard = LatticePolygon::hull({{0, 0}, {0, 1}, {l, 0}});
    for (int i = 0; i < 100; ++i) {
      AffineUnimodularMap m(testing::random_unimodular(rng, 2), testing::random_vector(rng, 2, -3, 3));
      std::vector<LatticeVector> image;
      for (const auto& v : standard.vertices()) image.push_back(m(v));
      LatticePolygon q = LatticePolygon::hull(image);
      auto t = is_a_triangle(q);
      ASSERT_TRUE(t) << to_string(q);
      EXPECT_EQ(t->length, l);
      std::vector<LatticeVector> back;
      for (const auto& v : q.vertices()) back.push_back(t->to_standard(v));
      EXPECT_EQ(LatticePolygon::hull(back), standard);
    }
  }
  for (int i = 0; i < 50; ++i) {
    LatticeVector d = testing::random_vector(rng, 2, -6, 6);
    if (d.is_zero()) continue;
    LatticePolygon s = LatticePolygon::hull({{1, 1}, LatticeVector{1, 1} + d});
    auto t = is_a_triangle(s);
    EXPECT_EQ(t.has_value(), d.is_primitive());
    if (t) {
      std::vector<LatticeVector> back;
      for (const auto& v : s.vertices()) back.push_back(t->to_standard(v));
      EXPECT_EQ(LatticePolygon::hull(back), seg(1, 0));
    }
  }
}

TEST(MinkowskiSum, Examples) {
  EXPECT_EQ(minkowski_sum({seg(1, 0), seg(0, 1)}), LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  LatticePolygon three = minkowski_sum({seg(1, 0), seg(0, 1), seg(-1, -1)});
  EXPECT_EQ(three.normalized(), hexagon_polygon().normalized());
  EXPECT_EQ(minkowski_sum({seg(1, 0), seg(1, 0)}), seg(2, 0));
  std::vector<LatticePolygon> none;
  EXPECT_THROW(minkowski_sum(none), Error);
}

TEST(MinkowskiDecomposition, RejectsPointSummands) {
  try {
    MinkowskiDecomposition({seg(1, 0), LatticePolygon::hull({{0, 0}})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidDecomposition);
  }
}

TEST(MinkowskiDecomposition, CanonicalUnderTranslationAndOrder) {
  MinkowskiDecomposition a({seg(1, 0), LatticePolygon::hull({{5, 5}, {5, 6}})});
  MinkowskiDecomposition b({seg(0, 1), seg(1, 0).translated({-2, 7})});
  EXPECT_EQ(a, b);
}

TEST(Decompositions, HexagonHasExactlyTheTwoKnownDecompositions) {
  auto decs = enumerate_a_triangle_decompositions(hexagon_polygon());
  ASSERT_EQ(decs.size(), 2u);
  std::set<MinkowskiDecomposition> got(decs.begin(), decs.end());
  EXPECT_EQ(got, oracle_decompositions(hexagon_polygon()));
  EXPECT_TRUE(got.count(fixtures::hexagon_segments()));
  EXPECT_TRUE(got.count(fixtures::hexagon_triangles()));
  for (const auto& d : decs) {
    EXPECT_TRUE(is_maximal(d));
    EXPECT_TRUE(sums_to(d, hexagon_polygon()));
  }
  EXPECT_EQ(fixtures::hexagon_segments().size(), 3u);
  EXPECT_EQ(fixtures::hexagon_triangles().size(), 2u);
}

TEST(Decompositions, SmallExamples) {
  LatticePolygon square = LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto sq = enumerate_a_triangle_decompositions(square);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0], MinkowskiDecomposition({seg(1, 0), seg(0, 1)}));

  LatticePolygon a1 = LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}});
  auto t = enumerate_a_triangle_decompositions(a1);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0], MinkowskiDecomposition({a1}));

  LatticePolygon a2 = LatticePolygon::hull({{0, 0}, {2, 0}, {0, 1}});
  EXPECT_EQ(enumerate_a_triangle_decompositions(a2).size(), 1u);

  auto twice = enumerate_a_triangle_decompositions(LatticePolygon::hull({{0, 0}, {2, 0}, {0, 2}}));
  ASSERT_EQ(twice.size(), 1u);
  EXPECT_EQ(twice[0], MinkowskiDecomposition({a1, a1}));
  EXPECT_TRUE(enumerate_a_triangle_decompositions(LatticePolygon::hull({{1, 0}, {0, 1}, {-1, -1}})).empty());
  EXPECT_EQ(enumerate_a_triangle_decompositions(seg(1, 0)).size(), 1u);
  auto doubled = enumerate_a_triangle_decompositions(seg(2, 0));
  ASSERT_EQ(doubled.size(), 1u);
  EXPECT_EQ(doubled[0], MinkowskiDecomposition({seg(1, 0), seg(1, 0)}));
}

TEST(Decompositions, TooLarge) {
  try {
    enumerate_a_triangle_decompositions(LatticePolygon::hull({{0, 0}, {40, 0}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Decompositions, RandomPolygonsAgreeWithOracle) {
  std::mt19937_64 rng(31337);
  int checked = 0;
  while (checked < 150) {
    std::vector<LatticeVector> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(testing::random_vector(rng, 2, -2, 2));
    LatticePolygon p = LatticePolygon::hull(pts);
    if (p.is_point() || boundary_unit_edges(p).size() > 9) continue;
    ++checked;
    auto decs = enumerate_a_triangle_decompositions(p);
    EXPECT_TRUE(std::is_sorted(decs.begin(), decs.end()));
    std::set<MinkowskiDecomposition> got(decs.begin(), decs.end());
    ASSERT_EQ(got.size(), decs.size());
    ASSERT_EQ(got, oracle_decompositions(p)) << to_string(p);
    for (const auto& d : decs) {
      EXPECT_TRUE(sums_to(d, p));
      std::multiset<LatticeVector> edges;
      for (const auto& s : d.summands()) {
        auto e = unit_edge_multiset(s);
        edges.insert(e.begin(), e.end());
      }
      EXPECT_EQ(edges, unit_edge_multiset(p));
    }
  }
}

TEST(Decompositions, CountIsInvariantUnderUnimodularMaps) {
  std::mt19937_64 rng(4242);
  const std::vector<LatticePolygon> shapes{hexagon_polygon(),
                                           LatticePolygon::hull({{0, 0}, {2, 0}, {1, 1}, {0, 1}}),
                                           LatticePolygon::hull({{0, 0}, {2, 0}, {2, 1}, {0, 2}}),
                                           LatticePolygon::hull({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})};
  for (const auto& shape : shapes) {
    const auto count = enumerate_a_triangle_decompositions(shape).size();
    for (int i = 0; i < 25; ++i) {
      AffineUnimodularMap m(testing::random_unimodular(rng, 2), testing::random_vector(rng, 2, -3, 3));
      std::vector<LatticeVector> image;
      for (const auto& v : shape.vertices()) image.push_back(m(v));
      std::reverse(image.begin(), image.end());
      ASSERT_EQ(enumerate_a_triangle_decompositions(LatticePolygon::hull(image)).size(), count);
    }
  }
}

TEST(Indecomposable, Examples) {
  EXPECT_TRUE(is_indecomposable(seg(1, 0)));
  EXPECT_FALSE(is_indecomposable(seg(2, 0)));
  EXPECT_TRUE(is_indecomposable(LatticePolygon::hull({{0, 0}, {3, 0}, {0, 1}})));
  EXPECT_FALSE(is_indecomposable(LatticePolygon::hull({{0, 0}, {2, 0}, {0, 2}})));
  EXPECT_TRUE(is_indecomposable(LatticePolygon::hull({{1, 0}, {0, 1}, {-1, -1}})));
  EXPECT_FALSE(is_indecomposable(hexagon_polygon()));
  EXPECT_FALSE(is_maximal(MinkowskiDecomposition({hexagon_polygon()})));
  EXPECT_FALSE(is_maximal(MinkowskiDecomposition({LatticePolygon::hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})})));
}

}  // namespace
}  // namespace fanolab
