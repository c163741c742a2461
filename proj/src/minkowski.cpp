#include "fanolab/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fanolab/error.hpp"

namespace fanolab {

namespace {

// Unimodular A with A * d = (1, 0) for a primitive 2D vector d.
IntegerMatrix send_to_first_axis(const LatticeVector& d) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d[0].get_mpz_t(), d[1].get_mpz_t());
  IntegerMatrix a(2, 2);
  a(0, 0) = s;
  a(0, 1) = t;
  a(1, 0) = -d[1];
  a(1, 1) = d[0];
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePolygon

LatticePolygon LatticePolygon::hull(std::span<const LatticeVector> points) {
  if (points.empty()) throw Error(ErrorKind::EmptyInput, "polygon of no points");
  for (const auto& p : points) {
    if (p.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "polygons live in the plane");
  }
  std::vector<LatticeVector> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  bool collinear = std::all_of(pts.begin(), pts.end(),
                               [&](const LatticeVector& p) { return sgn(orient2d(pts.front(), pts.back(), p)) == 0; });
  if (pts.size() <= 2 || collinear) {
    if (pts.size() == 1) return LatticePolygon({pts.front()});
    return LatticePolygon({pts.front(), pts.back()});
  }
  return LatticePolygon(convex_hull(pts).vertices());
}

LatticePolygon LatticePolygon::hull(std::initializer_list<LatticeVector> points) {
  return hull(std::span<const LatticeVector>(points.begin(), points.size()));
}

LatticePolygon LatticePolygon::from_polytope(const LatticePolytope& polytope) {
  if (polytope.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a polygon");
  return LatticePolygon(polytope.vertices());
}

std::vector<LatticeVector> LatticePolygon::cyclic_vertices() const {
  if (vertices_.size() <= 2) return vertices_;
  std::vector<LatticeVector> cyc = vertices_;
  const LatticeVector base = cyc.front();
  std::sort(cyc.begin() + 1, cyc.end(),
            [&](const LatticeVector& a, const LatticeVector& b) { return sgn(orient2d(base, a, b)) > 0; });
  return cyc;
}

LatticePolygon LatticePolygon::translated(const LatticeVector& shift) const {
  std::vector<LatticeVector> moved;
  moved.reserve(vertices_.size());
  for (const auto& v : vertices_) moved.push_back(v + shift);
  return LatticePolygon(std::move(moved));
}

LatticePolygon LatticePolygon::normalized() const { return translated(-vertices_.front()); }

std::vector<LatticeVector> LatticePolygon::lattice_points() const {
  if (vertices_.size() >= 3) return fanolab::lattice_points(to_polytope());
  std::vector<LatticeVector> points;
  if (vertices_.size() == 1) return vertices_;
  const LatticeVector diff = vertices_[1] - vertices_[0];
  const Integer len = diff.content();
  const LatticeVector step = diff.divided_by(len);
  for (Integer i = 0; i <= len; ++i) points.push_back(vertices_[0] + step * i);
  return points;
}

std::vector<std::pair<LatticeVector, Integer>> LatticePolygon::edge_sequence() const {
  std::vector<std::pair<LatticeVector, Integer>> edges;
  if (vertices_.size() == 1) return edges;
  auto cyc = cyclic_vertices();
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    LatticeVector d = cyc[(i + 1) % cyc.size()] - cyc[i];
    Integer len = d.content();
    edges.emplace_back(d.divided_by(len), len);
  }
  return edges;
}

LatticePolytope LatticePolygon::to_polytope() const { return convex_hull(vertices_); }

std::strong_ordering operator<=>(const LatticePolygon& a, const LatticePolygon& b) {
  if (a.vertices_.size() != b.vertices_.size()) return a.vertices_.size() <=> b.vertices_.size();
  return a.vertices_ <=> b.vertices_;
}

std::string to_string(const LatticePolygon& polygon) {
  std::string out = "conv{";
  for (std::size_t i = 0; i < polygon.vertices().size(); ++i) {
    if (i) out += ",";
    out += to_string(polygon.vertices()[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// A-triangles

std::optional<ATriangle> is_a_triangle(const LatticePolygon& polygon) {
  const auto& v = polygon.vertices();
  if (v.size() == 2) {
    LatticeVector d = v[1] - v[0];
    if (d.content() != 1) return std::nullopt;
    IntegerMatrix a = send_to_first_axis(d);
    LatticeVector shift = -(a * v[0]);
    return ATriangle{ATriangle::Kind::UnitSegment, 1, AffineUnimodularMap(std::move(a), std::move(shift))};
  }
  if (v.size() != 3) return std::nullopt;
  static constexpr std::array<std::array<int, 3>, 6> kOrders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const auto& ord : kOrders) {
    const LatticeVector& apex0 = v[ord[0]];
    LatticeVector up = v[ord[1]] - apex0;
    LatticeVector base = v[ord[2]] - apex0;
    if (up.content() != 1) continue;
    Integer len = base.content();
    LatticeVector w = base.divided_by(len);
    Integer det = w[0] * up[1] - w[1] * up[0];
    if (abs(det) != 1) continue;
    // [w | up] has determinant +-1; its inverse sends w to (1,0), up to (0,1).
    IntegerMatrix cols(2, 2);
    cols(0, 0) = w[0];
    cols(1, 0) = w[1];
    cols(0, 1) = up[0];
    cols(1, 1) = up[1];
    IntegerMatrix a = unimodular_inverse(cols);
    LatticeVector shift = -(a * apex0);
    return ATriangle{ATriangle::Kind::Triangle, len, AffineUnimodularMap(std::move(a), std::move(shift))};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sums and decompositions

MinkowskiDecomposition::MinkowskiDecomposition(std::vector<LatticePolygon> summands) {
  for (auto& s : summands) {
    if (s.is_point()) throw Error(ErrorKind::InvalidDecomposition, "a summand is a single point");
    summands_.push_back(s.normalized());
  }
  std::sort(summands_.begin(), summands_.end());
}

std::string to_string(const MinkowskiDecomposition& decomposition) {
  std::string out;
  for (std::size_t i = 0; i < decomposition.size(); ++i) {
    if (i) out += " + ";
    out += to_string(decomposition.summands()[i]);
  }
  return out;
}

LatticePolygon minkowski_sum(std::span<const LatticePolygon> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyInput, "Minkowski sum of no summands");
  std::vector<LatticeVector> acc = parts.front().vertices();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::vector<LatticeVector> next;
    next.reserve(acc.size() * parts[i].vertices().size());
    for (const auto& a : acc) {
      for (const auto& b : parts[i].vertices()) next.push_back(a + b);
    }
    // Keeping only the hull vertices bounds the working set at every step.
    acc = LatticePolygon::hull(next).vertices();
  }
  return LatticePolygon::hull(acc);
}

LatticePolygon minkowski_sum(std::initializer_list<LatticePolygon> parts) {
  return minkowski_sum(std::span<const LatticePolygon>(parts.begin(), parts.size()));
}

bool sums_to(const MinkowskiDecomposition& decomposition, const LatticePolygon& polygon) {
  if (decomposition.size() == 0) return false;
  return minkowski_sum(decomposition.summands()).normalized() == polygon.normalized();
}

namespace {

// Multiset of primitive edge vectors; counts[i] copies of directions[i], with
// directions in counter-clockwise angular order.
struct UnitEdges {
  std::vector<LatticeVector> directions;
  std::vector<long> counts;
};

UnitEdges unit_edges(const LatticePolygon& polygon) {
  UnitEdges units;
  for (auto& [dir, len] : polygon.edge_sequence()) {
    units.directions.push_back(dir);
    units.counts.push_back(len.get_si());
  }
  return units;
}

// Polygon whose edges are the chosen sub-multiset, walked in angular order.
LatticePolygon polygon_from_edges(const UnitEdges& units, const std::vector<long>& take) {
  std::vector<LatticeVector> pts{LatticeVector{0, 0}};
  LatticeVector cur{0, 0};
  for (std::size_t i = 0; i < take.size(); ++i) {
    if (take[i] == 0) continue;
    cur = cur + units.directions[i] * Integer(take[i]);
    pts.push_back(cur);
  }
  return LatticePolygon::hull(pts);
}

// Calls visit(take) for every sub-multiset with zero vector sum, take[first]
// >= 1, at most max_directions distinct directions, and not the whole set
// when proper is true.
void for_each_zero_sum_subset(const UnitEdges& units, const std::vector<long>& avail, std::size_t first,
                              std::size_t max_directions, bool proper,
                              const std::function<bool(const std::vector<long>&)>& visit) {
  const std::size_t n = avail.size();
  std::vector<long> take(n, 0);
  bool stop = false;
  std::function<void(std::size_t, std::size_t, const Integer&, const Integer&)> rec =
      [&](std::size_t i, std::size_t used, const Integer& sx, const Integer& sy) {
        if (stop) return;
        if (i == n) {
          if (sgn(sx) != 0 || sgn(sy) != 0) return;
          if (proper && take == avail) return;
          if (!visit(take)) stop = true;
          return;
        }
        long lo = (i == first) ? 1 : 0;
        for (long k = lo; k <= avail[i]; ++k) {
          std::size_t next_used = used + (k > 0 ? 1 : 0);
          if (next_used > max_directions) break;
          take[i] = k;
          rec(i + 1, next_used, sx + units.directions[i][0] * k, sy + units.directions[i][1] * k);
        }
        take[i] = 0;
      };
  rec(0, 0, Integer(0), Integer(0));
}

}  // namespace

std::vector<MinkowskiDecomposition> enumerate_a_triangle_decompositions(const LatticePolygon& polygon) {
  UnitEdges units = unit_edges(polygon);
  if (units.directions.size() > kMaxDecompositionEdges) {
    throw Error(ErrorKind::TooLarge, std::to_string(units.directions.size()) + " edges exceed the budget of " +
                                         std::to_string(kMaxDecompositionEdges));
  }
  long total = 0;
  for (long c : units.counts) total += c;
  if (total > kMaxDecompositionUnitEdges) {
    throw Error(ErrorKind::TooLarge, std::to_string(total) + " unit edge vectors exceed the budget");
  }
  std::set<MinkowskiDecomposition> found;
  if (polygon.is_point()) return {};

  std::vector<LatticePolygon> current;
  std::function<void(std::vector<long>&)> search = [&](std::vector<long>& avail) {
    auto first = std::find_if(avail.begin(), avail.end(), [](long c) { return c > 0; });
    if (first == avail.end()) {
      found.insert(MinkowskiDecomposition(current));
      return;
    }
    const auto first_index = static_cast<std::size_t>(first - avail.begin());
    // Every A-triangle has at most three edge directions.
    for_each_zero_sum_subset(units, avail, first_index, 3, false, [&](const std::vector<long>& take) {
      LatticePolygon piece = polygon_from_edges(units, take);
      if (!is_a_triangle(piece)) return true;
      for (std::size_t i = 0; i < avail.size(); ++i) avail[i] -= take[i];
      current.push_back(piece);
      search(avail);
      current.pop_back();
      for (std::size_t i = 0; i < avail.size(); ++i) avail[i] += take[i];
      return true;
    });
  };
  std::vector<long> avail = units.counts;
  search(avail);
  return {found.begin(), found.end()};
}

bool is_indecomposable(const LatticePolygon& polygon) {
  if (polygon.is_point()) return true;
  UnitEdges units = unit_edges(polygon);
  // A proper zero-sum subset or its complement uses the first direction.
  bool splits = false;
  for_each_zero_sum_subset(units, units.counts, 0, units.counts.size(), true, [&](const std::vector<long>&) {
    splits = true;
    return false;
  });
  return !splits;
}

bool is_maximal(const MinkowskiDecomposition& decomposition) {
  return std::all_of(decomposition.summands().begin(), decomposition.summands().end(),
                     [](const LatticePolygon& s) { return is_indecomposable(s); });
}

}  // namespace fanolab
