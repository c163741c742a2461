#include "fanolab/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "fanolab/error.hpp"

namespace fanolab {

namespace {

void check_dim(std::size_t dim) {
  if (dim != 2 && dim != 3) {
    throw Error(ErrorKind::DimensionMismatch,
                "lattice vectors have length 2 or 3, got " + std::to_string(dim));
  }
}

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::initializer_list<long> coords) : dim_(coords.size()) {
  check_dim(dim_);
  std::size_t i = 0;
  for (long c : coords) coords_[i++] = c;
}

LatticeVector::LatticeVector(std::span<const Integer> coords) : dim_(coords.size()) {
  check_dim(dim_);
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

LatticeVector LatticeVector::zero(std::size_t dim) {
  check_dim(dim);
  LatticeVector v;
  v.dim_ = dim;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords().begin(), coords().end(), [](const Integer& c) { return sgn(c) == 0; });
}

Integer LatticeVector::content() const { return gcd_of(coords()); }

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (sgn(g) == 0) return *this;
  return divided_by(g);
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "vector addition");
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] += other.coords_[i];
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  if (dim_ != other.dim_) throw Error(ErrorKind::DimensionMismatch, "vector subtraction");
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] -= other.coords_[i];
  return r;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] = -r.coords_[i];
  return r;
}

LatticeVector LatticeVector::operator*(const Integer& factor) const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) r.coords_[i] *= factor;
  return r;
}

LatticeVector LatticeVector::divided_by(const Integer& divisor) const {
  LatticeVector r = *this;
  for (std::size_t i = 0; i < dim_; ++i) {
    mpz_divexact(r.coords_[i].get_mpz_t(), coords_[i].get_mpz_t(), divisor.get_mpz_t());
  }
  return r;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (a.coords_[i] != b.coords_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  std::array<Integer, 3> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                           a[0] * b[1] - a[1] * b[0]};
  return LatticeVector(std::span<const Integer>(c));
}

Integer orient2d(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Integer orient3d(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c,
                 const LatticeVector& d) {
  return dot(cross(b - a, c - a), d - a);
}

std::string to_string(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Convex hulls

namespace {

// Andrew's monotone chain on sorted, deduplicated points.  Returns the hull
// counter-clockwise starting at the lexicographically smallest point, without
// collinear boundary points.
template <class Project>
std::vector<std::size_t> monotone_chain(std::size_t n, Project&& at) {
  std::vector<std::size_t> hull;
  if (n < 3) {
    for (std::size_t i = 0; i < n; ++i) hull.push_back(i);
    return hull;
  }
  auto turn = [&](std::size_t a, std::size_t b, std::size_t c) { return orient2d(at(a), at(b), at(c)); };
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2 && sgn(turn(hull[hull.size() - 2], hull.back(), i)) <= 0) hull.pop_back();
    hull.push_back(i);
  }
  std::size_t lower = hull.size() + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (hull.size() >= lower && sgn(turn(hull[hull.size() - 2], hull.back(), i)) <= 0) hull.pop_back();
    hull.push_back(i);
  }
  hull.pop_back();
  return hull;
}

std::size_t index_of(const std::vector<LatticeVector>& sorted, const LatticeVector& v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

struct RawFacet {
  LatticeVector normal;
  Integer offset;
  std::vector<LatticeVector> cycle;
};

// Facet of a 3D point set on the supporting plane <normal, x> = offset.
RawFacet make_facet(const std::vector<LatticeVector>& pts, const LatticeVector& normal,
                    const Integer& offset) {
  std::vector<LatticeVector> on;
  for (const auto& p : pts) {
    if (dot(normal, p) == offset) on.push_back(p);
  }
  // Drop one coordinate with nonzero normal component; the projection is
  // injective on the plane and preserves lexicographic order of the rest.
  std::size_t drop = 0;
  while (sgn(normal[drop]) == 0) ++drop;
  std::vector<LatticeVector> projected;
  for (const auto& p : on) {
    std::array<Integer, 2> q;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != drop) q[k++] = p[i];
    }
    projected.emplace_back(std::span<const Integer>(q));
  }
  std::vector<std::size_t> order(on.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return projected[a] < projected[b]; });
  auto hull = monotone_chain(order.size(), [&](std::size_t i) -> const LatticeVector& { return projected[order[i]]; });
  RawFacet facet{normal, offset, {}};
  for (std::size_t h : hull) facet.cycle.push_back(on[order[h]]);
  return facet;
}

struct HullParts {
  std::vector<LatticeVector> vertices;
  std::vector<Facet> facets;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

HullParts assemble(std::size_t dim, std::vector<RawFacet> raw);

}  // namespace

LatticePolytope convex_hull(std::span<const LatticeVector> input) {
  if (input.empty()) throw Error(ErrorKind::EmptyInput, "convex hull of no points");
  const std::size_t dim = input.front().dim();
  for (const auto& p : input) {
    if (p.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "points of mixed dimension");
  }
  std::vector<LatticeVector> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  auto finish = [dim](std::vector<RawFacet> facets) {
    HullParts parts = assemble(dim, std::move(facets));
    LatticePolytope polytope;
    polytope.dim_ = dim;
    polytope.vertices_ = std::move(parts.vertices);
    polytope.facets_ = std::move(parts.facets);
    polytope.edges_ = std::move(parts.edges);
    return polytope;
  };

  std::vector<RawFacet> raw;
  if (dim == 2) {
    auto hull = monotone_chain(pts.size(), [&](std::size_t i) -> const LatticeVector& { return pts[i]; });
    if (hull.size() < 3) throw Error(ErrorKind::NotFullDimensional, "planar hull has no interior");
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& p = pts[hull[i]];
      const auto& q = pts[hull[(i + 1) % hull.size()]];
      std::array<Integer, 2> n{-(q[1] - p[1]), q[0] - p[0]};
      LatticeVector normal = LatticeVector(std::span<const Integer>(n)).primitive();
      raw.push_back({normal, dot(normal, p), {p, q}});
    }
    return finish(std::move(raw));
  }

  // 3D gift wrapping over facets.  Start from a facet through the
  // lexicographically smallest point, which is always a vertex.
  const LatticeVector& a = pts.front();
  std::optional<LatticeVector> first_normal;
  for (std::size_t j = 1; j < pts.size() && !first_normal; ++j) {
    for (std::size_t k = j + 1; k < pts.size() && !first_normal; ++k) {
      LatticeVector n = cross(pts[j] - a, pts[k] - a);
      if (n.is_zero()) continue;
      bool pos = false;
      bool neg = false;
      for (const auto& p : pts) {
        int s = sgn(dot(n, p - a));
        pos |= s > 0;
        neg |= s < 0;
        if (pos && neg) break;
      }
      if (pos && neg) continue;
      if (!pos && !neg) continue;  // everything coplanar
      first_normal = (pos ? n : -n).primitive();
    }
  }
  if (!first_normal) throw Error(ErrorKind::NotFullDimensional, "point set spans no 3D region");

  std::set<LatticeVector> seen{*first_normal};
  std::vector<RawFacet> pending{make_facet(pts, *first_normal, dot(*first_normal, a))};
  while (!pending.empty()) {
    RawFacet facet = std::move(pending.back());
    pending.pop_back();
    const std::size_t m = facet.cycle.size();
    const LatticeVector* off_plane = nullptr;
    for (const auto& p : pts) {
      if (dot(facet.normal, p) != facet.offset) {
        off_plane = &p;
        break;
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      const LatticeVector& e0 = facet.cycle[i];
      const LatticeVector& e1 = facet.cycle[(i + 1) % m];
      const LatticeVector& w = facet.cycle[(i + 2) % m];
      // Rotate the plane about the edge away from the current facet; the last
      // point found on the far side spans the neighbouring facet.
      const LatticeVector* c = off_plane;
      for (const auto& q : pts) {
        if (sgn(orient3d(e0, e1, *c, q)) * sgn(orient3d(e0, e1, *c, w)) < 0) c = &q;
      }
      LatticeVector n = cross(e1 - e0, *c - e0).primitive();
      if (sgn(dot(n, w - e0)) < 0) n = -n;
      if (!seen.insert(n).second) continue;
      pending.push_back(make_facet(pts, n, dot(n, e0)));
    }
    raw.push_back(std::move(facet));
  }
  return finish(std::move(raw));
}

LatticePolytope convex_hull(std::initializer_list<LatticeVector> points) {
  return convex_hull(std::span<const LatticeVector>(points.begin(), points.size()));
}

namespace {

HullParts assemble(std::size_t dim, std::vector<RawFacet> raw) {
  HullParts parts;
  auto& vertices = parts.vertices;
  for (const auto& f : raw) vertices.insert(vertices.end(), f.cycle.begin(), f.cycle.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::sort(raw.begin(), raw.end(), [](const RawFacet& x, const RawFacet& y) { return x.normal < y.normal; });
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto& f : raw) {
    Facet facet{f.normal, f.offset, {}};
    for (const auto& v : f.cycle) facet.vertices.push_back(index_of(vertices, v));
    const std::size_t m = facet.vertices.size();
    for (std::size_t i = 0; i < (dim == 2 ? 1 : m); ++i) {
      auto u = facet.vertices[i];
      auto v = facet.vertices[(i + 1) % m];
      edges.emplace(std::min(u, v), std::max(u, v));
    }
    if (dim == 2) std::sort(facet.vertices.begin(), facet.vertices.end());
    parts.facets.push_back(std::move(facet));
  }
  parts.edges.assign(edges.begin(), edges.end());
  return parts;
}

}  // namespace

}  // namespace fanolab

namespace fanolab {

// ---------------------------------------------------------------------------
// Queries

std::vector<std::size_t> LatticePolytope::cyclic_order() const {
  if (dim_ != 2) throw Error(ErrorKind::DimensionMismatch, "cyclic order needs a polygon");
  // Vertex 0 is the lexicographic minimum; walk counter-clockwise by angle.
  std::vector<std::size_t> order(vertices_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const LatticeVector& base = vertices_[0];
  std::sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
    return sgn(orient2d(base, vertices_[a], vertices_[b])) > 0;
  });
  return order;
}

bool LatticePolytope::contains(const LatticeVector& point) const {
  if (point.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "point and polytope dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, point) >= f.offset; });
}

bool LatticePolytope::strictly_contains(const LatticeVector& point) const {
  if (point.dim() != dim_) throw Error(ErrorKind::DimensionMismatch, "point and polytope dimension");
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, point) > f.offset; });
}

std::vector<LatticeVector> lattice_points(const LatticePolytope& polytope) {
  const std::size_t dim = polytope.dim();
  std::array<long, 3> lo{};
  std::array<long, 3> hi{};
  for (std::size_t i = 0; i < dim; ++i) {
    auto [mn, mx] = std::minmax_element(polytope.vertices().begin(), polytope.vertices().end(),
                                        [i](const LatticeVector& a, const LatticeVector& b) { return a[i] < b[i]; });
    lo[i] = (*mn)[i].get_si();
    hi[i] = (*mx)[i].get_si();
  }
  std::vector<LatticeVector> points;
  std::array<Integer, 3> c;
  for (long x = lo[0]; x <= hi[0]; ++x) {
    for (long y = lo[1]; y <= hi[1]; ++y) {
      for (long z = (dim == 3 ? lo[2] : 0); z <= (dim == 3 ? hi[2] : 0); ++z) {
        c[0] = x;
        c[1] = y;
        c[2] = z;
        LatticeVector p(std::span<const Integer>(c.data(), dim));
        if (polytope.contains(p)) points.push_back(p);
      }
    }
  }
  return points;
}

bool is_fano(const LatticePolytope& polytope) {
  if (!polytope.strictly_contains(LatticeVector::zero(polytope.dim()))) return false;
  return std::all_of(polytope.vertices().begin(), polytope.vertices().end(),
                     [](const LatticeVector& v) { return v.is_primitive(); });
}

std::string to_string(const RationalPoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(p.coords[i]);
  }
  return out + ")";
}

bool RationalPolytope::is_integral() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const RationalPoint& p) {
    return std::all_of(p.coords.begin(), p.coords.end(), [](const Rational& c) { return c.get_den() == 1; });
  });
}

LatticePolytope RationalPolytope::to_lattice_polytope() const {
  if (!is_integral()) throw Error(ErrorKind::NotReflexive, "dual polytope has non-integral vertices");
  std::vector<LatticeVector> pts;
  for (const auto& v : vertices) {
    std::vector<Integer> c;
    for (const auto& q : v.coords) c.push_back(q.get_num());
    pts.emplace_back(std::span<const Integer>(c));
  }
  return convex_hull(pts);
}

RationalPolytope dual_polytope(const LatticePolytope& polytope) {
  if (!is_fano(polytope)) throw Error(ErrorKind::NotFano, "dual requires a Fano polytope");
  // The facet <n, x> >= offset (offset < 0) dualises to the vertex n / (-offset).
  RationalPolytope dual;
  for (const auto& f : polytope.facets()) {
    RationalPoint p;
    for (const auto& c : f.normal.coords()) {
      Rational q(c, -f.offset);
      q.canonicalize();
      p.coords.push_back(q);
    }
    dual.vertices.push_back(std::move(p));
  }
  std::sort(dual.vertices.begin(), dual.vertices.end(), [](const RationalPoint& a, const RationalPoint& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
  });
  return dual;
}

bool is_reflexive(const LatticePolytope& polytope) {
  if (!is_fano(polytope)) throw Error(ErrorKind::NotFano, "reflexivity requires a Fano polytope");
  return std::all_of(polytope.facets().begin(), polytope.facets().end(),
                     [](const Facet& f) { return f.offset == -1; });
}

Integer lattice_length(const LatticeVector& a, const LatticeVector& b) {
  if (a == b) throw Error(ErrorKind::DegenerateEdge, "edge endpoints coincide: " + to_string(a));
  return (b - a).content();
}

// ---------------------------------------------------------------------------
// Integer matrices and unimodular maps

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), data_(rows_ * cols_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer IntegerMatrix::determinant() const {
  const auto& m = *this;
  switch (rows_) {
    case 1: return m(0, 0);
    case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default: throw Error(ErrorKind::DimensionMismatch, "determinant supports n <= 3");
  }
}

LatticeVector IntegerMatrix::operator*(const LatticeVector& v) const {
  if (cols_ != v.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  std::array<Integer, 3> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) mpz_addmul(out[r].get_mpz_t(), (*this)(r, c).get_mpz_t(), v[c].get_mpz_t());
  }
  return LatticeVector(std::span<const Integer>(out.data(), rows_));
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < other.cols_; ++c) {
      for (std::size_t k = 0; k < cols_; ++k) out(r, c) += (*this)(r, k) * other(k, c);
    }
  }
  return out;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const Integer det = m.determinant();
  if (abs(det) != 1) throw Error(ErrorKind::NotUnimodular, "determinant " + det.get_str());
  const std::size_t n = m.rows();
  IntegerMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = det;
  } else if (n == 2) {
    inv(0, 0) = m(1, 1) * det;
    inv(0, 1) = -m(0, 1) * det;
    inv(1, 0) = -m(1, 0) * det;
    inv(1, 1) = m(0, 0) * det;
  } else {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        // adj(m)(r, c) is the (c, r) cofactor.
        std::size_t r0 = (c + 1) % 3, r1 = (c + 2) % 3, c0 = (r + 1) % 3, c1 = (r + 2) % 3;
        inv(r, c) = (m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)) * det;
      }
    }
  }
  return inv;
}

AffineUnimodularMap::AffineUnimodularMap(IntegerMatrix matrix, LatticeVector translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != translation_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "affine map shape");
  }
  if (abs(matrix_.determinant()) != 1) {
    throw Error(ErrorKind::NotUnimodular, "determinant " + matrix_.determinant().get_str());
  }
}

AffineUnimodularMap AffineUnimodularMap::linear(IntegerMatrix matrix) {
  std::size_t n = matrix.rows();
  return AffineUnimodularMap(std::move(matrix), LatticeVector::zero(n));
}

LatticeVector AffineUnimodularMap::operator()(const LatticeVector& x) const {
  return matrix_ * x + translation_;
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  IntegerMatrix inv = unimodular_inverse(matrix_);
  LatticeVector t = -(inv * translation_);
  return AffineUnimodularMap(std::move(inv), std::move(t));
}

AffineUnimodularMap AffineUnimodularMap::compose(const AffineUnimodularMap& other) const {
  return AffineUnimodularMap(matrix_ * other.matrix_, matrix_ * other.translation_ + translation_);
}

LatticePolytope AffineUnimodularMap::apply(const LatticePolytope& polytope) const {
  std::vector<LatticeVector> image;
  for (const auto& v : polytope.vertices()) image.push_back((*this)(v));
  return convex_hull(image);
}

// ---------------------------------------------------------------------------
// Facet charts

namespace {

// Unimodular M with normal^T M = (0, 0, 1); the first two columns then form a
// basis of the lattice orthogonal to the (primitive) normal.
IntegerMatrix complete_to_basis(const LatticeVector& normal) {
  IntegerMatrix m = IntegerMatrix::identity(3);
  std::array<Integer, 3> row{normal[0], normal[1], normal[2]};
  auto nonzero = [&] { return std::count_if(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; }); };
  while (nonzero() > 1) {
    std::size_t pivot = 3;
    for (std::size_t i = 0; i < 3; ++i) {
      if (sgn(row[i]) != 0 && (pivot == 3 || abs(row[i]) < abs(row[pivot]))) pivot = i;
    }
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == pivot || sgn(row[j]) == 0) continue;
      Integer q = row[j] / row[pivot];
      row[j] -= q * row[pivot];
      for (std::size_t r = 0; r < 3; ++r) m(r, j) -= q * m(r, pivot);
    }
  }
  std::size_t last = 0;
  while (sgn(row[last]) == 0) ++last;
  // Primitive normal leaves +-1 in the surviving slot.
  IntegerMatrix basis(3, 3);
  std::size_t col = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == last) continue;
    for (std::size_t r = 0; r < 3; ++r) basis(r, col) = m(r, j);
    ++col;
  }
  for (std::size_t r = 0; r < 3; ++r) basis(r, 2) = m(r, last) * row[last];
  return basis;
}

}  // namespace

FacetChart facet_chart(const LatticePolytope& polytope, std::size_t facet_index) {
  if (polytope.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "facet charts need a 3-polytope");
  if (facet_index >= polytope.facets().size()) {
    throw Error(ErrorKind::BadIndex, "facet " + std::to_string(facet_index) + " of " +
                                         std::to_string(polytope.facets().size()));
  }
  const Facet& facet = polytope.facets()[facet_index];
  IntegerMatrix basis = complete_to_basis(facet.normal);
  IntegerMatrix inverse = unimodular_inverse(basis);
  const LatticeVector& origin =
      polytope.vertices()[*std::min_element(facet.vertices.begin(), facet.vertices.end())];
  LatticeVector e1{0, 0, 0};
  LatticeVector e2{0, 0, 0};
  {
    std::array<Integer, 3> c1{basis(0, 0), basis(1, 0), basis(2, 0)};
    std::array<Integer, 3> c2{basis(0, 1), basis(1, 1), basis(2, 1)};
    e1 = LatticeVector(std::span<const Integer>(c1));
    e2 = LatticeVector(std::span<const Integer>(c2));
  }
  auto project = [&](const LatticeVector& d) {
    LatticeVector w = inverse * d;
    std::array<Integer, 2> uv{w[0], w[1]};
    return LatticeVector(std::span<const Integer>(uv));
  };
  std::vector<LatticeVector> image;
  for (std::size_t v : facet.vertices) image.push_back(project(polytope.vertices()[v] - origin));
  return FacetChart(facet_index, origin, e1, e2, inverse, convex_hull(image));
}

LatticeVector FacetChart::direction_to_chart(const LatticeVector& direction) const {
  LatticeVector w = inverse_basis_ * direction;
  if (sgn(w[2]) != 0) {
    throw Error(ErrorKind::DimensionMismatch, "vector " + to_string(direction) + " leaves the facet plane");
  }
  std::array<Integer, 2> uv{w[0], w[1]};
  return LatticeVector(std::span<const Integer>(uv));
}

LatticeVector FacetChart::to_chart(const LatticeVector& point) const {
  return direction_to_chart(point - origin_);
}

LatticeVector FacetChart::direction_from_chart(const LatticeVector& chart_direction) const {
  if (chart_direction.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "chart vectors are 2D");
  return e1_ * chart_direction[0] + e2_ * chart_direction[1];
}

LatticeVector FacetChart::from_chart(const LatticeVector& chart_point) const {
  return origin_ + direction_from_chart(chart_point);
}

}  // namespace fanolab
