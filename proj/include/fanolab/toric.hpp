#pragma once

// Determinantal equations of the cone over the degree 6 del Pezzo surface in
// two presentations ("Tom": 2x2 minors of a 3x3 matrix, "Jerry": rectangle
// determinants on a labelled cube), their deformations, projectivisation,
// the monomial parametrization, fiber sampling and exact Jacobian ranks.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanolab/ring.hpp"

namespace fanolab {

// Variable indices: x0..x7 are 0..7, then the parameters s, u, v.
enum AmbientVariable : std::size_t { kS = 8, kU = 9, kV = 10, kAmbientVariables = 11 };

std::string ambient_variable_name(std::size_t index);

// Sparse polynomial in x0..x7, s, u, v with nonnegative exponents.
class AmbientPolynomial {
 public:
  using Exponents = std::array<std::uint32_t, kAmbientVariables>;

  AmbientPolynomial() = default;
  static AmbientPolynomial variable(std::size_t index);
  static AmbientPolynomial constant(const Integer& c);
  static AmbientPolynomial monomial(const Exponents& e, const Integer& c);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AmbientPolynomial& operator+=(const AmbientPolynomial& other);
  AmbientPolynomial& operator-=(const AmbientPolynomial& other);
  friend AmbientPolynomial operator+(AmbientPolynomial a, const AmbientPolynomial& b) { return a += b; }
  friend AmbientPolynomial operator-(AmbientPolynomial a, const AmbientPolynomial& b) { return a -= b; }
  friend AmbientPolynomial operator*(const AmbientPolynomial& a, const AmbientPolynomial& b);
  friend bool operator==(const AmbientPolynomial&, const AmbientPolynomial&) = default;
  friend auto operator<=>(const AmbientPolynomial& a, const AmbientPolynomial& b) { return a.terms_ <=> b.terms_; }

  bool uses_parameters() const;
  // True iff every term has total degree `degree` in x0..x7 alone.
  bool is_homogeneous_in_x(unsigned degree) const;
  AmbientPolynomial derivative(std::size_t index) const;
  // Replaces the parameters by integers, keeping x0..x7 symbolic.
  AmbientPolynomial with_parameters(const Integer& s, const Integer& u, const Integer& v) const;
  // values[i] is the value of variable i.
  Rational evaluate(const std::array<Rational, kAmbientVariables>& values) const;

 private:
  void add_term(const Exponents& e, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

// E.g. "x7^2 - x1*x4": degree in x descending, then x7 down to x0, then s, u, v.
std::string to_string(const AmbientPolynomial& p);

enum class EquationStyle { Tom, Jerry };

std::string_view to_string(EquationStyle style);

struct EquationFamily {
  EquationStyle style = EquationStyle::Tom;
  bool deformed = false;
  bool projective = false;
  std::vector<AmbientPolynomial> equations;
  // Subset of {kS, kU, kV}.
  std::vector<std::size_t> parameters;
};

// The nine 2x2 minors of [[x7,x1,x2],[x4,x7+u,x3],[x5,x6,x7+v]], row pairs
// then column pairs in lexicographic order; u = v = 0 unless deformed.
EquationFamily tom_equations(bool deformed);

// Cube vertex (i,j,k) in {0,1}^3 carries T(i,j,k):
//   T(000)=x7 T(100)=x1 T(010)=x3 T(110)=x2
//   T(001)=x5 T(101)=x6 T(011)=x4 T(111)=x7+s
// Every 4 vertices p,q,r,t forming a rectangle with diagonals pr and qt
// (the 6 faces and the 6 diagonal planes) give T(p)T(r) - T(q)T(t), with p
// the smallest vertex.  The list is sorted.
EquationFamily jerry_equations(bool deformed);

// Multiplies each parameter by x0 so every equation becomes a quadric in
// x0..x7.  Throws NotDeformed.
EquationFamily projectivise(const EquationFamily& family);

// Sets the parameters to the given integers.  The result has no symbolic
// parameters and counts as deformed iff some value is nonzero.
EquationFamily specialize(const EquationFamily& family, const Integer& s, const Integer& u, const Integer& v);

// x_i -> Laurent monomial in x, y, z (exponent vectors); x0 -> 1.
struct MonomialParametrization {
  std::array<std::array<int, 3>, 8> images;
};

// x1 -> xz, x2 -> xyz, x3 -> yz, x4 -> x^-1 z, x5 -> x^-1 y^-1 z,
// x6 -> y^-1 z, x7 -> z.
MonomialParametrization dp6_parametrization();

// True iff every equation becomes the zero polynomial after substitution,
// with any parameters kept symbolic.
bool verify_parametrization(const EquationFamily& family, const MonomialParametrization& par);

struct FiberSample {
  // x0..x7 with x0 = 1.
  std::array<Rational, 8> point;
  Rational s = 0;
  Rational u = 0;
  Rational v = 0;
};

// Tom: the rank-1 matrix a b^T with u, v read off the diagonal.
FiberSample tom_sample(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b);
// Jerry: the cube a_i b_j c_k with s read off the doubled x7 slot.
FiberSample jerry_sample(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b,
                         const std::array<Rational, 2>& c);

// Random small nonzero rationals seeded by `seed`.  With central = true the
// parameters are forced to zero (a point of the undeformed cone).  Throws
// DegenerateSample if no point off the coordinate hyperplanes is found.
FiberSample sample_fiber_point(EquationStyle style, std::uint64_t seed, bool central = false);

// Rank over Q of the Jacobian with respect to x1..x7 at the point, with the
// parameters set to the sample's values.  Throws PointNotOnVariety.
std::size_t jacobian_rank(const EquationFamily& family, const FiberSample& sample);

}  // namespace fanolab
