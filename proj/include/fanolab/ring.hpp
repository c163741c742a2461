#pragma once

// Exact coefficient rings used throughout the library.
//
// Three instances are provided: arbitrary-precision integers, exact rationals
// and integer polynomials in a single formal parameter "a".  Generic code is
// written against the CoefficientRing concept and reaches ring constants and
// printing through RingTraits.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

namespace fanolab {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

std::string to_string(const Integer& value);
// "p/q" when the denominator is not one, plain decimal otherwise.
std::string to_string(const Rational& value);

Integer parse_integer(const std::string& text);
// Accepts "n" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

// Integer polynomial in one formal parameter "a", stored densely from the
// constant term upward with no trailing zeros.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Integer& constant);  // NOLINT: implicit lift from the integers
  ParamPoly(long constant) : ParamPoly(Integer(constant)) {}  // NOLINT
  explicit ParamPoly(std::vector<Integer> coefficients);

  static ParamPoly parameter();

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coefficient(std::size_t power) const;
  Integer constant_term() const { return coefficient(0); }

  template <class T>
  T evaluate(const T& point) const {
    T result = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * point + T(*it);
    return result;
  }

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);

  friend ParamPoly operator+(ParamPoly lhs, const ParamPoly& rhs) { return lhs += rhs; }
  friend ParamPoly operator-(ParamPoly lhs, const ParamPoly& rhs) { return lhs -= rhs; }
  friend ParamPoly operator*(ParamPoly lhs, const ParamPoly& rhs) { return lhs *= rhs; }
  friend ParamPoly operator-(ParamPoly value);
  friend bool operator==(const ParamPoly& lhs, const ParamPoly& rhs) = default;

  // Descending powers without spaces, e.g. "6*a^2+36".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static Integer from_integer(const Integer& x) { return x; }
  static std::string to_string(const Integer& x) { return fanolab::to_string(x); }
  // True when the element prints without surrounding parentheses in a product.
  static bool is_atomic(const Integer&) { return true; }
};

template <>
struct RingTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_integer(const Integer& x) { return Rational(x); }
  static std::string to_string(const Rational& x) { return fanolab::to_string(x); }
  static bool is_atomic(const Rational&) { return true; }
};

template <>
struct RingTraits<ParamPoly> {
  static ParamPoly zero() { return {}; }
  static ParamPoly one() { return ParamPoly(1L); }
  static bool is_zero(const ParamPoly& x) { return x.is_zero(); }
  static ParamPoly from_integer(const Integer& x) { return ParamPoly(x); }
  static std::string to_string(const ParamPoly& x) { return x.to_string(); }
  static bool is_atomic(const ParamPoly& x) { return x.is_constant(); }
};

template <class R>
concept CoefficientRing = requires(const R& x, const R& y, const Integer& n) {
  { x + y } -> std::convertible_to<R>;
  { x - y } -> std::convertible_to<R>;
  { x * y } -> std::convertible_to<R>;
  { -x } -> std::convertible_to<R>;
  { x == y } -> std::convertible_to<bool>;
  { RingTraits<R>::zero() } -> std::same_as<R>;
  { RingTraits<R>::one() } -> std::same_as<R>;
  { RingTraits<R>::is_zero(x) } -> std::same_as<bool>;
  { RingTraits<R>::from_integer(n) } -> std::same_as<R>;
  { RingTraits<R>::to_string(x) } -> std::same_as<std::string>;
};

// gmpxx products are expression templates; force evaluation into R.
template <CoefficientRing R>
R ring_mul(const R& x, const R& y) {
  return R(x * y);
}

}  // namespace fanolab
