#pragma once

// Classical periods of Laurent polynomials, quantum periods of the two Fano
// threefolds X2 and X3 from their closed forms, regularisation, mirror
// comparison and recurrence guessing over the rationals.

#include <optional>
#include <string>
#include <vector>

#include "fanolab/laurent.hpp"
#include "fanolab/ring.hpp"

namespace fanolab {

enum class SeriesKind { Classical, Quantum, RegularisedQuantum };

std::string_view to_string(SeriesKind kind);

template <CoefficientRing R>
struct PeriodSeries {
  SeriesKind kind = SeriesKind::Classical;
  // c_0 ... c_N
  std::vector<R> coefficients;

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  friend bool operator==(const PeriodSeries&, const PeriodSeries&) = default;
};

template <CoefficientRing R>
PeriodSeries<R> classical_period(const LaurentPolynomial<R>& f, std::size_t n, bool prune = true) {
  return {SeriesKind::Classical, power_constant_terms(f, n, prune)};
}

enum class FanoModel { X2, X3 };

std::string_view to_string(FanoModel model);

// Truncation at t^N of the closed-form sums, exact.
PeriodSeries<Rational> quantum_period(FanoModel model, std::size_t n);

// c_d -> d! c_d.  Quantum series become RegularisedQuantum.
template <CoefficientRing R>
PeriodSeries<R> regularise(const PeriodSeries<R>& s) {
  PeriodSeries<R> out{s.kind == SeriesKind::Quantum ? SeriesKind::RegularisedQuantum : s.kind, {}};
  out.coefficients.reserve(s.coefficients.size());
  for (std::size_t d = 0; d < s.coefficients.size(); ++d) {
    out.coefficients.push_back(ring_mul(s.coefficients[d], RingTraits<R>::from_integer(factorial(d))));
  }
  return out;
}

// c_d -> c_d / d!.  RegularisedQuantum series become Quantum.
PeriodSeries<Rational> deregularise(const PeriodSeries<Rational>& s);

PeriodSeries<Rational> to_rational(const PeriodSeries<Integer>& s);

struct MirrorVerdict {
  bool equal = true;
  std::size_t order = 0;
  // Set when equal is false: first differing index and the two values
  // (classical period first).
  std::optional<std::size_t> mismatch_index;
  Rational classical;
  Rational quantum;
};

// Compares classical_period(f, N) with regularise(quantum_period(model, N)).
MirrorVerdict mirror_check(const IntegerLaurent& f, FanoModel model, std::size_t n);

// sum_{i=0}^{r} p_i(k) c_{k+i} = 0 with integer polynomials p_i of degree at
// most d.
struct LinearRecurrence {
  std::size_t order = 0;
  std::size_t degree = 0;
  // coefficients[i][j] is the coefficient of k^j in p_i.
  std::vector<std::vector<Integer>> coefficients;

  Rational residual(const std::vector<Rational>& c, std::size_t k) const;
  // True iff every residual with k + order < c.size() vanishes.
  bool annihilates(const std::vector<Rational>& c) const;
  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

// E.g. "(k+2)*c(k+2) - (4*k+4)*c(k)".
std::string to_string(const LinearRecurrence& rec);

inline constexpr std::size_t kRecurrenceSurplusRows = 10;

// Scans (r, d) lexicographically from (1, 0) up to the bounds and returns the
// first recurrence that annihilates the whole series, normalized to content 1
// with positive leading coefficient of p_r; among several candidates at the
// same (r, d) the lexicographically smallest coefficient vector wins.
// Throws InsufficientCoefficients when the series has fewer than
// (R+1)(D+1) + R + 10 coefficients for the maximal bounds R, D.
std::optional<LinearRecurrence> guess_recurrence(const std::vector<Rational>& c, std::size_t max_order,
                                                 std::size_t max_degree);

}  // namespace fanolab
