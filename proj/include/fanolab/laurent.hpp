#pragma once

// Sparse Laurent polynomials in two or three variables over an exact
// coefficient ring, with the operations needed to build Minkowski polynomials
// on a polytope and to extract constant terms of their powers.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fanolab/error.hpp"
#include "fanolab/lattice.hpp"
#include "fanolab/minkowski.hpp"
#include "fanolab/ring.hpp"

namespace fanolab {

// Exponent vector of length 2 or 3 (unused slots are zero).
class Monomial {
 public:
  static constexpr std::int64_t kMaxExponent = (1 << 20) - 1;

  Monomial() = default;
  Monomial(std::initializer_list<std::int64_t> exponents);
  // Throws TooLarge when a coordinate does not fit.
  static Monomial from_vector(const LatticeVector& v);
  static Monomial one(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::int64_t operator[](std::size_t i) const { return e_[i]; }
  bool is_one() const { return e_[0] == 0 && e_[1] == 0 && e_[2] == 0; }
  LatticeVector to_vector() const;

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;

  // 21 bits per slot; valid while every exponent is within kMaxExponent.
  std::uint64_t key() const;
  static Monomial from_key(std::uint64_t key, std::size_t nvars);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

 private:
  std::array<std::int64_t, 3> e_{};
  std::size_t nvars_ = 0;
};

// "x^-1*y*z"; the unit monomial prints as "1".
std::string to_string(const Monomial& m);

namespace detail {
void check_nvars(std::size_t nvars);
void check_same_nvars(std::size_t a, std::size_t b);
void check_exponent_range(const Monomial& m);
}  // namespace detail

template <CoefficientRing R>
class LaurentPolynomial {
 public:
  using Term = std::pair<Monomial, R>;

  explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) { detail::check_nvars(nvars); }

  // Terms may repeat and may be zero; they are merged and pruned.
  static LaurentPolynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    LaurentPolynomial p(nvars);
    for (const auto& [m, c] : terms) detail::check_same_nvars(nvars, m.nvars());
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& [m, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == m) {
        p.terms_.back().second = p.terms_.back().second + c;
      } else {
        p.terms_.emplace_back(m, std::move(c));
      }
    }
    p.prune();
    return p;
  }
  static LaurentPolynomial constant(std::size_t nvars, const R& c) {
    return from_terms(nvars, {{Monomial::one(nvars), c}});
  }
  static LaurentPolynomial monomial(const Monomial& m, const R& c = RingTraits<R>::one()) {
    return from_terms(m.nvars(), {{m, c}});
  }
  // The i-th variable (0 = x, 1 = y, 2 = z).
  static LaurentPolynomial variable(std::size_t nvars, std::size_t i) {
    std::array<std::int64_t, 3> e{};
    e.at(i) = 1;
    return monomial(nvars == 2 ? Monomial{e[0], e[1]} : Monomial{e[0], e[1], e[2]});
  }

  std::size_t nvars() const { return nvars_; }
  // Sorted lexicographically by exponent, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  R coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return RingTraits<R>::zero();
  }
  R constant_term() const { return coefficient(Monomial::one(nvars_)); }

  std::vector<LatticeVector> support() const {
    std::vector<LatticeVector> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.push_back(m.to_vector());
    return out;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other) { return *this = combine(*this, other, false); }
  LaurentPolynomial& operator-=(const LaurentPolynomial& other) { return *this = combine(*this, other, true); }
  LaurentPolynomial& operator*=(const LaurentPolynomial& other) { return *this = multiply(*this, other); }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return combine(a, b, false);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return combine(a, b, true);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return multiply(a, b);
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Throws VariableMismatch when the variable counts differ.
  friend LaurentPolynomial multiply(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::VariableMismatch, "operands have different variable counts");
    LaurentPolynomial out(a.nvars_);
    if (a.is_zero() || b.is_zero()) return out;
    std::unordered_map<std::uint64_t, R> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        detail::check_exponent_range(m);
        auto [it, fresh] = acc.try_emplace(m.key(), RingTraits<R>::zero());
        it->second += ring_mul(ca, cb);
      }
    }
    out.terms_.reserve(acc.size());
    for (auto& [k, c] : acc) {
      if (!RingTraits<R>::is_zero(c)) out.terms_.emplace_back(Monomial::from_key(k, a.nvars_), std::move(c));
    }
    std::sort(out.terms_.begin(), out.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return out;
  }

  LaurentPolynomial pow(unsigned long k) const {
    LaurentPolynomial result = constant(nvars_, RingTraits<R>::one());
    for (unsigned long i = 0; i < k; ++i) result = result * *this;
    return result;
  }

  // Drops every term for which keep(monomial) is false.
  template <class Pred>
  LaurentPolynomial filtered(Pred keep) const {
    LaurentPolynomial out(nvars_);
    for (const auto& t : terms_) {
      if (keep(t.first)) out.terms_.push_back(t);
    }
    return out;
  }

  template <CoefficientRing S, class F>
  LaurentPolynomial<S> map_coefficients(F fn) const {
    std::vector<typename LaurentPolynomial<S>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, fn(c));
    return LaurentPolynomial<S>::from_terms(nvars_, std::move(out));
  }

 private:
  void prune() {
    std::erase_if(terms_, [](const Term& t) { return RingTraits<R>::is_zero(t.second); });
  }

  static LaurentPolynomial combine(const LaurentPolynomial& a, const LaurentPolynomial& b, bool subtract) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorKind::VariableMismatch, "operands have different variable counts");
    LaurentPolynomial out(a.nvars_);
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        out.terms_.emplace_back(j->first, subtract ? R(-j->second) : j->second);
        ++j;
      } else {
        R c = subtract ? R(i->second - j->second) : R(i->second + j->second);
        if (!RingTraits<R>::is_zero(c)) out.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t nvars_;
  std::vector<Term> terms_;
};

using IntegerLaurent = LaurentPolynomial<Integer>;
using ParamLaurent = LaurentPolynomial<ParamPoly>;

// Half-spaces <normal, v> >= offset cutting out a region R such that a term m
// of f^j can reach the origin within s more factors only if -m lies in s*R.
struct PruningRegion {
  std::vector<std::array<std::int64_t, 4>> halfspaces;  // normal, offset
  bool admits(const Monomial& m, std::int64_t steps_left) const;
};

// Region for conv(support(f) u {0}): facets when full-dimensional, otherwise
// its coordinate bounding box.
PruningRegion pruning_region(const std::vector<LatticeVector>& support, std::size_t nvars);

// Constant terms of f^0, ..., f^N by iterated multiplication.  With pruning,
// terms that can no longer contribute to a later constant term are dropped;
// the output is unaffected.
template <CoefficientRing R>
std::vector<R> power_constant_terms(const LaurentPolynomial<R>& f, std::size_t n, bool prune = true) {
  std::vector<R> out;
  out.reserve(n + 1);
  out.push_back(RingTraits<R>::one());
  if (n == 0) return out;
  const PruningRegion region = pruning_region(f.support(), f.nvars());
  LaurentPolynomial<R> power = LaurentPolynomial<R>::constant(f.nvars(), RingTraits<R>::one());
  for (std::size_t j = 1; j <= n; ++j) {
    power = power * f;
    out.push_back(power.constant_term());
    if (prune && j < n) {
      const auto left = static_cast<std::int64_t>(n - j);
      power = power.filtered([&](const Monomial& m) { return region.admits(m, left); });
    }
  }
  return out;
}

// Throws ZeroPolynomial or NotFullDimensional.
template <CoefficientRing R>
LatticePolytope newton_polytope(const LaurentPolynomial<R>& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no Newton polytope");
  return convex_hull(f.support());
}

// Throws DimensionMismatch.
template <CoefficientRing R>
bool is_supported_on(const LaurentPolynomial<R>& f, const LatticePolytope& q) {
  if (f.nvars() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "polynomial and polytope dimensions differ");
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return q.contains(t.first.to_vector()); });
}

// z*(a + x + x*y + y + x^-1 + x^-1*y^-1 + y^-1) + z^-1
template <CoefficientRing R>
LaurentPolynomial<R> family_f(const R& a) {
  const R one = RingTraits<R>::one();
  return LaurentPolynomial<R>::from_terms(3, {{Monomial{0, 0, 1}, a},
                                              {Monomial{1, 0, 1}, one},
                                              {Monomial{1, 1, 1}, one},
                                              {Monomial{0, 1, 1}, one},
                                              {Monomial{-1, 0, 1}, one},
                                              {Monomial{-1, -1, 1}, one},
                                              {Monomial{0, -1, 1}, one},
                                              {Monomial{0, 0, -1}, one}});
}

LaurentPolynomial<ParamPoly> symbolic_family_f();
LaurentPolynomial<Integer> specialize(const LaurentPolynomial<ParamPoly>& f, const Integer& a);

namespace detail {
// Throws DimensionMismatch, NotReflexive or NotSupported.
void check_mm_preconditions(std::size_t nvars, const LatticePolytope& q, const std::vector<LatticeVector>& support);
// Lattice points of the segment [a, b] from its lexicographically smaller end.
std::vector<LatticeVector> edge_points(const LatticeVector& a, const LatticeVector& b);
}  // namespace detail

// Origin coefficient 0, vertex coefficients 1 and binomial coefficients along
// every edge.  These are necessary conditions only.
template <CoefficientRing R>
bool check_mm_conditions(const LaurentPolynomial<R>& f, const LatticePolytope& q) {
  detail::check_mm_preconditions(f.nvars(), q, f.support());
  auto coeff = [&](const LatticeVector& v) { return f.coefficient(Monomial::from_vector(v)); };
  if (!RingTraits<R>::is_zero(coeff(LatticeVector::zero(q.dim())))) return false;
  for (const auto& v : q.vertices()) {
    if (!(coeff(v) == RingTraits<R>::one())) return false;
  }
  for (auto [i, j] : q.edges()) {
    auto pts = detail::edge_points(q.vertices()[i], q.vertices()[j]);
    const unsigned long len = pts.size() - 1;
    for (unsigned long k = 0; k <= len; ++k) {
      if (!(coeff(pts[k]) == RingTraits<R>::from_integer(binomial(len, k)))) return false;
    }
  }
  return true;
}

// Product over summands of the summand polynomials: a unit segment [p, p+d]
// gives x^p + x^(p+d); an A-triangle of length l gives the pull-back of
// (1+x)^l + y.  The result is supported exactly on the Minkowski sum.
IntegerLaurent decomposition_polynomial(const MinkowskiDecomposition& decomposition);

// Decompositions are given per facet index, in that facet's chart
// coordinates (see facet_chart).  Throws NotReflexive, MissingDecomposition,
// InvalidDecomposition (a summand is not an A-triangle or the summands do not
// add up to the facet) and InconsistentEdge.
IntegerLaurent minkowski_polynomial(const LatticePolytope& q,
                                    const std::map<std::size_t, MinkowskiDecomposition>& choice);

enum class DecompositionPreference { Segments, Triangles, Trivial };

// For each facet: Segments takes a decomposition with the most summands,
// Triangles one with the fewest, Trivial the facet itself.  Ties go to the
// first in enumeration order.  Throws MissingDecomposition when a facet has
// no admissible choice.
std::map<std::size_t, MinkowskiDecomposition> choose_decompositions(const LatticePolytope& q,
                                                                    DecompositionPreference preference);

// Integer coefficients unless the parameter "a" occurs.
using ParsedPolynomial = std::variant<IntegerLaurent, ParamLaurent>;

// Throws SyntaxError (kinds SyntaxError, UnknownVariable).  The variable count
// is 3 if z occurs and 2 otherwise.
ParsedPolynomial parse_expression(const std::string& text);
// As above but always over ParamPoly, with an explicit minimum variable count.
ParamLaurent parse_expression_param(const std::string& text, std::size_t min_nvars = 2);
IntegerLaurent parse_integer_expression(const std::string& text, std::size_t min_nvars = 2);

template <CoefficientRing R>
std::string to_string(const LaurentPolynomial<R>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = RingTraits<R>::to_string(c);
    if (!RingTraits<R>::is_atomic(c)) coeff = "(" + coeff + ")";
    std::string term;
    if (m.is_one()) {
      term = coeff;
    } else if (coeff == "1") {
      term = to_string(m);
    } else if (coeff == "-1") {
      term = "-" + to_string(m);
    } else {
      term = coeff + "*" + to_string(m);
    }
    if (first) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

std::string to_string(const ParsedPolynomial& f);

}  // namespace fanolab
