#pragma once

// JSON documents exchanged by the command-line tool: polytopes as vertex
// lists and period series as exact coefficient strings.

#include <string>
#include <vector>

#include "fanolab/lattice.hpp"
#include "fanolab/periods.hpp"

namespace fanolab {

struct PolytopeDocument {
  std::string name;
  // In document order; duplicates are kept.
  std::vector<LatticeVector> vertices;

  friend bool operator==(const PolytopeDocument&, const PolytopeDocument&) = default;
};

// Throws DocumentError(ParseError) for malformed JSON, Error(ParseError) for
// schema violations and Error(DimensionError) for rows that are not all of
// length 2 or all of length 3.
PolytopeDocument decode_polytope_document(const std::string& text);
// Convex hull of the listed vertices.
LatticePolytope decode_polytope(const std::string& text);
std::string encode_polytope(const PolytopeDocument& doc);
PolytopeDocument polytope_document(const std::string& name, const LatticePolytope& polytope);

struct SeriesDocument {
  std::string kind;
  std::size_t order = 0;
  std::vector<std::string> coefficients;

  friend bool operator==(const SeriesDocument&, const SeriesDocument&) = default;
};

// Same error conventions as decode_polytope_document; also rejects unknown
// kinds and coefficient counts other than order + 1.
SeriesDocument decode_series_document(const std::string& text);
std::string encode_series(const SeriesDocument& doc);

template <CoefficientRing R>
SeriesDocument series_document(const PeriodSeries<R>& series) {
  SeriesDocument doc{std::string(to_string(series.kind)), series.order(), {}};
  for (const auto& c : series.coefficients) doc.coefficients.push_back(RingTraits<R>::to_string(c));
  return doc;
}

SeriesKind parse_series_kind(const std::string& text);
// Coefficients as "n" or "p/q".  Throws Error(ParseError).
PeriodSeries<Rational> rational_series(const SeriesDocument& doc);
// Coefficients as polynomials in "a" such as "6*a^2+36".  Throws Error(ParseError).
PeriodSeries<ParamPoly> param_series(const SeriesDocument& doc);

}  // namespace fanolab
