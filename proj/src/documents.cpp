#include "fanolab/documents.hpp"

#include <json.hpp>

#include "fanolab/error.hpp"
#include "fanolab/laurent.hpp"

namespace fanolab {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw DocumentError(ErrorKind::ParseError, line, column, "malformed JSON");
  }
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object()) throw Error(ErrorKind::ParseError, "document must be a JSON object");
  auto it = object.find(key);
  if (it == object.end()) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

}  // namespace

PolytopeDocument decode_polytope_document(const std::string& text) {
  const Json doc = parse_json(text);
  const Json& name = field(doc, "name");
  const Json& rows = field(doc, "vertices");
  if (!name.is_string()) throw Error(ErrorKind::ParseError, "\"name\" must be a string");
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "\"vertices\" must be a non-empty array");
  PolytopeDocument out{name.get<std::string>(), {}};
  std::size_t dim = 0;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "every vertex must be an array of integers");
    if (row.size() != 2 && row.size() != 3) {
      throw Error(ErrorKind::DimensionError, "vertex rows must have length 2 or 3");
    }
    if (dim == 0) dim = row.size();
    if (row.size() != dim) throw Error(ErrorKind::DimensionError, "vertex rows mix lengths 2 and 3");
    std::vector<Integer> coords;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, "vertex coordinates must be integers");
      coords.emplace_back(x.dump());
    }
    out.vertices.emplace_back(std::span<const Integer>(coords));
  }
  return out;
}

LatticePolytope decode_polytope(const std::string& text) { return convex_hull(decode_polytope_document(text).vertices); }

std::string encode_polytope(const PolytopeDocument& doc) {
  std::string out = "{\n  \"name\": " + quoted(doc.name) + ",\n  \"vertices\": [";
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    const auto& v = doc.vertices[i];
    for (std::size_t j = 0; j < v.dim(); ++j) out += (j ? ", " : "") + to_string(v[j]);
    out += "]";
  }
  out += "\n  ]\n}\n";
  return out;
}

PolytopeDocument polytope_document(const std::string& name, const LatticePolytope& polytope) {
  return {name, polytope.vertices()};
}

SeriesDocument decode_series_document(const std::string& text) {
  const Json doc = parse_json(text);
  const Json& kind = field(doc, "kind");
  const Json& order = field(doc, "order");
  const Json& coefficients = field(doc, "coefficients");
  if (!kind.is_string()) throw Error(ErrorKind::ParseError, "\"kind\" must be a string");
  parse_series_kind(kind.get<std::string>());
  if (!order.is_number_unsigned()) throw Error(ErrorKind::ParseError, "\"order\" must be a nonnegative integer");
  if (!coefficients.is_array()) throw Error(ErrorKind::ParseError, "\"coefficients\" must be an array");
  SeriesDocument out{kind.get<std::string>(), order.get<std::size_t>(), {}};
  if (coefficients.size() != out.order + 1) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(out.order + 1) + " coefficients, found " +
                                           std::to_string(coefficients.size()));
  }
  for (const auto& c : coefficients) {
    if (!c.is_string()) throw Error(ErrorKind::ParseError, "coefficients must be strings");
    out.coefficients.push_back(c.get<std::string>());
  }
  return out;
}

std::string encode_series(const SeriesDocument& doc) {
  std::string out = "{\n  \"kind\": " + quoted(doc.kind) + ",\n  \"order\": " + std::to_string(doc.order) +
                    ",\n  \"coefficients\": [";
  for (std::size_t i = 0; i < doc.coefficients.size(); ++i) {
    out += (i == 0 ? "\n    " : ",\n    ") + quoted(doc.coefficients[i]);
  }
  out += "\n  ]\n}\n";
  return out;
}

SeriesKind parse_series_kind(const std::string& text) {
  for (auto kind : {SeriesKind::Classical, SeriesKind::Quantum, SeriesKind::RegularisedQuantum}) {
    if (text == to_string(kind)) return kind;
  }
  throw Error(ErrorKind::ParseError, "unknown series kind '" + text + "'");
}

PeriodSeries<Rational> rational_series(const SeriesDocument& doc) {
  PeriodSeries<Rational> out{parse_series_kind(doc.kind), {}};
  for (const auto& c : doc.coefficients) out.coefficients.push_back(parse_rational(c));
  return out;
}

PeriodSeries<ParamPoly> param_series(const SeriesDocument& doc) {
  PeriodSeries<ParamPoly> out{parse_series_kind(doc.kind), {}};
  for (const auto& c : doc.coefficients) {
    auto parse = [&] {
      try {
        return parse_expression_param(c);
      } catch (const SyntaxError& e) {
        throw Error(ErrorKind::ParseError, "bad coefficient '" + c + "': " + e.what());
      }
    };
    const ParamLaurent p = parse();
    const ParamPoly constant = p.constant_term();
    if (p != ParamLaurent::constant(p.nvars(), constant)) {
      throw Error(ErrorKind::ParseError, "coefficient '" + c + "' involves x, y or z");
    }
    out.coefficients.push_back(constant);
  }
  return out;
}

}  // namespace fanolab
