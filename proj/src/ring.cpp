#include "fanolab/ring.hpp"

#include <algorithm>
#include <cctype>

#include "fanolab/error.hpp"

namespace fanolab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::DegenerateEdge: return "DegenerateEdge";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::InconsistentEdge: return "InconsistentEdge";
    case ErrorKind::MissingDecomposition: return "MissingDecomposition";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::NotDeformed: return "NotDeformed";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionError: return "DimensionError";
  }
  return "Unknown";
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

ParamPoly::ParamPoly(const Integer& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

ParamPoly::ParamPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

ParamPoly ParamPoly::parameter() { return ParamPoly(std::vector<Integer>{0, 1}); }

Integer ParamPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      mpz_addmul(product[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

ParamPoly operator-(ParamPoly value) {
  for (auto& c : value.coeffs_) c = -c;
  return value;
}

std::string ParamPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Integer magnitude = abs(c);
    if (sgn(c) < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "a";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace fanolab
