#include "fanolab/laurent.hpp"

#include <cctype>

namespace fanolab {

Monomial::Monomial(std::initializer_list<std::int64_t> exponents) : nvars_(exponents.size()) {
  detail::check_nvars(nvars_);
  std::copy(exponents.begin(), exponents.end(), e_.begin());
}

Monomial Monomial::from_vector(const LatticeVector& v) {
  Monomial m;
  m.nvars_ = v.dim();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (abs(v[i]) > kMaxExponent) throw Error(ErrorKind::TooLarge, "exponent out of range: " + to_string(v));
    m.e_[i] = v[i].get_si();
  }
  return m;
}

Monomial Monomial::one(std::size_t nvars) {
  detail::check_nvars(nvars);
  Monomial m;
  m.nvars_ = nvars;
  return m;
}

LatticeVector Monomial::to_vector() const {
  if (nvars_ == 2) return LatticeVector{static_cast<long>(e_[0]), static_cast<long>(e_[1])};
  return LatticeVector{static_cast<long>(e_[0]), static_cast<long>(e_[1]), static_cast<long>(e_[2])};
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (int i = 0; i < 3; ++i) m.e_[i] += other.e_[i];
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& e : m.e_) e = -e;
  return m;
}

std::uint64_t Monomial::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < 3; ++i) k |= static_cast<std::uint64_t>(e_[i] + kMaxExponent + 1) << (21 * i);
  return k;
}

Monomial Monomial::from_key(std::uint64_t key, std::size_t nvars) {
  Monomial m;
  m.nvars_ = nvars;
  for (int i = 0; i < 3; ++i) m.e_[i] = static_cast<std::int64_t>((key >> (21 * i)) & 0x1FFFFF) - kMaxExponent - 1;
  return m;
}

std::string to_string(const Monomial& m) {
  static constexpr char kNames[] = {'x', 'y', 'z'};
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace detail {

void check_nvars(std::size_t nvars) {
  if (nvars != 2 && nvars != 3) {
    throw Error(ErrorKind::DimensionMismatch, "Laurent polynomials have 2 or 3 variables, got " + std::to_string(nvars));
  }
}

void check_same_nvars(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::VariableMismatch, "monomial has the wrong number of variables");
}

void check_exponent_range(const Monomial& m) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (m[i] > Monomial::kMaxExponent || m[i] < -Monomial::kMaxExponent) {
      throw Error(ErrorKind::TooLarge, "exponent out of range");
    }
  }
}

void check_mm_preconditions(std::size_t nvars, const LatticePolytope& q, const std::vector<LatticeVector>& support) {
  if (nvars != q.dim()) throw Error(ErrorKind::DimensionMismatch, "polynomial and polytope dimensions differ");
  if (!is_fano(q) || !is_reflexive(q)) throw Error(ErrorKind::NotReflexive, "polytope is not reflexive");
  for (const auto& p : support) {
    if (!q.contains(p)) throw Error(ErrorKind::NotSupported, "monomial " + to_string(p) + " lies outside the polytope");
  }
}

std::vector<LatticeVector> edge_points(const LatticeVector& a, const LatticeVector& b) {
  const LatticeVector& lo = a < b ? a : b;
  const LatticeVector& hi = a < b ? b : a;
  Integer len = lattice_length(lo, hi);
  LatticeVector step = (hi - lo).divided_by(len);
  std::vector<LatticeVector> pts{lo};
  for (Integer k = 1; k <= len; ++k) pts.push_back(pts.back() + step);
  return pts;
}

}  // namespace detail

bool PruningRegion::admits(const Monomial& m, std::int64_t steps_left) const {
  for (const auto& h : halfspaces) {
    std::int64_t value = -(h[0] * m[0] + h[1] * m[1] + h[2] * m[2]);
    if (value < steps_left * h[3]) return false;
  }
  return true;
}

PruningRegion pruning_region(const std::vector<LatticeVector>& support, std::size_t nvars) {
  PruningRegion region;
  if (support.empty()) return region;
  // Including the origin makes s*R grow with s, so one test covers every
  // number of remaining factors up to s.
  std::vector<LatticeVector> pts = support;
  pts.push_back(LatticeVector::zero(nvars));
  try {
    LatticePolytope hull = convex_hull(pts);
    for (const auto& f : hull.facets()) {
      std::array<std::int64_t, 4> h{};
      for (std::size_t i = 0; i < nvars; ++i) h[i] = f.normal[i].get_si();
      h[3] = f.offset.get_si();
      region.halfspaces.push_back(h);
    }
    return region;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotFullDimensional) throw;
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    Integer lo = 0, hi = 0;
    for (const auto& p : support) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    std::array<std::int64_t, 4> up{}, down{};
    up[i] = 1;
    up[3] = lo.get_si();
    down[i] = -1;
    down[3] = -hi.get_si();
    region.halfspaces.push_back(up);
    region.halfspaces.push_back(down);
  }
  return region;
}

ParamLaurent symbolic_family_f() { return family_f<ParamPoly>(ParamPoly::parameter()); }

IntegerLaurent specialize(const ParamLaurent& f, const Integer& a) {
  return f.map_coefficients<Integer>([&](const ParamPoly& c) { return c.evaluate<Integer>(a); });
}

namespace {

IntegerLaurent monomial2(const LatticeVector& e) { return IntegerLaurent::monomial(Monomial::from_vector(e)); }

IntegerLaurent summand_polynomial(const LatticePolygon& summand) {
  auto a = is_a_triangle(summand);
  if (!a) throw Error(ErrorKind::InvalidDecomposition, to_string(summand) + " is not an A-triangle");
  if (a->kind == ATriangle::Kind::UnitSegment) {
    return monomial2(summand.vertices()[0]) + monomial2(summand.vertices()[1]);
  }
  // (1+x)^l + y in standard position, pulled back.
  AffineUnimodularMap back = a->to_standard.inverse();
  const unsigned long l = a->length.get_ui();
  IntegerLaurent out(2);
  for (unsigned long k = 0; k <= l; ++k) {
    out += IntegerLaurent::monomial(Monomial::from_vector(back(LatticeVector{static_cast<long>(k), 0})), binomial(l, k));
  }
  return out + monomial2(back(LatticeVector{0, 1}));
}

void require_reflexive_3d(const LatticePolytope& q) {
  if (q.dim() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a 3-dimensional polytope");
  if (!is_fano(q) || !is_reflexive(q)) throw Error(ErrorKind::NotReflexive, "polytope is not reflexive");
}

}  // namespace

IntegerLaurent decomposition_polynomial(const MinkowskiDecomposition& decomposition) {
  IntegerLaurent out = IntegerLaurent::constant(2, 1);
  for (const auto& s : decomposition.summands()) out *= summand_polynomial(s);
  return out;
}

IntegerLaurent minkowski_polynomial(const LatticePolytope& q,
                                    const std::map<std::size_t, MinkowskiDecomposition>& choice) {
  require_reflexive_3d(q);
  std::map<LatticeVector, Integer> assigned;
  for (std::size_t i = 0; i < q.facets().size(); ++i) {
    auto it = choice.find(i);
    if (it == choice.end()) throw Error(ErrorKind::MissingDecomposition, "no decomposition for facet " + std::to_string(i));
    FacetChart chart = facet_chart(q, i);
    LatticePolygon target = LatticePolygon::from_polytope(chart.image());
    if (!sums_to(it->second, target)) {
      throw Error(ErrorKind::InvalidDecomposition,
                  to_string(it->second) + " does not add up to facet " + std::to_string(i) + " " + to_string(target));
    }
    IntegerLaurent local = decomposition_polynomial(it->second);
    // The lexicographically first term sits at the lexicographically first vertex.
    LatticeVector shift = target.vertices().front() - local.terms().front().first.to_vector();
    for (const auto& [m, c] : local.terms()) {
      LatticeVector p = chart.from_chart(m.to_vector() + shift);
      auto [slot, fresh] = assigned.emplace(p, c);
      if (!fresh && slot->second != c) {
        throw Error(ErrorKind::InconsistentEdge, "facets disagree at " + to_string(p) + ": " + to_string(slot->second) +
                                                     " vs " + to_string(c));
      }
    }
  }
  std::vector<IntegerLaurent::Term> terms;
  for (const auto& [p, c] : assigned) terms.emplace_back(Monomial::from_vector(p), c);
  return IntegerLaurent::from_terms(3, std::move(terms));
}

std::map<std::size_t, MinkowskiDecomposition> choose_decompositions(const LatticePolytope& q,
                                                                    DecompositionPreference preference) {
  require_reflexive_3d(q);
  std::map<std::size_t, MinkowskiDecomposition> out;
  for (std::size_t i = 0; i < q.facets().size(); ++i) {
    LatticePolygon image = LatticePolygon::from_polytope(facet_chart(q, i).image());
    if (preference == DecompositionPreference::Trivial) {
      if (!is_a_triangle(image)) {
        throw Error(ErrorKind::MissingDecomposition, "facet " + std::to_string(i) + " is not an A-triangle");
      }
      out.emplace(i, MinkowskiDecomposition({image}));
      continue;
    }
    auto decs = enumerate_a_triangle_decompositions(image);
    if (decs.empty()) {
      throw Error(ErrorKind::MissingDecomposition, "facet " + std::to_string(i) + " has no A-triangle decomposition");
    }
    auto best = decs.begin();
    for (auto d = decs.begin(); d != decs.end(); ++d) {
      bool better = preference == DecompositionPreference::Segments ? d->size() > best->size() : d->size() < best->size();
      if (better) best = d;
    }
    out.emplace(i, *best);
  }
  return out;
}

namespace {

constexpr long kMaxPolynomialPower = 1000;

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : text_(text) {}

  ParamLaurent parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    ParamLaurent result = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return result;
  }

  bool saw_parameter() const { return saw_parameter_; }
  bool saw_z() const { return saw_z_; }

 private:
  [[noreturn]] void fail(const std::string& message, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw SyntaxError(kind, pos_, message);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  Integer integer_literal() {
    skip();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    if (!at_digit()) fail("expected an integer");
    while (at_digit()) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  ParamLaurent expr() {
    skip();
    ParamLaurent result(3);
    // A leading '-' before a non-digit negates the first term.
    bool negate = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (look >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[look]))) {
        negate = true;
        ++pos_;
      }
    }
    result = term();
    if (negate) result = -result;
    while (true) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  ParamLaurent term() {
    ParamLaurent result = factor();
    while (accept('*')) result *= factor();
    return result;
  }

  ParamLaurent factor() {
    ParamLaurent b = base();
    if (!accept('^')) return b;
    skip();
    std::size_t exponent_pos = pos_;
    Integer k = integer_literal();
    if (b.size() == 1) {
      const auto& [m, c] = b.terms().front();
      const bool unit = c == ParamPoly(1L) || c == ParamPoly(-1L);
      if (k < 0 && !unit) {
        pos_ = exponent_pos;
        fail("negative exponent needs a monomial with coefficient 1 or -1");
      }
      if (unit) {
        if (abs(k) > Monomial::kMaxExponent) {
          pos_ = exponent_pos;
          fail("exponent out of range");
        }
        const std::int64_t e = k.get_si();
        Monomial power{m[0] * e, m[1] * e, m[2] * e};
        detail::check_exponent_range(power);
        const bool odd = (e % 2) != 0;
        return ParamLaurent::monomial(power, (odd && c == ParamPoly(-1L)) ? ParamPoly(-1L) : ParamPoly(1L));
      }
    }
    if (k < 0) {
      pos_ = exponent_pos;
      fail("negative exponent needs a monomial with coefficient 1 or -1");
    }
    if (k > kMaxPolynomialPower) {
      pos_ = exponent_pos;
      fail("exponent too large");
    }
    return b.pow(k.get_ui());
  }

  ParamLaurent base() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParamLaurent inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      return ParamLaurent::constant(3, ParamPoly(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      switch (c) {
        case 'x':
        case 'y':
        case 'z':
          ++pos_;
          saw_z_ |= c == 'z';
          return ParamLaurent::variable(3, static_cast<std::size_t>(c - 'x'));
        case 'a':
          ++pos_;
          saw_parameter_ = true;
          return ParamLaurent::constant(3, ParamPoly::parameter());
        default:
          fail(std::string("unknown variable '") + c + "'", ErrorKind::UnknownVariable);
      }
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  bool saw_parameter_ = false;
  bool saw_z_ = false;
};

ParamLaurent restrict_variables(const ParamLaurent& f, std::size_t nvars) {
  if (nvars == 3) return f;
  std::vector<ParamLaurent::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m[2] != 0) throw Error(ErrorKind::VariableMismatch, "z occurs in a 2-variable polynomial");
    terms.emplace_back(Monomial{m[0], m[1]}, c);
  }
  return ParamLaurent::from_terms(2, std::move(terms));
}

}  // namespace

ParamLaurent parse_expression_param(const std::string& text, std::size_t min_nvars) {
  detail::check_nvars(min_nvars);
  ExpressionParser parser(text);
  ParamLaurent f = parser.parse();
  return restrict_variables(f, parser.saw_z() ? 3 : min_nvars);
}

ParsedPolynomial parse_expression(const std::string& text) {
  ExpressionParser parser(text);
  ParamLaurent f = parser.parse();
  f = restrict_variables(f, parser.saw_z() ? 3 : 2);
  if (parser.saw_parameter()) return f;
  return f.map_coefficients<Integer>([](const ParamPoly& c) { return c.constant_term(); });
}

IntegerLaurent parse_integer_expression(const std::string& text, std::size_t min_nvars) {
  ParamLaurent f = parse_expression_param(text, min_nvars);
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_constant()) throw SyntaxError(ErrorKind::UnknownVariable, text.find('a'), "parameter 'a' not allowed here");
  }
  return f.map_coefficients<Integer>([](const ParamPoly& c) { return c.constant_term(); });
}

std::string to_string(const ParsedPolynomial& f) {
  return std::visit([](const auto& p) { return to_string(p); }, f);
}

}  // namespace fanolab
