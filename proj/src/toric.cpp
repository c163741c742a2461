#include "fanolab/toric.hpp"

#include <algorithm>
#include <random>

#include "fanolab/error.hpp"
#include "fanolab/linalg.hpp"

namespace fanolab {

std::string ambient_variable_name(std::size_t index) {
  switch (index) {
    case kS:
      return "s";
    case kU:
      return "u";
    case kV:
      return "v";
    default:
      if (index < 8) return "x" + std::to_string(index);
  }
  throw Error(ErrorKind::BadIndex, "no ambient variable " + std::to_string(index));
}

AmbientPolynomial AmbientPolynomial::variable(std::size_t index) {
  if (index >= kAmbientVariables) throw Error(ErrorKind::BadIndex, "no ambient variable " + std::to_string(index));
  AmbientPolynomial p;
  Exponents e{};
  e[index] = 1;
  p.terms_.emplace(e, 1);
  return p;
}

AmbientPolynomial AmbientPolynomial::constant(const Integer& c) { return monomial(Exponents{}, c); }

AmbientPolynomial AmbientPolynomial::monomial(const Exponents& e, const Integer& c) {
  AmbientPolynomial p;
  p.add_term(e, c);
  return p;
}

void AmbientPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

AmbientPolynomial& AmbientPolynomial::operator+=(const AmbientPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

AmbientPolynomial& AmbientPolynomial::operator-=(const AmbientPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

AmbientPolynomial operator*(const AmbientPolynomial& a, const AmbientPolynomial& b) {
  AmbientPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      AmbientPolynomial::Exponents e;
      for (std::size_t i = 0; i < kAmbientVariables; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool AmbientPolynomial::uses_parameters() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first[kS] + t.first[kU] + t.first[kV] > 0; });
}

bool AmbientPolynomial::is_homogeneous_in_x(unsigned degree) const {
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (std::size_t i = 0; i < 8; ++i) d += e[i];
    if (d != degree) return false;
  }
  return true;
}

AmbientPolynomial AmbientPolynomial::derivative(std::size_t index) const {
  AmbientPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

AmbientPolynomial AmbientPolynomial::with_parameters(const Integer& s, const Integer& u, const Integer& v) const {
  AmbientPolynomial out;
  const std::array<const Integer*, 3> values{&s, &u, &v};
  for (const auto& [e, c] : terms_) {
    Integer coeff = c;
    Exponents rest = e;
    for (std::size_t p = 0; p < 3; ++p) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), values[p]->get_mpz_t(), e[kS + p]);
      coeff *= power;
      rest[kS + p] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rational AmbientPolynomial::evaluate(const std::array<Rational, kAmbientVariables>& values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kAmbientVariables; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= values[i];
    }
    total += term;
  }
  return total;
}

std::string to_string(const AmbientPolynomial& p) {
  if (p.is_zero()) return "0";
  // Display order: degree in x descending, then x7 down to x0, then s, u, v.
  using Term = std::pair<AmbientPolynomial::Exponents, Integer>;
  auto key = [](const AmbientPolynomial::Exponents& e) {
    std::array<std::uint32_t, kAmbientVariables + 1> k{};
    for (std::size_t i = 0; i < 8; ++i) {
      k[0] += e[i];
      k[8 - i] = e[i];
    }
    for (std::size_t i = kS; i < kAmbientVariables; ++i) k[i + 1] = e[i];
    return k;
  };
  std::vector<Term> sorted(p.terms().begin(), p.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Term& a, const Term& b) { return key(a.first) > key(b.first); });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < kAmbientVariables; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ambient_variable_name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Integer mag = abs(c);
    std::string term = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string_view to_string(EquationStyle style) { return style == EquationStyle::Tom ? "tom" : "jerry"; }

namespace {

AmbientPolynomial var(std::size_t i) { return AmbientPolynomial::variable(i); }

}  // namespace

EquationFamily tom_equations(bool deformed) {
  AmbientPolynomial u = deformed ? var(kU) : AmbientPolynomial();
  AmbientPolynomial v = deformed ? var(kV) : AmbientPolynomial();
  const std::array<std::array<AmbientPolynomial, 3>, 3> m{{
      {var(7), var(1), var(2)},
      {var(4), var(7) + u, var(3)},
      {var(5), var(6), var(7) + v},
  }};
  EquationFamily fam;
  fam.style = EquationStyle::Tom;
  fam.deformed = deformed;
  if (deformed) fam.parameters = {kU, kV};
  for (int r1 = 0; r1 < 3; ++r1) {
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      for (int c1 = 0; c1 < 3; ++c1) {
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          fam.equations.push_back(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
        }
      }
    }
  }
  return fam;
}

EquationFamily jerry_equations(bool deformed) {
  using Vertex = std::array<int, 3>;
  auto label = [&](const Vertex& p) -> AmbientPolynomial {
    static const std::map<Vertex, std::size_t> kLabels{
        {{0, 0, 0}, 7}, {{1, 0, 0}, 1}, {{0, 1, 0}, 3}, {{1, 1, 0}, 2},
        {{0, 0, 1}, 5}, {{1, 0, 1}, 6}, {{0, 1, 1}, 4}, {{1, 1, 1}, 7},
    };
    AmbientPolynomial t = var(kLabels.at(p));
    if (deformed && p == Vertex{1, 1, 1}) t += var(kS);
    return t;
  };
  std::vector<Vertex> cube;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) cube.push_back({i, j, k});
    }
  }
  auto dist2 = [](const Vertex& a, const Vertex& b) {
    int d = 0;
    for (int i = 0; i < 3; ++i) d += (a[i] - b[i]) * (a[i] - b[i]);
    return d;
  };
  EquationFamily fam;
  fam.style = EquationStyle::Jerry;
  fam.deformed = deformed;
  if (deformed) fam.parameters = {kS};
  // p is the smallest vertex, r its diagonal partner, q < t the other pair.
  for (std::size_t ip = 0; ip < 8; ++ip) {
    for (std::size_t ir = ip + 1; ir < 8; ++ir) {
      for (std::size_t iq = ip + 1; iq < 8; ++iq) {
        for (std::size_t it = iq + 1; it < 8; ++it) {
          if (iq == ir || it == ir) continue;
          const Vertex &p = cube[ip], &r = cube[ir], &q = cube[iq], &t = cube[it];
          bool parallelogram = true;
          for (int i = 0; i < 3; ++i) parallelogram &= p[i] + r[i] == q[i] + t[i];
          if (!parallelogram || dist2(p, r) != dist2(q, t)) continue;
          fam.equations.push_back(label(p) * label(r) - label(q) * label(t));
        }
      }
    }
  }
  std::sort(fam.equations.begin(), fam.equations.end());
  return fam;
}

EquationFamily projectivise(const EquationFamily& family) {
  if (!family.deformed || family.parameters.empty()) {
    throw Error(ErrorKind::NotDeformed, "projectivise needs a family with symbolic parameters");
  }
  EquationFamily out = family;
  out.projective = true;
  for (auto& eq : out.equations) {
    AmbientPolynomial next;
    for (const auto& [e, c] : eq.terms()) {
      AmbientPolynomial::Exponents f = e;
      f[0] += e[kS] + e[kU] + e[kV];
      next += AmbientPolynomial::monomial(f, c);
    }
    eq = std::move(next);
  }
  return out;
}

EquationFamily specialize(const EquationFamily& family, const Integer& s, const Integer& u, const Integer& v) {
  EquationFamily out = family;
  for (auto& eq : out.equations) eq = eq.with_parameters(s, u, v);
  out.parameters.clear();
  out.deformed = sgn(s) != 0 || sgn(u) != 0 || sgn(v) != 0;
  return out;
}

MonomialParametrization dp6_parametrization() {
  return {{{
      {0, 0, 0},    // x0
      {1, 0, 1},    // x1
      {1, 1, 1},    // x2
      {0, 1, 1},    // x3
      {-1, 0, 1},   // x4
      {-1, -1, 1},  // x5
      {0, -1, 1},   // x6
      {0, 0, 1},    // x7
  }}};
}

bool verify_parametrization(const EquationFamily& family, const MonomialParametrization& par) {
  // Images live in Laurent monomials of x, y, z times monomials in s, u, v.
  using Key = std::array<long, 6>;
  for (const auto& eq : family.equations) {
    std::map<Key, Integer> image;
    for (const auto& [e, c] : eq.terms()) {
      Key k{};
      for (std::size_t i = 0; i < 8; ++i) {
        for (int j = 0; j < 3; ++j) k[j] += static_cast<long>(e[i]) * par.images[i][j];
      }
      for (std::size_t p = 0; p < 3; ++p) k[3 + p] = e[kS + p];
      Integer& slot = image[k];
      slot += c;
      if (sgn(slot) == 0) image.erase(k);
    }
    if (!image.empty()) return false;
  }
  return true;
}

FiberSample tom_sample(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  FiberSample out;
  out.point[0] = 1;
  out.point[7] = a[0] * b[0];
  out.point[1] = a[0] * b[1];
  out.point[2] = a[0] * b[2];
  out.point[4] = a[1] * b[0];
  out.point[3] = a[1] * b[2];
  out.point[5] = a[2] * b[0];
  out.point[6] = a[2] * b[1];
  out.u = a[1] * b[1] - out.point[7];
  out.v = a[2] * b[2] - out.point[7];
  return out;
}

FiberSample jerry_sample(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b,
                         const std::array<Rational, 2>& c) {
  auto t = [&](int i, int j, int k) { return Rational(a[i] * b[j] * c[k]); };
  FiberSample out;
  out.point[0] = 1;
  out.point[7] = t(0, 0, 0);
  out.point[1] = t(1, 0, 0);
  out.point[3] = t(0, 1, 0);
  out.point[2] = t(1, 1, 0);
  out.point[5] = t(0, 0, 1);
  out.point[6] = t(1, 0, 1);
  out.point[4] = t(0, 1, 1);
  out.s = t(1, 1, 1) - out.point[7];
  return out;
}

namespace {

constexpr int kSampleAttempts = 100;

Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

bool off_coordinate_hyperplanes(const FiberSample& s) {
  return std::all_of(s.point.begin(), s.point.end(), [](const Rational& x) { return sgn(x) != 0; });
}

}  // namespace

FiberSample sample_fiber_point(EquationStyle style, std::uint64_t seed, bool central) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    FiberSample s;
    if (style == EquationStyle::Tom) {
      std::array<Rational, 3> a, b;
      for (auto& x : a) x = small_rational(rng);
      for (auto& x : b) x = small_rational(rng);
      if (central && std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) != 0; })) {
        // Equal diagonal entries: a_i b_i = a_0 b_0.
        b[1] = a[0] * b[0] / a[1];
        b[2] = a[0] * b[0] / a[2];
      }
      s = tom_sample(a, b);
    } else {
      std::array<Rational, 2> a, b, c;
      for (auto* v : {&a, &b, &c}) {
        for (auto& x : *v) x = small_rational(rng);
      }
      if (central && sgn(a[1]) != 0 && sgn(b[1]) != 0) c[1] = a[0] * b[0] * c[0] / (a[1] * b[1]);
      s = jerry_sample(a, b, c);
    }
    if (off_coordinate_hyperplanes(s)) return s;
  }
  throw Error(ErrorKind::DegenerateSample, "no non-degenerate sample found");
}

std::size_t jacobian_rank(const EquationFamily& family, const FiberSample& sample) {
  std::array<Rational, kAmbientVariables> values;
  for (std::size_t i = 0; i < 8; ++i) values[i] = sample.point[i];
  values[kS] = sample.s;
  values[kU] = sample.u;
  values[kV] = sample.v;
  RationalMatrix jac;
  for (const auto& eq : family.equations) {
    if (sgn(eq.evaluate(values)) != 0) {
      throw Error(ErrorKind::PointNotOnVariety, "equation " + to_string(eq) + " does not vanish at the point");
    }
    std::vector<Rational> row;
    for (std::size_t i = 1; i <= 7; ++i) row.push_back(eq.derivative(i).evaluate(values));
    jac.push_back(std::move(row));
  }
  return rank(jac);
}

}  // namespace fanolab
