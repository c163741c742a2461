#include "fanolab/periods.hpp"

#include <algorithm>
#include <numeric>

#include "fanolab/linalg.hpp"

namespace fanolab {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Classical:
      return "classical";
    case SeriesKind::Quantum:
      return "quantum";
    case SeriesKind::RegularisedQuantum:
      return "regularised_quantum";
  }
  return "?";
}

std::string_view to_string(FanoModel model) { return model == FanoModel::X2 ? "X2" : "X3"; }

PeriodSeries<Rational> quantum_period(FanoModel model, std::size_t n) {
  PeriodSeries<Rational> out{SeriesKind::Quantum, std::vector<Rational>(n + 1, Rational(0))};
  // Precompute 1/j! for the weights.
  std::vector<Rational> inv_fact(n / 2 + 1);
  for (std::size_t j = 0; j < inv_fact.size(); ++j) inv_fact[j] = Rational(1, factorial(j));
  for (std::size_t s = 0; 2 * s <= n; ++s) {
    Rational sum = 0;
    if (model == FanoModel::X2) {
      const Rational top = factorial(s);
      for (std::size_t l = 0; l <= s; ++l) {
        const std::size_t m = s - l;
        sum += top * inv_fact[l] * inv_fact[l] * inv_fact[l] * inv_fact[m] * inv_fact[m] * inv_fact[m];
      }
    } else {
      for (std::size_t l = 0; l <= s; ++l) {
        for (std::size_t m = 0; l + m <= s; ++m) {
          const std::size_t k = s - l - m;
          const Rational w = inv_fact[l] * inv_fact[m] * inv_fact[k];
          sum += w * w;
        }
      }
    }
    sum.canonicalize();
    out.coefficients[2 * s] = sum;
  }
  return out;
}

PeriodSeries<Rational> deregularise(const PeriodSeries<Rational>& s) {
  PeriodSeries<Rational> out{s.kind == SeriesKind::RegularisedQuantum ? SeriesKind::Quantum : s.kind, {}};
  for (std::size_t d = 0; d < s.coefficients.size(); ++d) {
    Rational c = s.coefficients[d] / Rational(factorial(d));
    c.canonicalize();
    out.coefficients.push_back(c);
  }
  return out;
}

PeriodSeries<Rational> to_rational(const PeriodSeries<Integer>& s) {
  PeriodSeries<Rational> out{s.kind, {}};
  for (const auto& c : s.coefficients) out.coefficients.emplace_back(c);
  return out;
}

MirrorVerdict mirror_check(const IntegerLaurent& f, FanoModel model, std::size_t n) {
  const auto classical = classical_period(f, n);
  const auto quantum = regularise(quantum_period(model, n));
  MirrorVerdict verdict;
  verdict.order = n;
  for (std::size_t d = 0; d <= n; ++d) {
    if (Rational(classical.coefficients[d]) != quantum.coefficients[d]) {
      verdict.equal = false;
      verdict.mismatch_index = d;
      verdict.classical = classical.coefficients[d];
      verdict.quantum = quantum.coefficients[d];
      break;
    }
  }
  return verdict;
}

Rational LinearRecurrence::residual(const std::vector<Rational>& c, std::size_t k) const {
  Rational total = 0;
  for (std::size_t i = 0; i <= order; ++i) {
    Integer p = 0;
    Integer kpow = 1;
    for (std::size_t j = 0; j <= degree; ++j) {
      p += coefficients[i][j] * kpow;
      kpow *= static_cast<unsigned long>(k);
    }
    total += Rational(p) * c[k + i];
  }
  return total;
}

bool LinearRecurrence::annihilates(const std::vector<Rational>& c) const {
  for (std::size_t k = 0; k + order < c.size(); ++k) {
    if (sgn(residual(c, k)) != 0) return false;
  }
  return true;
}

namespace {

std::string polynomial_in_k(const std::vector<Integer>& p) {
  std::string out;
  for (std::size_t j = p.size(); j-- > 0;) {
    if (sgn(p[j]) == 0) continue;
    Integer mag = abs(p[j]);
    std::string term;
    if (j == 0 || mag != 1) term = to_string(mag);
    if (j > 0) {
      if (!term.empty()) term += "*";
      term += "k";
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (out.empty()) {
      out = (sgn(p[j]) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(p[j]) < 0 ? "-" : "+") + term;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const LinearRecurrence& rec) {
  std::string out;
  for (std::size_t i = rec.order + 1; i-- > 0;) {
    const auto& p = rec.coefficients[i];
    if (std::all_of(p.begin(), p.end(), [](const Integer& x) { return sgn(x) == 0; })) continue;
    // Pull out the sign of the leading coefficient so terms join with +/-.
    std::size_t lead = p.size();
    while (sgn(p[lead - 1]) == 0) --lead;
    const bool negative = sgn(p[lead - 1]) < 0;
    std::vector<Integer> q = p;
    if (negative) {
      for (auto& x : q) x = -x;
    }
    std::string poly = polynomial_in_k(q);
    const std::size_t nonzero = std::count_if(q.begin(), q.end(), [](const Integer& x) { return sgn(x) != 0; });
    std::string index = i == 0 ? "c(k)" : "c(k+" + std::to_string(i) + ")";
    std::string term = poly == "1" ? index : (nonzero > 1 ? "(" + poly + ")" : poly) + "*" + index;
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::optional<LinearRecurrence> guess_recurrence(const std::vector<Rational>& c, std::size_t max_order,
                                                 std::size_t max_degree) {
  const std::size_t needed = (max_order + 1) * (max_degree + 1) + max_order + kRecurrenceSurplusRows;
  if (c.size() < needed) {
    throw Error(ErrorKind::InsufficientCoefficients, "need at least " + std::to_string(needed) +
                                                         " coefficients, got " + std::to_string(c.size()));
  }
  for (std::size_t r = 1; r <= max_order; ++r) {
    for (std::size_t d = 0; d <= max_degree; ++d) {
      const std::size_t unknowns = (r + 1) * (d + 1);
      RationalMatrix rows;
      for (std::size_t k = 0; k + r < c.size(); ++k) {
        std::vector<Rational> row(unknowns);
        for (std::size_t i = 0; i <= r; ++i) {
          Rational kpow = 1;
          for (std::size_t j = 0; j <= d; ++j) {
            row[i * (d + 1) + j] = kpow * c[k + i];
            kpow *= static_cast<unsigned long>(k);
          }
        }
        rows.push_back(std::move(row));
      }
      std::optional<LinearRecurrence> best;
      std::vector<Integer> best_flat;
      for (const auto& v : nullspace(rows, unknowns)) {
        // Clear denominators and content.
        Integer lcm = 1;
        for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> flat;
        Integer g = 0;
        for (const auto& x : v) {
          flat.push_back(x.get_num() * (lcm / x.get_den()));
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), flat.back().get_mpz_t());
        }
        const auto lead_block = flat.begin() + static_cast<std::ptrdiff_t>(r * (d + 1));
        auto lead = std::find_if(std::make_reverse_iterator(flat.end()), std::make_reverse_iterator(lead_block),
                                 [](const Integer& x) { return sgn(x) != 0; });
        if (lead == std::make_reverse_iterator(lead_block)) continue;  // p_r vanishes
        const bool flip = sgn(*lead) < 0;
        for (auto& x : flat) {
          x /= g;
          if (flip) x = -x;
        }
        if (best && !std::lexicographical_compare(flat.begin(), flat.end(), best_flat.begin(), best_flat.end())) {
          continue;
        }
        LinearRecurrence rec;
        rec.order = r;
        rec.degree = d;
        rec.coefficients.assign(r + 1, std::vector<Integer>(d + 1));
        for (std::size_t i = 0; i <= r; ++i) {
          for (std::size_t j = 0; j <= d; ++j) rec.coefficients[i][j] = flat[i * (d + 1) + j];
        }
        best = std::move(rec);
        best_flat = std::move(flat);
      }
      if (best && best->annihilates(c)) return best;
    }
  }
  return std::nullopt;
}

}  // namespace fanolab
