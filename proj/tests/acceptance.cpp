// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "fanolab/error.hpp"
#include "fanolab/fixtures.hpp"
#include "fanolab/laurent.hpp"
#include "fanolab/minkowski.hpp"
#include "fanolab/periods.hpp"
#include "fanolab/toric.hpp"
#include "support.hpp"

namespace fanolab {
namespace {

constexpr double kSeriesSeconds = 5.0;
constexpr double kCrossCheckSeconds = 60.0;
constexpr std::size_t kCrossCheckOrder = 40;
constexpr std::size_t kRecurrenceOrder = 60;
constexpr std::size_t kRecurrenceMaxOrder = 4;
constexpr std::size_t kRecurrenceMaxDegree = 4;
constexpr std::size_t kRankSamples = 20;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<Rational> rationals(const std::vector<Integer>& xs) { return {xs.begin(), xs.end()}; }

const std::vector<Integer> kF2Series = ints({1, 0, 4, 0, 60, 0, 1120, 0, 24220, 0, 567504});
const std::vector<Integer> kF3Series = ints({1, 0, 6, 0, 90, 0, 1860, 0, 44730, 0, 1172556});

Outcome classical_series(long a, const std::vector<Integer>& expected) {
  const auto start = Clock::now();
  const auto got = classical_period(family_f<Integer>(a), 10).coefficients;
  const double t = seconds_since(start);
  const bool ok = got == expected && t < kSeriesSeconds;
  return {ok, "c_10 = " + to_string(got.back()) + ", " + std::to_string(t) + " s"};
}

Outcome ac1() { return classical_series(2, kF2Series); }

Outcome ac2() { return classical_series(3, kF3Series); }

Outcome ac3() {
  const std::vector<std::string> expected{"1",         "0", "2*a", "0", "6*a^2+36", "0", "20*a^3+360*a+240", "0",
                                          "70*a^4+2520*a^2+3360*a+6300", "0",
                                          "252*a^5+15120*a^3+30240*a^2+113400*a+90720"};
  const auto got = classical_period(symbolic_family_f(), 10).coefficients;
  std::size_t matched = 0;
  for (std::size_t k = 0; k < got.size() && k < expected.size(); ++k) matched += got[k].to_string() == expected[k];
  return {matched == expected.size() && got.size() == expected.size(),
          std::to_string(matched) + "/" + std::to_string(expected.size()) + " coefficients"};
}

Outcome ac4() {
  const auto start = Clock::now();
  bool ok = regularise(quantum_period(FanoModel::X2, 10)).coefficients == rationals(kF2Series) &&
            regularise(quantum_period(FanoModel::X3, 10)).coefficients == rationals(kF3Series);
  for (auto [model, a] : {std::pair{FanoModel::X2, 2L}, std::pair{FanoModel::X3, 3L}}) {
    ok = ok && regularise(quantum_period(model, kCrossCheckOrder)).coefficients ==
                   rationals(classical_period(family_f<Integer>(a), kCrossCheckOrder).coefficients);
  }
  const double t = seconds_since(start);
  return {ok && t < kCrossCheckSeconds,
          "order 10 displays and order " + std::to_string(kCrossCheckOrder) + " cross-check, " + std::to_string(t) + " s"};
}

Outcome ac5() {
  const auto decs = enumerate_a_triangle_decompositions(LatticePolygon::from_polytope(fixtures::hexagon()));
  const std::set<MinkowskiDecomposition> got(decs.begin(), decs.end());
  const std::set<MinkowskiDecomposition> expected{fixtures::hexagon_segments(), fixtures::hexagon_triangles()};
  const bool maximal = std::all_of(decs.begin(), decs.end(), [](const auto& d) { return is_maximal(d); });
  return {decs.size() == 2 && got == expected && maximal, std::to_string(decs.size()) + " decompositions"};
}

Outcome ac6() {
  const auto p = fixtures::pyramid();
  const bool seg = minkowski_polynomial(p, choose_decompositions(p, DecompositionPreference::Segments)) ==
                   family_f<Integer>(2);
  const bool tri = minkowski_polynomial(p, choose_decompositions(p, DecompositionPreference::Triangles)) ==
                   family_f<Integer>(3);
  return {seg && tri, std::string("segments ") + (seg ? "= f_2" : "!= f_2") + ", triangles " + (tri ? "= f_3" : "!= f_3")};
}

Outcome ac7() {
  const auto par = dp6_parametrization();
  bool ok = verify_parametrization(tom_equations(false), par) && verify_parametrization(jerry_equations(false), par);
  ok = ok && specialize(tom_equations(true), 0, 0, 0).equations == tom_equations(false).equations;
  ok = ok && specialize(jerry_equations(true), 0, 0, 0).equations == jerry_equations(false).equations;
  FiberSample origin;
  origin.point[0] = 1;
  ok = ok && jacobian_rank(tom_equations(false), origin) == 0 && jacobian_rank(jerry_equations(false), origin) == 0;
  std::size_t rank_four = 0;
  for (std::uint64_t seed = 0; seed < kRankSamples; ++seed) {
    rank_four += jacobian_rank(tom_equations(true), sample_fiber_point(EquationStyle::Tom, seed)) == 4;
    rank_four += jacobian_rank(jerry_equations(true), sample_fiber_point(EquationStyle::Jerry, seed)) == 4;
    rank_four += jacobian_rank(tom_equations(false), sample_fiber_point(EquationStyle::Tom, seed, true)) == 4;
    rank_four += jacobian_rank(jerry_equations(false), sample_fiber_point(EquationStyle::Jerry, seed, true)) == 4;
  }
  ok = ok && rank_four == 4 * kRankSamples;
  return {ok, "rank 4 at " + std::to_string(rank_four) + "/" + std::to_string(4 * kRankSamples) + " samples"};
}

Outcome ac8() {
  const auto classical = rationals(classical_period(family_f<Integer>(2), kRecurrenceOrder).coefficients);
  const auto quantum = regularise(quantum_period(FanoModel::X2, kRecurrenceOrder)).coefficients;
  const auto r1 = guess_recurrence(classical, kRecurrenceMaxOrder, kRecurrenceMaxDegree);
  const auto r2 = guess_recurrence(quantum, kRecurrenceMaxOrder, kRecurrenceMaxDegree);
  if (!r1 || !r2) return {false, "no recurrence found"};
  const bool ok = classical.size() == kRecurrenceOrder + 1 && r1->annihilates(classical) &&
                  r1->annihilates(quantum) && r2->annihilates(classical) && r2->annihilates(quantum);
  return {ok, "order " + std::to_string(r1->order) + ", degree " + std::to_string(r1->degree)};
}

IntegerLaurent random_polynomial(std::mt19937_64& rng, std::size_t nvars, int max_terms, long radius) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<long> coeff(1, 4), sign(0, 1);
  std::vector<IntegerLaurent::Term> terms;
  for (int i = count(rng); i > 0; --i) {
    terms.emplace_back(Monomial::from_vector(testing::random_vector(rng, nvars, -radius, radius)),
                       Integer(coeff(rng) * (sign(rng) ? 1 : -1)));
  }
  return IntegerLaurent::from_terms(nvars, terms);
}

bool newton_additivity(std::mt19937_64& rng, int pairs) {
  int checked = 0;
  while (checked < pairs) {
    const std::size_t n = checked % 2 ? 3 : 2;
    const auto f = random_polynomial(rng, n, 6, 3);
    const auto g = random_polynomial(rng, n, 6, 3);
    if (f.is_zero() || g.is_zero()) continue;
    std::optional<LatticePolytope> nf, ng;
    try {
      nf = newton_polytope(f);
      ng = newton_polytope(g);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotFullDimensional) throw;
      continue;
    }
    ++checked;
    std::vector<LatticeVector> sums;
    for (const auto& u : nf->vertices()) {
      for (const auto& v : ng->vertices()) sums.push_back(u + v);
    }
    if (newton_polytope(f * g) != convex_hull(sums)) return false;
  }
  return true;
}

bool regularise_round_trips(std::mt19937_64& rng, int trials) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 50);
  for (int trial = 0; trial < trials; ++trial) {
    PeriodSeries<Rational> s{SeriesKind::Quantum, {}};
    for (int i = 0; i < 20; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      s.coefficients.push_back(q);
    }
    if (deregularise(regularise(s)) != s) return false;
    PeriodSeries<Rational> g{SeriesKind::RegularisedQuantum, s.coefficients};
    if (regularise(deregularise(g)) != g) return false;
  }
  return true;
}

bool a_triangle_invariance(std::mt19937_64& rng, int maps) {
  const std::vector<LatticePolygon> yes{LatticePolygon::hull({{0, 0}, {1, 0}}), LatticePolygon::hull({{0, 0}, {0, 1}, {1, 0}}),
                                        LatticePolygon::hull({{0, 0}, {0, 1}, {2, 0}}),
                                        LatticePolygon::hull({{0, 0}, {0, 1}, {4, 0}})};
  const std::vector<LatticePolygon> no{LatticePolygon::hull({{0, 0}, {2, 0}}), LatticePolygon::hull({{1, 0}, {0, 1}, {-1, -1}}),
                                       LatticePolygon::hull({{0, 0}, {2, 0}, {0, 2}})};
  for (int i = 0; i < maps; ++i) {
    AffineUnimodularMap m(testing::random_unimodular(rng, 2), testing::random_vector(rng, 2, -3, 3));
    auto image = [&](const LatticePolygon& p) {
      std::vector<LatticeVector> pts;
      for (const auto& v : p.vertices()) pts.push_back(m(v));
      return LatticePolygon::hull(pts);
    };
    for (const auto& p : yes) {
      const auto before = is_a_triangle(p);
      const auto after = is_a_triangle(image(p));
      if (!after || after->length != before->length || after->kind != before->kind) return false;
    }
    for (const auto& p : no) {
      if (is_a_triangle(image(p))) return false;
    }
  }
  return true;
}

bool pruning_invisible(std::mt19937_64& rng, int polynomials) {
  for (int i = 0; i < polynomials; ++i) {
    const std::size_t n = i % 3 == 0 ? 3 : 2;
    const auto f = random_polynomial(rng, n, 7, 2);
    const std::size_t order = n == 3 ? 7 : 10;
    if (power_constant_terms(f, order, true) != power_constant_terms(f, order, false)) return false;
  }
  return true;
}

bool mm_conditions_hold() {
  const std::vector<LatticePolytope> shapes{
      fixtures::pyramid(),
      convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
      convex_hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}),
      convex_hull({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}, {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}),
      convex_hull({{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -1, 1},
                   {1, 0, -1}, {1, 1, -1}, {0, 1, -1}, {-1, 0, -1}, {-1, -1, -1}, {0, -1, -1}}),
  };
  for (const auto& q : shapes) {
    for (auto pref : {DecompositionPreference::Segments, DecompositionPreference::Triangles}) {
      if (!check_mm_conditions(minkowski_polynomial(q, choose_decompositions(q, pref)), q)) return false;
    }
  }
  return true;
}

Outcome ac9() {
  std::mt19937_64 rng(9);
  std::vector<std::pair<std::string, bool>> suites{
      {"newton additivity (500 pairs)", newton_additivity(rng, 500)},
      {"regularise round trips (100)", regularise_round_trips(rng, 100)},
      {"A-triangle invariance (100 maps)", a_triangle_invariance(rng, 100)},
      {"pruning invisible (100 polynomials)", pruning_invisible(rng, 100)},
      {"mm-conditions on Minkowski polynomials", mm_conditions_hold()},
  };
  std::string failed;
  for (const auto& [name, ok] : suites) {
    if (!ok) failed += (failed.empty() ? "" : "; ") + name;
  }
  return {failed.empty(), failed.empty() ? "5/5 suites" : "failed: " + failed};
}

}  // namespace
}  // namespace fanolab

int main() {
  using fanolab::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", fanolab::ac1}, {"AC2", fanolab::ac2}, {"AC3", fanolab::ac3}, {"AC4", fanolab::ac4}, {"AC5", fanolab::ac5},
      {"AC6", fanolab::ac6}, {"AC7", fanolab::ac7}, {"AC8", fanolab::ac8}, {"AC9", fanolab::ac9},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << name << " " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
