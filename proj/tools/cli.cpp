#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include "fanolab/documents.hpp"
#include "fanolab/error.hpp"
#include "fanolab/laurent.hpp"
#include "fanolab/minkowski.hpp"
#include "fanolab/periods.hpp"
#include "fanolab/toric.hpp"

namespace fanolab {

namespace {

// Bad flags, unreadable files and similar problems with the invocation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed result that contradicts an explicit expectation.
class ExpectationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultRecurrenceOrder = 60;

struct Options {
  std::vector<std::string> polytopes;
  std::string poly;
  std::string poly_file;
  bool json = false;
  std::string choice;
  std::string model;
  std::size_t order = 10;
  std::size_t max_order = 4;
  std::size_t max_degree = 4;
  bool expect_equal = false;
  std::string style;
  bool deform = false;
  bool projectivise = false;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

PolytopeDocument load_polytope_document(const std::string& path) { return decode_polytope_document(read_file(path)); }

LatticePolytope load_polytope(const Options& o) {
  if (o.polytopes.size() != 1) throw UsageError("expected exactly one --polytope");
  return convex_hull(load_polytope_document(o.polytopes.front()).vertices);
}

std::string polynomial_text(const Options& o) {
  if (!o.poly.empty()) return o.poly;
  if (!o.poly_file.empty()) return trimmed(read_file(o.poly_file));
  throw UsageError("one of --poly or --poly-file is required");
}

FanoModel model_of(const Options& o) {
  if (o.model == "X2") return FanoModel::X2;
  if (o.model == "X3") return FanoModel::X3;
  throw UsageError("--model must be X2 or X3");
}

EquationStyle style_of(const Options& o) { return o.style == "tom" ? EquationStyle::Tom : EquationStyle::Jerry; }

EquationFamily family_of(const Options& o) {
  return style_of(o) == EquationStyle::Tom ? tom_equations(o.deform) : jerry_equations(o.deform);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string json_rows(const std::vector<LatticeVector>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    for (std::size_t j = 0; j < rows[i].dim(); ++j) out += (j ? ", " : "") + to_string(rows[i][j]);
    out += "]";
  }
  return out + "\n  ]";
}

void polytope_check(const Options& o, std::ostream& out) {
  const auto doc = load_polytope_document(o.polytopes.front());
  const auto q = convex_hull(doc.vertices);
  const bool fano = is_fano(q);
  const bool reflexive = fano && is_reflexive(q);
  const auto points = lattice_points(q).size();
  if (o.json) {
    nlohmann::ordered_json j{{"name", doc.name},      {"dimension", q.dim()}, {"vertices", q.vertices().size()},
                             {"facets", q.facets().size()}, {"lattice_points", points}, {"fano", fano},
                             {"reflexive", reflexive}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "name: " << doc.name << "\n"
      << "dimension: " << q.dim() << "\n"
      << "vertices: " << q.vertices().size() << "\n"
      << "facets: " << q.facets().size() << "\n"
      << "lattice points: " << points << "\n"
      << "fano: " << yes_no(fano) << "\n"
      << "reflexive: " << yes_no(reflexive) << "\n";
}

void polytope_dual(const Options& o, std::ostream& out) {
  const auto doc = load_polytope_document(o.polytopes.front());
  const auto dual = dual_polytope(convex_hull(doc.vertices));
  if (o.json) {
    out << encode_polytope(polytope_document(doc.name + "-dual", dual.to_lattice_polytope()));
    return;
  }
  for (const auto& v : dual.vertices) out << to_string(v) << "\n";
}

void polytope_points(const Options& o, std::ostream& out) {
  const auto doc = load_polytope_document(o.polytopes.front());
  const auto points = lattice_points(convex_hull(doc.vertices));
  if (o.json) {
    out << "{\n  \"name\": " << nlohmann::json(doc.name).dump() << ",\n  \"points\": " << json_rows(points) << "\n}\n";
    return;
  }
  for (const auto& p : points) out << to_string(p) << "\n";
}

void mink_sum(const Options& o, std::ostream& out) {
  std::vector<LatticePolygon> parts;
  std::string name;
  for (const auto& path : o.polytopes) {
    const auto doc = load_polytope_document(path);
    parts.push_back(LatticePolygon::hull(doc.vertices));
    name += (name.empty() ? "" : "+") + doc.name;
  }
  out << encode_polytope({name, minkowski_sum(parts).vertices()});
}

void mink_decompose(const Options& o, std::ostream& out) {
  const auto decs = enumerate_a_triangle_decompositions(LatticePolygon::from_polytope(load_polytope(o)));
  out << decs.size() << (decs.size() == 1 ? " decomposition" : " decompositions") << "\n";
  for (std::size_t i = 0; i < decs.size(); ++i) {
    out << "#" << i + 1 << " (" << decs[i].size() << " summands" << (is_maximal(decs[i]) ? ", maximal" : "")
        << "): " << to_string(decs[i]) << "\n";
  }
}

void laurent_parse(const Options& o, std::ostream& out) { out << to_string(parse_expression(polynomial_text(o))) << "\n"; }

void laurent_newton(const Options& o, std::ostream& out) {
  const auto f = parse_expression(polynomial_text(o));
  const auto q = std::visit([](const auto& p) { return newton_polytope(p); }, f);
  out << encode_polytope(polytope_document("newton", q));
}

void laurent_mm_check(const Options& o, std::ostream& out) {
  const auto f = parse_expression(polynomial_text(o));
  const bool ok = std::visit(
      [&](const auto& p) {
        const auto q = o.polytopes.empty() ? newton_polytope(p) : load_polytope(o);
        return check_mm_conditions(p, q);
      },
      f);
  out << "mm-conditions: " << (ok ? "pass" : "fail") << "\n";
  if (!ok) throw ExpectationFailed("the coefficient conditions do not hold");
}

void laurent_minkowski(const Options& o, std::ostream& out) {
  static const std::map<std::string, DecompositionPreference> kChoices{
      {"segments", DecompositionPreference::Segments},
      {"triangles", DecompositionPreference::Triangles},
      {"trivial", DecompositionPreference::Trivial},
  };
  const auto q = load_polytope(o);
  out << to_string(minkowski_polynomial(q, choose_decompositions(q, kChoices.at(o.choice)))) << "\n";
}

void period_classical(const Options& o, std::ostream& out) {
  const auto f = parse_expression(polynomial_text(o));
  out << std::visit([&](const auto& p) { return encode_series(series_document(classical_period(p, o.order))); }, f);
}

void period_quantum(const Options& o, std::ostream& out) {
  out << encode_series(series_document(quantum_period(model_of(o), o.order)));
}

void period_regularise(const Options& o, std::ostream& out) {
  out << encode_series(series_document(regularise(quantum_period(model_of(o), o.order))));
}

void period_compare(const Options& o, std::ostream& out) {
  const auto model = model_of(o);
  const auto verdict = mirror_check(parse_integer_expression(polynomial_text(o), 3), model, o.order);
  if (verdict.equal) {
    out << "equal to order " << verdict.order << "\n";
    return;
  }
  out << "mismatch at index " << *verdict.mismatch_index << ": classical " << to_string(verdict.classical)
      << ", " << to_string(model) << " " << to_string(verdict.quantum) << "\n";
  if (o.expect_equal) throw ExpectationFailed("series differ at index " + std::to_string(*verdict.mismatch_index));
}

void period_recurrence(const Options& o, std::ostream& out, bool order_given) {
  const std::size_t n = order_given ? o.order : kDefaultRecurrenceOrder;
  std::vector<Rational> series;
  if (!o.poly.empty() || !o.poly_file.empty()) {
    series = to_rational(classical_period(parse_integer_expression(polynomial_text(o), 3), n)).coefficients;
  } else if (!o.model.empty()) {
    series = regularise(quantum_period(model_of(o), n)).coefficients;
  } else {
    throw UsageError("one of --poly, --poly-file or --model is required");
  }
  const auto rec = guess_recurrence(series, o.max_order, o.max_degree);
  if (!rec) {
    out << "no recurrence of order <= " << o.max_order << " and degree <= " << o.max_degree << "\n";
    throw ExpectationFailed("no recurrence found");
  }
  out << "order " << rec->order << ", degree " << rec->degree << "\n" << to_string(*rec) << " = 0\n";
}

void toric_eqs(const Options& o, std::ostream& out) {
  auto fam = family_of(o);
  if (o.projectivise) fam = projectivise(fam);
  for (const auto& eq : fam.equations) out << to_string(eq) << "\n";
}

void toric_verify(const Options& o, std::ostream& out) {
  const auto fam = family_of(o);
  const bool parametrized = verify_parametrization(fam, dp6_parametrization());
  const auto deformed = style_of(o) == EquationStyle::Tom ? tom_equations(true) : jerry_equations(true);
  const auto plain = style_of(o) == EquationStyle::Tom ? tom_equations(false) : jerry_equations(false);
  const bool specializes = specialize(deformed, 0, 0, 0).equations == plain.equations;
  out << "equations: " << fam.equations.size() << "\n"
      << "parametrization: " << yes_no(parametrized) << "\n"
      << "specialization: " << yes_no(specializes) << "\n";
  if (!parametrized || !specializes) throw ExpectationFailed("verification failed");
}

void toric_probe(const Options& o, std::ostream& out) {
  const auto fam = family_of(o);
  const auto style = style_of(o);
  out << "style: " << to_string(style) << ", deformed: " << yes_no(o.deform) << ", seed: " << o.seed
      << ", samples: " << o.samples << "\n";
  if (!o.deform) {
    FiberSample origin;
    origin.point[0] = 1;
    out << "origin: rank " << jacobian_rank(fam, origin) << "\n";
  }
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const auto s = sample_fiber_point(style, o.seed + i, !o.deform);
    const auto r = jacobian_rank(fam, s);
    ++histogram[r];
    out << "sample " << i << ": rank " << r << " (s=" << to_string(s.s) << ", u=" << to_string(s.u)
        << ", v=" << to_string(s.v) << ")\n";
  }
  for (const auto& [rank, count] : histogram) out << "rank " << rank << ": " << count << " samples\n";
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::ParseError:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice polytopes, Laurent polynomial periods and toric equations", "fanolab"};
  app.require_subcommand(1);
  Options o;
  std::function<void(std::ostream&)> action;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help, auto fn) {
    auto* cmd = group->add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto polytope_opt = [&](CLI::App* cmd) {
    return cmd->add_option("--polytope", o.polytopes, "Polytope JSON file")->check(CLI::ExistingFile);
  };
  auto poly_opts = [&](CLI::App* cmd) {
    auto* p = cmd->add_option("--poly", o.poly, "Laurent polynomial expression");
    auto* f = cmd->add_option("--poly-file", o.poly_file, "File holding a Laurent polynomial")->check(CLI::ExistingFile);
    p->excludes(f);
  };
  auto model_opt = [&](CLI::App* cmd) {
    return cmd->add_option("--model", o.model, "Fano threefold")->check(CLI::IsMember({"X2", "X3"}));
  };
  auto style_opt = [&](CLI::App* cmd) {
    cmd->add_option("--style", o.style, "Equation presentation")->required()->check(CLI::IsMember({"tom", "jerry"}));
    cmd->add_flag("--deform", o.deform, "Use the deformed family");
  };

  auto* polytope = app.add_subcommand("polytope", "Lattice polytope queries");
  polytope->require_subcommand(1);
  for (auto [name, help, fn] : {std::tuple{"check", "Dimension, counts and Fano/reflexive tests", &polytope_check},
                                std::tuple{"dual", "Polar dual polytope", &polytope_dual},
                                std::tuple{"points", "Lattice points", &polytope_points}}) {
    auto* cmd = leaf(polytope, name, help, [&o, fn](std::ostream& s) { fn(o, s); });
    polytope_opt(cmd)->required()->expected(1);
    cmd->add_flag("--json", o.json, "JSON output");
  }

  auto* mink = app.add_subcommand("mink", "Minkowski sums and decompositions of polygons");
  mink->require_subcommand(1);
  polytope_opt(leaf(mink, "sum", "Minkowski sum of the given polygons", [&o](std::ostream& s) { mink_sum(o, s); }))
      ->required();
  polytope_opt(leaf(mink, "decompose", "Decompositions into A-triangles",
                    [&o](std::ostream& s) { mink_decompose(o, s); }))
      ->required()
      ->expected(1);

  auto* laurent = app.add_subcommand("laurent", "Laurent polynomials");
  laurent->require_subcommand(1);
  poly_opts(leaf(laurent, "parse", "Parse and print in canonical form", [&o](std::ostream& s) { laurent_parse(o, s); }));
  poly_opts(leaf(laurent, "newton", "Newton polytope as a polytope document",
                 [&o](std::ostream& s) { laurent_newton(o, s); }));
  {
    auto* cmd = leaf(laurent, "mm-check", "Coefficient conditions on vertices, origin and edges",
                     [&o](std::ostream& s) { laurent_mm_check(o, s); });
    poly_opts(cmd);
    polytope_opt(cmd)->expected(1);
  }
  {
    auto* cmd = leaf(laurent, "minkowski", "Minkowski polynomial of a reflexive polytope",
                     [&o](std::ostream& s) { laurent_minkowski(o, s); });
    polytope_opt(cmd)->required()->expected(1);
    cmd->add_option("--choice", o.choice, "Facet decompositions")
        ->required()
        ->check(CLI::IsMember({"segments", "triangles", "trivial"}));
  }

  auto* period = app.add_subcommand("period", "Classical and quantum periods");
  period->require_subcommand(1);
  CLI::Option* recurrence_order = nullptr;
  {
    auto* cmd = leaf(period, "classical", "Classical period", [&o](std::ostream& s) { period_classical(o, s); });
    poly_opts(cmd);
    cmd->add_option("--order", o.order, "Truncation order");
    for (auto [name, help, fn] : {std::tuple{"quantum", "Quantum period", &period_quantum},
                                  std::tuple{"regularise", "Regularised quantum period", &period_regularise}}) {
      auto* q = leaf(period, name, help, [&o, fn](std::ostream& s) { fn(o, s); });
      model_opt(q)->required();
      q->add_option("--order", o.order, "Truncation order");
    }
    auto* cmp = leaf(period, "compare", "Compare a classical period with a regularised quantum period",
                     [&o](std::ostream& s) { period_compare(o, s); });
    model_opt(cmp)->required();
    poly_opts(cmp);
    cmp->add_option("--order", o.order, "Truncation order");
    cmp->add_flag("--expect-equal", o.expect_equal, "Exit 1 unless the series agree");
    auto* rec = leaf(period, "recurrence", "Guess a linear recurrence with polynomial coefficients",
                     [&](std::ostream& s) { period_recurrence(o, s, recurrence_order->count() > 0); });
    model_opt(rec);
    poly_opts(rec);
    recurrence_order = rec->add_option("--order", o.order, "Series length minus one (default 60)");
    rec->add_option("--max-order", o.max_order, "Largest recurrence order")->capture_default_str();
    rec->add_option("--max-degree", o.max_degree, "Largest coefficient degree")->capture_default_str();
  }

  auto* toric = app.add_subcommand("toric", "Determinantal equations of the toric threefold");
  toric->require_subcommand(1);
  {
    auto* eqs = leaf(toric, "eqs", "Print the equations", [&o](std::ostream& s) { toric_eqs(o, s); });
    style_opt(eqs);
    eqs->add_flag("--projectivise", o.projectivise, "Homogenise with x0");
    auto* verify = leaf(toric, "verify", "Check the monomial parametrization and specialization",
                        [&o](std::ostream& s) { toric_verify(o, s); });
    style_opt(verify);
    auto* probe = leaf(toric, "probe", "Jacobian ranks at sampled fiber points",
                       [&o](std::ostream& s) { toric_probe(o, s); });
    style_opt(probe);
    probe->add_option("--samples", o.samples, "Number of samples")->capture_default_str();
    probe->add_option("--seed", o.seed, "First seed")->capture_default_str();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    action(out);
    return 0;
  } catch (const ExpectationFailed& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fanolab
