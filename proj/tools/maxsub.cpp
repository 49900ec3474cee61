// maxsub: command-line front end for the maxsub library.
//
// Exit status: 0 on success or a reached verdict, 1 on a verified-false
// verdict (nonzero certificate under --expect-identity, degree mismatch,
// failed search, field too small), 2 on usage or input errors.
// Machine output goes to stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxsub/maxsub.hpp"

namespace {

using maxsub::Error;
using maxsub::ErrorCode;
using maxsub::Field;
using maxsub::Matrix;
using maxsub::report::Json;

constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Matrix read_matrix(const Field& field, const std::string& path) { return Matrix::parse(field, read_file(path)); }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::pair<std::string, std::string> split_binding(const std::string& binding) {
  const auto eq = binding.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == binding.size())
    throw UsageError("--bind expects NAME=FILE, got '" + binding + "'");
  return {binding.substr(0, eq), binding.substr(eq + 1)};
}

bool is_verdict_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldTooSmall:
    case ErrorCode::CharTooSmall:
    case ErrorCode::ZeroDivisorDetected:
    case ErrorCode::DegreeBoundViolated:
    case ErrorCode::NotInvertible:
    case ErrorCode::Singular: return true;
    default: return false;
  }
}

maxsub::CommutatorKind parse_kind(const std::string& kind) {
  if (kind == "add") return maxsub::CommutatorKind::Additive;
  if (kind == "mult") return maxsub::CommutatorKind::Multiplicative;
  throw UsageError("--kind must be add or mult, got '" + kind + "'");
}

// ---------------------------------------------------------------------------

struct MatrixPolyArgs {
  std::string field = "q";
  std::string matrix;
  bool json = false;
};

int run_poly(const MatrixPolyArgs& args, bool minimal) {
  const Field field = Field::parse(args.field);
  const Matrix m = read_matrix(field, args.matrix);
  const maxsub::Polynomial p = minimal ? maxsub::min_poly(m) : maxsub::char_poly(m);
  if (args.json) {
    print_json(Json{{minimal ? "minpoly" : "charpoly", maxsub::report::to_json(p)}, {"degree", p.degree()}, {"field", field.spec()}});
  } else {
    std::cout << p.to_string() << "\n";
  }
  return kOk;
}

struct CapelliEvalArgs {
  std::size_t n = 1;
  std::string field = "q";
  std::string x;
  std::vector<std::string> ys;
  bool naive = false;
};

int run_capelli_eval(const CapelliEvalArgs& args) {
  const Field field = Field::parse(args.field);
  const Matrix x = read_matrix(field, args.x);
  std::vector<Matrix> ys;
  for (const auto& path : args.ys) ys.push_back(read_matrix(field, path));
  const Matrix value = args.naive ? maxsub::gn_eval_naive(args.n, x, ys) : maxsub::gn_eval_fast(args.n, x, ys);
  std::cout << value.to_text();
  return kOk;
}

struct CapelliDegreeArgs {
  std::string field = "fp:101";
  std::string x;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
};

int run_capelli_degree(const CapelliDegreeArgs& args) {
  const Field field = Field::parse(args.field);
  const auto r = maxsub::degree_via_gn(read_matrix(field, args.x), args.trials, args.seed);
  print_json(maxsub::report::degree_json(r));
  return r.degree == r.minpoly_degree ? kOk : kVerdictFalse;
}

struct GriArgs {
  std::string expr;
  std::string field = "fp:101";
  std::vector<std::string> binds;
  std::size_t nvars = 1;
  std::size_t size = 2;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool json = false;
  bool expect_identity = false;
};

std::map<std::string, Matrix> read_bindings(const Field& field, const std::vector<std::string>& binds) {
  std::map<std::string, Matrix> out;
  for (const auto& b : binds) {
    auto [name, path] = split_binding(b);
    out.emplace(name, read_matrix(field, path));
  }
  return out;
}

int run_gri_parse(const GriArgs& args) {
  const auto e = maxsub::gri::parse(args.expr);
  if (args.json) {
    Json vars = Json::array();
    for (const auto& v : maxsub::gri::variables(e)) vars.push_back(v);
    print_json(Json{{"expr", maxsub::gri::print(e)}, {"variables", vars}});
  } else {
    std::cout << maxsub::gri::print(e) << "\n";
  }
  return kOk;
}

int run_gri_eval(const GriArgs& args) {
  const Field field = Field::parse(args.field);
  const auto e = maxsub::gri::parse(args.expr);
  auto bound = read_bindings(field, args.binds);
  if (bound.empty()) throw UsageError("gri eval needs at least one --bind");
  maxsub::gri::Substitution s{field, bound.begin()->second.rows(), {}, {}};
  const auto vars = maxsub::gri::variables(e);
  for (auto& [name, m] : bound) {
    if (vars.count(name))
      s.variables.emplace(name, std::move(m));
    else
      s.constants.emplace(name, std::move(m));
  }
  const auto outcome = maxsub::gri::evaluate(e, s);
  if (!outcome.permissible()) {
    std::string path;
    for (auto i : outcome.not_permissible->path) path += (path.empty() ? "" : ".") + std::to_string(i);
    if (args.json) {
      print_json(Json{{"permissible", false}, {"subexpression", outcome.not_permissible->subexpression}, {"path", path}});
    } else {
      std::cout << "not permissible: singular inverse at " << outcome.not_permissible->subexpression << " (path " << (path.empty() ? "root" : path) << ")\n";
    }
    return kVerdictFalse;
  }
  if (args.json)
    print_json(Json{{"permissible", true}, {"value", maxsub::report::to_json(*outcome.value)}});
  else
    std::cout << outcome.value->to_text();
  return kOk;
}

int run_gri_test(const GriArgs& args) {
  const Field field = Field::parse(args.field);
  const auto e = maxsub::gri::parse(args.expr);
  const auto constants = read_bindings(field, args.binds);
  const auto r = maxsub::gri::identity_test(e, args.nvars, args.size, field, args.trials, args.seed, constants);
  if (args.json) {
    print_json(maxsub::report::identity_json(r));
  } else {
    std::cout << "zero:" << r.zero << " nonzero:" << r.nonzero << " not_permissible:" << r.not_permissible << "\n";
    std::cout << "verdict: " << r.verdict() << "\n";
    if (r.certificate) {
      std::cout << "certificate (trial " << r.certificate->trial << "):\n";
      for (const auto& [name, m] : r.certificate->bindings) std::cout << name << " =\n" << m.to_text();
    }
  }
  return args.expect_identity && r.nonzero > 0 ? kVerdictFalse : kOk;
}

struct WitnessArgs {
  std::size_t n = 2;
  std::string field = "q";
  std::uint64_t seed = 0;
  bool json = false;
  std::string a;
  std::string b;
};

int run_witness(const WitnessArgs& args, maxsub::CommutatorKind kind) {
  const Field field = Field::parse(args.field);
  maxsub::WitnessParams params;
  if (args.a.empty() && args.b.empty()) {
    params = maxsub::choose_params(args.n, kind, field, args.seed);
  } else {
    if (args.a.empty() || args.b.empty()) throw UsageError("--a and --b must be given together");
    params.kind = kind;
    params.n = args.n;
    std::istringstream in(args.a);
    for (std::string tok; in >> tok;) params.a.push_back(field.parse_scalar(tok));
    std::istringstream inb(args.b);
    for (std::string tok; inb >> tok;) params.b.push_back(field.parse_scalar(tok));
    params.origin = "user";
  }
  const auto r = maxsub::build_witness(params, field);
  if (args.json) {
    print_json(maxsub::report::witness_json(r, args.seed));
  } else {
    std::cout << "A =\n" << r.A.to_text() << "B =\n" << r.B.to_text() << "C =\n" << r.C.to_text();
    std::cout << "minpoly: " << r.minpoly.to_string() << "\n";
    std::cout << "degree: " << r.degree << "\n";
    std::cout << std::boolalpha << "lower_triangular: " << r.lower_triangular << " upper_triangular: " << r.upper_triangular << "\n";
    std::cout << "diagonal_matches: " << r.diagonal_matches << "\n";
  }
  return r.degree == args.n && r.diagonal_matches ? kOk : kVerdictFalse;
}

struct SearchArgs {
  std::string kind = "add";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_search(const maxsub::AlgebraPtr& alg, const SearchArgs& args) {
  const auto r = maxsub::search_commutator(alg, parse_kind(args.kind), args.trials, args.seed);
  if (alg->status() == maxsub::DivisionStatus::Unverified) std::cerr << "warning: UnverifiedAlgebra: " << alg->status_reason() << "\n";
  if (args.json) {
    print_json(maxsub::report::search_json(r));
  } else {
    std::cout << "kind: " << maxsub::kind_name(r.kind) << "\n";
    std::cout << "trials_used: " << r.trials_used << "\n";
    std::cout << "degree_found: " << r.degree_found << " declared_degree: " << r.declared_degree << "\n";
    std::cout << "success: " << (r.success ? "true" : "false") << "\n";
    if (r.best && r.best->c) {
      std::cout << "x = " << r.best->x.to_string() << "\n";
      std::cout << "y = " << r.best->y.to_string() << "\n";
      std::cout << "c = " << r.best->c->to_string() << "\n";
      std::cout << "minpoly: " << r.best->minpoly->to_string() << "\n";
    }
  }
  return r.success ? kOk : kVerdictFalse;
}

struct Lemma22Args {
  std::size_t m = 2;
  std::size_t max_n = 3;
  std::string field = "fp:101";
  std::size_t cases = 50;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_lemma22(const Lemma22Args& args) {
  const Field field = Field::parse(args.field);
  if (!field.is_prime_field()) throw UsageError("lemma22 check runs over a prime field");
  if (args.m == 0 || args.m > 4) throw UsageError("lemma22 check supports matrix sizes 1..4");
  const auto r = maxsub::lemma22_check(args.m, args.max_n, field, args.cases, args.trials, args.seed);
  if (args.json) {
    print_json(maxsub::report::lemma22_json(r));
  } else {
    std::cout << "case                      minpoly  gn  vanished(n=1.." << args.max_n << ")  agree\n";
    for (const auto& c : r.cases) {
      std::string v;
      for (bool b : c.vanished) v += b ? 'Y' : 'n';
      std::string label = c.label;
      label.resize(26, ' ');
      std::cout << label << c.minpoly_degree << "        " << c.gn_degree << "   " << v << std::string(16 - std::min<std::size_t>(v.size(), 15), ' ') << (c.agree ? "yes" : "NO") << "\n";
    }
    std::cout << (r.all_agree() ? "all cases agree" : "MISMATCH FOUND") << "\n";
  }
  return r.all_agree() ? kOk : kVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for generalized rational identities and maximal subfields"};
  app.set_version_flag("--version", std::string("maxsub ") + maxsub::kToolVersion + " (format " + maxsub::kFormatVersion + ")");
  app.require_subcommand(1);

  MatrixPolyArgs minpoly_args, charpoly_args;
  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of a matrix (coefficients low to high)");
  minpoly->add_option("--field", minpoly_args.field, "Field spec: q | fp:<p> | ext:<base>:<coeffs>");
  minpoly->add_option("--matrix", minpoly_args.matrix, "Matrix file")->required();
  minpoly->add_flag("--json", minpoly_args.json);
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a matrix (coefficients low to high)");
  charpoly->add_option("--field", charpoly_args.field);
  charpoly->add_option("--matrix", charpoly_args.matrix)->required();
  charpoly->add_flag("--json", charpoly_args.json);

  auto* capelli = app.add_subcommand("capelli", "Evaluate g_n and test algebraic degree");
  capelli->require_subcommand(1);
  CapelliEvalArgs ceval;
  auto* capelli_eval = capelli->add_subcommand("eval", "Evaluate g_n(x; y_1..y_n)");
  capelli_eval->add_option("--n", ceval.n)->required()->check(CLI::PositiveNumber);
  capelli_eval->add_option("--field", ceval.field);
  capelli_eval->add_option("--x", ceval.x)->required();
  capelli_eval->add_option("--y", ceval.ys)->required();
  capelli_eval->add_flag("--naive", ceval.naive, "Use the permutation-sum reference evaluator");
  CapelliDegreeArgs cdeg;
  auto* capelli_degree = capelli->add_subcommand("degree", "Algebraic degree via g_n vanishing, cross-checked with min_poly");
  capelli_degree->add_option("--field", cdeg.field);
  capelli_degree->add_option("--x", cdeg.x)->required();
  capelli_degree->add_option("--trials", cdeg.trials)->check(CLI::PositiveNumber);
  capelli_degree->add_option("--seed", cdeg.seed);

  auto* gri = app.add_subcommand("gri", "Generalized rational expressions");
  gri->require_subcommand(1);
  GriArgs gparse, geval, gtest;
  auto* gri_parse = gri->add_subcommand("parse", "Parse and print an expression in canonical form");
  gri_parse->add_option("--expr", gparse.expr)->required();
  gri_parse->add_flag("--json", gparse.json);
  auto* gri_eval = gri->add_subcommand("eval", "Evaluate at given matrices");
  gri_eval->add_option("--expr", geval.expr)->required();
  gri_eval->add_option("--field", geval.field);
  gri_eval->add_option("--bind", geval.binds, "NAME=FILE; variables and named constants")->required();
  gri_eval->add_flag("--json", geval.json);
  auto* gri_test = gri->add_subcommand("test", "Randomized identity test over M_size(field)");
  gri_test->add_option("--expr", gtest.expr)->required();
  gri_test->add_option("--nvars", gtest.nvars)->required();
  gri_test->add_option("--size", gtest.size)->required()->check(CLI::PositiveNumber);
  gri_test->add_option("--field", gtest.field);
  gri_test->add_option("--trials", gtest.trials)->check(CLI::PositiveNumber);
  gri_test->add_option("--seed", gtest.seed);
  gri_test->add_option("--bind", gtest.binds, "NAME=FILE for named constants");
  gri_test->add_flag("--json", gtest.json);
  gri_test->add_flag("--expect-identity", gtest.expect_identity, "Exit 1 if a nonzero certificate is found");

  auto* witness = app.add_subcommand("witness", "Commutator witnesses of full algebraic degree");
  witness->require_subcommand(1);
  WitnessArgs wmult, wadd;
  auto* witness_mult = witness->add_subcommand("mult", "A B A^-1 B^-1 with B diagonal");
  auto* witness_add = witness->add_subcommand("add", "AB - BA with B superdiagonal");
  for (auto [cmd, args] : {std::pair{witness_mult, &wmult}, std::pair{witness_add, &wadd}}) {
    cmd->add_option("--n", args->n)->required()->check(CLI::Range(2, 64));
    cmd->add_option("--field", args->field);
    cmd->add_option("--seed", args->seed);
    cmd->add_option("--a", args->a, "Explicit a_1..a_{n-1}, space separated");
    cmd->add_option("--b", args->b, "Explicit b parameters, space separated");
    cmd->add_flag("--json", args->json);
  }

  auto* algebra = app.add_subcommand("algebra", "Structure-constant division algebras");
  algebra->require_subcommand(1);
  std::string qa = "-1", qb = "-1", qfield = "q";
  auto* quaternion = algebra->add_subcommand("quaternion", "Quaternion algebra (a, b)");
  quaternion->add_option("--a", qa);
  quaternion->add_option("--b", qb);
  quaternion->add_option("--field", qfield);
  quaternion->require_subcommand(1);
  std::string cmod, csigma, cgamma = "-1", cfield = "q";
  bool cassert = false;
  auto* cyclic = algebra->add_subcommand("cyclic", "Cyclic algebra (F[t]/(modulus), sigma, gamma)");
  cyclic->add_option("--modulus", cmod, "Monic modulus, coefficients low to high")->required();
  cyclic->add_option("--sigma", csigma, "Image of t, coefficients low to high")->required();
  cyclic->add_option("--gamma", cgamma);
  cyclic->add_option("--field", cfield);
  cyclic->add_flag("--assert-division", cassert, "Treat the algebra as a known division algebra");
  cyclic->require_subcommand(1);
  SearchArgs qsearch, csearch;
  for (auto [parent, args] : {std::pair{quaternion, &qsearch}, std::pair{cyclic, &csearch}}) {
    auto* search = parent->add_subcommand("search", "Search for a commutator generating a maximal subfield");
    search->add_option("--kind", args->kind)->check(CLI::IsMember({"add", "mult"}));
    search->add_option("--trials", args->trials)->check(CLI::PositiveNumber);
    search->add_option("--seed", args->seed);
    search->add_flag("--json", args->json);
  }

  auto* lemma22 = app.add_subcommand("lemma22", "Two-directional g_n degree criterion checks");
  lemma22->require_subcommand(1);
  Lemma22Args l22;
  auto* lemma22_check = lemma22->add_subcommand("check", "Compare g_n vanishing with min-poly degree on random and constructed matrices");
  lemma22_check->add_option("--m", l22.m)->check(CLI::Range(1, 4));
  lemma22_check->add_option("--max-n", l22.max_n)->check(CLI::Range(1, 6));
  lemma22_check->add_option("--field", l22.field);
  lemma22_check->add_option("--cases", l22.cases);
  lemma22_check->add_option("--trials", l22.trials)->check(CLI::PositiveNumber);
  lemma22_check->add_option("--seed", l22.seed);
  lemma22_check->add_flag("--json", l22.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (minpoly->parsed()) return run_poly(minpoly_args, true);
    if (charpoly->parsed()) return run_poly(charpoly_args, false);
    if (capelli_eval->parsed()) return run_capelli_eval(ceval);
    if (capelli_degree->parsed()) return run_capelli_degree(cdeg);
    if (gri_parse->parsed()) return run_gri_parse(gparse);
    if (gri_eval->parsed()) return run_gri_eval(geval);
    if (gri_test->parsed()) return run_gri_test(gtest);
    if (witness_mult->parsed()) return run_witness(wmult, maxsub::CommutatorKind::Multiplicative);
    if (witness_add->parsed()) return run_witness(wadd, maxsub::CommutatorKind::Additive);
    if (quaternion->parsed()) {
      const Field field = Field::parse(qfield);
      return run_search(maxsub::quaternion_algebra(field.parse_scalar(qa), field.parse_scalar(qb)), qsearch);
    }
    if (cyclic->parsed()) {
      const Field field = Field::parse(cfield);
      auto alg = maxsub::cyclic_algebra(maxsub::Polynomial::parse(field, cmod), maxsub::Polynomial::parse(field, csigma), field.parse_scalar(cgamma), cassert);
      return run_search(alg, csearch);
    }
    if (lemma22_check->parsed()) return run_lemma22(l22);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_verdict_error(e.code()) ? kVerdictFalse : kUsage;
  }
  std::cerr << "error: no command given\n";
  return kUsage;
}
