#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "td/catalog.hpp"
#include "td/identities.hpp"
#include "td/io.hpp"

using namespace td;

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("TDIAG_SEED");
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    const std::uint64_t s = std::stoull(env, &used);
    if (used == std::string(env).size()) return s;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("TDIAG_SEED is not an unsigned integer: '") + env + "'");
}

void print_tensor(const Tensor& t) { std::cout << t << "\n"; }

int cmd_eval(const std::string& file, const std::string& evaluator, bool terms, bool timing) {
  const DiagramFile f = load_diagram_file(file);
  const EvalResult r = evaluate(f.diagram, f.matrices, parse_evaluator(evaluator));
  print_tensor(r.tensor);
  if (terms) std::cout << "terms: " << r.term_count << "\n";
  if (timing) std::cout << "time: " << static_cast<double>(r.elapsed.count()) / 1e6 << "ms\n";
  return 0;
}

struct CheckOptions {
  std::string id;
  bool all = false;
  int n = 0;
  int max_n = 4;
  int trials = 10;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool stretch = false;
  std::string format = "text";
  bool timing = false;
};

int cmd_check(const CheckOptions& o) {
  const std::uint64_t seed = o.seed_given ? o.seed : default_seed();
  std::vector<IdentityReport> reports;
  if (!o.id.empty()) {
    const IdentityCheck& chk = find_identity(o.id);
    if (o.n > 0) {
      reports.push_back(run_check(chk.id, o.n, o.trials, seed));
    } else {
      for (int n = std::max(2, chk.min_n); n <= std::min(o.max_n, chk.max_n); ++n)
        reports.push_back(run_check(chk.id, n, o.trials, seed));
      if (reports.empty()) throw std::invalid_argument(chk.id + " has no supported n up to --max-n");
    }
  } else if (o.all) {
    reports = run_all(o.max_n, o.trials, seed, o.stretch);
  } else {
    throw std::invalid_argument("give an identity id or --all");
  }
  int failed = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    if (o.format == "json")
      std::cout << report_json(r, o.timing) << "\n";
    else
      std::cout << report_text(r, o.timing);
  }
  if (o.format != "json")
    std::cout << "summary: " << reports.size() - failed << " passed, " << failed << " failed (seed " << seed << ")\n";
  return failed == 0 ? 0 : 1;
}

struct BuiltinOptions {
  std::string name;
  BuiltinParams params;
  std::string matrix_file;
  std::string rhs_file;
  std::string evaluator = "both";
  bool raw = false;
  bool emit = false;
  bool dot = false;
};

int cmd_cramer(const BuiltinOptions& o, bool j_given) {
  if (o.matrix_file.empty() || o.rhs_file.empty()) throw std::invalid_argument("cramer needs --matrix and --rhs");
  const Matrix a = load_matrix_file(o.matrix_file);
  const Matrix b = load_matrix_file(o.rhs_file);
  if (b.cols() != 1) throw std::invalid_argument("--rhs must be a single column");
  const CramerSolution s = cramer_solve(a, b.col(0), parse_evaluator(o.evaluator));
  if (s.singular) {
    std::cout << "singular (det = 0)\n";
    return 1;
  }
  if (o.params.j < 1 || o.params.j > a.rows()) throw std::invalid_argument("--j out of range");
  if (j_given)
    std::cout << s.x(o.params.j - 1) << "\n";
  else
    std::cout << Tensor::from_vector(s.x) << "\n";
  return 0;
}

int cmd_builtin(BuiltinOptions o, bool j_given) {
  if (o.name == "cramer") return cmd_cramer(o, j_given);
  const Builtin& b = find_builtin(o.name);
  Bindings bind;
  if (!o.matrix_file.empty()) {
    const Matrix a = load_matrix_file(o.matrix_file);
    if (a.rows() != a.cols()) throw std::invalid_argument("--matrix must be square");
    o.params.n = static_cast<int>(a.rows());
    bind["A"] = a;
  } else if (b.needs_matrix && !o.emit && !o.dot) {
    throw std::invalid_argument(b.name + " needs --matrix");
  }
  const FormalSum sum = b.build(o.params);
  if (o.emit || o.dot) {
    if (sum.size() != 1) throw std::invalid_argument(b.name + " is a formal sum; --emit and --dot need a single diagram");
    if (o.emit) std::cout << print_diagram_file(sum.front().diagram, bind);
    if (o.dot) std::cout << to_dot(to_graph(sum.front().diagram), b.name);
    return 0;
  }
  Tensor t = evaluate(sum, bind, parse_evaluator(o.evaluator)).tensor;
  if (!o.raw) t *= b.scale(o.params);
  print_tensor(t);
  return 0;
}

int cmd_export_dot(const std::string& file) {
  const DiagramFile f = load_diagram_file(file);
  std::cout << to_dot(to_graph(f.diagram));
  return 0;
}

int cmd_list() {
  std::cout << "identities:\n";
  for (const auto& c : identity_registry())
    std::cout << "  " << c.id << "  n=" << c.min_n << ".." << c.max_n << (c.stretch ? "  (stretch)" : "") << "  "
              << c.statement << "\n";
  std::cout << "builtins:\n";
  for (const auto& b : builtin_catalog())
    std::cout << "  " << b.name << (b.needs_matrix ? "  [--matrix]" : "") << "  " << b.summary << "\n";
  std::cout << "  cramer  [--matrix --rhs]  solution of Ax = b (x_j alone with --j)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate trace diagrams and check determinant identities exactly."};
  app.require_subcommand(1);

  std::string file, evaluator = "both";
  bool terms = false, timing = false;
  auto* eval = app.add_subcommand("eval", "evaluate a diagram file");
  eval->add_option("file", file, "diagram file")->required();
  eval->add_option("--evaluator", evaluator, "contraction, layered or both")
      ->check(CLI::IsMember({"contraction", "layered", "both"}));
  eval->add_flag("--terms", terms, "print the number of summed contributions");
  eval->add_flag("--timing", timing, "print the evaluation time");

  CheckOptions co;
  auto* check = app.add_subcommand("check", "run identity checks");
  check->add_option("id", co.id, "identity id (see list)");
  check->add_flag("--all", co.all, "run every non-stretch identity");
  check->add_option("--n", co.n, "single dimension")->check(CLI::PositiveNumber);
  check->add_option("--max-n", co.max_n, "largest dimension")->check(CLI::Range(2, 6));
  check->add_option("--trials", co.trials, "random trials per check")->check(CLI::PositiveNumber);
  auto* seed_opt = check->add_option("--seed", co.seed, "master seed (default $TDIAG_SEED or 1)");
  check->add_flag("--stretch", co.stretch, "include stretch identities with --all");
  check->add_option("--format", co.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_flag("--timing", co.timing, "include elapsed times");

  BuiltinOptions bo;
  auto* builtin = app.add_subcommand("builtin", "evaluate a named builder");
  builtin->add_option("name", bo.name, "builtin name (see list)")->required();
  builtin->add_option("--n", bo.params.n, "dimension")->check(CLI::Range(1, 6));
  builtin->add_option("--k", bo.params.k, "strand count parameter")->check(CLI::NonNegativeNumber);
  auto* j_opt = builtin->add_option("--j", bo.params.j, "1-based index parameter")->check(CLI::PositiveNumber);
  builtin->add_option("--matrix", bo.matrix_file, "matrix file bound to A (sets n)");
  builtin->add_option("--rhs", bo.rhs_file, "right-hand side column (cramer)");
  builtin->add_option("--evaluator", bo.evaluator, "contraction, layered or both")
      ->check(CLI::IsMember({"contraction", "layered", "both"}));
  builtin->add_flag("--raw", bo.raw, "skip the documented scaling");
  builtin->add_flag("--emit", bo.emit, "print the diagram file instead of evaluating");
  builtin->add_flag("--dot", bo.dot, "print DOT instead of evaluating");

  std::string dot_file;
  auto* dot = app.add_subcommand("export-dot", "print the graph form of a diagram file as DOT");
  dot->add_option("file", dot_file, "diagram file")->required();

  auto* list = app.add_subcommand("list", "list identities and builtins");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(file, evaluator, terms, timing);
    if (*check) {
      co.seed_given = seed_opt->count() > 0;
      return cmd_check(co);
    }
    if (*builtin) return cmd_builtin(bo, j_opt->count() > 0);
    if (*dot) return cmd_export_dot(dot_file);
    if (*list) return cmd_list();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
