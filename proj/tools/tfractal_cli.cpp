// tfractal: generate fractals, compose and solve instances, run the reduction
// and the property suites. Exit status: 0 ok, 1 verification failure,
// 2 usage or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tfractal/tfractal.hpp"

namespace {

using namespace tfractal;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write '" + path + "'");
  out << text;
}

struct GenArgs {
  std::size_t q = 0;
  bool directed = false;
  Cost cost = 1;
  std::string format = "json";
};

int run_gen(const GenArgs& a) {
  if (a.q > max_fractal_depth) throw input_error("--q must be at most " + std::to_string(max_fractal_depth));
  if (a.cost < 1) throw input_error("--cost must be positive");
  const TFractal f = build_fractal(a.q, a.directed, a.cost);
  if (a.format == "dot") {
    std::cout << fractal_to_dot(f);
  } else if (a.format == "dimacs") {
    std::cout << to_dimacs(f.graph);
  } else {
    std::cout << fractal_to_json(f).dump() << '\n';
  }
  return exit_ok;
}

struct ComposeArgs {
  std::string problem;
  std::string mode = "weighted";
  std::string cost_rule = "guarded";
  std::vector<std::string> inputs;
  bool directed = false;
  std::string out;
};

int run_compose(const ComposeArgs& a) {
  std::vector<ProblemInstance> instances;
  for (const auto& path : a.inputs) {
    try {
      instances.push_back(parse_instance(read_file(path)));
    } catch (const parse_error& e) {
      throw parse_error(path + ": " + e.what());
    }
  }
  if (instances.empty()) throw input_error("no inputs");
  ComposeOptions opts;
  opts.mode = a.mode == "simple" ? ComposeMode::simple : ComposeMode::weighted;
  opts.cost_rule = a.cost_rule == "k-squared" ? CostRule::k_squared : CostRule::guarded;
  const std::size_t given = instances.size();
  instances = pad_to_power_of_two(std::move(instances));
  if (instances.size() != given) {
    std::cerr << "note: padded " << given << " inputs to " << instances.size() << " with trivial no-instances\n";
  }
  CompositionArtifact art;
  if (a.problem == "lbec") {
    art = compose_lbec(instances, opts);
  } else if (a.problem == "mded") {
    art = compose_mded(instances, a.directed, opts);
  } else {
    art = compose_dsct(instances, opts);
  }
  const std::string instance = serialize_instance(art.composed) + '\n';
  const std::string sidecar = sidecar_to_json(art).dump() + '\n';
  if (a.out.empty()) {
    std::cout << instance << sidecar;
  } else {
    write_file(a.out, instance);
    write_file(a.out + ".sidecar.json", sidecar);
  }
  return exit_ok;
}

struct SolveArgs {
  std::string method = "fpt";
  std::string input;
  std::uint64_t budget = BruteForceOptions{}.node_budget;
};

int run_solve(const SolveArgs& a) {
  const ProblemInstance inst = parse_instance(read_file(a.input));
  Verdict v;
  if (a.method == "brute") {
    BruteForceOptions opts;
    opts.node_budget = a.budget;
    v = solve_bruteforce(inst, opts);
  } else {
    v = solve_fpt(inst);
  }
  std::cout << verdict_to_json(inst.graph, v).dump() << '\n';
  return exit_ok;
}

struct ReduceArgs {
  std::string vc;
  std::string embedding;
  bool directed = false;
  bool simple = false;
};

int run_reduce(const ReduceArgs& a) {
  const VcInstance vc = parse_vc(read_file(a.vc));
  const TwoPageEmbedding emb = parse_embedding(read_file(a.embedding));
  ReduceOptions opts;
  opts.directed = a.directed;
  opts.simple = a.simple;
  const VcReduction red = reduce_vc_to_planar_lbec(vc, emb, opts);
  std::cout << serialize_instance(red.instance) << '\n';
  return exit_ok;
}

struct VerifyArgs {
  std::string suite = "lemmas";
  std::size_t q_max = 6;
};

int run_verify(const VerifyArgs& a) {
  std::vector<CheckResult> results;
  if (a.suite == "lemmas") {
    results = verify_lemmas(a.q_max);
  } else if (a.suite == "compositions") {
    results = verify_compositions();
  } else {
    results = verify_reductions();
  }
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  bool all = true;
  std::cout << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  detail\n";
  for (const auto& r : results) {
    std::cout << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << (r.passed ? "pass  " : "FAIL  ")
              << "  " << r.detail << '\n';
    all = all && r.passed;
  }
  return all ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"T-fractal instance selectors, length-bounded cut solvers and compositions"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "emit the triangle fractal of depth q");
  gen_cmd->add_option("--q", gen.q, "depth")->required();
  gen_cmd->add_flag("--directed", gen.directed, "orient every edge from sigma towards tau");
  gen_cmd->add_option("--cost", gen.cost, "deletion cost per edge");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"dot", "dimacs", "json"}));

  ComposeArgs compose;
  auto* compose_cmd = app.add_subcommand("compose", "compose LBEC inputs into one instance");
  compose_cmd->add_option("--problem", compose.problem)->required()->check(CLI::IsMember({"lbec", "mded", "dsct"}));
  compose_cmd->add_option("--mode", compose.mode)->check(CLI::IsMember({"weighted", "simple"}));
  compose_cmd->add_option("--cost-rule", compose.cost_rule, "fractal edge cost: guarded = max(k^2, k+1), or k-squared")
      ->check(CLI::IsMember({"guarded", "k-squared"}));
  compose_cmd->add_option("--inputs", compose.inputs, "LBEC instance files")->required()->expected(1, -1);
  compose_cmd->add_flag("--directed", compose.directed, "directed MDED composition");
  compose_cmd->add_option("--out", compose.out, "write the instance here and the sidecar to OUT.sidecar.json");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
  solve_cmd->add_option("--method", solve.method)->check(CLI::IsMember({"fpt", "brute"}));
  solve_cmd->add_option("--input", solve.input)->required();
  solve_cmd->add_option("--budget", solve.budget, "node budget of the brute-force search");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "vertex cover on a two-page-embedded graph to LBEC");
  reduce_cmd->add_option("--vc", reduce.vc)->required();
  reduce_cmd->add_option("--embedding", reduce.embedding)->required();
  reduce_cmd->add_flag("--directed", reduce.directed, "orient every edge from left to right");
  reduce_cmd->add_flag("--simple", reduce.simple, "expand costs into unit edges");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("--suite", verify.suite)->check(CLI::IsMember({"lemmas", "compositions", "reductions"}));
  verify_cmd->add_option("--q-max", verify.q_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*compose_cmd) return run_compose(compose);
    if (*solve_cmd) return run_solve(solve);
    if (*reduce_cmd) return run_reduce(reduce);
    return run_verify(verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_usage;
}
