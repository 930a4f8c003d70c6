// fvs_toolkit: generate instances, run the solvers, oracles and baselines,
// sweep benchmarks and validate solution files.
//
// Exit status: 0 ok, 1 invalid solution, 2 malformed input or config,
// 3 instance above the exact-oracle limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fvs/bench.hpp"
#include "fvs/exact.hpp"
#include "fvs/fvs_approx.hpp"
#include "fvs/generators.hpp"
#include "fvs/graph_io.hpp"
#include "fvs/sfvs_approx.hpp"

namespace {

using namespace fvs;

constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;
constexpr int kExitTooLarge = 3;

// Largest graph whose independence number is computed when --alpha is absent.
constexpr int kAlphaProbeLimit = 20;

struct SolverFlags {
  std::uint64_t seed = 0;
  std::string profile = "desk";
  std::optional<int> reps;
  std::optional<int> base_case_n;
  std::optional<int> subset_cap;
  std::optional<int> alpha;
  std::string out;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--seed", f.seed, "RNG seed");
  cmd->add_option("--profile", f.profile, "paper | desk")->check(CLI::IsMember({"paper", "desk"}));
  cmd->add_option("--reps", f.reps, "pivot trials per recursion node");
  cmd->add_option("--base-case-n", f.base_case_n, "exact base case size");
  cmd->add_option("--subset-cap", f.subset_cap, "largest guessed terminal subset");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int resolve_alpha(const WeightedDigraph& g, std::optional<int> given) {
  if (given) {
    if (*given < 1) throw ConfigError("--alpha must be >= 1");
    return *given;
  }
  if (g.is_tournament()) return 1;
  if (g.size() <= kAlphaProbeLimit) return std::max(1, independence_number_exact(g, kAlphaProbeLimit));
  throw ConfigError("graph has " + std::to_string(g.size()) + " vertices and is not a tournament; pass --alpha");
}

SfvsInstance sfvs_instance(const GraphFile& file) {
  if (!file.terminals) throw ConfigError("instance has no terminal line (S ...)");
  SfvsInstance inst{file.graph, *file.terminals};
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return inst;
}

std::string solution_with_config(const Solution& s, Profile profile, const AlgoConfig* cfg, int alpha) {
  auto j = nlohmann::ordered_json::parse(solution_json(s, profile));
  if (cfg) {
    j["config"] = {{"alpha", alpha},
                   {"base_case_n", cfg->base_case_n},
                   {"repetitions", cfg->repetitions},
                   {"light_fraction_den", cfg->light_fraction_den},
                   {"sfvs_base_s", cfg->sfvs_base_s},
                   {"sfvs_subset_cap", cfg->sfvs_subset_cap}};
  }
  return j.dump() + "\n";
}

bool want_sfvs(const std::string& problem, const GraphFile& file) {
  if (problem == "fvs") return false;
  if (problem == "sfvs") return true;
  return file.terminals.has_value();
}

int run(int argc, char** argv) {
  CLI::App app{"Feedback vertex set toolkit"};
  app.require_subcommand(1);

  // gen
  GenSpec spec;
  bool tournament = false;
  std::optional<Weight> weight_max;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--alpha", spec.alpha, "number of tournament blocks");
  gen->add_option("--cross-p", spec.cross_arc_prob, "cross-block arc probability");
  gen->add_flag("--digons", spec.digon_allowed, "allow arcs in both directions across blocks");
  gen->add_option("--weight-max", weight_max, "weights uniform in [0, max] (default: unit weights)");
  gen->add_option("--terminals", spec.terminal_fraction, "fraction of vertices in S");
  gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_flag("--tournament", tournament, "shorthand for --alpha 1");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve-fvs / solve-sfvs / baseline / exact / validate
  SolverFlags flags;
  std::string input;
  std::string problem = "auto";
  int oracle_limit = kDefaultExactLimit;

  auto* solve_fvs = app.add_subcommand("solve-fvs", "run the randomized FVS approximation");
  solve_fvs->add_option("instance", input)->required();
  add_solver_flags(solve_fvs, flags);
  solve_fvs->add_option("--alpha", flags.alpha, "independence number bound");
  solve_fvs->add_option("--out", flags.out, "output file (default stdout)");

  auto* solve_sfvs = app.add_subcommand("solve-sfvs", "run the randomized subset FVS approximation");
  solve_sfvs->add_option("instance", input)->required();
  add_solver_flags(solve_sfvs, flags);
  solve_sfvs->add_option("--out", flags.out, "output file (default stdout)");

  auto* baseline = app.add_subcommand("baseline", "run the local-ratio baseline");
  baseline->add_option("instance", input)->required();
  baseline->add_option("--problem", problem, "fvs | sfvs | auto")->check(CLI::IsMember({"fvs", "sfvs", "auto"}));
  baseline->add_option("--alpha", flags.alpha, "independence number bound");
  baseline->add_option("--out", flags.out, "output file (default stdout)");

  auto* exact = app.add_subcommand("exact", "run the exact oracle");
  exact->add_option("instance", input)->required();
  exact->add_option("--problem", problem, "fvs | sfvs | auto")->check(CLI::IsMember({"fvs", "sfvs", "auto"}));
  exact->add_option("--oracle-limit", oracle_limit, "largest n accepted");
  exact->add_option("--out", flags.out, "output file (default stdout)");

  std::string solution_path;
  auto* validate = app.add_subcommand("validate", "check a solution file against an instance");
  validate->add_option("instance", input)->required();
  validate->add_option("solution", solution_path)->required();
  validate->add_option("--problem", problem, "fvs | sfvs | auto")->check(CLI::IsMember({"fvs", "sfvs", "auto"}));

  // bench
  std::string config_path;
  std::optional<std::string> bench_profile;
  std::optional<std::uint64_t> bench_seed;
  std::optional<int> bench_oracle_limit;
  SolverFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "sweep instances x seeds x algorithms into CSV");
  bench->add_option("config", config_path)->required();
  bench->add_option("--seed", bench_seed, "override base_seed");
  bench->add_option("--profile", bench_profile, "override profile")->check(CLI::IsMember({"paper", "desk"}));
  bench->add_option("--reps", bench_flags.reps, "override reps");
  bench->add_option("--base-case-n", bench_flags.base_case_n, "override base_case_n");
  bench->add_option("--subset-cap", bench_flags.subset_cap, "override subset_cap");
  bench->add_option("--oracle-limit", bench_oracle_limit, "override oracle_limit");
  bench->add_option("--out", bench_flags.out, "override output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (gen->parsed()) {
    if (tournament) spec.alpha = 1;
    const bool unit = !weight_max;
    spec.weight_max = weight_max.value_or(1);
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    GraphFile file = gen_instance(spec);
    if (unit) file.graph = std::move(file.graph).with_weights(std::vector<Weight>(static_cast<std::size_t>(spec.n), 1));
    emit(format_graph(file), gen_out);
    return 0;
  }

  if (bench->parsed()) {
    BenchConfig cfg = read_bench_config(config_path);
    if (bench_seed) cfg.base_seed = *bench_seed;
    if (bench_profile) cfg.profile = parse_profile(*bench_profile);
    if (bench_flags.reps) cfg.reps = bench_flags.reps;
    if (bench_flags.base_case_n) cfg.base_case_n = bench_flags.base_case_n;
    if (bench_flags.subset_cap) cfg.subset_cap = bench_flags.subset_cap;
    if (bench_oracle_limit) cfg.oracle_limit = *bench_oracle_limit;
    if (!bench_flags.out.empty()) cfg.output = bench_flags.out;
    cfg.validate();
    const auto rows = run_bench(cfg);
    emit(format_csv(rows), cfg.output);
    bool all_valid = true;
    for (const auto& s : summarize(rows)) {
      std::cerr << to_string(s.algorithm) << ": runs=" << s.runs << " invalid=" << s.invalid;
      if (s.with_oracle > 0)
        std::cerr << " within_factor=" << s.within_factor << "/" << s.with_oracle << " max_ratio=" << s.max_ratio;
      std::cerr << "\n";
      if (s.invalid > 0) all_valid = false;
    }
    return all_valid ? 0 : kExitInvalid;
  }

  const GraphFile file = read_graph_file(input);
  const Profile profile = parse_profile(flags.profile);

  if (solve_fvs->parsed()) {
    const int alpha = resolve_alpha(file.graph, flags.alpha);
    const AlgoConfig cfg =
        make_algo_config(profile, alpha, flags.seed, flags.reps, flags.base_case_n, flags.subset_cap);
    const Solution s = find_fvs(file.graph, alpha, cfg);
    emit(solution_with_config(s, profile, &cfg, alpha), flags.out);
    return s.valid ? 0 : kExitInvalid;
  }

  if (solve_sfvs->parsed()) {
    const SfvsInstance inst = sfvs_instance(file);
    const AlgoConfig cfg = make_algo_config(profile, 1, flags.seed, flags.reps, flags.base_case_n, flags.subset_cap);
    const Solution s = find_sfvs(inst, cfg);
    emit(solution_with_config(s, profile, &cfg, 1), flags.out);
    return s.valid ? 0 : kExitInvalid;
  }

  if (baseline->parsed()) {
    Solution s;
    if (want_sfvs(problem, file)) {
      s = local_ratio_sfvs_baseline(sfvs_instance(file));
    } else {
      s = local_ratio_fvs_baseline(file.graph, resolve_alpha(file.graph, flags.alpha));
    }
    emit(solution_with_config(s, profile, nullptr, 0), flags.out);
    return s.valid ? 0 : kExitInvalid;
  }

  if (exact->parsed()) {
    const Solution s = want_sfvs(problem, file) ? exact_sfvs(sfvs_instance(file), oracle_limit)
                                                : exact_fvs(file.graph, oracle_limit);
    emit(solution_with_config(s, profile, nullptr, 0), flags.out);
    return 0;
  }

  if (validate->parsed()) {
    const VertexSet f = parse_solution_vertices(read_text(solution_path));
    for (Vertex v : f)
      if (!file.graph.contains(v)) throw ConfigError("solution names unknown vertex " + std::to_string(v));
    const bool sfvs = want_sfvs(problem, file);
    const bool ok = sfvs ? is_sfvs(sfvs_instance(file), f) : is_fvs(file.graph, f);
    std::cout << (ok ? "valid" : "invalid") << " " << (sfvs ? "sfvs" : "fvs") << " weight=" << total_weight(file.graph, f)
              << "\n";
    return ok ? 0 : kExitInvalid;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fvs::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const fvs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fvs::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
