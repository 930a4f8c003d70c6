#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvs/config.hpp"
#include "fvs/problem.hpp"

namespace fvs {

// Malformed configuration or command-line input (CLI exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { find_fvs, find_sfvs, baseline_fvs, baseline_sfvs };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& s);
bool is_sfvs_algorithm(Algorithm a);
// Approximation factor the algorithm targets for an instance of the given
// alpha: 2a, 2, 2a + 1, 3.
int approximation_factor(Algorithm a, int alpha);

// Flat key = value file, '#' comments. Keys:
//   profile           paper | desk
//   generator         alpha | tournament
//   n_min, n_max      vertex count range (inclusive)
//   alpha             comma-separated list, cycled over instances
//   instances         number of generated instances
//   seeds             solver seeds per instance
//   base_seed         root seed for instances and solver runs
//   algorithms        comma-separated: find_fvs, find_sfvs, baseline_fvs, baseline_sfvs
//   weight_max        weights uniform in [0, weight_max]; 1 with unit_weights
//   unit_weights      true | false
//   cross_p           cross-block arc probability
//   digons            true | false
//   terminal_fraction fraction of vertices in S
//   oracle            true | false
//   oracle_limit      largest n handed to the exact oracles
//   reps, base_case_n, subset_cap   optional overrides of the profile
//   output            CSV path
struct BenchConfig {
  Profile profile = Profile::desk;
  bool tournaments_only = false;
  int n_min = 5;
  int n_max = 12;
  std::vector<int> alphas{1};
  int instances = 10;
  int seeds = 1;
  std::uint64_t base_seed = 1;
  std::vector<Algorithm> algorithms{Algorithm::find_fvs};
  Weight weight_max = 1;
  bool unit_weights = true;
  double cross_p = 0.5;
  bool digons = false;
  double terminal_fraction = 0.5;
  bool oracle = true;
  int oracle_limit = 15;
  std::optional<int> reps;
  std::optional<int> base_case_n;
  std::optional<int> subset_cap;
  std::string output;
  int threads = 0;  // 0: FVS_TOOLKIT_THREADS or hardware concurrency

  void validate() const;
};

BenchConfig parse_bench_config(std::istream& in);
BenchConfig parse_bench_config_string(const std::string& text);
BenchConfig read_bench_config(const std::string& path);

// Profile constants for `alpha`, with any overrides applied.
AlgoConfig make_algo_config(Profile profile, int alpha, std::uint64_t seed, std::optional<int> reps,
                            std::optional<int> base_case_n, std::optional<int> subset_cap);

struct ExperimentRow {
  int instance_id = 0;
  int n = 0;
  int alpha = 1;
  int terminals = 0;
  Algorithm algorithm = Algorithm::find_fvs;
  Profile profile = Profile::desk;
  std::uint64_t seed = 0;
  Weight weight = 0;
  std::optional<Weight> oracle_weight;
  std::optional<double> ratio;  // present iff oracle_weight > 0
  bool valid = false;
  std::int64_t wall_us = 0;

  // weight <= factor * oracle; nullopt without an oracle.
  std::optional<bool> within_factor() const;
};

// Rows come back in (instance, seed, algorithm) order whatever the thread
// count. Deterministic baselines run once per instance, on the first seed.
std::vector<ExperimentRow> run_bench(const BenchConfig& cfg);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const ExperimentRow& row);
std::string format_csv(const std::vector<ExperimentRow>& rows);

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::find_fvs;
  std::size_t runs = 0;
  std::size_t invalid = 0;
  std::size_t with_oracle = 0;
  std::size_t within_factor = 0;
  double max_ratio = 0.0;

  double fraction_within() const {
    return with_oracle == 0 ? 1.0 : static_cast<double>(within_factor) / with_oracle;
  }
};

std::vector<AlgorithmSummary> summarize(const std::vector<ExperimentRow>& rows);

// {"vertices":[...],"weight":W,"algorithm":A,"seed":S,"profile":P}
std::string solution_json(const Solution& s, Profile profile);
// Reads the "vertices" array of a solution file; throws ConfigError.
VertexSet parse_solution_vertices(const std::string& json_text);

}  // namespace fvs
