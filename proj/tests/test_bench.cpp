#include <sstream>

#include "doctest.h"
#include "fvs/bench.hpp"
#include "fvs/exact.hpp"
#include "json.hpp"

using namespace fvs;

namespace {

// CSV text without the trailing wall_us column.
std::string strip_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

}  // namespace

TEST_CASE("algorithm names and factors") {
  for (Algorithm a : {Algorithm::find_fvs, Algorithm::find_sfvs, Algorithm::baseline_fvs, Algorithm::baseline_sfvs})
    CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_THROWS_AS(parse_algorithm("greedy"), ConfigError);
  CHECK(approximation_factor(Algorithm::find_fvs, 3) == 6);
  CHECK(approximation_factor(Algorithm::find_sfvs, 3) == 2);
  CHECK(approximation_factor(Algorithm::baseline_fvs, 2) == 5);
  CHECK(approximation_factor(Algorithm::baseline_sfvs, 1) == 3);
}

TEST_CASE("parse_bench_config") {
  const BenchConfig c = parse_bench_config_string(
      "# comment\n"
      "profile = desk\n"
      "generator = alpha\n"
      "n_min = 4\n"
      "n_max = 9   # trailing comment\n"
      "alpha = 1, 2,3\n"
      "instances = 7\n"
      "seeds = 2\n"
      "base_seed = 99\n"
      "algorithms = find_fvs,baseline_fvs\n"
      "unit_weights = false\n"
      "weight_max = 6\n"
      "digons = true\n"
      "oracle_limit = 12\n"
      "reps = 5\n");
  CHECK(c.n_min == 4);
  CHECK(c.n_max == 9);
  CHECK(c.alphas == std::vector<int>{1, 2, 3});
  CHECK(c.instances == 7);
  CHECK(c.seeds == 2);
  CHECK(c.base_seed == 99);
  CHECK(c.algorithms == std::vector<Algorithm>{Algorithm::find_fvs, Algorithm::baseline_fvs});
  CHECK_FALSE(c.unit_weights);
  CHECK(c.weight_max == 6);
  CHECK(c.digons);
  CHECK(c.oracle_limit == 12);
  REQUIRE(c.reps);
  CHECK(*c.reps == 5);
  CHECK_FALSE(c.base_case_n);

  CHECK_THROWS_AS(parse_bench_config_string("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("n_min\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("n_min = x\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("n_min = 9\nn_max = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("oracle = maybe\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("profile = fast\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("cross_p = 1.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_bench_config_string("algorithms = find_sfvs\nalpha = 2\n"), ConfigError);
  CHECK_NOTHROW(parse_bench_config_string("algorithms = find_sfvs\nalpha = 2\ngenerator = tournament\n"));
  CHECK_THROWS_AS(read_bench_config("/nonexistent/bench.cfg"), ConfigError);
}

TEST_CASE("run_bench rows, ratios and determinism") {
  BenchConfig c;
  c.instances = 12;
  c.seeds = 2;
  c.alphas = {1, 2};
  c.unit_weights = false;
  c.weight_max = 5;
  c.algorithms = {Algorithm::find_fvs, Algorithm::baseline_fvs};
  c.threads = 3;
  const auto rows = run_bench(c);
  // Two find_fvs rows and one baseline row per instance.
  CHECK(rows.size() == 36);
  for (const auto& r : rows) {
    CHECK(r.valid);
    REQUIRE(r.oracle_weight);
    CHECK(r.ratio.has_value() == (*r.oracle_weight > 0));
    CHECK(r.n >= c.n_min);
    CHECK(r.n <= c.n_max);
    if (r.algorithm == Algorithm::baseline_fvs) CHECK(r.seed == 0);
  }
  CHECK(rows[0].instance_id == 0);
  CHECK(rows[0].algorithm == Algorithm::find_fvs);
  CHECK(rows[1].algorithm == Algorithm::baseline_fvs);
  CHECK(rows[2].algorithm == Algorithm::find_fvs);
  CHECK(rows[3].instance_id == 1);

  c.threads = 1;
  CHECK(strip_wall_time(format_csv(run_bench(c))) == strip_wall_time(format_csv(rows)));
  c.base_seed = 2;
  CHECK(strip_wall_time(format_csv(run_bench(c))) != strip_wall_time(format_csv(rows)));

  const std::string csv = format_csv(rows);
  CHECK(csv.rfind("instance_id,n,alpha,s,algorithm,profile,seed,weight,oracle_weight,ratio,valid,wall_us\n", 0) == 0);
}

TEST_CASE("desk suite on tournaments stays within the factor often") {
  BenchConfig c;
  c.tournaments_only = true;
  c.instances = 200;
  c.algorithms = {Algorithm::find_fvs, Algorithm::find_sfvs};
  c.base_case_n = 4;
  c.subset_cap = 1;
  const auto rows = run_bench(c);
  for (const auto& s : summarize(rows)) {
    CHECK(s.runs == 200);
    CHECK(s.invalid == 0);
    CHECK(s.fraction_within() >= 0.5);
  }
}

TEST_CASE("oracle limit is enforced") {
  BenchConfig c;
  c.n_min = c.n_max = 14;
  c.oracle_limit = 13;
  c.instances = 1;
  CHECK_THROWS_AS(run_bench(c), InstanceTooLarge);
  c.oracle = false;
  const auto rows = run_bench(c);
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].oracle_weight);
  CHECK_FALSE(rows[0].within_factor());
}

TEST_CASE("solution json round trip") {
  Solution s;
  s.vertices = {1, 4, 7};
  s.weight = 12;
  s.algorithm = "find_fvs";
  s.seed = 3;
  const std::string text = solution_json(s, Profile::desk);
  const auto j = nlohmann::json::parse(text);
  CHECK(j["weight"] == 12);
  CHECK(j["profile"] == "desk");
  CHECK(j["seed"] == 3);
  CHECK(parse_solution_vertices(text) == s.vertices);
  CHECK(parse_solution_vertices("{\"vertices\":[5,2]}") == VertexSet{2, 5});
  CHECK_THROWS_AS(parse_solution_vertices("{\"vertices\":[1,1]}"), ConfigError);
  CHECK_THROWS_AS(parse_solution_vertices("{\"weight\":1}"), ConfigError);
  CHECK_THROWS_AS(parse_solution_vertices("[1,2"), ConfigError);
  CHECK_THROWS_AS(parse_solution_vertices("{\"vertices\":[\"a\"]}"), ConfigError);
}
