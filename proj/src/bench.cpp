#include "fvs/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "fvs/exact.hpp"
#include "fvs/fvs_approx.hpp"
#include "fvs/generators.hpp"
#include "fvs/rng.hpp"
#include "fvs/sfvs_approx.hpp"

namespace fvs {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_int(const std::string& key, const std::string& v) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size())
    throw ConfigError("bad integer for " + key + ": '" + v + "'");
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) throw ConfigError("bad number for " + key + ": '" + v + "'");
  return d;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + v + "'");
}

int worker_count(int requested, std::size_t jobs) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("FVS_TOOLKIT_THREADS")) {
      int cap = 0;
      const std::string s(env);
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
      if (ec == std::errc() && p == s.data() + s.size() && cap >= 1) n = std::min(n, cap);
    }
  }
  return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(jobs, 1)));
}

struct InstanceJob {
  int id = 0;
  GenSpec spec;
};

std::vector<InstanceJob> plan_instances(const BenchConfig& cfg) {
  std::vector<InstanceJob> jobs;
  for (int k = 0; k < cfg.instances; ++k) {
    const std::uint64_t key = substream(cfg.base_seed, static_cast<std::uint64_t>(k));
    SplitMix64 rng(key);
    GenSpec spec;
    spec.n = cfg.n_min + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(cfg.n_max - cfg.n_min + 1)));
    spec.alpha = cfg.tournaments_only ? 1 : cfg.alphas[static_cast<std::size_t>(k) % cfg.alphas.size()];
    spec.alpha = std::min(spec.alpha, spec.n);
    spec.cross_arc_prob = cfg.cross_p;
    spec.digon_allowed = cfg.digons;
    spec.weight_max = cfg.unit_weights ? 1 : cfg.weight_max;
    spec.terminal_fraction = cfg.terminal_fraction;
    spec.seed = key;
    jobs.push_back({k, spec});
  }
  return jobs;
}

template <class F>
std::int64_t timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

std::vector<ExperimentRow> run_instance(const BenchConfig& cfg, const InstanceJob& job) {
  GraphFile file = gen_instance(job.spec);
  if (cfg.unit_weights) {
    // gen_instance draws weights from [0, 1]; unit weights mean all ones.
    file.graph = std::move(file.graph).with_weights(std::vector<Weight>(static_cast<std::size_t>(job.spec.n), 1));
  }
  const WeightedDigraph& g = file.graph;
  SfvsInstance inst;
  const bool need_sfvs = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(), is_sfvs_algorithm);
  if (need_sfvs) {
    inst.tournament = g;
    inst.terminals = file.terminals.value_or(VertexSet{});
  }

  std::optional<Weight> fvs_opt, sfvs_opt;
  if (cfg.oracle) {
    if (g.size() > cfg.oracle_limit)
      throw InstanceTooLarge("instance " + std::to_string(job.id) + " has n=" + std::to_string(g.size()) +
                             " above oracle_limit=" + std::to_string(cfg.oracle_limit));
    const bool need_fvs = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                                      [](Algorithm a) { return !is_sfvs_algorithm(a); });
    if (need_fvs) fvs_opt = exact_fvs(g, cfg.oracle_limit).weight;
    if (need_sfvs) sfvs_opt = exact_sfvs(inst, cfg.oracle_limit).weight;
  }

  std::vector<ExperimentRow> rows;
  for (int j = 0; j < cfg.seeds; ++j) {
    const std::uint64_t run_seed = substream(job.spec.seed, 1000 + static_cast<std::uint64_t>(j));
    for (Algorithm a : cfg.algorithms) {
      const bool deterministic = a == Algorithm::baseline_fvs || a == Algorithm::baseline_sfvs;
      if (deterministic && j > 0) continue;
      ExperimentRow row;
      row.instance_id = job.id;
      row.n = g.size();
      row.alpha = job.spec.alpha;
      row.terminals = is_sfvs_algorithm(a) ? static_cast<int>(inst.terminals.size()) : 0;
      row.algorithm = a;
      row.profile = cfg.profile;
      row.seed = deterministic ? 0 : run_seed;
      const AlgoConfig ac = make_algo_config(cfg.profile, is_sfvs_algorithm(a) ? 1 : job.spec.alpha, run_seed,
                                             cfg.reps, cfg.base_case_n, cfg.subset_cap);
      Solution sol;
      row.wall_us = timed([&] {
        switch (a) {
          case Algorithm::find_fvs: sol = find_fvs(g, job.spec.alpha, ac); break;
          case Algorithm::find_sfvs: sol = find_sfvs(inst, ac); break;
          case Algorithm::baseline_fvs: sol = local_ratio_fvs_baseline(g, job.spec.alpha); break;
          case Algorithm::baseline_sfvs: sol = local_ratio_sfvs_baseline(inst); break;
        }
      });
      // Re-check independently of the solver's own flag.
      row.valid = is_sfvs_algorithm(a) ? is_sfvs(inst, sol.vertices) : is_fvs(g, sol.vertices);
      row.weight = total_weight(g, sol.vertices);
      row.oracle_weight = is_sfvs_algorithm(a) ? sfvs_opt : fvs_opt;
      if (row.oracle_weight && *row.oracle_weight > 0)
        row.ratio = static_cast<double>(row.weight) / static_cast<double>(*row.oracle_weight);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::find_fvs: return "find_fvs";
    case Algorithm::find_sfvs: return "find_sfvs";
    case Algorithm::baseline_fvs: return "baseline_fvs";
    case Algorithm::baseline_sfvs: return "baseline_sfvs";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& s) {
  for (Algorithm a : {Algorithm::find_fvs, Algorithm::find_sfvs, Algorithm::baseline_fvs, Algorithm::baseline_sfvs})
    if (to_string(a) == s) return a;
  throw ConfigError("unknown algorithm '" + s + "'");
}

bool is_sfvs_algorithm(Algorithm a) { return a == Algorithm::find_sfvs || a == Algorithm::baseline_sfvs; }

int approximation_factor(Algorithm a, int alpha) {
  switch (a) {
    case Algorithm::find_fvs: return 2 * alpha;
    case Algorithm::find_sfvs: return 2;
    case Algorithm::baseline_fvs: return 2 * alpha + 1;
    case Algorithm::baseline_sfvs: return 3;
  }
  return 0;
}

void BenchConfig::validate() const {
  if (n_min < 1 || n_max < n_min) throw ConfigError("need 1 <= n_min <= n_max");
  if (alphas.empty()) throw ConfigError("alpha list is empty");
  for (int a : alphas)
    if (a < 1) throw ConfigError("alpha values must be >= 1");
  if (instances < 0) throw ConfigError("instances must be >= 0");
  if (seeds < 1) throw ConfigError("seeds must be >= 1");
  if (algorithms.empty()) throw ConfigError("no algorithms selected");
  if (cross_p < 0.0 || cross_p > 1.0) throw ConfigError("cross_p must lie in [0, 1]");
  if (terminal_fraction < 0.0 || terminal_fraction > 1.0) throw ConfigError("terminal_fraction must lie in [0, 1]");
  if (oracle_limit < 0) throw ConfigError("oracle_limit must be >= 0");
  const bool sfvs = std::any_of(algorithms.begin(), algorithms.end(), is_sfvs_algorithm);
  if (sfvs && !tournaments_only && std::any_of(alphas.begin(), alphas.end(), [](int a) { return a != 1; }))
    throw ConfigError("subset algorithms need tournaments: use generator=tournament or alpha=1");
  if (reps && *reps < 1) throw ConfigError("reps must be >= 1");
  if (base_case_n && *base_case_n < 1) throw ConfigError("base_case_n must be >= 1");
  if (subset_cap && *subset_cap < 0) throw ConfigError("subset_cap must be >= 0");
}

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string v = trim(line.substr(eq + 1));
    try {
      if (key == "profile") {
        cfg.profile = parse_profile(v);
      } else if (key == "generator") {
        if (v == "tournament") cfg.tournaments_only = true;
        else if (v == "alpha") cfg.tournaments_only = false;
        else throw ConfigError("generator must be alpha or tournament");
      } else if (key == "n_min") {
        cfg.n_min = parse_int<int>(key, v);
      } else if (key == "n_max") {
        cfg.n_max = parse_int<int>(key, v);
      } else if (key == "alpha") {
        cfg.alphas.clear();
        for (const auto& item : split_list(v)) cfg.alphas.push_back(parse_int<int>(key, item));
      } else if (key == "instances") {
        cfg.instances = parse_int<int>(key, v);
      } else if (key == "seeds") {
        cfg.seeds = parse_int<int>(key, v);
      } else if (key == "base_seed") {
        cfg.base_seed = parse_int<std::uint64_t>(key, v);
      } else if (key == "algorithms") {
        cfg.algorithms.clear();
        for (const auto& item : split_list(v)) cfg.algorithms.push_back(parse_algorithm(item));
      } else if (key == "weight_max") {
        cfg.weight_max = parse_int<Weight>(key, v);
      } else if (key == "unit_weights") {
        cfg.unit_weights = parse_bool(key, v);
      } else if (key == "cross_p") {
        cfg.cross_p = parse_double(key, v);
      } else if (key == "digons") {
        cfg.digons = parse_bool(key, v);
      } else if (key == "terminal_fraction") {
        cfg.terminal_fraction = parse_double(key, v);
      } else if (key == "oracle") {
        cfg.oracle = parse_bool(key, v);
      } else if (key == "oracle_limit") {
        cfg.oracle_limit = parse_int<int>(key, v);
      } else if (key == "reps") {
        cfg.reps = parse_int<int>(key, v);
      } else if (key == "base_case_n") {
        cfg.base_case_n = parse_int<int>(key, v);
      } else if (key == "subset_cap") {
        cfg.subset_cap = parse_int<int>(key, v);
      } else if (key == "output") {
        cfg.output = v;
      } else if (key == "threads") {
        cfg.threads = parse_int<int>(key, v);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

BenchConfig parse_bench_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_bench_config(in);
}

BenchConfig read_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_bench_config(in);
}

AlgoConfig make_algo_config(Profile profile, int alpha, std::uint64_t seed, std::optional<int> reps,
                            std::optional<int> base_case_n, std::optional<int> subset_cap) {
  AlgoConfig c = AlgoConfig::for_profile(profile, alpha, seed);
  if (reps) c.repetitions = *reps;
  if (base_case_n) c.base_case_n = *base_case_n;
  if (subset_cap) c.sfvs_subset_cap = *subset_cap;
  c.validate();
  return c;
}

std::optional<bool> ExperimentRow::within_factor() const {
  if (!oracle_weight) return std::nullopt;
  // weight <= factor * opt without overflow: compare weight / factor.
  const auto f = static_cast<Weight>(approximation_factor(algorithm, alpha));
  const Weight opt = *oracle_weight;
  if (opt > std::numeric_limits<Weight>::max() / f) return true;
  return weight <= f * opt;
}

std::vector<ExperimentRow> run_bench(const BenchConfig& cfg) {
  cfg.validate();
  const std::vector<InstanceJob> jobs = plan_instances(cfg);
  std::vector<std::vector<ExperimentRow>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        slots[k] = run_instance(cfg, jobs[k]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const int workers = worker_count(cfg.threads, jobs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRow> rows;
  for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
  return rows;
}

void write_csv_header(std::ostream& out) {
  out << "instance_id,n,alpha,s,algorithm,profile,seed,weight,oracle_weight,ratio,valid,wall_us\n";
}

void write_csv_row(std::ostream& out, const ExperimentRow& r) {
  out << r.instance_id << ',' << r.n << ',' << r.alpha << ',' << r.terminals << ',' << to_string(r.algorithm)
      << ',' << to_string(r.profile) << ',' << r.seed << ',' << r.weight << ',';
  if (r.oracle_weight) out << *r.oracle_weight;
  out << ',';
  if (r.ratio) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *r.ratio);
    out << buf;
  }
  out << ',' << (r.valid ? "true" : "false") << ',' << r.wall_us << '\n';
}

std::string format_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  write_csv_header(out);
  for (const auto& r : rows) write_csv_row(out, r);
  return out.str();
}

std::vector<AlgorithmSummary> summarize(const std::vector<ExperimentRow>& rows) {
  std::map<Algorithm, AlgorithmSummary> by;
  for (const auto& r : rows) {
    auto& s = by[r.algorithm];
    s.algorithm = r.algorithm;
    ++s.runs;
    if (!r.valid) ++s.invalid;
    if (const auto ok = r.within_factor()) {
      ++s.with_oracle;
      if (*ok) ++s.within_factor;
    }
    if (r.ratio) s.max_ratio = std::max(s.max_ratio, *r.ratio);
  }
  std::vector<AlgorithmSummary> out;
  for (auto& [a, s] : by) out.push_back(s);
  return out;
}

std::string solution_json(const Solution& s, Profile profile) {
  nlohmann::ordered_json j;
  j["vertices"] = s.vertices;
  j["weight"] = s.weight;
  j["algorithm"] = s.algorithm;
  j["seed"] = s.seed;
  j["profile"] = std::string(to_string(profile));
  return j.dump();
}

VertexSet parse_solution_vertices(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("solution is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw ConfigError("solution has no \"vertices\" array");
  VertexSet out;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer()) throw ConfigError("solution vertices must be integers");
    out.push_back(v.get<Vertex>());
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConfigError("solution repeats a vertex");
  return out;
}

}  // namespace fvs
