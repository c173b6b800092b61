#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelcut/graph.hpp"

namespace abelcut::cli {

using nlohmann::json;

struct CorpusEntry {
  std::string name;
  json spec;  // graph JSON, loaded lazily so corrupt entries surface as failures
};

/// 40+ connected Cayley graphs with n <= 512: cycles, hypercubes, tori,
/// complete graphs, Z_p^n, code graphs, mixed products with random generators.
std::vector<CorpusEntry> default_corpus(uint64_t seed = 7);
/// Every *.json file in the directory, sorted by file name.
std::vector<CorpusEntry> load_corpus_dir(const std::string& dir);
/// Rewrites the first entry as an explicit adjacency matrix with one entry
/// bumped, so it is no longer symmetric.
void inject_asymmetry(std::vector<CorpusEntry>& corpus);

struct CheckResult {
  std::string suite;
  std::string subject;  // graph or instance name
  std::string check;
  bool ok = false;
  bool skipped = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> results;
  std::vector<std::string> warnings;
  int64_t subjects = 0;

  int64_t failures() const;
  int64_t passes() const;
  bool ok() const { return failures() == 0; }
  void append(const SuiteReport& other);
  json to_json() const;
};

struct VerifyOptions {
  uint64_t seed = 7;
  int64_t t_max = 64;
  int64_t exhaustive_limit = 14;  // exhaustive cut checks up to this n
  int64_t random_cuts = 1000;
  int64_t buser_crosscheck_limit = 64;
  double collision_tol = 1e-10;
  double eigen_tol = 1e-8;
  double cut_tol = 1e-9;
};

// Per-graph checks. Each returns one or more results for the graph.
std::vector<CheckResult> check_structure(const Graph& g);
std::vector<CheckResult> check_spectral(const Graph& g, const VerifyOptions& opt);
std::vector<CheckResult> check_collision(const Graph& g, const VerifyOptions& opt);
std::vector<CheckResult> check_cp_ratio(const Graph& g, const VerifyOptions& opt);
std::vector<CheckResult> check_multiplicity(const Graph& g, const VerifyOptions& opt);
std::vector<CheckResult> check_cheeger(const Graph& g, const VerifyOptions& opt);
std::vector<CheckResult> check_buser(const Graph& g, const VerifyOptions& opt);

// Fixed-instance suites.
SuiteReport suite_containment(const std::vector<double>& eps_list = {0.25, 0.5});
SuiteReport suite_advice(double eps = 0.05, double ratio_bound = 2.0, double audit_tol = 1e-5);
/// Enumeration pipeline on every corpus graph with n <= max_n (ratio to the
/// oracle) and on cycles C_8..C_max_cycle (exact optimum).
SuiteReport suite_enum(const std::vector<CorpusEntry>& corpus, double eps = 0.05, double ratio_bound = 4.0,
                       int64_t max_n = 16, int64_t max_cycle = 64, uint64_t seed = 7);
SuiteReport suite_zpn(int64_t max_order = 2401, uint64_t seed = 7);
SuiteReport suite_codes(int64_t random_codes = 20, uint64_t seed = 7);
SuiteReport suite_cycles(const std::vector<int64_t>& sizes = {8, 16, 32, 64},
                         const std::vector<double>& eps_list = {0.05, 0.1, 0.2});

/// Suite names: structure, spectral, collision, cpratio, multiplicity,
/// cheeger, buser (per corpus graph); corpus (all of those); containment,
/// advice, enum, zpn, codes, cycles (fixed instances); all.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt);

}  // namespace abelcut::cli
