#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"

namespace abelcut::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kInternal = 1, kValidation = 2, kVerification = 3, kSizeGuard = 4 };

struct CutOptions {
  std::string algo = "fiedler";  // fiedler | brute | advice | enum | zpn
  double eps = 0.05;
  int64_t kmax = 0;  // 0: no limit beyond n
  uint64_t seed = 7;
  int64_t budget = 256;
  std::optional<Cut> advice;
};

struct CutOutcome {
  Cut cut;
  double phi = 0.0;  // partition conductance
  double psi = 0.0;
  std::optional<double> phi_opt;
  std::string reference;  // oracle, closed-form, or empty
  double wall_ms = 0.0;
  json details;
};

/// Runs one algorithm. phi_opt comes from the exhaustive oracle for n <= 20
/// and from the closed form for plain cycles.
CutOutcome run_cut(const Graph& g, const CutOptions& opt);

std::string cut_csv_header();
std::string cut_csv_row(const Graph& g, const CutOptions& opt, const CutOutcome& r, bool with_time = true);

struct ExperimentSummary {
  int64_t rows_total = 0;
  int64_t rows_run = 0;
  int64_t rows_skipped = 0;
  int64_t rows_failed = 0;
};

/// Spec: {"families": [...], "algorithms": [...], "eps": x, "seed": s,
/// "budget": b, "kmax": k, "output": "path.csv", "timing": false}.
/// Families are descriptors for graph_from_family, or {"cycle": [8, 16]}
/// style sweeps. Existing rows in the output are kept and their keys skipped.
/// The file is rewritten through a temporary after each row.
ExperimentSummary run_experiment(const json& spec, const std::string& output_override = {});

/// Entry point shared by the abelcut binary and the CLI tests.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace abelcut::cli
