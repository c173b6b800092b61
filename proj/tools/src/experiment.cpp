#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "abelcut/errors.hpp"
#include "abelcut/parallel.hpp"
#include "abelcut_cli/commands.hpp"
#include "abelcut_cli/graph_io.hpp"

namespace abelcut::cli {

namespace {

std::vector<std::string> expand_families(const json& families) {
  std::vector<std::string> out;
  for (const auto& f : families) {
    if (f.is_string()) {
      out.push_back(f.get<std::string>());
      continue;
    }
    if (!f.is_object()) throw ValidationError("family entries must be strings or objects");
    for (const auto& [kind, params] : f.items()) {
      if (!params.is_array()) throw ValidationError("family sweep '" + kind + "' needs a list");
      for (const auto& p : params) out.push_back(kind + ":" + (p.is_string() ? p.get<std::string>() : p.dump()));
    }
  }
  return out;
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// "family,algo" from a row laid out as family,graph,n,d,algo,...; no field is quoted.
std::string row_key(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',') && fields.size() < 5;) fields.push_back(f);
  if (fields.size() < 5) return {};
  return fields[0] + "," + fields[4];
}

}  // namespace

ExperimentSummary run_experiment(const json& spec, const std::string& output_override) {
  if (!spec.is_object()) throw ValidationError("experiment spec must be an object");
  const auto families = expand_families(spec.at("families"));
  const auto algos = spec.at("algorithms").get<std::vector<std::string>>();
  const std::string output = output_override.empty() ? spec.at("output").get<std::string>() : output_override;
  const bool timing = spec.value("timing", false);
  CutOptions base;
  base.eps = spec.value("eps", 0.05);
  base.seed = spec.value("seed", uint64_t{7});
  base.budget = spec.value("budget", int64_t{256});
  base.kmax = spec.value("kmax", int64_t{0});
  for (const auto& a : algos)
    if (a == "advice") throw ValidationError("experiment does not take the advice algorithm (it needs an advice cut)");

  const std::string header = "family," + cut_csv_header() + ",reference";

  // Keys in spec order.
  std::vector<std::string> keys;
  std::vector<std::pair<std::string, std::string>> jobs;
  for (const auto& f : families)
    for (const auto& a : algos) {
      keys.push_back(f + "," + a);
      jobs.emplace_back(f, a);
    }

  std::map<std::string, std::string> rows;
  std::vector<std::string> foreign;  // rows from an earlier spec, kept verbatim
  {
    std::string existing;
    try {
      existing = read_text(output);
    } catch (const ValidationError&) {
    }
    std::istringstream in(existing);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.starts_with("family,")) continue;
      const std::string key = row_key(line);
      if (std::find(keys.begin(), keys.end(), key) != keys.end())
        rows[key] = line;
      else
        foreign.push_back(line);
    }
  }

  ExperimentSummary summary;
  summary.rows_total = static_cast<int64_t>(jobs.size());
  std::vector<size_t> pending;
  for (size_t i = 0; i < jobs.size(); ++i) {
    if (rows.count(keys[i]))
      ++summary.rows_skipped;
    else
      pending.push_back(i);
  }

  std::mutex lock;
  auto flush = [&] {
    std::ostringstream os;
    os << "# abelcut experiment generated " << timestamp() << "\n" << header << "\n";
    for (const auto& k : keys)
      if (auto it = rows.find(k); it != rows.end()) os << it->second << "\n";
    for (const auto& line : foreign) os << line << "\n";
    write_text_atomic(output, os.str());
  };

  parallel_for(static_cast<int64_t>(pending.size()), [&](int64_t idx) {
    const size_t i = pending[static_cast<size_t>(idx)];
    const auto& [family, algo] = jobs[i];
    CutOptions opt = base;
    opt.algo = algo;
    std::string line;
    try {
      const Graph g = graph_from_family(family, opt.seed);
      const CutOutcome r = run_cut(g, opt);
      line = family + "," + cut_csv_row(g, opt, r, timing) + "," + r.reference;
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> guard(lock);
      ++summary.rows_failed;
      std::cerr << "experiment: " << family << " " << algo << ": " << e.what() << "\n";
      return;
    }
    std::lock_guard<std::mutex> guard(lock);
    rows[keys[i]] = std::move(line);
    ++summary.rows_run;
    flush();
  });
  if (pending.empty()) flush();
  return summary;
}

}  // namespace abelcut::cli
