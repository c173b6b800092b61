// Acceptance runner: `acceptance N` checks criterion N, `acceptance` checks all.
// Prints one "CRITERION N PASS|FAIL ..." line per criterion; exit 1 on any FAIL.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "abelcut/special_cases.hpp"
#include "abelcut_cli/verify.hpp"

using namespace abelcut;
using namespace abelcut::cli;

namespace {

// Pinned tolerances and limits.
constexpr double kEigenTol = 1e-8;
constexpr double kCollisionTol = 1e-10;
constexpr double kCutTol = 1e-9;
constexpr int64_t kTMax = 64;
constexpr int64_t kExhaustiveN = 14;
constexpr int64_t kRandomCuts = 1000;
constexpr int64_t kBuserCrossN = 64;
constexpr double kAdviceEps = 0.05;
constexpr double kAdviceRatio = 2.0;
constexpr double kAuditTol = 1e-5;
constexpr double kPipelineRatio = 4.0;
constexpr uint64_t kSeed = 7;

VerifyOptions pinned() {
  VerifyOptions o;
  o.seed = kSeed;
  o.t_max = kTMax;
  o.exhaustive_limit = kExhaustiveN;
  o.random_cuts = kRandomCuts;
  o.buser_crosscheck_limit = kBuserCrossN;
  o.collision_tol = kCollisionTol;
  o.eigen_tol = kEigenTol;
  o.cut_tol = kCutTol;
  return o;
}

struct Outcome {
  bool ok = false;
  std::string summary;
};

Outcome from_report(const SuiteReport& r, bool show_all = false) {
  int64_t skipped = 0;
  for (const auto& c : r.results) {
    if (c.skipped) ++skipped;
    if (show_all || (!c.ok && !c.skipped))
      std::cout << "    " << (c.skipped ? "skip" : c.ok ? "ok  " : "FAIL") << " " << c.subject << " [" << c.check
                << "] " << c.detail << "\n";
  }
  for (const auto& w : r.warnings) std::cout << "    warning: " << w << "\n";
  Outcome o;
  o.ok = r.ok() && !r.results.empty();
  o.summary = std::to_string(r.passes()) + " passed, " + std::to_string(r.failures()) + " failed, " +
              std::to_string(skipped) + " skipped over " + std::to_string(r.subjects) + " subjects";
  return o;
}

Outcome corpus_suite(const std::string& suite) { return from_report(run_suite(suite, default_corpus(kSeed), pinned())); }

Outcome criterion1() {
  const auto corpus = default_corpus(kSeed);
  bool cyclic = false, boolean_cube = false, mixed = false, small = true;
  for (const auto& e : corpus) {
    if (!e.spec.contains("group")) continue;
    const auto mods = e.spec["group"]["moduli"].get<std::vector<int64_t>>();
    int64_t n = 1;
    for (int64_t m : mods) n *= m;
    small = small && n <= 512;
    const std::set<int64_t> distinct(mods.begin(), mods.end());
    if (mods.size() == 1) cyclic = true;
    if (mods.size() >= 2 && distinct == std::set<int64_t>{2}) boolean_cube = true;
    if (distinct.size() >= 2) mixed = true;
  }
  Outcome o = from_report(run_suite("spectral", corpus, pinned()));
  const bool coverage = corpus.size() >= 30 && cyclic && boolean_cube && mixed && small;
  if (!coverage) std::cout << "    corpus coverage requirement not met\n";
  o.ok = o.ok && coverage;
  o.summary += "; corpus " + std::to_string(corpus.size()) + " graphs (Z_n " + (cyclic ? "yes" : "no") + ", Z_2^k " +
               (boolean_cube ? "yes" : "no") + ", mixed " + (mixed ? "yes" : "no") + ")";
  return o;
}

Outcome criterion11() {
  Outcome o = from_report(suite_codes(20, kSeed));
  const auto h = code_spectrum_check(BinaryLinearCode::hamming74());
  const bool hamming = h.ok && h.census.distance == 3 && h.census.count == 7;
  if (!hamming) std::cout << "    hamming [7,4] expected (3, 7)\n";
  o.ok = o.ok && hamming;
  o.summary += "; hamming [7,4] (" + std::to_string(h.census.distance) + ", " + std::to_string(h.census.count) + ")";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "spectral identity", 60, criterion1},
      {2, "collision identity", 60, [] { return corpus_suite("collision"); }},
      {3, "CP ratio bound", 0, [] { return corpus_suite("cpratio"); }},
      {4, "multiplicity certificate", 0, [] { return corpus_suite("multiplicity"); }},
      {5, "Cheeger and cut identities", 0, [] { return corpus_suite("cheeger"); }},
      {6, "Buser bound", 0, [] { return corpus_suite("buser"); }},
      {7, "containment", 300, [] { return from_report(suite_containment({0.25, 0.5}), true); }},
      {8, "advice SDP", 600, [] { return from_report(suite_advice(kAdviceEps, kAdviceRatio, kAuditTol), true); }},
      {9, "end-to-end pipeline", 900,
       [] { return from_report(suite_enum(default_corpus(kSeed), kAdviceEps, kPipelineRatio, 16, 64, kSeed)); }},
      {10, "Z_p^n sandwich", 0, [] { return from_report(suite_zpn(2401, kSeed)); }},
      {11, "code bridge", 0, criterion11},
      {12, "cycle Fourier profile", 0, [] { return from_report(suite_cycles({8, 16, 32, 64}, {0.05, 0.1, 0.2})); }},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
  const bool pass = o.ok && in_time;
  std::cout << "CRITERION " << c.id << " " << (pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.summary << " ("
            << secs << " s";
  if (c.limit_s > 0) std::cout << ", limit " << c.limit_s << " s" << (in_time ? "" : " EXCEEDED");
  std::cout << ")" << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool all_pass = true;
  if (argc > 1) {
    const int id = std::atoi(argv[1]);
    for (const auto& c : criteria())
      if (c.id == id) return run_one(c) ? 0 : 1;
    std::cerr << "unknown criterion " << argv[1] << "\n";
    return 2;
  }
  for (const auto& c : criteria()) all_pass = run_one(c) && all_pass;
  return all_pass ? 0 : 1;
}
