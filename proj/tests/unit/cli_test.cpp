#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/group.hpp"
#include "abelcut_cli/commands.hpp"
#include "abelcut_cli/graph_io.hpp"
#include "abelcut_cli/verify.hpp"

using namespace abelcut;
using namespace abelcut::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "abelcut");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("abelcut_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string without_first_line(const std::string& s) { return s.substr(s.find('\n') + 1); }

}  // namespace

TEST(Cli, GenRoundTrip) {
  const auto dir = scratch_dir("gen");
  for (const std::string fam : {"cycle:9", "hypercube:3", "torus:3x4", "zpn:3:2", "code:hamming74"}) {
    const std::string path = (dir / "g.json").string();
    const auto r = run_args({"gen", fam, "-o", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const Graph a = load_graph(path);
    const Graph b = graph_from_family(fam, 7);
    EXPECT_TRUE(a == b) << fam;
    EXPECT_TRUE(a.is_cayley()) << fam;
    // Writing again gives the same bytes.
    const Graph c = graph_from_json(graph_to_json(a));
    EXPECT_EQ(graph_to_json(c).dump(), graph_to_json(a).dump());
  }
}

TEST(Cli, RandomCayleyIsSymmetricAndConnected) {
  const Graph g = graph_from_family("random:24:4", 7);
  ASSERT_TRUE(g.is_cayley());
  EXPECT_EQ(g.size(), 24);
  EXPECT_EQ(g.regular_degree(), 4);
  EXPECT_TRUE(validate_generators(g.provenance()->group, g.provenance()->generators).empty());
  EXPECT_EQ(connectivity(g), 1);
  EXPECT_TRUE(graph_from_family("random:24:4", 7) == g);
}

TEST(Cli, AsymmetricInputRejected) {
  const json j = {{"n", 3}, {"adjacency", {{0, 1, 0}, {0, 0, 1}, {0, 1, 0}}}};
  EXPECT_THROW(graph_from_json(j), ValidationError);
  const json k = {{"group", {{"moduli", {5}}}}, {"generators", {{{"element", {1}}, {"mult", 1}}}}};
  EXPECT_THROW(graph_from_json(k), ValidationError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_args({"cut", "bogus:3"}).code, kValidation);
  EXPECT_EQ(run_args({"cut", "cycle:8", "--eps", "-1", "--algo", "enum"}).code, kValidation);
  EXPECT_EQ(run_args({"cut", "cycle:40", "--algo", "brute"}).code, kSizeGuard);
  EXPECT_EQ(run_args({"cut", "cycle:8", "--algo", "brute"}).code, kOk);
  EXPECT_EQ(run_args({"no-such-command"}).code, kValidation);
}

TEST(Cli, CutEmitsJsonAndCsv) {
  const auto r = run_args({"cut", "cycle:10", "--algo", "enum"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j.at("conductance").get<double>(), 0.2, 1e-12);
  EXPECT_NE(r.err.find(cut_csv_header()), std::string::npos);
}

TEST(Cli, VerifyEmptyCorpusPassesWithWarning) {
  const auto dir = scratch_dir("empty");
  const auto r = run_args({"verify", "structure", "--corpus", dir.string()});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_FALSE(j.at("warnings").empty());
  EXPECT_EQ(j.at("failed").get<int64_t>(), 0);
}

TEST(Cli, VerifyInjectedFaultFails) {
  const auto r = run_args({"verify", "structure", "--inject-fault"});
  EXPECT_EQ(r.code, kVerification);
  const json j = json::parse(r.out);
  bool symmetry_failure = false;
  for (const auto& c : j.at("results"))
    if (!c.at("ok").get<bool>() && c.at("check").get<std::string>() == "symmetry") symmetry_failure = true;
  EXPECT_TRUE(symmetry_failure);
  EXPECT_EQ(run_args({"verify", "structure"}).code, kOk);
}

TEST(Cli, DefaultCorpusCoverage) {
  const auto corpus = default_corpus();
  EXPECT_GE(corpus.size(), 30u);
  for (const auto& e : corpus) {
    const Graph g = graph_from_json(e.spec);
    EXPECT_LE(g.size(), 512) << e.name;
    EXPECT_EQ(connectivity(g), 1) << e.name;
  }
}

TEST(Cli, ExperimentDeterministicAndResumable) {
  const auto dir = scratch_dir("exp");
  json spec = {{"families", {"cycle:8", "hypercube:3", {{"cycle", {10, 12}}}}},
               {"algorithms", {"fiedler", "brute", "enum"}},
               {"seed", 7}};
  const std::string a = (dir / "a.csv").string(), b = (dir / "b.csv").string();
  const auto sa = run_experiment(spec, a);
  const auto sb = run_experiment(spec, b);
  EXPECT_EQ(sa.rows_total, 12);
  EXPECT_EQ(sa.rows_run, 12);
  EXPECT_EQ(sb.rows_failed, 0);
  const std::string ta = read_text(a), tb = read_text(b);
  EXPECT_EQ(without_first_line(ta), without_first_line(tb));
  EXPECT_EQ(ta.rfind("# ", 0), 0u);

  const auto again = run_experiment(spec, a);
  EXPECT_EQ(again.rows_run, 0);
  EXPECT_EQ(again.rows_skipped, 12);
  EXPECT_EQ(without_first_line(read_text(a)), without_first_line(ta));

  // A truncated table is completed without recomputing the kept rows.
  std::istringstream in(ta);
  std::string line, partial;
  for (int i = 0; i < 5 && std::getline(in, line); ++i) partial += line + "\n";
  {
    std::ofstream(a) << partial;
  }
  const auto resumed = run_experiment(spec, a);
  EXPECT_EQ(resumed.rows_skipped, 3);
  EXPECT_EQ(resumed.rows_run, 9);
  EXPECT_EQ(without_first_line(read_text(a)), without_first_line(ta));
}
