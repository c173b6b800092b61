#include "abelcut_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/pipeline.hpp"
#include "abelcut/sdp_advice.hpp"
#include "abelcut/special_cases.hpp"
#include "abelcut/spectral.hpp"
#include "abelcut/walks.hpp"
#include "abelcut_cli/graph_io.hpp"
#include "abelcut_cli/verify.hpp"

namespace abelcut::cli {

namespace {

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_plain_cycle(const Graph& g) {
  const auto& prov = g.provenance();
  if (!prov || prov->group.rank() != 1 || prov->group.order() < 3) return false;
  const int64_t n = prov->group.order();
  const auto e = prov->generators.entries();
  return prov->generators.degree() == 2 && e.size() == 2 && prov->generators.multiplicity({{1}}) == 1 &&
         prov->generators.multiplicity({{n - 1}}) == 1;
}

json diagnostics_json(const SolverDiagnostics& d) {
  return {{"iterations", d.iterations},     {"triangle_rounds", d.triangle_rounds},
          {"active_triangles", d.active_triangles}, {"primal_residual", d.primal_residual},
          {"dual_residual", d.dual_residual}, {"duality_gap", d.duality_gap},
          {"objective", d.objective},       {"rho", d.rho},
          {"converged", d.converged}};
}

json zpn_json(const ZpnReport& r) {
  json j = {{"p", r.p},
            {"dim", r.n_dim},
            {"degree", r.degree},
            {"dilated_degree", r.dilated_degree},
            {"lambda2", r.lambda2},
            {"lambda2_prime", r.lambda2_prime},
            {"witness_character", r.witness_character.residues},
            {"witness_size", r.witness_cut.size()},
            {"witness_conductance", r.witness_conductance},
            {"witness_ok", r.witness_ok},
            {"phi_exact", r.exact_phi},
            {"phi_bounds", {r.phi_lo, r.phi_hi}},
            {"lower", to_string(r.lower)},
            {"upper", to_string(r.upper)},
            {"upper_factor", (static_cast<double>(r.p) + 1.0) / 2.0},
            {"ok", r.ok}};
  if (r.phi_prime) j["phi_prime"] = *r.phi_prime;
  if (r.c2_ok) j["quarter_constant_ok"] = *r.c2_ok;
  if (r.c3_ok) j["cheeger_prime_ok"] = *r.c3_ok;
  return j;
}

ZpnReport zpn_for_graph(const Graph& g) {
  const auto& prov = g.provenance();
  if (!prov) throw ValidationError("zpn needs a Cayley graph over Z_p^n");
  const auto mods = prov->group.moduli();
  for (int64_t m : mods)
    if (m != mods[0]) throw ValidationError("zpn needs equal moduli, got " + prov->group.describe());
  return zpn_approx(mods[0], static_cast<int64_t>(mods.size()), prov->generators);
}

json code_json(const CodeSpectrumReport& r) {
  return {{"k", r.k},
          {"block_length", r.block_length},
          {"min_distance", r.census.distance},
          {"min_weight_count", r.census.count},
          {"lambda2", static_cast<double>(r.lambda2_num) / static_cast<double>(r.block_length)},
          {"lambda2_rational", std::to_string(r.lambda2_num) + "/" + std::to_string(r.block_length)},
          {"multiplicity", r.exact_multiplicity},
          {"float_lambda2", r.float_lambda2},
          {"float_multiplicity", r.float_multiplicity},
          {"distance_ok", r.distance_ok},
          {"multiplicity_ok", r.multiplicity_ok},
          {"float_ok", r.float_ok},
          {"ok", r.ok}};
}

GeneratorMultiset parse_generators(const AbelianGroup& group, const std::string& text) {
  // "1,0;4,0;0,1*2" -> elements separated by ';', optional *mult.
  std::vector<Generator> gens;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    int64_t mult = 1;
    if (const auto star = item.find('*'); star != std::string::npos) {
      mult = std::stoll(item.substr(star + 1));
      item = item.substr(0, star);
    }
    GroupElement x;
    std::istringstream parts(item);
    std::string r;
    while (std::getline(parts, r, ',')) x.residues.push_back(std::stoll(r));
    if (x.residues.size() != group.rank())
      throw ValidationError("generator '" + item + "' has the wrong number of residues");
    gens.push_back({std::move(x), mult});
  }
  return GeneratorMultiset(std::move(gens));
}

}  // namespace

CutOutcome run_cut(const Graph& g, const CutOptions& opt) {
  CutOutcome r;
  const auto start = std::chrono::steady_clock::now();
  if (opt.algo == "fiedler") {
    const auto c = fiedler_cut(g, graph_spectrum(g));
    r.cut = c.cut;
  } else if (opt.algo == "brute") {
    r.cut = brute_force_sparsest(g, Objective::kConductance).cut;
  } else if (opt.algo == "advice") {
    if (!opt.advice) throw ValidationError("--algo advice needs --advice-file");
    SolverConfig cfg;
    cfg.seed = opt.seed;
    const auto a = advice_cut(g, *opt.advice, opt.eps, cfg);
    r.cut = a.cut;
    r.details = {{"sdp_objective", a.sdp_objective},
                 {"spreading", a.spreading},
                 {"objective_ratio", a.objective_ratio},
                 {"solver", diagnostics_json(a.diagnostics)}};
  } else if (opt.algo == "enum") {
    PipelineConfig cfg;
    cfg.seed = opt.seed;
    cfg.budget = opt.budget;
    const auto p = abelian_sparsest_cut(g, opt.eps, opt.kmax > 0 ? opt.kmax : g.size(), cfg);
    r.cut = p.cut;
    const auto& d = p.diagnostics;
    r.details = {{"net_size", d.net_size},
                 {"net_structured", d.net_structured},
                 {"net_truncated", d.net_truncated},
                 {"covering_estimate", d.covering_estimate},
                 {"threshold_candidates", d.threshold_candidates},
                 {"distinct_candidates", d.distinct_candidates},
                 {"sdp_calls", d.sdp_calls},
                 {"sdp_iterations", d.sdp_iterations},
                 {"sdp_failures", d.sdp_failures},
                 {"sdp_skipped", d.sdp_skipped},
                 {"sdp_eps", d.sdp_eps},
                 {"subspace_dim", d.subspace_dim},
                 {"threshold_rank", d.threshold_rank},
                 {"tau", d.tau},
                 {"phi_upper", d.phi_upper},
                 {"best_source", d.best_source}};
  } else if (opt.algo == "zpn") {
    const auto z = zpn_for_graph(g);
    r.cut = z.witness_cut;
    r.details = zpn_json(z);
  } else {
    throw ValidationError("unknown algorithm '" + opt.algo + "' (fiedler, brute, advice, enum, zpn)");
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.phi = partition_conductance(g, r.cut);
  r.psi = sparsity(g, r.cut);
  if (g.size() <= 20 && g.size() >= 2) {
    r.phi_opt = brute_force_sparsest(g, Objective::kConductance).value;
    r.reference = "oracle";
  } else if (is_plain_cycle(g)) {
    r.phi_opt = 1.0 / static_cast<double>(g.size() / 2);
    r.reference = "closed-form";
  }
  return r;
}

std::string cut_csv_header() { return "graph,n,d,algo,phi,psi,phi_opt_if_known,ratio,wall_ms,seed"; }

std::string cut_csv_row(const Graph& g, const CutOptions& opt, const CutOutcome& r, bool with_time) {
  std::ostringstream os;
  const auto d = g.regular_degree();
  os << csv_field(g.name()) << ',' << g.size() << ',' << (d ? std::to_string(*d) : "") << ',' << opt.algo << ','
     << num(r.phi) << ',' << num(r.psi) << ',' << (r.phi_opt ? num(*r.phi_opt) : "") << ','
     << (r.phi_opt && *r.phi_opt > 0 ? num(r.phi / *r.phi_opt) : "") << ',';
  if (with_time) os << num(std::round(r.wall_ms * 1000.0) / 1000.0);
  os << ',' << opt.seed;
  return os.str();
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"abelcut: sparsest cuts on Abelian Cayley graphs"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Worker threads (overrides ABELCUT_THREADS)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a graph JSON file from a family descriptor");
  std::string gen_family, gen_out;
  uint64_t gen_seed = 7;
  gen->add_option("family", gen_family, "cycle:N, hypercube:K, torus:AxB, complete:N, zpn:P:DIM, random:MODULI:D, code:...")
      ->required();
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");
  gen->add_option("--seed", gen_seed, "Seed for random families");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Eigenvalues and threshold ranks");
  std::string spec_graph;
  std::vector<double> spec_taus;
  bool spec_vectors = false, spec_dense = false;
  spec->add_option("graph", spec_graph, "Graph JSON file or family descriptor")->required();
  spec->add_option("--tau", spec_taus, "Thresholds for mul_tau (default lambda2, 2 lambda2)");
  spec->add_flag("--vectors", spec_vectors, "Include the eigenvector matrix (columns)");
  spec->add_flag("--dense", spec_dense, "Force the dense route");

  // collision
  auto* coll = app.add_subcommand("collision", "Collision probabilities, spectral vs direct (CSV)");
  std::string coll_graph, coll_out;
  int64_t coll_tmax = 16;
  std::vector<double> coll_taus;
  coll->add_option("graph", coll_graph, "Graph JSON file or family descriptor")->required();
  coll->add_option("--t-max", coll_tmax, "Largest t")->check(CLI::Range(int64_t{0}, int64_t{100000}));
  coll->add_option("--tau-grid", coll_taus, "Thresholds for multiplicity certificates (JSON on stderr)")->delimiter(',');
  coll->add_option("-o,--out", coll_out, "CSV output file (default stdout)");

  // cut
  auto* cut = app.add_subcommand("cut", "Find a sparse cut");
  std::string cut_graph, cut_advice, cut_out, cut_csv;
  CutOptions cut_opt;
  cut->add_option("graph", cut_graph, "Graph JSON file or family descriptor")->required();
  cut->add_option("--algo", cut_opt.algo, "fiedler | brute | advice | enum | zpn")
      ->check(CLI::IsMember({"fiedler", "brute", "advice", "enum", "zpn"}));
  cut->add_option("--advice-file", cut_advice, "Advice cut JSON {\"vertices\": [...]}");
  cut->add_option("--eps", cut_opt.eps, "Accuracy parameter");
  cut->add_option("--kmax", cut_opt.kmax, "Largest searched dimension for enum (0: n)");
  cut->add_option("--seed", cut_opt.seed, "Seed");
  cut->add_option("--budget", cut_opt.budget, "Random net vectors for enum");
  cut->add_option("-o,--out", cut_out, "Cut JSON output (default stdout)");
  cut->add_option("--csv", cut_csv, "Append the metrics row here (default stderr)");

  // cutdim
  auto* cdim = app.add_subcommand("cutdim", "Cut dimension (n <= 20)");
  std::string cdim_graph;
  double cdim_eps = 0.1, cdim_c = 1.0;
  bool cdim_contain = false;
  cdim->add_option("graph", cdim_graph, "Graph JSON file or family descriptor")->required();
  cdim->add_option("--eps", cdim_eps, "Mass slack");
  cdim->add_option("--c", cdim_c, "Approximation factor on psi");
  cdim->add_flag("--containment", cdim_contain, "Also run the containment check at this eps");

  // zpn
  auto* zpn = app.add_subcommand("zpn", "Z_p^n approximation report");
  int64_t zpn_p = 3, zpn_dim = 1;
  std::string zpn_gens;
  zpn->add_option("--p", zpn_p, "Odd prime")->required();
  zpn->add_option("--dim", zpn_dim, "Dimension n");
  zpn->add_option("--gens", zpn_gens, "Generators '1,0;4,0;0,1*2' (default +-e_i)");

  // codes
  auto* codes = app.add_subcommand("codes", "Code-spectrum bridge report");
  std::string codes_file, codes_name;
  uint64_t codes_seed = 7;
  codes->add_option("--generator-matrix", codes_file, "0/1 matrix file, one row per line");
  codes->add_option("--code", codes_name, "hamming74 | identity:K | repetition:N | parity:K | random:K:LEN");
  codes->add_option("--seed", codes_seed, "Seed for random codes");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the invariant suite; exit 3 on failure");
  std::string ver_suite = "corpus", ver_corpus, ver_out;
  bool ver_fault = false;
  VerifyOptions ver_opt;
  ver->add_option("suite", ver_suite, "Suite name")->check(CLI::IsMember(suite_names()));
  ver->add_option("--corpus", ver_corpus, "Directory of graph JSON files (default built-in corpus)");
  ver->add_flag("--inject-fault", ver_fault, "Corrupt the first corpus graph's adjacency");
  ver->add_option("--seed", ver_opt.seed, "Seed for sampled cuts");
  ver->add_option("-o,--out", ver_out, "Report file (default stdout)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Resumable sweep into a CSV table");
  std::string exp_spec, exp_out;
  exp->add_option("spec", exp_spec, "Experiment spec JSON")->required();
  exp->add_option("-o,--out", exp_out, "Override the output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }
  if (threads > 0) setenv("ABELCUT_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (*gen) {
      const Graph g = graph_from_family(gen_family, gen_seed);
      const std::string text = graph_to_json(g).dump(1) + "\n";
      if (gen_out.empty())
        out << text;
      else
        write_text_atomic(gen_out, text);
      return kOk;
    }
    if (*spec) {
      const Graph g = graph_from_family(spec_graph, 7);
      const Spectrum s = spec_dense ? dense_spectrum(g) : graph_spectrum(g);
      if (spec_taus.empty()) spec_taus = {s.lambda2(), 2.0 * s.lambda2()};
      json j = {{"graph", g.name()},
                {"n", g.size()},
                {"route", !spec_dense && g.is_cayley() ? "characters" : "dense"},
                {"eigenvalues", s.eigenvalues()},
                {"lambda2", s.lambda2()}};
      json mul = json::object();
      for (double t : spec_taus) mul[num(t)] = threshold_rank(s, t);
      j["mul_tau"] = mul;
      if (spec_vectors) {
        json cols = json::array();
        for (int64_t i = 0; i < s.size(); ++i) {
          const Eigen::VectorXd v = s.eigenvector(i);
          cols.push_back(std::vector<double>(v.data(), v.data() + v.size()));
        }
        j["eigenvectors"] = cols;
      }
      out << j.dump(1) << "\n";
      return kOk;
    }
    if (*coll) {
      const Graph g = graph_from_family(coll_graph, 7);
      const Spectrum s = graph_spectrum(g);
      const auto sp = collision_profile_spectral(g, s, 2 * coll_tmax);
      const auto di = collision_profile_direct(g, coll_tmax);
      const double bound = std::exp(log_cp_ratio_bound(*g.regular_degree()));
      std::ostringstream csv;
      csv << "t,cp_spectral,cp_direct,ratio,bound\n";
      for (int64_t t = 0; t <= coll_tmax; ++t) {
        const double ratio = sp.values[static_cast<size_t>(t)] / sp.values[static_cast<size_t>(2 * t)];
        csv << t << ',' << num(sp.values[static_cast<size_t>(t)]) << ',' << num(di.values[static_cast<size_t>(t)]) << ','
            << num(ratio) << ',' << num(bound) << "\n";
      }
      if (coll_out.empty())
        out << csv.str();
      else
        write_text_atomic(coll_out, csv.str());
      for (double tau : coll_taus) {
        const auto c = multiplicity_certificate(g, s, tau);
        err << json{{"tau", c.tau},
                    {"kappa", c.kappa},
                    {"dim_low", c.dim_low},
                    {"t", c.t},
                    {"ratio", c.ratio},
                    {"lower_bound", c.lower_bound},
                    {"lower_ok", c.lower_ok},
                    {"log_doubling_bound", c.log_doubling_bound},
                    {"doubling_ok", c.doubling_ok},
                    {"log2_multiplicity_bound", c.log2_multiplicity_bound},
                    {"multiplicity_ok", c.multiplicity_ok}}
                   .dump()
            << "\n";
      }
      return kOk;
    }
    if (*cut) {
      const Graph g = graph_from_family(cut_graph, cut_opt.seed);
      if (!cut_advice.empty()) cut_opt.advice = cut_from_json(load_json(cut_advice), g.size());
      const CutOutcome r = run_cut(g, cut_opt);
      json j = cut_to_json(g, r.cut);
      j["partition_conductance"] = r.phi;
      if (r.phi_opt) j["phi_opt"] = *r.phi_opt;
      if (!r.details.is_null()) j["diagnostics"] = r.details;
      const std::string text = j.dump(1) + "\n";
      if (cut_out.empty())
        out << text;
      else
        write_text_atomic(cut_out, text);
      const std::string row = cut_csv_row(g, cut_opt, r);
      if (cut_csv.empty()) {
        err << cut_csv_header() << "\n" << row << "\n";
      } else {
        std::string existing;
        try {
          existing = read_text(cut_csv);
        } catch (const ValidationError&) {
        }
        if (existing.empty()) existing = cut_csv_header() + "\n";
        write_text_atomic(cut_csv, existing + row + "\n");
      }
      if (cut_opt.algo == "zpn" && !r.details.value("ok", false)) return kVerification;
      return kOk;
    }
    if (*cdim) {
      const Graph g = graph_from_family(cdim_graph, 7);
      const Spectrum s = graph_spectrum(g);
      json j = {{"graph", g.name()}, {"n", g.size()}, {"eps", cdim_eps}, {"c", cdim_c},
                {"cut_dimension", cut_dimension(g, s, cdim_eps, cdim_c)}};
      if (cdim_contain) {
        const auto c = containment_check(g, cdim_eps);
        j["containment"] = {{"phi", c.phi},           {"tau", c.tau},
                            {"mul_tau", c.mul_tau},   {"vacuous", c.vacuous},
                            {"checked", c.checked},   {"violations", c.violations},
                            {"worst_margin", c.worst_margin}, {"ok", c.ok}};
        if (c.worst_cut) j["containment"]["worst_cut"] = c.worst_cut->vertices();
      }
      out << j.dump(1) << "\n";
      return j.contains("containment") && !j["containment"]["ok"].get<bool>() ? kVerification : kOk;
    }
    if (*zpn) {
      if (zpn_p == 2 || !is_prime(zpn_p)) throw ValidationError("--p must be an odd prime");
      const AbelianGroup group = AbelianGroup::power(zpn_p, static_cast<int>(zpn_dim));
      const GeneratorMultiset gens = zpn_gens.empty() ? GeneratorMultiset::standard(group) : parse_generators(group, zpn_gens);
      const auto r = zpn_approx(zpn_p, zpn_dim, gens);
      out << zpn_json(r).dump(1) << "\n";
      return r.ok ? kOk : kVerification;
    }
    if (*codes) {
      if (codes_file.empty() == codes_name.empty()) throw ValidationError("give exactly one of --generator-matrix, --code");
      const BinaryLinearCode code =
          codes_file.empty() ? code_from_spec(codes_name, codes_seed) : BinaryLinearCode::parse(read_text(codes_file));
      const auto r = code_spectrum_check(code);
      out << code_json(r).dump(1) << "\n";
      return r.ok ? kOk : kVerification;
    }
    if (*ver) {
      auto corpus = ver_corpus.empty() ? default_corpus(ver_opt.seed) : load_corpus_dir(ver_corpus);
      if (ver_fault) inject_asymmetry(corpus);
      const SuiteReport rep = run_suite(ver_suite, corpus, ver_opt);
      json j = rep.to_json();
      j["suite"] = ver_suite;
      const std::string text = j.dump(1) + "\n";
      if (ver_out.empty())
        out << text;
      else
        write_text_atomic(ver_out, text);
      for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
      for (const auto& r : rep.results)
        if (!r.ok) err << "FAIL " << r.suite << " " << r.subject << " " << r.check << ": " << r.detail << "\n";
      err << ver_suite << ": " << rep.passes() << " passed, " << rep.failures() << " failed\n";
      return rep.ok() ? kOk : kVerification;
    }
    if (*exp) {
      const auto s = run_experiment(load_json(exp_spec), exp_out);
      err << "experiment: " << s.rows_total << " rows, " << s.rows_run << " run, " << s.rows_skipped
          << " already present, " << s.rows_failed << " failed\n";
      return s.rows_failed == 0 ? kOk : kVerification;
    }
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << "\n";
    return kSizeGuard;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const SolverError& e) {
    err << "solver: " << e.what() << "\n";
    return kVerification;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace abelcut::cli
