#include "abelcut_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/parallel.hpp"
#include "abelcut/pipeline.hpp"
#include "abelcut/sdp_advice.hpp"
#include "abelcut/special_cases.hpp"
#include "abelcut/spectral.hpp"
#include "abelcut/walks.hpp"
#include "abelcut_cli/graph_io.hpp"

namespace abelcut::cli {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

CheckResult result(std::string suite, const std::string& subject, std::string check, bool ok, std::string detail = {}) {
  return {std::move(suite), subject, std::move(check), ok, false, std::move(detail)};
}

CheckResult skipped(std::string suite, const std::string& subject, std::string check, std::string why) {
  return {std::move(suite), subject, std::move(check), true, true, std::move(why)};
}

Cut random_proper_cut(int64_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    std::vector<uint8_t> m(static_cast<size_t>(n));
    for (auto& b : m) b = coin(rng) ? 1 : 0;
    Cut q(std::move(m));
    if (q.proper()) return q;
  }
}

uint64_t subject_seed(uint64_t seed, const std::string& name) {
  return seed ^ std::hash<std::string>{}(name);
}

std::vector<double> sorted_character_values(const Graph& g) {
  const auto& prov = *g.provenance();
  std::vector<double> v;
  for (const auto& e : character_eigenvalues(prov.group, prov.generators)) v.push_back(e.eigenvalue);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int64_t SuiteReport::failures() const {
  return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.ok; });
}

int64_t SuiteReport::passes() const {
  return std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.ok && !r.skipped; });
}

void SuiteReport::append(const SuiteReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
  subjects += other.subjects;
}

json SuiteReport::to_json() const {
  json items = json::array();
  for (const auto& r : results) {
    json j = {{"suite", r.suite}, {"subject", r.subject}, {"check", r.check}, {"ok", r.ok}};
    if (r.skipped) j["skipped"] = true;
    if (!r.detail.empty()) j["detail"] = r.detail;
    items.push_back(std::move(j));
  }
  const int64_t skips = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.skipped; });
  return {{"ok", ok()},        {"subjects", subjects}, {"checks", results.size()}, {"passed", passes()},
          {"skipped", skips},  {"failed", failures()}, {"warnings", warnings},      {"results", items}};
}

// ---- corpus ---------------------------------------------------------------

std::vector<CorpusEntry> default_corpus(uint64_t seed) {
  const std::vector<std::string> families = {
      "cycle:3",        "cycle:4",        "cycle:5",         "cycle:6",       "cycle:7",       "cycle:8",
      "cycle:9",        "cycle:10",       "cycle:12",        "cycle:16",      "cycle:32",      "cycle:64",
      "cycle:128",      "cycle:512",      "hypercube:2",     "hypercube:3",   "hypercube:4",   "hypercube:5",
      "hypercube:6",    "hypercube:7",    "hypercube:9",     "torus:3x3",     "torus:4x4",     "torus:3x5",
      "torus:4x6",      "torus:8x8",      "torus:16x16",     "torus:2x3x4",   "torus:4x4x4x2", "complete:4",
      "complete:5",     "zpn:3:3",        "zpn:5:2",         "zpn:7:2",       "code:hamming74", "code:parity:4",
      "random:24:4",    "random:2x4:3",   "random:4x8:6",    "random:2x2x2x2x2x2:7", "random:5x5:4",
      "random:6x10:5",  "random:2x256:6", "random:3x3x3:6",
  };
  std::vector<CorpusEntry> out;
  for (const auto& f : families) {
    const Graph g = graph_from_family(f, seed);
    json spec = graph_to_json(g);
    spec["name"] = f.starts_with("random:") ? g.name() : f;
    out.push_back({spec["name"].get<std::string>(), std::move(spec)});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ValidationError("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& p : files) {
    json spec;
    try {
      spec = load_json(p.string());
    } catch (const ValidationError& e) {
      spec = json{{"parse_error", e.what()}};
    }
    out.push_back({p.stem().string(), std::move(spec)});
  }
  return out;
}

void inject_asymmetry(std::vector<CorpusEntry>& corpus) {
  if (corpus.empty()) return;
  const Graph g = graph_from_json(corpus.front().spec);
  std::vector<std::vector<int64_t>> adj(static_cast<size_t>(g.size()));
  for (int64_t u = 0; u < g.size(); ++u) adj[static_cast<size_t>(u)].assign(g.row(u).begin(), g.row(u).end());
  adj[0][g.size() > 1 ? 1 : 0] += 1;
  if (g.size() == 1) adj[0][0] = -1;
  corpus.front().spec = json{{"name", corpus.front().name}, {"n", g.size()}, {"adjacency", adj}};
}

// ---- per-graph checks -----------------------------------------------------

std::vector<CheckResult> check_structure(const Graph& g) {
  std::vector<CheckResult> out;
  const std::string& name = g.name();
  bool symmetric = true;
  bool rows_ok = true;
  for (int64_t u = 0; u < g.size(); ++u) {
    int64_t sum = 0;
    for (int64_t v = 0; v < g.size(); ++v) {
      symmetric = symmetric && g.adjacency(u, v) == g.adjacency(v, u);
      sum += g.adjacency(u, v);
    }
    rows_ok = rows_ok && sum == g.degree(u);
  }
  out.push_back(result("structure", name, "symmetry", symmetric && rows_ok));
  if (const auto& prov = g.provenance()) {
    const auto d = g.regular_degree();
    bool transitive = d.has_value() && *d == prov->generators.degree();
    std::vector<int64_t> first(g.row(0).begin(), g.row(0).end());
    std::sort(first.begin(), first.end());
    for (int64_t u = 1; u < g.size() && transitive; ++u) {
      std::vector<int64_t> row(g.row(u).begin(), g.row(u).end());
      std::sort(row.begin(), row.end());
      transitive = row == first;
    }
    out.push_back(result("structure", name, "cayley-regular", transitive, "d=" + std::to_string(prov->generators.degree())));
  }
  const int64_t comps = connectivity(g);
  out.push_back(comps == 1 ? result("structure", name, "connected", true)
                           : skipped("structure", name, "connected", std::to_string(comps) + " components"));
  return out;
}

std::vector<CheckResult> check_spectral(const Graph& g, const VerifyOptions& opt) {
  if (!g.is_cayley()) return {skipped("spectral", g.name(), "characters-vs-dense", "no group provenance")};
  const auto chars = sorted_character_values(g);
  const Spectrum dense = dense_spectrum(g);
  const double gap = max_eigenvalue_gap(chars, dense.eigenvalues());
  const auto& prov = *g.provenance();
  const SpectrumAudit audit = audit_spectrum(g, real_eigenbasis(prov.group, prov.generators));
  return {result("spectral", g.name(), "characters-vs-dense", gap <= opt.eigen_tol, "max gap " + fmt(gap)),
          result("spectral", g.name(), "real-eigenbasis-audit", audit.ok,
                 "residual " + fmt(audit.residual) + ", orthonormality " + fmt(audit.orthonormality_error))};
}

std::vector<CheckResult> check_collision(const Graph& g, const VerifyOptions& opt) {
  if (!g.is_cayley()) return {skipped("collision", g.name(), "spectral-vs-direct", "no group provenance")};
  const Spectrum s = graph_spectrum(g);
  const auto spec = collision_profile_spectral(g, s, opt.t_max);
  const auto direct = collision_profile_direct(g, opt.t_max);
  double worst = 0.0;
  int64_t at = 0;
  for (size_t t = 0; t < spec.values.size(); ++t) {
    const double diff = std::abs(spec.values[t] - direct.values[t]);
    if (diff > worst) {
      worst = diff;
      at = static_cast<int64_t>(t);
    }
  }
  return {result("collision", g.name(), "spectral-vs-direct", worst <= opt.collision_tol,
                 "max diff " + fmt(worst) + " at t=" + std::to_string(at))};
}

std::vector<CheckResult> check_cp_ratio(const Graph& g, const VerifyOptions& opt) {
  if (!g.is_cayley()) return {skipped("cpratio", g.name(), "ratio-bound", "no group provenance")};
  const auto r = cp_ratio_bound_check(g, graph_spectrum(g), opt.t_max);
  return {result("cpratio", g.name(), "ratio-bound", r.ok,
                 "max CP_t/CP_2t " + fmt(r.max_ratio) + " at t=" + std::to_string(r.argmax_t) + ", ln bound " +
                     fmt(log_cp_ratio_bound(r.degree)))};
}

std::vector<CheckResult> check_multiplicity(const Graph& g, const VerifyOptions&) {
  if (!g.is_cayley()) return {skipped("multiplicity", g.name(), "certificate", "no group provenance")};
  if (connectivity(g) != 1) return {skipped("multiplicity", g.name(), "certificate", "disconnected")};
  const Spectrum s = graph_spectrum(g);
  const double l2 = s.lambda2();
  std::vector<CheckResult> out;
  const std::vector<std::pair<std::string, double>> taus = {
      {"tau=lambda2", l2}, {"tau=2lambda2", 2.0 * l2}, {"tau=min(3/2,4lambda2)", std::min(1.5, 4.0 * l2)}};
  for (const auto& [label, tau] : taus) {
    if (tau > 1.5 + 1e-12) {
      out.push_back(skipped("multiplicity", g.name(), label, "tau " + fmt(tau) + " above 3/2"));
      continue;
    }
    const auto c = multiplicity_certificate(g, s, tau);
    out.push_back(result("multiplicity", g.name(), label, c.ok,
                         "dim_low " + std::to_string(c.dim_low) + ", ratio " + fmt(c.ratio) + " >= " +
                             fmt(c.lower_bound) + ", log2 bound " + fmt(c.log2_multiplicity_bound)));
  }
  return out;
}

std::vector<CheckResult> check_cheeger(const Graph& g, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const Spectrum s = graph_spectrum(g);
  const double l2 = s.lambda2();
  const double tol = opt.cut_tol;
  if (connectivity(g) != 1) return {skipped("cheeger", g.name(), "cheeger", "disconnected")};

  int64_t rayleigh_bad = 0, checked = 0;
  double phi_lower_violation = 0.0;
  if (g.size() <= opt.exhaustive_limit) {
    double phi = std::numeric_limits<double>::infinity();
    const int64_t total = g.total_volume();
    for_each_cut(g, [&](uint64_t mask, int64_t boundary, int64_t vol, int64_t size) {
      if (size == 0) return;
      phi = std::min(phi, static_cast<double>(boundary) / static_cast<double>(std::min(vol, total - vol)));
      if (!rayleigh_consistency(g, Cut::from_mask(g.size(), mask), tol).ok) ++rayleigh_bad;
      ++checked;
    });
    const bool ok = l2 / 2.0 <= phi + tol && phi <= std::sqrt(2.0 * l2) + tol;
    out.push_back(result("cheeger", g.name(), "cheeger-exhaustive", ok,
                         fmt(l2 / 2.0) + " <= phi " + fmt(phi) + " <= " + fmt(std::sqrt(2.0 * l2))));
  } else {
    std::mt19937_64 rng(subject_seed(opt.seed, g.name()));
    for (int64_t i = 0; i < opt.random_cuts; ++i) {
      const Cut q = random_proper_cut(g.size(), rng);
      if (!rayleigh_consistency(g, q, tol).ok) ++rayleigh_bad;
      phi_lower_violation = std::max(phi_lower_violation, l2 / 2.0 - partition_conductance(g, q));
      ++checked;
    }
    out.push_back(result("cheeger", g.name(), "cheeger-lower-sampled", phi_lower_violation <= tol,
                         std::to_string(checked) + " random cuts, lambda2/2 = " + fmt(l2 / 2.0)));
    const auto f = fiedler_cut(g, s);
    out.push_back(result("cheeger", g.name(), "cheeger-upper-sweep", f.value <= std::sqrt(2.0 * l2) + tol,
                         "sweep " + fmt(f.value) + " <= " + fmt(std::sqrt(2.0 * l2))));
  }
  out.push_back(result("cheeger", g.name(), "rayleigh-forms", rayleigh_bad == 0,
                       std::to_string(rayleigh_bad) + " of " + std::to_string(checked) + " cuts inconsistent"));
  return out;
}

std::vector<CheckResult> check_buser(const Graph& g, const VerifyOptions& opt) {
  if (!g.is_cayley()) return {skipped("buser", g.name(), "buser", "no group provenance")};
  std::vector<CheckResult> out;
  const Spectrum s = graph_spectrum(g);
  const std::vector<int64_t> ts = {1, 2, 4, 8};
  if (g.size() <= opt.exhaustive_limit) {
    int64_t bad = 0, checked = 0;
    double worst = 0.0;
    for_each_cut(g, [&](uint64_t mask, int64_t, int64_t, int64_t size) {
      if (size == 0) return;
      const Cut q = Cut::from_mask(g.size(), mask);
      for (int64_t t : ts) {
        const auto r = buser_check(g, s, q, t);
        if (!r.ok) ++bad;
        if (r.rhs > 0) worst = std::max(worst, r.lhs / r.rhs);
        ++checked;
      }
    });
    out.push_back(result("buser", g.name(), "buser-exhaustive", bad == 0,
                         std::to_string(checked) + " (cut, t) pairs, max lhs/rhs " + fmt(worst)));
  }
  if (g.size() <= opt.buser_crosscheck_limit) {
    std::mt19937_64 rng(subject_seed(opt.seed + 1, g.name()));
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Cut q = random_proper_cut(g.size(), rng);
      for (int64_t t : ts)
        worst = std::max(worst, std::abs(buser_check(g, s, q, t).lhs - power_conductance_materialized(g, q, t)));
    }
    out.push_back(result("buser", g.name(), "spectral-vs-materialized", worst <= opt.cut_tol, "max diff " + fmt(worst)));
  }
  if (out.empty()) out.push_back(skipped("buser", g.name(), "buser", "n above both limits"));
  return out;
}

// ---- fixed-instance suites ------------------------------------------------

namespace {

std::vector<Graph> small_reference_graphs() {
  std::vector<Graph> out;
  for (int64_t n = 8; n <= 16; ++n) out.push_back(cycle_graph(n));
  out.push_back(hypercube_graph(3));
  out.push_back(hypercube_graph(4));
  const std::vector<int64_t> dims = {4, 4};
  out.push_back(torus_graph(dims));
  return out;
}

}  // namespace

SuiteReport suite_containment(const std::vector<double>& eps_list) {
  SuiteReport rep;
  const auto graphs = small_reference_graphs();
  rep.subjects = static_cast<int64_t>(graphs.size());
  std::vector<std::vector<CheckResult>> slots(graphs.size());
  parallel_for(static_cast<int64_t>(graphs.size()), [&](int64_t i) {
    const Graph& g = graphs[static_cast<size_t>(i)];
    for (double eps : eps_list) {
      const auto c = containment_check(g, eps);
      slots[static_cast<size_t>(i)].push_back(
          result("containment", g.name(), "eps=" + fmt(eps), c.ok,
                 std::to_string(c.checked) + " cuts, mul_tau " + std::to_string(c.mul_tau) + (c.vacuous ? " (vacuous)" : "") +
                     ", worst margin " + fmt(c.worst_margin) + ", violations " + std::to_string(c.violations)));
    }
  });
  for (auto& s : slots) rep.results.insert(rep.results.end(), s.begin(), s.end());
  return rep;
}

SuiteReport suite_advice(double eps, double ratio_bound, double audit_tol) {
  SuiteReport rep;
  std::vector<Graph> graphs = {cycle_graph(8), cycle_graph(12), cycle_graph(16), hypercube_graph(3), hypercube_graph(4)};
  const std::vector<int64_t> dims = {4, 4};
  graphs.push_back(torus_graph(dims));
  rep.subjects = static_cast<int64_t>(graphs.size());
  std::vector<std::vector<CheckResult>> slots(graphs.size());
  parallel_for(static_cast<int64_t>(graphs.size()), [&](int64_t i) {
    const Graph& g = graphs[static_cast<size_t>(i)];
    auto& out = slots[static_cast<size_t>(i)];
    const auto opt = brute_force_sparsest(g, Objective::kSparsity);
    const SdpSolution sol = solve_advice_sdp(g, opt.cut, eps);
    const MomentAudit audit = audit_moments(sol.moments, opt.cut, eps, audit_tol);
    out.push_back(result("advice", g.name(), "moment-audit", audit.ok,
                         "min eig " + fmt(audit.min_eigenvalue) + ", boolean " + fmt(audit.boolean_error) +
                             ", correlation " + fmt(audit.correlation_excess) + ", triangle " +
                             fmt(audit.worst_triangle)));
    const BallCut ball = ball_rounding(sol.moments, g);
    const double ratio = ball.sparsity / opt.value;
    out.push_back(result("advice", g.name(), "ratio", ratio <= ratio_bound,
                         "psi(Q_hat)/psi(G) = " + fmt(ratio) + ", " + std::to_string(sol.diagnostics.iterations) +
                             " iterations, " + std::to_string(sol.diagnostics.triangle_rounds) + " rounds"));
  });
  for (auto& s : slots) rep.results.insert(rep.results.end(), s.begin(), s.end());
  return rep;
}

SuiteReport suite_enum(const std::vector<CorpusEntry>& corpus, double eps, double ratio_bound, int64_t max_n,
                       int64_t max_cycle, uint64_t seed) {
  SuiteReport rep;
  PipelineConfig cfg;
  cfg.seed = seed;
  std::vector<Graph> small;
  for (const auto& e : corpus) {
    try {
      Graph g = graph_from_json(e.spec);
      g.set_name(e.name);
      if (g.size() <= max_n && g.is_cayley() && connectivity(g) == 1) small.push_back(std::move(g));
    } catch (const std::exception&) {
    }
  }
  const int64_t cycles = std::max<int64_t>(0, max_cycle - 7);
  const int64_t total = static_cast<int64_t>(small.size()) + cycles;
  rep.subjects = total;
  std::vector<CheckResult> slots(static_cast<size_t>(total));
  parallel_for(total, [&](int64_t i) {
    if (i < static_cast<int64_t>(small.size())) {
      const Graph& g = small[static_cast<size_t>(i)];
      const double phi = brute_force_sparsest(g, Objective::kConductance).value;
      const auto r = abelian_sparsest_cut(g, eps, g.size(), cfg);
      const double ratio = r.conductance / phi;
      slots[static_cast<size_t>(i)] = result("enum", g.name(), "ratio", ratio <= ratio_bound,
                                             "phi(Q_hat) " + fmt(r.conductance) + " / phi(G) " + fmt(phi) + " = " +
                                                 fmt(ratio) + " via " + r.diagnostics.best_source);
      return;
    }
    const int64_t n = 8 + (i - static_cast<int64_t>(small.size()));
    const Graph g = cycle_graph(n);
    double phi = 1.0 / static_cast<double>(n / 2);
    std::string source = "closed form";
    if (n <= 16) {
      phi = brute_force_sparsest(g, Objective::kConductance).value;
      source = "oracle";
    }
    const auto r = abelian_sparsest_cut(g, eps, n, cfg);
    slots[static_cast<size_t>(i)] = result("enum", g.name(), "exact-cycle", std::abs(r.conductance - phi) <= 1e-12,
                                           "phi(Q_hat) " + fmt(r.conductance) + " vs " + fmt(phi) + " (" + source + ")");
  });
  rep.results = std::move(slots);
  return rep;
}

SuiteReport suite_zpn(int64_t max_order, uint64_t seed) {
  struct Instance {
    int64_t p, dim;
    GeneratorMultiset gens;
    std::string name;
  };
  std::vector<Instance> instances;
  for (int64_t p : {3, 5, 7}) {
    int64_t order = p;
    for (int64_t dim = 1; order <= max_order; ++dim, order *= p) {
      const AbelianGroup group = AbelianGroup::power(p, static_cast<int>(dim));
      const std::string base = "Z" + std::to_string(p) + "^" + std::to_string(dim);
      instances.push_back({p, dim, GeneratorMultiset::standard(group), base + " standard"});
      if (order <= 343 && order > 3)
        instances.push_back({p, dim, random_generators(group, 4, seed + static_cast<uint64_t>(order)), base + " random d=4"});
    }
  }
  SuiteReport rep;
  rep.subjects = static_cast<int64_t>(instances.size());
  std::vector<std::vector<CheckResult>> slots(instances.size());
  parallel_for(static_cast<int64_t>(instances.size()), [&](int64_t i) {
    const auto& in = instances[static_cast<size_t>(i)];
    auto& out = slots[static_cast<size_t>(i)];
    const auto r = zpn_approx(in.p, in.dim, in.gens);
    out.push_back(result("zpn", in.name, "dilation-size", r.dilated_degree == (in.p - 1) / 2 * r.degree,
                         "|S'| = " + std::to_string(r.dilated_degree)));
    out.push_back(result("zpn", in.name, "sandwich", r.ok,
                         "lambda2' " + fmt(r.lambda2_prime) + ", phi in [" + fmt(r.phi_lo) + ", " + fmt(r.phi_hi) +
                             "], witness " + fmt(r.witness_conductance) + ", lower " + to_string(r.lower) + ", upper " +
                             to_string(r.upper) + (r.exact_phi ? " (oracle)" : "")));
    if (r.c2_ok)
      out.push_back(result("zpn", in.name, "quarter-constant", *r.c2_ok,
                           "phi(G') " + fmt(*r.phi_prime) + " vs (p+1)/4 phi(G) " +
                               fmt((static_cast<double>(in.p) + 1.0) / 4.0 * r.phi_lo)));
  });
  for (auto& s : slots) rep.results.insert(rep.results.end(), s.begin(), s.end());
  return rep;
}

SuiteReport suite_codes(int64_t random_codes, uint64_t seed) {
  std::vector<std::pair<std::string, BinaryLinearCode>> codes;
  for (int64_t k = 1; k <= 6; ++k) codes.emplace_back("identity k=" + std::to_string(k), BinaryLinearCode::identity(k));
  for (int64_t n = 1; n <= 6; ++n) codes.emplace_back("repetition n=" + std::to_string(n), BinaryLinearCode::repetition(n));
  for (int64_t k = 1; k <= 6; ++k) codes.emplace_back("parity k=" + std::to_string(k), BinaryLinearCode::parity(k));
  codes.emplace_back("hamming[7,4]", BinaryLinearCode::hamming74());
  for (int64_t i = 0; i < random_codes; ++i) {
    const int64_t k = 1 + i % 10;
    const int64_t len = k + (i * 3) % 8;
    codes.emplace_back("random k=" + std::to_string(k) + " n=" + std::to_string(len) + " #" + std::to_string(i),
                       BinaryLinearCode::random(k, len, seed + static_cast<uint64_t>(i)));
  }
  SuiteReport rep;
  rep.subjects = static_cast<int64_t>(codes.size());
  for (const auto& [name, code] : codes) {
    const auto r = code_spectrum_check(code);
    rep.results.push_back(result("codes", name, "bridge", r.ok,
                                 "distance " + std::to_string(r.census.distance) + " x" + std::to_string(r.census.count) +
                                     ", lambda2 = " + std::to_string(r.lambda2_num) + "/" +
                                     std::to_string(r.block_length) + " mult " + std::to_string(r.exact_multiplicity)));
    if (name == "hamming[7,4]")
      rep.results.push_back(result("codes", name, "census-3-7", r.census.distance == 3 && r.census.count == 7));
  }
  return rep;
}

SuiteReport suite_cycles(const std::vector<int64_t>& sizes, const std::vector<double>& eps_list) {
  SuiteReport rep;
  rep.subjects = static_cast<int64_t>(sizes.size());
  for (int64_t n : sizes) {
    std::vector<int64_t> arc;
    for (int64_t x = 0; x < n / 2; ++x) arc.push_back(x);
    const auto f = cycle_fourier_profile(n, Cut::from_vertices(n, arc), eps_list);
    const std::string name = "C" + std::to_string(n);
    if (!f.is_bisection) {
      rep.results.push_back(skipped("cycles", name, "profile", "not a bisection with 4 | n"));
      continue;
    }
    rep.results.push_back(result("cycles", name, "even-coefficients", f.even_ok, "max " + fmt(f.max_even_power)));
    rep.results.push_back(result("cycles", name, "odd-decay", f.decay_ok,
                                 "alpha^2 |q_alpha|^2/|q_1|^2 in [" + fmt(f.decay_min) + ", " + fmt(f.decay_max) + "]"));
    for (const auto& t : f.tails)
      rep.results.push_back(result("cycles", name, "tail eps=" + fmt(t.eps), t.in_window,
                                   "mass " + fmt(t.mass) + " beyond index " + std::to_string(t.cutoff) + ", window [" +
                                       fmt(t.eps / 20.0) + ", " + fmt(20.0 * t.eps) + "]"));
    rep.results.push_back(result("cycles", name, "mul-phi", f.mul_ok,
                                 "mul " + std::to_string(f.mul_phi) + ", sqrt(n) " + fmt(std::sqrt(static_cast<double>(n)))));
  }
  return rep;
}

// ---- dispatcher -----------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"structure", "spectral", "collision", "cpratio",
                                                 "multiplicity", "cheeger", "buser",  "corpus",
                                                 "containment", "advice",  "enum",    "zpn",
                                                 "codes",     "cycles",   "all"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ValidationError("unknown suite '" + suite + "'");
  using Check = std::function<std::vector<CheckResult>(const Graph&)>;
  std::vector<Check> checks;
  const bool everything = suite == "all" || suite == "corpus";
  auto want = [&](const char* s) { return everything || suite == s; };
  if (want("structure")) checks.push_back([](const Graph& g) { return check_structure(g); });
  if (want("spectral")) checks.push_back([&](const Graph& g) { return check_spectral(g, opt); });
  if (want("collision")) checks.push_back([&](const Graph& g) { return check_collision(g, opt); });
  if (want("cpratio")) checks.push_back([&](const Graph& g) { return check_cp_ratio(g, opt); });
  if (want("multiplicity")) checks.push_back([&](const Graph& g) { return check_multiplicity(g, opt); });
  if (want("cheeger")) checks.push_back([&](const Graph& g) { return check_cheeger(g, opt); });
  if (want("buser")) checks.push_back([&](const Graph& g) { return check_buser(g, opt); });

  SuiteReport rep;
  if (!checks.empty()) {
    if (corpus.empty()) rep.warnings.push_back("empty corpus: per-graph checks pass vacuously");
    rep.subjects = static_cast<int64_t>(corpus.size());
    std::vector<std::vector<CheckResult>> slots(corpus.size());
    parallel_for(static_cast<int64_t>(corpus.size()), [&](int64_t i) {
      const auto& entry = corpus[static_cast<size_t>(i)];
      auto& out = slots[static_cast<size_t>(i)];
      Graph g;
      try {
        if (entry.spec.contains("parse_error"))
          throw ValidationError(entry.spec["parse_error"].get<std::string>());
        g = graph_from_json(entry.spec);
        g.set_name(entry.name);
      } catch (const std::exception& e) {
        out.push_back(result("structure", entry.name, "symmetry", false, e.what()));
        return;
      }
      for (const auto& c : checks) {
        try {
          const auto r = c(g);
          out.insert(out.end(), r.begin(), r.end());
        } catch (const std::exception& e) {
          out.push_back(result("error", entry.name, "exception", false, e.what()));
        }
      }
    });
    for (auto& s : slots) rep.results.insert(rep.results.end(), s.begin(), s.end());
  }
  if (suite == "all" || suite == "containment") rep.append(suite_containment());
  if (suite == "all" || suite == "advice") rep.append(suite_advice());
  if (suite == "all" || suite == "enum") rep.append(suite_enum(corpus, 0.05, 4.0, 16, 64, opt.seed));
  if (suite == "all" || suite == "zpn") rep.append(suite_zpn(2401, opt.seed));
  if (suite == "all" || suite == "codes") rep.append(suite_codes(20, opt.seed));
  if (suite == "all" || suite == "cycles") rep.append(suite_cycles());
  return rep;
}

}  // namespace abelcut::cli
