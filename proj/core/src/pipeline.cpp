#include "abelcut/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/parallel.hpp"

namespace abelcut {

namespace {

Eigen::VectorXd random_unit(std::mt19937_64& rng, int64_t k) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(k);
  do {
    for (int64_t i = 0; i < k; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-12);
  return v / v.norm();
}

// Exact sparsity boundary / (s (n - s)) of a canonical side.
struct Scored {
  Cut cut;
  int64_t boundary = 0;
  int64_t denom = 1;
  std::string source;
};

bool scored_less(const Scored& a, const Scored& b) {
  const __int128 l = static_cast<__int128>(a.boundary) * b.denom;
  const __int128 r = static_cast<__int128>(b.boundary) * a.denom;
  if (l != r) return l < r;
  return lex_less(a.cut, b.cut);
}

// Side with |Q| < n/2, ties resolved lexicographically.
Cut canonical_side(const Cut& q) {
  const int64_t n = q.universe();
  if (2 * q.size() < n) return q;
  Cut comp = q.complement();
  if (2 * q.size() > n) return comp;
  return lex_less(comp, q) ? comp : q;
}

Scored score(const Graph& g, const Cut& q, std::string source) {
  Cut side = canonical_side(q);
  const int64_t s = side.size();
  return {side, boundary_size(g, side), s * (g.size() - s), std::move(source)};
}

std::string key_of(const Cut& q) {
  const auto& m = q.membership();
  return std::string(m.begin(), m.end());
}

}  // namespace

NetSpec eps_net(const Subspace& subspace, double eps, uint64_t seed, int64_t budget, bool require_full,
                double constant, int64_t audit_samples) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("net parameter eps must lie in (0, 1)");
  const int64_t k = subspace.dim();
  if (k < 1) throw ValidationError("net needs a subspace of dimension >= 1");
  if (budget < 0) throw ValidationError("net budget must be nonnegative");

  NetSpec net;
  net.radius = std::sqrt(eps);
  net.dim = k;
  net.budget = budget;
  net.seed = seed;

  std::vector<Eigen::VectorXd> coords;  // coordinates in the subspace basis
  if (k == 1) {
    coords.push_back(Eigen::VectorXd::Constant(1, 1.0));
    coords.push_back(Eigen::VectorXd::Constant(1, -1.0));
    net.target = 2;
  } else {
    for (int64_t i = 0; i < k; ++i) {
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(k);
        v(i) = sign;
        coords.push_back(v);
      }
    }
    // Adjacent angles are sqrt(eps) apart in chord length.
    const double step = 2.0 * std::asin(net.radius / 2.0);
    const int64_t per_circle = static_cast<int64_t>(std::ceil(2.0 * std::numbers::pi / step));
    const int64_t planes = std::min<int64_t>(k, 6);
    for (int64_t i = 0; i < planes; ++i) {
      for (int64_t j = i + 1; j < planes; ++j) {
        for (int64_t a = 0; a < per_circle; ++a) {
          const double theta = (static_cast<double>(a) + 0.5) * 2.0 * std::numbers::pi / static_cast<double>(per_circle);
          Eigen::VectorXd v = Eigen::VectorXd::Zero(k);
          v(i) = std::cos(theta);
          v(j) = std::sin(theta);
          coords.push_back(v);
        }
      }
    }
    const double log_target = std::log(constant) + static_cast<double>(k) * std::log(4.0 / net.radius);
    net.target = log_target > std::log(static_cast<double>(std::numeric_limits<int64_t>::max() / 2))
                     ? std::numeric_limits<int64_t>::max() / 2
                     : static_cast<int64_t>(std::ceil(std::exp(log_target) - 1e-9));
  }
  net.structured = static_cast<int64_t>(coords.size());
  net.truncated = net.target > budget && k > 1;
  if (require_full && net.truncated) {
    throw ValidationError("net budget " + std::to_string(budget) + " exhausted before target count " +
                          std::to_string(net.target));
  }
  std::mt19937_64 rng(seed);
  if (k > 1) {
    const int64_t draws = std::min(budget, net.target);
    for (int64_t i = 0; i < draws; ++i) coords.push_back(random_unit(rng, k));
  }

  Eigen::MatrixXd c(k, static_cast<int64_t>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) c.col(static_cast<int64_t>(i)) = coords[i];
  net.vectors = subspace.basis() * c;

  std::mt19937_64 audit_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int64_t s = 0; s < audit_samples; ++s) {
    const Eigen::VectorXd y = k == 1 ? Eigen::VectorXd::Constant(1, s % 2 == 0 ? 1.0 : -1.0) : random_unit(audit_rng, k);
    // |y - x|^2 = 2 - 2 <y, x> for unit vectors.
    const double best = (c.transpose() * y).maxCoeff();
    net.covering_estimate = std::max(net.covering_estimate, std::sqrt(std::max(0.0, 2.0 - 2.0 * best)));
  }
  return net;
}

PipelineResult sparsest_cut_near_subspace(const Graph& g, const Subspace& subspace, double eps,
                                          const PipelineConfig& cfg) {
  const int64_t n = g.size();
  if (subspace.ambient_dim() != n) throw ValidationError("subspace does not live on the graph's vertices");
  if (n < 2) throw ValidationError("a graph with fewer than two vertices has no proper cut");
  const NetSpec net = eps_net(subspace, eps, cfg.seed, cfg.budget);
  if (net.size() == 0) throw ValidationError("empty net");

  PipelineDiagnostics diag;
  diag.net_size = net.size();
  diag.net_structured = net.structured;
  diag.net_truncated = net.truncated;
  diag.covering_estimate = net.covering_estimate;
  diag.subspace_dim = subspace.dim();

  // Threshold sweep of each net vector with incremental boundaries.
  std::vector<Scored> cands;
  std::unordered_map<std::string, size_t> index;
  std::vector<int64_t> order(static_cast<size_t>(n));
  std::vector<uint8_t> members(static_cast<size_t>(n));
  for (int64_t col = 0; col < net.size(); ++col) {
    const Eigen::VectorXd v = net.vectors.col(col);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) { return v(a) > v(b); });
    std::fill(members.begin(), members.end(), 0);
    int64_t boundary = 0;
    for (int64_t k = 0; k + 1 < n; ++k) {
      const int64_t u = order[static_cast<size_t>(k)];
      int64_t to_inside = 0;
      for (const auto& nb : g.neighbors(u)) {
        if (nb.vertex != u && members[static_cast<size_t>(nb.vertex)]) to_inside += nb.mult;
      }
      boundary += g.degree(u) - g.adjacency(u, u) - 2 * to_inside;
      members[static_cast<size_t>(u)] = 1;
      if (!(v(u) > v(order[static_cast<size_t>(k + 1)]))) continue;
      ++diag.threshold_candidates;
      const Cut side = canonical_side(Cut(members));
      const std::string key = key_of(side);
      if (index.count(key)) continue;
      index.emplace(key, cands.size());
      const int64_t s = side.size();
      cands.push_back({side, boundary, s * (n - s), "threshold"});
    }
  }
  diag.distinct_candidates = static_cast<int64_t>(cands.size());
  if (cands.empty()) throw ValidationError("no net vector produced a proper threshold cut");
  std::sort(cands.begin(), cands.end(), scored_less);

  Scored best = cands.front();
  diag.sdp_eps = std::min(eps, 0.05);
  diag.sdp_skipped = n > cfg.sdp_max_vertices || cfg.max_sdp_calls <= 0;
  if (!diag.sdp_skipped) {
    const int64_t calls = std::min<int64_t>(cfg.max_sdp_calls, static_cast<int64_t>(cands.size()));
    std::vector<std::optional<Scored>> rounded(static_cast<size_t>(calls));
    std::vector<int64_t> iterations(static_cast<size_t>(calls), 0);
    parallel_for(calls, [&](int64_t i) {
      // A failed solve only loses that candidate's refinement.
      try {
        const AdviceResult r = advice_cut(g, cands[static_cast<size_t>(i)].cut, diag.sdp_eps, cfg.solver);
        rounded[static_cast<size_t>(i)] = score(g, r.cut, "sdp");
        iterations[static_cast<size_t>(i)] = r.diagnostics.iterations;
      } catch (const SolverError&) {
      }
    });
    diag.sdp_calls = calls;
    for (int64_t i = 0; i < calls; ++i) {
      diag.sdp_iterations += iterations[static_cast<size_t>(i)];
      if (!rounded[static_cast<size_t>(i)]) {
        ++diag.sdp_failures;
        continue;
      }
      if (scored_less(*rounded[static_cast<size_t>(i)], best)) best = *rounded[static_cast<size_t>(i)];
    }
  }
  diag.best_source = best.source;

  PipelineResult r;
  r.cut = best.cut;
  r.sparsity = sparsity(g, best.cut);
  r.conductance = partition_conductance(g, best.cut);
  r.diagnostics = diag;
  return r;
}

PipelineResult abelian_sparsest_cut(const Graph& g, double eps, int64_t k_max, const PipelineConfig& cfg) {
  if (!g.is_cayley()) throw ValidationError("the Abelian pipeline needs a Cayley graph");
  if (connectivity(g) != 1) throw ValidationError("the Abelian pipeline needs a connected graph");
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0, 1)");
  if (g.size() < 2) throw ValidationError("a graph with fewer than two vertices has no proper cut");

  const Spectrum spec = graph_spectrum(g);
  const double lambda2 = spec.lambda2();
  const double fiedler = fiedler_cut(g, spec).value;
  const double phi_up = std::min(fiedler, std::sqrt(2.0 * lambda2));
  const double d = static_cast<double>(g.provenance()->generators.degree());
  const double tau = std::max(100.0 * d * phi_up * phi_up / (eps * eps), lambda2);
  const int64_t mul = threshold_rank(spec, tau);
  const int64_t dim = std::max<int64_t>(mul - 1, 1);
  if (dim > k_max) {
    throw SizeGuardError("low eigenspace needs dimension " + std::to_string(dim) + " but k_max is " +
                         std::to_string(k_max));
  }
  // Centered indicators are orthogonal to the constant eigenvector, so only
  // the rest of low_tau is searched.
  const Subspace sub(spec.eigenvectors().middleCols(1, dim));
  PipelineResult r = sparsest_cut_near_subspace(g, sub, eps, cfg);
  r.diagnostics.tau = tau;
  r.diagnostics.phi_upper = phi_up;
  r.diagnostics.threshold_rank = mul;
  return r;
}

int64_t cut_dimension(const Graph& g, const Spectrum& spectrum, double eps, double c) {
  const int64_t n = g.size();
  if (n > 20) throw SizeGuardError("cut dimension needs exhaustive enumeration, n <= 20");
  if (n < 2) throw ValidationError("a graph with fewer than two vertices has no proper cut");
  if (spectrum.size() != n) throw ValidationError("spectrum does not match graph size");
  if (!(eps >= 0.0)) throw ValidationError("eps must be nonnegative");
  if (!(c >= 1.0)) throw ValidationError("approximation factor c must be at least 1");

  int64_t best_b = -1, best_den = 1;
  for_each_cut(g, [&](uint64_t, int64_t boundary, int64_t, int64_t size) {
    if (size == 0) return;
    const int64_t den = size * (n - size);
    if (best_b < 0 || static_cast<__int128>(boundary) * best_den < static_cast<__int128>(best_b) * den) {
      best_b = boundary;
      best_den = den;
    }
  });

  const Eigen::MatrixXd vt = spectrum.eigenvectors().transpose();
  int64_t answer = n;
  for_each_cut(g, [&](uint64_t mask, int64_t boundary, int64_t, int64_t size) {
    if (size == 0) return;
    const double lhs = static_cast<double>(boundary) * static_cast<double>(best_den);
    const double rhs = c * static_cast<double>(best_b) * static_cast<double>(size * (n - size));
    if (lhs > rhs * (1.0 + 1e-12)) return;
    const Eigen::VectorXd x = centered_indicator(Cut::from_mask(n, mask));
    const Eigen::VectorXd coeffs = vt * x;
    const double total = x.squaredNorm();
    double acc = 0.0;
    for (int64_t k = 1; k <= answer; ++k) {
      acc += coeffs(k - 1) * coeffs(k - 1);
      if (acc >= (1.0 - eps) * total - 1e-9 * total) {
        answer = std::min(answer, k);
        break;
      }
    }
  });
  return answer;
}

ContainmentReport containment_check(const Graph& g, double eps) {
  if (!g.is_cayley()) throw ValidationError("containment check needs a Cayley graph");
  const int64_t n = g.size();
  if (n > 20) throw SizeGuardError("containment check limited to n <= 20");
  if (!(eps > 0.0 && eps <= 1.0)) throw ValidationError("eps must lie in (0, 1]");

  ContainmentReport rep;
  rep.phi = brute_force_sparsest(g, Objective::kConductance).value;
  const double d = static_cast<double>(g.provenance()->generators.degree());
  rep.tau = 100.0 * d * rep.phi * rep.phi / (eps * eps);
  rep.vacuous = rep.tau >= 2.0;
  const Spectrum spec = graph_spectrum(g);
  const Subspace low = low_eigenspace(spec, rep.tau);
  rep.mul_tau = low.dim();
  rep.worst_margin = std::numeric_limits<double>::infinity();

  auto check = [&](const Cut& q) {
    ++rep.checked;
    const double margin = projection_mass(low, q) - (1.0 - eps);
    if (margin < -1e-9) ++rep.violations;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_cut = q;
    }
  };
  for_each_cut(g, [&](uint64_t mask, int64_t boundary, int64_t vol, int64_t size) {
    if (size == 0) return;
    const int64_t other_vol = g.total_volume() - vol;
    const Cut q = Cut::from_mask(n, mask);
    if (2 * size <= n && static_cast<double>(boundary) <= 2.0 * rep.phi * static_cast<double>(vol) * (1.0 + 1e-12)) {
      check(q);
    }
    if (2 * (n - size) <= n &&
        static_cast<double>(boundary) <= 2.0 * rep.phi * static_cast<double>(other_vol) * (1.0 + 1e-12)) {
      check(q.complement());
    }
  });
  rep.ok = rep.violations == 0;
  return rep;
}

}  // namespace abelcut
