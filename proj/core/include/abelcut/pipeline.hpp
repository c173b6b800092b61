#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/sdp_advice.hpp"
#include "abelcut/spectral.hpp"

namespace abelcut {

struct NetSpec {
  double radius = 0.0;  // sqrt(eps)
  int64_t dim = 0;
  int64_t budget = 0;
  uint64_t seed = 0;
  Eigen::MatrixXd vectors;  // ambient coordinates, one unit vector per column
  int64_t structured = 0;   // leading columns from the deterministic part
  int64_t target = 0;       // ceil(C (4/sqrt(eps))^k), saturated
  bool truncated = false;   // target > budget
  double covering_estimate = 0.0;  // max sampled distance to the nearest net point

  int64_t size() const { return vectors.cols(); }
};

/// Net of unit vectors in the subspace. For dim 1 this is exactly {+v, -v}.
/// Otherwise it starts with +-basis vectors and a sqrt(eps)-net of the unit
/// circle in every plane spanned by two of the first six basis vectors, then
/// adds min(budget, target) random unit vectors. The covering radius is
/// estimated from `audit_samples` random unit vectors.
/// Throws ValidationError on bad arguments, and when `require_full` is set
/// and the budget is below the target count.
NetSpec eps_net(const Subspace& subspace, double eps, uint64_t seed, int64_t budget,
                bool require_full = false, double constant = 1.0, int64_t audit_samples = 200);

struct PipelineConfig {
  uint64_t seed = 0;
  int64_t budget = 256;
  int64_t max_sdp_calls = 8;
  int64_t sdp_max_vertices = 32;  // above this the SDP stage is skipped
  SolverConfig solver;
};

struct PipelineDiagnostics {
  int64_t net_size = 0;
  int64_t net_structured = 0;
  bool net_truncated = false;
  double covering_estimate = 0.0;
  int64_t threshold_candidates = 0;
  int64_t distinct_candidates = 0;
  int64_t sdp_calls = 0;
  int64_t sdp_iterations = 0;
  int64_t sdp_failures = 0;  // solves that hit the iteration budget
  bool sdp_skipped = false;
  double sdp_eps = 0.0;
  int64_t subspace_dim = 0;  // dimension of the searched subspace
  int64_t threshold_rank = 0;  // mul_tau, including the constant direction
  double tau = 0.0;
  double phi_upper = 0.0;
  std::string best_source;  // "threshold" or "sdp"
};

struct PipelineResult {
  Cut cut;
  double sparsity = 0.0;
  double conductance = 0.0;  // partition conductance, recomputed
  PipelineDiagnostics diagnostics;
};

/// Threshold cuts of every net vector, then advice SDP + ball rounding from the
/// sparsest distinct candidates; returns the sparsest cut seen, ties broken
/// lexicographically on the smaller side. The SDP runs with min(eps, 1/20).
PipelineResult sparsest_cut_near_subspace(const Graph& g, const Subspace& subspace, double eps,
                                          const PipelineConfig& cfg = {});

/// Spectral pipeline for connected Cayley graphs. tau = 100 d phi_up^2 / eps^2
/// with phi_up = min(Fiedler conductance, sqrt(2 lambda_2)); the searched
/// subspace is low_tau with the constant direction removed.
/// Throws SizeGuardError when mul_tau > k_max (message carries the required
/// dimension), ValidationError when the graph is disconnected or not Cayley.
PipelineResult abelian_sparsest_cut(const Graph& g, double eps, int64_t k_max, const PipelineConfig& cfg = {});

/// Smallest k such that some Q with psi(Q) <= c psi(G) has projection mass
/// >= 1 - eps on the first k eigenvectors of `spectrum` (n <= 20). Prefixes
/// may split eigenspaces, so the value depends on the basis inside an
/// eigenspace except at eigenspace boundaries.
int64_t cut_dimension(const Graph& g, const Spectrum& spectrum, double eps, double c);

struct ContainmentReport {
  double phi = 0.0;
  double tau = 0.0;
  int64_t mul_tau = 0;
  bool vacuous = false;  // tau >= 2: low_tau is everything
  int64_t checked = 0;
  int64_t violations = 0;
  double worst_margin = 0.0;  // min over checked Q of mass - (1 - eps)
  std::optional<Cut> worst_cut;
  bool ok = false;
};

/// Every Q with |Q| <= n/2 and conductance <= 2 phi(G) must keep at least
/// 1 - eps of its centered indicator inside low_tau, tau = 100 d phi(G)^2 / eps^2.
/// Cayley graphs with n <= 20.
ContainmentReport containment_check(const Graph& g, double eps);

}  // namespace abelcut
