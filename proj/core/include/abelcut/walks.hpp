#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/spectral.hpp"

namespace abelcut {

enum class CollisionMethod { kSpectral, kDirect };

/// CP_t for t = 0..t_max. values[t] is the squared 2-norm of the t-step lazy
/// walk distribution started at vertex 0.
struct CollisionProfile {
  CollisionMethod method = CollisionMethod::kSpectral;
  std::vector<double> values;
};

/// (1/n) sum_i (1 - lambda_i/2)^{2t}. Requires Cayley provenance (the identity
/// needs vertex transitivity); throws ValidationError otherwise.
double collision_spectral(const Graph& g, const Spectrum& spectrum, int64_t t);
CollisionProfile collision_profile_spectral(const Graph& g, const Spectrum& spectrum, int64_t t_max);

/// ||((I + W)/2)^t e_0||^2 with W the random-walk transition matrix, by t
/// sparse matrix-vector products. Works for any graph without isolated vertices.
double collision_direct(const Graph& g, int64_t t);
CollisionProfile collision_profile_direct(const Graph& g, int64_t t_max);

/// ln((2e)^{4d}).
double log_cp_ratio_bound(int64_t degree);

struct RatioBoundReport {
  int64_t degree = 0;
  double bound = 0.0;        // (2e)^{4d}, may be +inf for huge d
  double max_ratio = 0.0;    // max over 1 <= t <= t_max of CP_t / CP_2t
  int64_t argmax_t = 0;
  std::vector<double> ratios;  // ratios[t-1] = CP_t / CP_2t
  std::optional<int64_t> violation_t;
  bool ok = false;
};

/// Checks CP_t / CP_{2t} <= (2e)^{4d} for 1 <= t <= t_max.
RatioBoundReport cp_ratio_bound_check(const Graph& g, const Spectrum& spectrum, int64_t t_max);

/// Both sides of the collision-ratio lower bound at threshold tau, plus the
/// multiplicity bound obtained by chaining it with the doubling bound.
struct MultiplicityCertificate {
  double tau = 0.0;
  double lambda2 = 0.0;
  int64_t kappa = 0;
  int64_t dim_low = 0;
  int64_t t = 0;
  double ratio = 0.0;        // CP_t / CP_{t(kappa+1)}
  double lower_bound = 0.0;  // sqrt(dim_low) / (2 e^3)
  bool lower_ok = false;
  /// log of the product of doubling bounds, ln(2e) * 4d * ceil(log2(kappa+1)).
  double log_doubling_bound = 0.0;
  bool doubling_ok = false;
  /// 20 d log2(3 tau / lambda2) + 11, compared against log2(dim_low).
  double log2_multiplicity_bound = 0.0;
  bool multiplicity_ok = false;
  bool ok = false;
};

/// Requires a connected Cayley graph and lambda2 <= tau <= 3/2; tau that falls
/// short of lambda2 by at most the eigenvalue tolerance is clamped up to it.
MultiplicityCertificate multiplicity_certificate(const Graph& g, const Spectrum& spectrum, double tau);

struct BuserReport {
  double lhs = 0.0;  // conductance of q in G^{2t}
  double rhs = 0.0;  // 2 sqrt(t d) * conductance of q in G
  bool ok = false;
};

/// Spectral evaluation of the graph-power conductance against the random-walk
/// Buser bound. Requires a Cayley graph, a proper q, and t >= 1.
BuserReport buser_check(const Graph& g, const Spectrum& spectrum, const Cut& q, int64_t t);

/// Conductance of q in the 2t-th power multigraph via the explicit matrix
/// power of the transition matrix. Regular graphs with n <= 256 only.
double power_conductance_materialized(const Graph& g, const Cut& q, int64_t t);

}  // namespace abelcut
