#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"

namespace abelcut {

/// Degree-2 pseudo-moments. Index 0 is the constant 1; vertex i sits at i + 1.
class PseudomomentMatrix {
 public:
  explicit PseudomomentMatrix(Eigen::MatrixXd m);

  /// Rank-one moment matrix of the indicator of q.
  static PseudomomentMatrix integral(const Cut& q);

  int64_t vertices() const { return static_cast<int64_t>(m_.rows()) - 1; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  /// E x_i, read off the diagonal.
  double marginal(int64_t i) const { return m_(i + 1, i + 1); }

  /// Squared distance between points of {0*, 1*} u [n]. Use kZero / kOne for
  /// the two special points and 0..n-1 for vertices.
  double distance(int64_t a, int64_t b) const;
  static constexpr int64_t kZero = -2;
  static constexpr int64_t kOne = -1;

  /// Sum over unordered vertex pairs of d(i, j).
  double spreading() const;

 private:
  Eigen::MatrixXd m_;
};

struct SolverConfig {
  double tolerance = 1e-6;
  int64_t max_iterations = 50000;  // per triangle round
  int64_t max_rounds = 60;
  int64_t batch_size = 0;  // 0 picks 16n
  uint64_t seed = 0;       // recorded only; the iteration itself is deterministic
};

struct SolverDiagnostics {
  int64_t iterations = 0;
  int64_t triangle_rounds = 0;
  int64_t active_triangles = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;  // cone infeasibility of the dual slack
  double duality_gap = 0.0;    // relative
  double objective = 0.0;
  double rho = 0.0;
  bool converged = false;
};

struct SdpSolution {
  PseudomomentMatrix moments;
  SolverDiagnostics diagnostics;
};

/// Minimises the edge sum of d(i, j) (each undirected edge once, with
/// multiplicity) over PSD moment matrices with boolean diagonal, the advice
/// correlation constraint and all l2^2 triangle inequalities. Triangles are
/// generated lazily. Requires 0 <= eps <= 1/20 and a proper q.
/// Throws SolverError when an iteration budget runs out.
SdpSolution solve_advice_sdp(const Graph& g, const Cut& q, double eps, const SolverConfig& cfg = {});

/// Triangle over {0*, 1*} u [n]: d(i, j) <= d(i, k) + d(k, j) violated by
/// `violation`. Points use PseudomomentMatrix's numbering.
struct TriangleViolation {
  std::array<int64_t, 3> ijk{};
  double violation = 0.0;
};

/// The top_k largest violations exceeding tol, most violated first.
std::vector<TriangleViolation> triangle_violations(const PseudomomentMatrix& m, int64_t top_k,
                                                   double tol = 1e-6);

struct MomentAudit {
  double min_eigenvalue = 0.0;
  double boolean_error = 0.0;      // max |M_0i - M_ii|
  double correlation_excess = 0.0; // max(0, lhs - eps|Q|)
  double worst_triangle = 0.0;
  bool ok = false;
};

/// Checks every moment-matrix invariant against tol (PSD against -10 tol).
MomentAudit audit_moments(const PseudomomentMatrix& m, const Cut& q, double eps, double tol);

struct BallCut {
  Cut cut;
  double sparsity = 0.0;
  int64_t center = 0;
  double radius = 0.0;
};

/// Tries every centre u and radius d(u, i) and returns the proper ball of least
/// sparsity (recomputed from the graph). Throws SolverError if every ball is
/// empty or everything.
BallCut ball_rounding(const PseudomomentMatrix& m, const Graph& g);

struct AdviceResult {
  Cut cut;
  double sparsity = 0.0;
  double sdp_objective = 0.0;
  double spreading = 0.0;
  /// sdp_objective / spreading. Informational: the minimiser need not be
  /// spread, so this is not a certified lower bound.
  double objective_ratio = 0.0;
  SolverDiagnostics diagnostics;
};

AdviceResult advice_cut(const Graph& g, const Cut& q, double eps, const SolverConfig& cfg = {});

}  // namespace abelcut
