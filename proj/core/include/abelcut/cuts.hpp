#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/spectral.hpp"

namespace abelcut {

/// Edges leaving q, with multiplicity. Self-loops never cross.
int64_t boundary_size(const Graph& g, const Cut& q);
/// Sum of degrees over q (self-loops included).
int64_t volume(const Graph& g, const Cut& q);

/// |dQ| / vol(Q) for the given side.
double conductance(const Graph& g, const Cut& q);
/// |dQ| / min(vol(Q), vol(V \ Q)): conductance of the partition.
double partition_conductance(const Graph& g, const Cut& q);
/// |dQ| / (|Q| (n - |Q|)).
double sparsity(const Graph& g, const Cut& q);

struct RayleighReport {
  bool regular = false;
  double conductance = 0.0;
  double conductance_quotient = 0.0;
  double scaled_sparsity = 0.0;   // n * psi
  double sparsity_quotient = 0.0;  // centered quotient (d-scaled when regular)
  bool ok = false;
};

/// Compares both cut functionals with their Rayleigh-quotient forms. For
/// irregular graphs the degree-weighted forms are used.
RayleighReport rayleigh_consistency(const Graph& g, const Cut& q, double tol = 1e-9);

enum class Objective { kConductance, kSparsity };

struct CutResult {
  Cut cut;
  double value = 0.0;
};

/// Visits every partition {Q, V \ Q} once, with vertex n-1 outside Q and Q
/// possibly empty, in Gray-code order (n <= 26). Arguments: membership mask of
/// Q, |dQ|, vol(Q), |Q|.
using CutVisitor = std::function<void(uint64_t mask, int64_t boundary, int64_t volume, int64_t size)>;
void for_each_cut(const Graph& g, const CutVisitor& visit);

/// Exact optimum by enumeration of all 2^{n-1} partitions (n <= 26). The
/// returned side has vol <= vol(G)/2 for conductance and |Q| <= n/2 for
/// sparsity; ties resolve to the lexicographically smallest side.
CutResult brute_force_sparsest(const Graph& g, Objective objective);

/// Distinct proper cuts {i : v_i >= theta}, ordered by increasing size.
std::vector<Cut> threshold_cuts(const Eigen::VectorXd& v);

/// Best sweep cut by partition conductance over the lambda_2 eigenspace.
/// When lambda_2 is degenerate every basis vector of its eigenspace and every
/// pairwise sum/difference is swept. Throws ValidationError if disconnected.
CutResult fiedler_cut(const Graph& g, const Spectrum& spectrum);

/// Greedy peeling of smallest non-expanding sets (n <= 20). Every piece except
/// possibly the last has conductance <= tau and no proper subset of any piece
/// does.
std::vector<Cut> expander_decomposition(const Graph& g, double tau);

}  // namespace abelcut
