#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/group.hpp"

namespace abelcut {

inline constexpr double kEigenTolerance = 1e-8;

struct CharacterEigenvalue {
  int64_t character = 0;  // index of g in the group
  double eigenvalue = 0.0;
};

/// Normalized-Laplacian eigenvalue 1 - (1/d) sum_s Re chi_g(s) for every g,
/// in group-index order. Throws ValidationError for asymmetric generators and
/// std::logic_error if a character sum has imaginary part above 1e-9.
std::vector<CharacterEigenvalue> character_eigenvalues(const AbelianGroup& group,
                                                       const GeneratorMultiset& gens);

/// Sorted eigenvalues with an orthonormal real eigenbasis (columns).
/// Rotation within an eigenspace is not canonical.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<double> eigenvalues, Eigen::MatrixXd eigenvectors,
           double eq_tolerance = kEigenTolerance);

  int64_t size() const { return static_cast<int64_t>(values_.size()); }
  const std::vector<double>& eigenvalues() const { return values_; }
  double eigenvalue(int64_t i) const { return values_[static_cast<size_t>(i)]; }
  const Eigen::MatrixXd& eigenvectors() const { return vectors_; }
  auto eigenvector(int64_t i) const { return vectors_.col(i); }
  double eq_tolerance() const { return eq_tol_; }

  /// Second-smallest eigenvalue (0 for a single vertex).
  double lambda2() const { return values_.size() > 1 ? values_[1] : 0.0; }

  /// Indices [first, last) of the eigenspace containing position i.
  std::pair<int64_t, int64_t> eigenspace_range(int64_t i) const;

 private:
  std::vector<double> values_;
  Eigen::MatrixXd vectors_;
  double eq_tol_ = kEigenTolerance;
};

/// Orthonormal basis of a subspace of R^n, stored as columns.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Eigen::MatrixXd basis) : basis_(std::move(basis)) {}

  /// Orthonormalizes the given columns; dependent columns are dropped.
  static Subspace span_of(const Eigen::MatrixXd& columns, double tol = 1e-10);

  int64_t ambient_dim() const { return basis_.rows(); }
  int64_t dim() const { return basis_.cols(); }
  const Eigen::MatrixXd& basis() const { return basis_; }

  Eigen::VectorXd project(const Eigen::VectorXd& x) const;

 private:
  Eigen::MatrixXd basis_;
};

/// Characters folded into a real basis: conjugate pairs become cosine/sine
/// vectors, self-conjugate characters stay as +-1/sqrt(n) vectors.
Spectrum real_eigenbasis(const AbelianGroup& group, const GeneratorMultiset& gens,
                         double eq_tolerance = kEigenTolerance);

/// Character route when the graph carries Cayley provenance, otherwise dense.
Spectrum graph_spectrum(const Graph& g, double eq_tolerance = kEigenTolerance);

/// Dense eigendecomposition of I - D^{-1/2} A D^{-1/2}.
/// Throws ValidationError on a zero-degree vertex.
Spectrum dense_spectrum(const Graph& g, double eq_tolerance = kEigenTolerance);

Eigen::MatrixXd normalized_adjacency(const Graph& g);
Eigen::MatrixXd normalized_laplacian(const Graph& g);

/// Number of eigenvalues <= tau (+ eq_tolerance).
int64_t threshold_rank(const Spectrum& spectrum, double tau);
Subspace low_eigenspace(const Spectrum& spectrum, double tau);

/// First k eigenvectors as a subspace.
Subspace prefix_subspace(const Spectrum& spectrum, int64_t k);

/// Fraction of the centered indicator of q lying in the subspace.
/// Throws ValidationError if q is empty or everything.
double projection_mass(const Subspace& subspace, const Cut& q);

/// 1_Q minus its mean.
Eigen::VectorXd centered_indicator(const Cut& q);

/// Row i = (v_1(i), ..., v_k(i)).
Eigen::MatrixXd spectral_embedding(const Spectrum& spectrum, int64_t k);

/// Audit of the Spectrum invariants; returns the worst violation magnitudes.
struct SpectrumAudit {
  double range_violation = 0.0;
  double orthonormality_error = 0.0;
  double residual = 0.0;
  bool ok = false;
};
SpectrumAudit audit_spectrum(const Graph& g, const Spectrum& spectrum);

/// Largest absolute difference between two sorted eigenvalue lists.
double max_eigenvalue_gap(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace abelcut
