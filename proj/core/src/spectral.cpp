#include "abelcut/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "abelcut/errors.hpp"

namespace abelcut {

namespace {

void require_symmetric(const AbelianGroup& group, const GeneratorMultiset& gens) {
  if (!validate_generators(group, gens).empty()) {
    throw ValidationError("generator multiset is not symmetric");
  }
}

// cos/sin of 2*pi*k/L for k in [0, L).
struct PhaseTable {
  explicit PhaseTable(int64_t period) : cos_(static_cast<size_t>(period)), sin_(static_cast<size_t>(period)) {
    for (int64_t k = 0; k < period; ++k) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(period);
      cos_[static_cast<size_t>(k)] = std::cos(a);
      sin_[static_cast<size_t>(k)] = std::sin(a);
    }
  }
  double cos(int64_t k) const { return cos_[static_cast<size_t>(k)]; }
  double sin(int64_t k) const { return sin_[static_cast<size_t>(k)]; }

  std::vector<double> cos_, sin_;
};

}  // namespace

std::vector<CharacterEigenvalue> character_eigenvalues(const AbelianGroup& group,
                                                       const GeneratorMultiset& gens) {
  require_symmetric(group, gens);
  const PhaseTable phase(group.exponent());
  const double d = static_cast<double>(gens.degree());
  std::vector<CharacterEigenvalue> out;
  out.reserve(static_cast<size_t>(group.order()));
  for (int64_t gi = 0; gi < group.order(); ++gi) {
    const GroupElement g = group.element(gi);
    double re = 0.0, im = 0.0;
    for (const auto& s : gens.entries()) {
      const int64_t k = group.pairing(g, s.element);
      re += static_cast<double>(s.mult) * phase.cos(k);
      im += static_cast<double>(s.mult) * phase.sin(k);
    }
    if (std::abs(im) / d >= 1e-9) {
      throw std::logic_error("character sum has a nonzero imaginary part for a symmetric multiset");
    }
    out.push_back({gi, 1.0 - re / d});
  }
  return out;
}

Spectrum::Spectrum(std::vector<double> eigenvalues, Eigen::MatrixXd eigenvectors, double eq_tolerance)
    : values_(std::move(eigenvalues)), vectors_(std::move(eigenvectors)), eq_tol_(eq_tolerance) {
  if (static_cast<int64_t>(values_.size()) != vectors_.cols()) {
    throw ValidationError("eigenvalue count does not match eigenvector count");
  }
  if (!std::is_sorted(values_.begin(), values_.end())) throw ValidationError("eigenvalues must be sorted");
}

std::pair<int64_t, int64_t> Spectrum::eigenspace_range(int64_t i) const {
  int64_t lo = i, hi = i + 1;
  while (lo > 0 && values_[static_cast<size_t>(lo)] - values_[static_cast<size_t>(lo - 1)] <= eq_tol_) --lo;
  while (hi < size() && values_[static_cast<size_t>(hi)] - values_[static_cast<size_t>(hi - 1)] <= eq_tol_) ++hi;
  return {lo, hi};
}

Subspace Subspace::span_of(const Eigen::MatrixXd& columns, double tol) {
  const int64_t n = columns.rows();
  std::vector<Eigen::VectorXd> kept;
  for (int64_t c = 0; c < columns.cols(); ++c) {
    Eigen::VectorXd v = columns.col(c);
    // Two Gram-Schmidt passes keep the basis orthonormal to machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : kept) v -= b.dot(v) * b;
    }
    const double norm = v.norm();
    if (norm > tol) kept.push_back(v / norm);
  }
  Eigen::MatrixXd basis(n, static_cast<int64_t>(kept.size()));
  for (size_t c = 0; c < kept.size(); ++c) basis.col(static_cast<int64_t>(c)) = kept[c];
  return Subspace(std::move(basis));
}

Eigen::VectorXd Subspace::project(const Eigen::VectorXd& x) const {
  return basis_ * (basis_.transpose() * x);
}

Spectrum real_eigenbasis(const AbelianGroup& group, const GeneratorMultiset& gens, double eq_tolerance) {
  const auto chars = character_eigenvalues(group, gens);
  const int64_t n = group.order();
  const PhaseTable phase(group.exponent());

  std::vector<GroupElement> elems;
  elems.reserve(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) elems.push_back(group.element(i));

  struct Column {
    double value;
    int64_t g;
    bool sine;
  };
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(n));
  for (int64_t gi = 0; gi < n; ++gi) {
    const int64_t neg = group.negate_index(gi);
    if (neg == gi) {
      cols.push_back({chars[static_cast<size_t>(gi)].eigenvalue, gi, false});
    } else if (gi < neg) {
      cols.push_back({chars[static_cast<size_t>(gi)].eigenvalue, gi, false});
      cols.push_back({chars[static_cast<size_t>(gi)].eigenvalue, gi, true});
    }
  }
  std::stable_sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) { return a.value < b.value; });

  Eigen::MatrixXd vecs(n, n);
  std::vector<double> values(static_cast<size_t>(n));
  for (int64_t c = 0; c < n; ++c) {
    const auto& col = cols[static_cast<size_t>(c)];
    const GroupElement& g = elems[static_cast<size_t>(col.g)];
    for (int64_t x = 0; x < n; ++x) {
      const int64_t k = group.pairing(g, elems[static_cast<size_t>(x)]);
      vecs(x, c) = col.sine ? phase.sin(k) : phase.cos(k);
    }
    vecs.col(c).normalize();
    values[static_cast<size_t>(c)] = col.value;
  }
  return Spectrum(std::move(values), std::move(vecs), eq_tolerance);
}

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  const int64_t n = g.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int64_t u = 0; u < n; ++u) {
    if (g.degree(u) == 0) throw ValidationError("vertex " + std::to_string(u) + " has degree zero");
  }
  for (int64_t u = 0; u < n; ++u) {
    for (const auto& nb : g.neighbors(u)) {
      a(u, nb.vertex) = static_cast<double>(nb.mult) /
                        std::sqrt(static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(nb.vertex)));
    }
  }
  return a;
}

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
  const int64_t n = g.size();
  return Eigen::MatrixXd::Identity(n, n) - normalized_adjacency(g);
}

Spectrum dense_spectrum(const Graph& g, double eq_tolerance) {
  const Eigen::MatrixXd lap = normalized_laplacian(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  const auto& ev = solver.eigenvalues();
  std::vector<double> values(ev.data(), ev.data() + ev.size());
  return Spectrum(std::move(values), solver.eigenvectors(), eq_tolerance);
}

Spectrum graph_spectrum(const Graph& g, double eq_tolerance) {
  if (g.is_cayley()) {
    return real_eigenbasis(g.provenance()->group, g.provenance()->generators, eq_tolerance);
  }
  return dense_spectrum(g, eq_tolerance);
}

int64_t threshold_rank(const Spectrum& spectrum, double tau) {
  const auto& v = spectrum.eigenvalues();
  return std::upper_bound(v.begin(), v.end(), tau + spectrum.eq_tolerance()) - v.begin();
}

Subspace low_eigenspace(const Spectrum& spectrum, double tau) {
  return prefix_subspace(spectrum, threshold_rank(spectrum, tau));
}

Subspace prefix_subspace(const Spectrum& spectrum, int64_t k) {
  if (k < 0 || k > spectrum.size()) throw ValidationError("prefix dimension out of range");
  return Subspace(spectrum.eigenvectors().leftCols(k));
}

Eigen::VectorXd centered_indicator(const Cut& q) {
  const int64_t n = q.universe();
  Eigen::VectorXd x(n);
  const double mean = static_cast<double>(q.size()) / static_cast<double>(n);
  for (int64_t i = 0; i < n; ++i) x(i) = (q.contains(i) ? 1.0 : 0.0) - mean;
  return x;
}

double projection_mass(const Subspace& subspace, const Cut& q) {
  if (!q.proper()) throw ValidationError("projection of an empty or full set is undefined");
  if (q.universe() != subspace.ambient_dim()) throw ValidationError("cut and subspace dimensions differ");
  const Eigen::VectorXd x = centered_indicator(q);
  const Eigen::VectorXd coeffs = subspace.basis().transpose() * x;
  return coeffs.squaredNorm() / x.squaredNorm();
}

Eigen::MatrixXd spectral_embedding(const Spectrum& spectrum, int64_t k) {
  if (k < 1 || k > spectrum.size()) throw ValidationError("embedding dimension out of range");
  return spectrum.eigenvectors().leftCols(k);
}

SpectrumAudit audit_spectrum(const Graph& g, const Spectrum& spectrum) {
  SpectrumAudit a;
  const double tol = spectrum.eq_tolerance();
  for (double v : spectrum.eigenvalues()) {
    a.range_violation = std::max({a.range_violation, -v, v - 2.0});
  }
  const auto& vecs = spectrum.eigenvectors();
  const int64_t n = vecs.cols();
  a.orthonormality_error = (vecs.transpose() * vecs - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd lap = normalized_laplacian(g);
  const Eigen::MatrixXd lv = lap * vecs;
  for (int64_t i = 0; i < n; ++i) {
    a.residual = std::max(a.residual, (lv.col(i) - spectrum.eigenvalue(i) * vecs.col(i)).norm());
  }
  a.ok = a.range_violation <= tol && a.orthonormality_error <= 10 * tol && a.residual <= 10 * tol;
  return a;
}

double max_eigenvalue_gap(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace abelcut
