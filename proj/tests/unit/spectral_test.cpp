#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/spectral.hpp"

using namespace abelcut;

namespace {

std::vector<double> sorted_character_values(const Graph& g) {
  const auto& prov = *g.provenance();
  std::vector<double> out;
  for (const auto& c : character_eigenvalues(prov.group, prov.generators)) out.push_back(c.eigenvalue);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> small_cayley_graphs() {
  std::vector<Graph> gs{cycle_graph(3), cycle_graph(10), hypercube_graph(3), hypercube_graph(5), complete_graph(6)};
  const std::vector<int64_t> t{3, 5};
  gs.push_back(torus_graph(t));
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    const AbelianGroup g({2, 3, 4});
    gs.push_back(build_cayley(g, random_generators(g, 5, seed)));
  }
  return gs;
}

}  // namespace

TEST(Spectral, CharacterRouteMatchesDense) {
  for (const Graph& g : small_cayley_graphs()) {
    const auto dense = dense_spectrum(g);
    EXPECT_LE(max_eigenvalue_gap(sorted_character_values(g), dense.eigenvalues()), kEigenTolerance) << g.name();
  }
}

TEST(Spectral, CycleClosedForm) {
  const int64_t n = 12;
  std::vector<double> expect;
  for (int64_t k = 0; k < n; ++k) expect.push_back(1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / n));
  std::sort(expect.begin(), expect.end());
  EXPECT_LE(max_eigenvalue_gap(graph_spectrum(cycle_graph(n)).eigenvalues(), expect), 1e-12);
}

TEST(Spectral, HypercubeBinomialMultiplicities) {
  const int k = 5;
  const auto s = graph_spectrum(hypercube_graph(k));
  for (int j = 0; j <= k; ++j) {
    const double lam = 2.0 * j / k;
    const auto count = std::count_if(s.eigenvalues().begin(), s.eigenvalues().end(),
                                     [&](double x) { return std::abs(x - lam) < 1e-9; });
    int64_t binom = 1;
    for (int i = 0; i < j; ++i) binom = binom * (k - i) / (i + 1);
    EXPECT_EQ(count, binom) << "level " << j;
  }
  EXPECT_EQ(threshold_rank(s, 0.4), 1 + k);
  const auto [lo, hi] = s.eigenspace_range(2);
  EXPECT_EQ(lo, 1);
  EXPECT_EQ(hi, 1 + k);
}

TEST(Spectral, RealBasisIsAnEigenbasis) {
  for (const Graph& g : small_cayley_graphs()) {
    const auto audit = audit_spectrum(g, graph_spectrum(g));
    EXPECT_TRUE(audit.ok) << g.name() << " residual " << audit.residual << " orth " << audit.orthonormality_error;
  }
}

TEST(Spectral, DenseRouteForIrregularGraphs) {
  const std::vector<WeightedEdge> path{{0, 1, 1}, {1, 2, 1}, {2, 3, 2}};
  const Graph g = Graph::from_edges(4, path);
  const auto s = graph_spectrum(g);
  EXPECT_TRUE(audit_spectrum(g, s).ok);
  EXPECT_NEAR(s.eigenvalue(0), 0.0, 1e-12);
  EXPECT_LE(s.eigenvalues().back(), 2.0 + 1e-12);
  const std::vector<WeightedEdge> lone{{0, 1, 1}};
  EXPECT_THROW(dense_spectrum(Graph::from_edges(3, lone)), ValidationError);
}

TEST(Spectral, SubspaceProjection) {
  Eigen::MatrixXd cols(4, 3);
  cols << 1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0;
  const Subspace s = Subspace::span_of(cols);
  EXPECT_EQ(s.dim(), 2);
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(4);
  const Eigen::VectorXd p = s.project(x);
  EXPECT_NEAR(p(0), 1.0, 1e-12);
  EXPECT_NEAR(p(2), 0.0, 1e-12);
  EXPECT_NEAR(s.project(p).dot(x - p), 0.0, 1e-12);
}

TEST(Spectral, ProjectionMassBounds) {
  const Graph g = cycle_graph(10);
  const auto s = graph_spectrum(g);
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const uint64_t mask = 1 + rng() % 1022;
    const Cut q = Cut::from_mask(10, mask);
    double prev = 0.0;
    for (int64_t k = 1; k <= 10; ++k) {
      const double m = projection_mass(prefix_subspace(s, k), q);
      EXPECT_GE(m, prev - 1e-12);
      EXPECT_LE(m, 1.0 + 1e-12);
      prev = m;
    }
    EXPECT_NEAR(prev, 1.0, 1e-10);
    EXPECT_NEAR(projection_mass(prefix_subspace(s, 1), q), 0.0, 1e-12);
  }
  EXPECT_THROW(projection_mass(prefix_subspace(s, 3), Cut::from_mask(10, 0)), ValidationError);
}

TEST(Spectral, EmbeddingRowsAreEigenvectorEntries) {
  const auto s = graph_spectrum(hypercube_graph(3));
  const auto emb = spectral_embedding(s, 4);
  ASSERT_EQ(emb.rows(), 8);
  ASSERT_EQ(emb.cols(), 4);
  EXPECT_NEAR((emb.col(2) - s.eigenvector(2)).norm(), 0.0, 1e-14);
  EXPECT_NEAR(centered_indicator(Cut::from_mask(8, 0b1011)).sum(), 0.0, 1e-12);
}
