#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/pipeline.hpp"
#include "abelcut/spectral.hpp"

using namespace abelcut;

TEST(EpsNet, DimensionOneIsBothSigns) {
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(5, 1);
  b(2, 0) = 1.0;
  const auto net = eps_net(Subspace(b), 0.1, 1, 64);
  ASSERT_EQ(net.size(), 2);
  EXPECT_NEAR(std::abs(net.vectors(2, 0) - net.vectors(2, 1)), 2.0, 1e-12);
}

TEST(EpsNet, UnitVectorsInsideTheSubspace) {
  const auto s = graph_spectrum(hypercube_graph(4));
  const Subspace sub = prefix_subspace(s, 5);
  const auto net = eps_net(sub, 0.2, 3, 300);
  EXPECT_GE(net.size(), 2 * 5);
  for (int64_t j = 0; j < net.size(); ++j) {
    const Eigen::VectorXd v = net.vectors.col(j);
    EXPECT_NEAR(v.norm(), 1.0, 1e-10);
    EXPECT_NEAR((sub.project(v) - v).norm(), 0.0, 1e-10);
  }
  EXPECT_GT(net.covering_estimate, 0.0);
}

TEST(EpsNet, DeterministicPerSeed) {
  const Subspace sub = prefix_subspace(graph_spectrum(cycle_graph(20)), 4);
  const auto a = eps_net(sub, 0.1, 9, 100);
  const auto b = eps_net(sub, 0.1, 9, 100);
  EXPECT_EQ(a.vectors, b.vectors);
  EXPECT_THROW(eps_net(sub, 0.01, 9, 10, true), ValidationError);
  EXPECT_THROW(eps_net(sub, 0.0, 9, 10), ValidationError);
}

TEST(Pipeline, ExactOnSmallCycles) {
  for (int64_t n = 8; n <= 20; ++n) {
    const Graph g = cycle_graph(n);
    const auto r = abelian_sparsest_cut(g, 0.05, n);
    EXPECT_NEAR(r.conductance, 2.0 / (2.0 * static_cast<double>(n / 2)), 1e-12) << "C" << n;
    EXPECT_NEAR(r.conductance, partition_conductance(g, r.cut), 1e-12);
  }
}

TEST(Pipeline, WithinFactorFourOnSmallCayley) {
  const std::vector<int64_t> t{3, 4};
  for (const Graph& g : {hypercube_graph(3), hypercube_graph(4), torus_graph(t), complete_graph(5)}) {
    const auto r = abelian_sparsest_cut(g, 0.05, g.size());
    const double opt = brute_force_sparsest(g, Objective::kConductance).value;
    EXPECT_LE(r.conductance / opt, 4.0) << g.name();
    EXPECT_GE(r.conductance, opt - 1e-12);
  }
}

TEST(Pipeline, GuardsAndPreconditions) {
  const Graph q5 = hypercube_graph(5);
  try {
    abelian_sparsest_cut(q5, 0.05, 1);
    FAIL() << "expected the k_max guard";
  } catch (const SizeGuardError& e) {
    EXPECT_NE(std::string(e.what()).find("k_max"), std::string::npos) << e.what();
  }
  const std::vector<WeightedEdge> e{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};
  EXPECT_THROW(abelian_sparsest_cut(Graph::from_edges(4, e), 0.05, 4), ValidationError);
}

TEST(Pipeline, NearSubspaceFindsTheArc) {
  const Graph g = cycle_graph(16);
  const auto s = graph_spectrum(g);
  const auto r = sparsest_cut_near_subspace(g, prefix_subspace(s, 3), 0.05);
  EXPECT_NEAR(r.sparsity, brute_force_sparsest(g, Objective::kSparsity).value, 1e-12);
  EXPECT_GT(r.diagnostics.distinct_candidates, 0);
}

TEST(CutDimension, CyclesNeedTheFirstFrequency) {
  const Graph g = cycle_graph(12);
  const auto s = graph_spectrum(g);
  const int64_t k = cut_dimension(g, s, 0.2, 1.0);
  EXPECT_GE(k, 2);
  EXPECT_LE(k, 12);
  EXPECT_LE(cut_dimension(g, s, 0.5, 1.0), k);
}

TEST(Containment, HoldsOnSmallFamilies) {
  for (const Graph& g : {cycle_graph(8), cycle_graph(13), hypercube_graph(3)}) {
    for (double eps : {0.25, 0.5}) {
      const auto r = containment_check(g, eps);
      EXPECT_TRUE(r.ok) << g.name() << " eps " << eps << " margin " << r.worst_margin;
      EXPECT_EQ(r.violations, 0);
      EXPECT_GT(r.checked, 0);
    }
  }
}
