#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/spectral.hpp"

using namespace abelcut;

namespace {

// Oracle without Gray codes: every mask from scratch.
double naive_best(const Graph& g, Objective obj) {
  const int64_t n = g.size();
  double best = std::numeric_limits<double>::infinity();
  for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << n); ++mask) {
    const Cut q = Cut::from_mask(n, mask);
    best = std::min(best, obj == Objective::kSparsity ? sparsity(g, q) : partition_conductance(g, q));
  }
  return best;
}

Graph random_multigraph(int64_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedEdge> e;
  for (int64_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  for (int k = 0; k < 2 * n; ++k) e.push_back({static_cast<int64_t>(rng() % n), static_cast<int64_t>(rng() % n), 1 + static_cast<int64_t>(rng() % 3)});
  return Graph::from_edges(n, e);
}

}  // namespace

TEST(CutFunctionals, CycleArc) {
  const Graph g = cycle_graph(10);
  const Cut arc = Cut::from_mask(10, 0b11111);
  EXPECT_EQ(boundary_size(g, arc), 2);
  EXPECT_EQ(volume(g, arc), 10);
  EXPECT_DOUBLE_EQ(conductance(g, arc), 0.2);
  EXPECT_DOUBLE_EQ(sparsity(g, arc), 2.0 / 25.0);
}

TEST(CutFunctionals, SelfLoopsNeverCross) {
  const std::vector<WeightedEdge> e{{0, 0, 5}, {0, 1, 1}};
  const Graph g = Graph::from_edges(2, e);
  const Cut q = Cut::from_mask(2, 1);
  EXPECT_EQ(boundary_size(g, q), 1);
  EXPECT_EQ(volume(g, q), 6);
}

TEST(CutFunctionals, RayleighFormsAgree) {
  std::mt19937_64 rng(4);
  std::vector<Graph> gs{hypercube_graph(4), complete_graph(7), random_multigraph(9, 1), random_multigraph(12, 2)};
  for (const Graph& g : gs) {
    for (int rep = 0; rep < 100; ++rep) {
      const uint64_t mask = 1 + rng() % ((uint64_t{1} << g.size()) - 2);
      const auto r = rayleigh_consistency(g, Cut::from_mask(g.size(), mask));
      EXPECT_TRUE(r.ok) << g.name() << " mask " << mask;
    }
  }
}

TEST(BruteForce, MatchesNaiveOracle) {
  std::vector<Graph> gs{cycle_graph(9), hypercube_graph(3), complete_graph(5), random_multigraph(8, 3),
                        random_multigraph(10, 4)};
  for (const Graph& g : gs) {
    for (Objective obj : {Objective::kConductance, Objective::kSparsity}) {
      const auto r = brute_force_sparsest(g, obj);
      EXPECT_NEAR(r.value, naive_best(g, obj), 1e-12);
      const double recomputed = obj == Objective::kSparsity ? sparsity(g, r.cut) : partition_conductance(g, r.cut);
      EXPECT_NEAR(r.value, recomputed, 1e-12);
      EXPECT_TRUE(r.cut.proper());
    }
  }
}

TEST(BruteForce, VisitsEveryPartitionOnce) {
  const Graph g = random_multigraph(7, 5);
  std::vector<int> seen(64, 0);
  for_each_cut(g, [&](uint64_t mask, int64_t boundary, int64_t vol, int64_t size) {
    ASSERT_LT(mask, 64u);
    ++seen[mask];
    const Cut q = Cut::from_mask(7, mask);
    EXPECT_EQ(boundary, boundary_size(g, q));
    EXPECT_EQ(vol, volume(g, q));
    EXPECT_EQ(size, q.size());
  });
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  EXPECT_THROW(brute_force_sparsest(cycle_graph(27), Objective::kSparsity), SizeGuardError);
}

TEST(Cheeger, HoldsForEveryCutOfSmallGraphs) {
  std::vector<Graph> gs{cycle_graph(11), hypercube_graph(4), complete_graph(6)};
  const std::vector<int64_t> t{3, 4};
  gs.push_back(torus_graph(t));
  for (const Graph& g : gs) {
    const double l2 = graph_spectrum(g).lambda2();
    const double phi = brute_force_sparsest(g, Objective::kConductance).value;
    EXPECT_LE(l2 / 2.0, phi + 1e-9) << g.name();
    EXPECT_LE(phi, std::sqrt(2.0 * l2) + 1e-9) << g.name();
  }
}

TEST(Threshold, CutsAreNestedAndDistinct) {
  Eigen::VectorXd v(6);
  v << 0.3, -1.0, 0.3, 2.0, -0.5, 0.0;
  const auto cuts = threshold_cuts(v);
  ASSERT_EQ(cuts.size(), 4u);
  for (size_t i = 1; i < cuts.size(); ++i) {
    EXPECT_LT(cuts[i - 1].size(), cuts[i].size());
    for (int64_t u : cuts[i - 1].vertices()) EXPECT_TRUE(cuts[i].contains(u));
  }
}

TEST(Fiedler, OptimalOnCyclesAndTori) {
  for (int64_t n : {8, 12, 17}) {
    const Graph g = cycle_graph(n);
    EXPECT_NEAR(fiedler_cut(g, graph_spectrum(g)).value, brute_force_sparsest(g, Objective::kConductance).value, 1e-12);
  }
  const std::vector<WeightedEdge> e{{0, 1, 1}, {2, 3, 1}};
  const Graph split = Graph::from_edges(4, e);
  EXPECT_THROW(fiedler_cut(split, graph_spectrum(split)), ValidationError);
}

TEST(ExpanderDecomposition, PiecesPartitionTheVertices) {
  const std::vector<int64_t> t{2, 6};
  const Graph g = torus_graph(t);
  const double tau = 0.3;
  const auto pieces = expander_decomposition(g, tau);
  std::vector<int> cover(static_cast<size_t>(g.size()), 0);
  for (const Cut& p : pieces)
    for (int64_t v : p.vertices()) ++cover[static_cast<size_t>(v)];
  EXPECT_TRUE(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
  for (size_t i = 0; i + 1 < pieces.size(); ++i) EXPECT_LE(conductance(g, pieces[i]), tau + 1e-12);
}

TEST(CutType, Basics) {
  const Cut q = Cut::from_mask(6, 0b110001);
  EXPECT_EQ(q.vertices(), (std::vector<int64_t>{0, 4, 5}));
  EXPECT_EQ(q.complement().size(), 3);
  EXPECT_EQ(q.smaller_side(), q);
  EXPECT_EQ(q.symmetric_difference(q.complement()), 6);
  EXPECT_TRUE(lex_less(Cut::from_mask(6, 0b000011), Cut::from_mask(6, 0b000101)));
}
