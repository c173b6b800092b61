#include <gtest/gtest.h>

#include <random>

#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/group.hpp"

using namespace abelcut;

TEST(AbelianGroup, MixedRadixLastFastest) {
  const AbelianGroup g({3, 4});
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.index({{0, 1}}), 1);
  EXPECT_EQ(g.index({{1, 0}}), 4);
  EXPECT_EQ(g.element(7), (GroupElement{{1, 3}}));
  EXPECT_EQ(g.exponent(), 12);
}

TEST(AbelianGroup, IndexRoundTripAndArithmetic) {
  const AbelianGroup g({2, 3, 5});
  for (int64_t i = 0; i < g.order(); ++i) {
    EXPECT_EQ(g.index(g.element(i)), i);
    EXPECT_TRUE(g.is_identity(g.add(g.element(i), g.negate(g.element(i)))));
    for (int64_t j = 0; j < g.order(); ++j) {
      EXPECT_EQ(g.add_index(i, j), g.index(g.add(g.element(i), g.element(j))));
      EXPECT_EQ(g.add_index(i, j), g.add_index(j, i));
    }
    EXPECT_EQ(g.negate_index(i), g.index(g.negate(g.element(i))));
  }
}

TEST(AbelianGroup, PairingIsBilinear) {
  const AbelianGroup g({4, 6});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> pick(0, g.order() - 1);
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = g.element(pick(rng)), b = g.element(pick(rng)), x = g.element(pick(rng));
    const int64_t L = g.exponent();
    EXPECT_EQ(g.pairing(g.add(a, b), x), (g.pairing(a, x) + g.pairing(b, x)) % L);
    EXPECT_EQ(g.pairing(a, x), g.pairing(x, a));
  }
}

TEST(AbelianGroup, RejectsBadInput) {
  EXPECT_THROW(AbelianGroup({0}), ValidationError);
  const AbelianGroup g({5});
  EXPECT_THROW(g.index({{5}}), ValidationError);
  EXPECT_THROW(g.index({{0, 0}}), ValidationError);
}

TEST(Generators, StandardAndClosure) {
  const AbelianGroup g({2, 5});
  const auto std_gens = GeneratorMultiset::standard(g);
  EXPECT_EQ(std_gens.degree(), 3);
  EXPECT_TRUE(validate_generators(g, std_gens).empty());
  const std::vector<GroupElement> xs{{{1, 2}}, {{1, 0}}};
  const auto closed = GeneratorMultiset::symmetric_closure(g, xs);
  EXPECT_EQ(closed.degree(), 3);
  EXPECT_EQ(closed.multiplicity({{1, 3}}), 1);
}

TEST(Generators, AsymmetryDetected) {
  const AbelianGroup g({5});
  const GeneratorMultiset gens({{{{1}}, 1}, {{{4}}, 2}});
  const auto v = validate_generators(g, gens);
  ASSERT_FALSE(v.empty());
  EXPECT_THROW(build_cayley(g, gens), ValidationError);
}

TEST(Generators, RandomAreSymmetricWithExactDegree) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    const AbelianGroup g({24});
    const auto gens = random_generators(g, 4, seed);
    EXPECT_EQ(gens.degree(), 4);
    EXPECT_TRUE(validate_generators(g, gens).empty());
    for (const auto& e : gens.entries()) EXPECT_FALSE(g.is_identity(e.element));
  }
  EXPECT_THROW(random_generators(AbelianGroup({5}), 3, 1), ValidationError);
  EXPECT_EQ(random_generators(AbelianGroup({2, 4}), 3, 9).degree(), 3);
}

TEST(Graph, CayleyIsRegularAndSymmetric) {
  const AbelianGroup g({3, 4});
  const Graph cay = build_cayley(g, GeneratorMultiset::standard(g));
  ASSERT_EQ(cay.size(), 12);
  EXPECT_EQ(cay.regular_degree(), 4);
  for (int64_t u = 0; u < cay.size(); ++u)
    for (int64_t v = 0; v < cay.size(); ++v) EXPECT_EQ(cay.adjacency(u, v), cay.adjacency(v, u));
  EXPECT_EQ(connectivity(cay), 1);
}

TEST(Graph, SelfLoopsAndComponents) {
  const std::vector<WeightedEdge> edges{{0, 1, 1}, {2, 2, 3}};
  const Graph g = Graph::from_edges(3, edges);
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_EQ(g.adjacency(2, 2), 3);
  EXPECT_EQ(connectivity(g), 2);
  EXPECT_EQ(component_labels(g), (std::vector<int64_t>{0, 0, 1}));
  EXPECT_THROW(Graph::from_adjacency(2, {0, 1, 2, 0}), ValidationError);
}

TEST(Graph, Families) {
  EXPECT_EQ(cycle_graph(7).regular_degree(), 2);
  EXPECT_EQ(hypercube_graph(4).size(), 16);
  EXPECT_EQ(hypercube_graph(4).regular_degree(), 4);
  const std::vector<int64_t> dims{4, 4};
  EXPECT_EQ(torus_graph(dims).regular_degree(), 4);
  EXPECT_EQ(complete_graph(5).regular_degree(), 4);
  // Generators that do not generate the group give a disconnected graph.
  const AbelianGroup z6({6});
  const std::vector<GroupElement> two{{{2}}};
  EXPECT_EQ(connectivity(build_cayley(z6, GeneratorMultiset::symmetric_closure(z6, two))), 2);
}
