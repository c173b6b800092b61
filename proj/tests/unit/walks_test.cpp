#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/walks.hpp"

using namespace abelcut;

namespace {

std::vector<Graph> graphs() {
  std::vector<Graph> gs{cycle_graph(9), cycle_graph(16), hypercube_graph(4), complete_graph(5)};
  const std::vector<int64_t> t{4, 6};
  gs.push_back(torus_graph(t));
  const AbelianGroup g({3, 8});
  gs.push_back(build_cayley(g, random_generators(g, 4, 5)));
  return gs;
}

}  // namespace

TEST(Collision, SpectralEqualsDirect) {
  for (const Graph& g : graphs()) {
    const auto s = graph_spectrum(g);
    const auto a = collision_profile_spectral(g, s, 64);
    const auto b = collision_profile_direct(g, 64);
    ASSERT_EQ(a.values.size(), 65u);
    for (size_t t = 0; t < a.values.size(); ++t) EXPECT_NEAR(a.values[t], b.values[t], 1e-10) << g.name() << " t=" << t;
  }
}

TEST(Collision, StartsAtOneAndDecreasesToUniform) {
  for (const Graph& g : graphs()) {
    const auto p = collision_profile_spectral(g, graph_spectrum(g), 200);
    EXPECT_NEAR(p.values[0], 1.0, 1e-14);
    for (size_t t = 1; t < p.values.size(); ++t) EXPECT_LE(p.values[t], p.values[t - 1] + 1e-15);
    EXPECT_GE(p.values.back(), 1.0 / g.size() - 1e-15);
  }
}

TEST(Collision, SpectralNeedsCayley) {
  const std::vector<WeightedEdge> e{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  const Graph g = Graph::from_edges(3, e);
  EXPECT_THROW(collision_spectral(g, graph_spectrum(g), 2), ValidationError);
  EXPECT_NEAR(collision_direct(g, 0), 1.0, 1e-15);
}

TEST(CpRatio, BoundHolds) {
  for (const Graph& g : graphs()) {
    const auto r = cp_ratio_bound_check(g, graph_spectrum(g), 64);
    EXPECT_TRUE(r.ok) << g.name();
    EXPECT_FALSE(r.violation_t.has_value());
    EXPECT_GE(r.max_ratio, 1.0);
  }
  EXPECT_NEAR(log_cp_ratio_bound(3), 12.0 * std::log(2.0 * std::exp(1.0)), 1e-12);
}

TEST(Multiplicity, CertificateHoldsOnThresholds) {
  for (const Graph& g : graphs()) {
    const auto s = graph_spectrum(g);
    const double l2 = s.lambda2();
    for (double tau : {l2, 2 * l2, std::min(1.5, 4 * l2)}) {
      if (tau > 1.5) continue;
      const auto c = multiplicity_certificate(g, s, tau);
      EXPECT_TRUE(c.lower_ok) << g.name() << " tau " << tau;
      EXPECT_TRUE(c.doubling_ok) << g.name() << " tau " << tau;
      EXPECT_TRUE(c.ok) << g.name() << " tau " << tau;
      EXPECT_EQ(c.dim_low, threshold_rank(s, tau));
    }
  }
  const auto s = graph_spectrum(cycle_graph(8));
  EXPECT_THROW(multiplicity_certificate(cycle_graph(8), s, 1.9), ValidationError);
}

TEST(Buser, BoundAndMaterializedCrossCheck) {
  std::mt19937_64 rng(2);
  for (const Graph& g : graphs()) {
    const auto s = graph_spectrum(g);
    const int64_t n = g.size();
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<uint8_t> m(static_cast<size_t>(n));
      for (auto& b : m) b = rng() & 1;
      m[0] = 1;
      m[1] = 0;
      const Cut q(m);
      for (int64_t t : {1, 2, 4, 8}) {
        const auto r = buser_check(g, s, q, t);
        EXPECT_TRUE(r.ok) << g.name();
        EXPECT_NEAR(r.lhs, power_conductance_materialized(g, q, t), 1e-9) << g.name() << " t=" << t;
      }
    }
  }
}
