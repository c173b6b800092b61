#include <gtest/gtest.h>

#include <cmath>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/sdp_advice.hpp"

using namespace abelcut;

namespace {

double edge_objective(const Graph& g, const PseudomomentMatrix& m) {
  double s = 0.0;
  for (int64_t u = 0; u < g.size(); ++u)
    for (int64_t v = u + 1; v < g.size(); ++v) s += static_cast<double>(g.adjacency(u, v)) * m.distance(u, v);
  return s;
}

}  // namespace

TEST(Pseudomoments, IntegralPointIsFeasible) {
  const Cut q = Cut::from_mask(8, 0b00001111);
  const auto m = PseudomomentMatrix::integral(q);
  EXPECT_EQ(m.vertices(), 8);
  EXPECT_DOUBLE_EQ(m.marginal(0), 1.0);
  EXPECT_DOUBLE_EQ(m.marginal(5), 0.0);
  EXPECT_DOUBLE_EQ(m.distance(0, 5), 1.0);
  EXPECT_DOUBLE_EQ(m.distance(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(m.distance(PseudomomentMatrix::kOne, 0), 0.0);
  EXPECT_DOUBLE_EQ(m.distance(PseudomomentMatrix::kZero, 0), 1.0);
  EXPECT_DOUBLE_EQ(m.spreading(), 16.0);
  EXPECT_TRUE(triangle_violations(m, -1).empty());
  EXPECT_TRUE(audit_moments(m, q, 0.05, 1e-9).ok);
}

TEST(Pseudomoments, AuditCatchesCorruption) {
  const Cut q = Cut::from_mask(4, 0b0011);
  Eigen::MatrixXd m = PseudomomentMatrix::integral(q).matrix();
  m(1, 1) = 0.5;  // breaks the boolean identity M_0i = M_ii
  EXPECT_FALSE(audit_moments(PseudomomentMatrix(m), q, 0.05, 1e-6).ok);
}

TEST(BallRounding, RecoversIntegralCut) {
  const Graph g = cycle_graph(10);
  const Cut q = Cut::from_mask(10, 0b0000011111);
  const auto b = ball_rounding(PseudomomentMatrix::integral(q), g);
  EXPECT_NEAR(b.sparsity, sparsity(g, q), 1e-12);
  EXPECT_NEAR(b.sparsity, sparsity(g, b.cut), 1e-12);
}

class AdviceSdp : public ::testing::TestWithParam<int> {};

TEST_P(AdviceSdp, CorrectAdviceGivesNearOptimalAuditedCut) {
  Graph g;
  switch (GetParam()) {
    case 0: g = cycle_graph(8); break;
    case 1: g = cycle_graph(12); break;
    case 2: g = hypercube_graph(3); break;
    default: g = hypercube_graph(4); break;
  }
  const auto oracle = brute_force_sparsest(g, Objective::kSparsity);
  const double eps = 0.05;
  const auto sol = solve_advice_sdp(g, oracle.cut, eps);
  ASSERT_TRUE(sol.diagnostics.converged);
  const auto audit = audit_moments(sol.moments, oracle.cut, eps, 1e-5);
  EXPECT_TRUE(audit.ok) << "min eig " << audit.min_eigenvalue << " bool " << audit.boolean_error << " corr "
                        << audit.correlation_excess << " tri " << audit.worst_triangle;
  // Relaxation: never worse than the integral advice point.
  EXPECT_LE(edge_objective(g, sol.moments), boundary_size(g, oracle.cut) + 1e-4);
  const auto r = advice_cut(g, oracle.cut, eps);
  EXPECT_TRUE(r.cut.proper());
  EXPECT_LE(r.sparsity / oracle.value, 2.0);
  EXPECT_NEAR(r.sparsity, sparsity(g, r.cut), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Graphs, AdviceSdp, ::testing::Range(0, 4));

TEST(AdviceSdpSolver, WrongAdviceStillConverges) {
  const Graph g = hypercube_graph(4);
  const std::vector<int64_t> vs{0, 1, 2, 3, 4, 5, 7};
  const Cut q = Cut::from_vertices(16, vs);
  const auto r = advice_cut(g, q, 0.05);
  EXPECT_TRUE(r.diagnostics.converged);
  EXPECT_TRUE(r.cut.proper());
}

TEST(AdviceSdpSolver, RejectsBadArguments) {
  const Graph g = cycle_graph(6);
  EXPECT_THROW(solve_advice_sdp(g, Cut::from_mask(6, 0b111), 0.2), ValidationError);
  EXPECT_THROW(solve_advice_sdp(g, Cut::from_mask(6, 0), 0.05), ValidationError);
  EXPECT_THROW(solve_advice_sdp(g, Cut::from_mask(6, 0b111), -0.01), ValidationError);
}
