#include <gtest/gtest.h>

#include <cmath>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/special_cases.hpp"
#include "abelcut/spectral.hpp"

using namespace abelcut;

TEST(Primes, Basics) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(9));
  EXPECT_TRUE(is_prime(2401 / 49 - 2));
}

TEST(Zpn, DilationMultipliesDegree) {
  const AbelianGroup g = AbelianGroup::power(5, 2);
  const auto gens = GeneratorMultiset::standard(g);
  const auto dil = dilated_generators(g, gens, 5);
  // multiples 1..(p-1)/2 of a symmetric set reach every nonzero multiple once
  EXPECT_EQ(dil.degree(), gens.degree() * 2);
  EXPECT_TRUE(validate_generators(g, dil).empty());
}

TEST(Zpn, OracleSandwichOnSmallInstances) {
  for (auto [p, dim] : {std::pair<int64_t, int64_t>{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    const AbelianGroup g = AbelianGroup::power(p, static_cast<int>(dim));
    const auto r = zpn_approx(p, dim, GeneratorMultiset::standard(g));
    ASSERT_TRUE(r.phi_prime.has_value());
    EXPECT_TRUE(r.ok) << p << "^" << dim;
    ASSERT_TRUE(r.exact_phi);
    EXPECT_NEAR(r.phi_lo, r.phi_hi, 1e-12);
    EXPECT_LE(r.phi_lo, r.lambda2_prime + 1e-9);
    EXPECT_LE(r.lambda2_prime, (p + 1) / 2.0 * r.phi_hi + 1e-9);
  }
}

TEST(Zpn, LargerInstancesBracketed) {
  const AbelianGroup g = AbelianGroup::power(3, 5);
  const auto r = zpn_approx(3, 5, GeneratorMultiset::standard(g));
  EXPECT_TRUE(r.witness_ok);
  EXPECT_NE(r.lower, BoundStatus::kViolated);
  EXPECT_NE(r.upper, BoundStatus::kViolated);
  EXPECT_LE(r.phi_lo, r.phi_hi + 1e-12);
  EXPECT_THROW(zpn_approx(4, 2, GeneratorMultiset::standard(AbelianGroup::power(4, 2))), ValidationError);
}

TEST(Codes, HammingSevenFour) {
  const auto r = code_spectrum_check(BinaryLinearCode::hamming74());
  EXPECT_EQ(r.census.distance, 3);
  EXPECT_EQ(r.census.count, 7);
  EXPECT_EQ(r.lambda2_num, 6);
  EXPECT_EQ(r.exact_multiplicity, 7);
  EXPECT_TRUE(r.ok);
}

TEST(Codes, StandardFamilies) {
  for (int64_t k = 1; k <= 8; ++k) {
    EXPECT_TRUE(code_spectrum_check(BinaryLinearCode::identity(k)).ok) << "identity " << k;
    EXPECT_TRUE(code_spectrum_check(BinaryLinearCode::parity(k)).ok) << "parity " << k;
  }
  const auto rep = code_spectrum_check(BinaryLinearCode::repetition(5));
  EXPECT_EQ(rep.census.distance, 5);
  EXPECT_EQ(rep.census.count, 1);
  EXPECT_TRUE(rep.ok);
}

TEST(Codes, RandomRankConditioned) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const auto c = BinaryLinearCode::random(6, 10, seed);
    EXPECT_EQ(gf2_rank(c.rows()), 6);
    EXPECT_TRUE(code_spectrum_check(c).ok) << "seed " << seed;
  }
}

TEST(Codes, ParseAndValidate) {
  const auto c = BinaryLinearCode::parse("# comment\n1 0 1\n\n011\n");
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c.block_length(), 3);
  EXPECT_THROW(BinaryLinearCode::parse("101\n101\n"), ValidationError);
  EXPECT_THROW(BinaryLinearCode::parse("10\n011\n"), ValidationError);
  EXPECT_THROW(BinaryLinearCode::parse("12\n"), ValidationError);
  EXPECT_EQ(code_to_cayley(c).regular_degree(), 3);
}

TEST(Codes, CayleySpectrumMatchesDense) {
  const Graph g = code_to_cayley(BinaryLinearCode::hamming74());
  EXPECT_LE(max_eigenvalue_gap(graph_spectrum(g).eigenvalues(), dense_spectrum(g).eigenvalues()), 1e-8);
}

TEST(CycleProfile, BisectionArc) {
  for (int64_t n : {16, 32, 64}) {
    std::vector<int64_t> arc;
    for (int64_t i = 0; i < n / 2; ++i) arc.push_back(i);
    const auto p = cycle_fourier_profile(n, Cut::from_vertices(n, arc));
    EXPECT_TRUE(p.is_bisection);
    EXPECT_TRUE(p.even_ok);
    EXPECT_LT(p.max_even_power, 1e-12);
    EXPECT_TRUE(p.decay_ok) << n << ": " << p.decay_min << " .. " << p.decay_max;
    EXPECT_TRUE(p.mul_ok);
    double total = 0.0;
    for (size_t a = 1; a < p.power.size(); ++a) total += p.power[a];
    EXPECT_NEAR(total, p.centered_norm2, 1e-9);
  }
}

TEST(CycleProfile, NonArcReported) {
  const std::vector<int64_t> vs{0, 2, 4, 6};
  const auto p = cycle_fourier_profile(8, Cut::from_vertices(8, vs));
  EXPECT_FALSE(p.is_arc);
  EXPECT_FALSE(p.is_bisection);
}
