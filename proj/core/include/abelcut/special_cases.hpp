#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcut/cut.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/group.hpp"

namespace abelcut {

// ---- Z_p^n ----------------------------------------------------------------

bool is_prime(int64_t p);

/// S' = union over k = 1..(p-1)/2 of k S, multiplicities kept.
GeneratorMultiset dilated_generators(const AbelianGroup& group, const GeneratorMultiset& gens, int64_t p);

enum class BoundStatus { kVerified, kConsistent, kViolated };
const char* to_string(BoundStatus s);

struct ZpnReport {
  int64_t p = 0;
  int64_t n_dim = 0;
  int64_t degree = 0;        // |S|
  int64_t dilated_degree = 0;  // |S'|
  double lambda2_prime = 0.0;
  double lambda2 = 0.0;       // of G itself
  GroupElement witness_character;
  Cut witness_cut;            // {x : <g, x> = 0}
  double witness_conductance = 0.0;  // in G
  bool witness_ok = false;    // witness_conductance <= lambda2_prime

  bool exact_phi = false;     // phi(G) from the exhaustive oracle
  double phi_lo = 0.0;        // lower bound on phi(G)
  double phi_hi = 0.0;        // upper bound on phi(G)
  BoundStatus lower = BoundStatus::kViolated;  // phi(G) <= lambda2'
  BoundStatus upper = BoundStatus::kViolated;  // lambda2' <= (p+1)/2 phi(G)

  /// Only when G' is small enough for the oracle.
  std::optional<double> phi_prime;
  std::optional<bool> c2_ok;  // phi(G) <= phi(G') <= (p+1)/4 phi(G)
  std::optional<bool> c3_ok;  // lambda2'/2 <= phi(G') <= lambda2'

  bool ok = false;  // lower and upper not violated, witness ok
};

/// p odd prime, p^n_dim <= 2^20, symmetric S. phi(G) comes from the oracle
/// when p^n_dim <= 26; otherwise it is bracketed between lambda_2(G)/2 and
/// the best cut of the form {x : <g, x> in A}.
ZpnReport zpn_approx(int64_t p, int64_t n_dim, const GeneratorMultiset& gens);

// ---- binary codes ---------------------------------------------------------

class BinaryLinearCode {
 public:
  /// rows[i][j] in {0, 1}; all rows the same length. Throws ValidationError
  /// when the rows are not linearly independent over GF(2).
  explicit BinaryLinearCode(std::vector<std::vector<uint8_t>> rows);

  /// Whitespace-separated 0/1 tokens or 0/1 strings, one row per line; blank
  /// lines and lines starting with '#' are skipped.
  static BinaryLinearCode parse(const std::string& text);

  int64_t dimension() const { return static_cast<int64_t>(rows_.size()); }
  int64_t block_length() const { return static_cast<int64_t>(rows_.front().size()); }
  const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }

  static BinaryLinearCode identity(int64_t k);
  static BinaryLinearCode repetition(int64_t len);
  static BinaryLinearCode parity(int64_t k);  // [k+1, k] even-weight code
  static BinaryLinearCode hamming74();
  /// Uniformly random k x len matrix conditioned on rank k.
  static BinaryLinearCode random(int64_t k, int64_t len, uint64_t seed);

 private:
  std::vector<std::vector<uint8_t>> rows_;
};

int64_t gf2_rank(std::vector<std::vector<uint8_t>> rows);

/// Cay(Z_2^k, columns of the generator matrix).
Graph code_to_cayley(const BinaryLinearCode& code);

struct WeightCensus {
  int64_t distance = 0;
  int64_t count = 0;
};
/// Minimum nonzero codeword weight and its count, k <= 20.
WeightCensus min_weight_census(const BinaryLinearCode& code);

struct CodeSpectrumReport {
  int64_t k = 0;
  int64_t block_length = 0;
  WeightCensus census;
  /// lambda_2 = lambda2_num / block_length exactly, from integer character sums.
  int64_t lambda2_num = 0;
  int64_t exact_multiplicity = 0;
  double float_lambda2 = 0.0;  // generic character route
  int64_t float_multiplicity = 0;
  bool distance_ok = false;      // lambda_2 / 2 == distance / block_length
  bool multiplicity_ok = false;  // multiplicity == census count
  bool float_ok = false;         // floating route agrees
  bool ok = false;
};
/// k <= 16.
CodeSpectrumReport code_spectrum_check(const BinaryLinearCode& code);

// ---- cycles ---------------------------------------------------------------

struct TailMass {
  double eps = 0.0;
  int64_t cutoff = 0;   // ceil(1/eps)
  double mass = 0.0;    // fraction of the centered norm past the cutoff
  bool in_window = false;  // eps/20 <= mass <= 20 eps
};

struct FourierProfile {
  int64_t n = 0;
  bool is_arc = false;
  bool is_bisection = false;
  /// power[alpha] = |<1_Q, chi_alpha>|^2 for the unit-norm characters.
  std::vector<double> power;
  double centered_norm2 = 0.0;
  /// Frequencies in Laplacian order: 0, 1, -1, 2, -2, ...
  std::vector<int64_t> order;
  std::vector<TailMass> tails;
  double max_even_power = 0.0;
  bool even_ok = false;
  /// min / max over odd alpha of alpha^2 power[alpha] / power[1]
  double decay_min = 0.0;
  double decay_max = 0.0;
  bool decay_ok = false;
  int64_t mul_phi = 0;  // eigenvalues <= phi(C_n)
  bool mul_ok = false;  // within a factor 4 of sqrt(n)
  bool ok = false;      // all assertions; only evaluated for bisections
};

FourierProfile cycle_fourier_profile(int64_t n, const Cut& q, const std::vector<double>& eps_list = {0.05, 0.1, 0.2});

}  // namespace abelcut
