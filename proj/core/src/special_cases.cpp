#include "abelcut/special_cases.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"
#include "abelcut/spectral.hpp"

namespace abelcut {

namespace {

constexpr double kTol = 1e-9;

int64_t checked_power(int64_t p, int64_t k, int64_t cap) {
  int64_t r = 1;
  for (int64_t i = 0; i < k; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

struct LowestCharacter {
  double value = 0.0;
  int64_t index = -1;
};

LowestCharacter lowest_nontrivial(const std::vector<CharacterEigenvalue>& eig) {
  LowestCharacter best{std::numeric_limits<double>::infinity(), -1};
  for (const auto& e : eig) {
    if (e.character == 0) continue;
    if (e.eigenvalue < best.value - kTol) best = {e.eigenvalue, e.character};
  }
  return best;
}

// Histogram of <g, s> over the generators, weighted by multiplicity.
std::vector<int64_t> phase_counts(const AbelianGroup& group, const GeneratorMultiset& gens,
                                  const GroupElement& g, int64_t p) {
  std::vector<int64_t> c(static_cast<size_t>(p), 0);
  for (const auto& s : gens.entries()) c[static_cast<size_t>(group.pairing(g, s.element) % p)] += s.mult;
  return c;
}

// Best conductance of {x : <g, x> in A} over A with |A| <= (p-1)/2.
double best_union_cut(const std::vector<int64_t>& c, int64_t p, int64_t degree) {
  double best = std::numeric_limits<double>::infinity();
  const int64_t half = (p - 1) / 2;
  if (p <= 13) {
    for (uint32_t a = 1; a < (1u << p); ++a) {
      const int64_t size = std::popcount(a);
      if (size > half) continue;
      int64_t boundary = 0;
      for (int64_t x = 0; x < p; ++x) {
        if (!((a >> x) & 1u)) continue;
        for (int64_t r = 0; r < p; ++r)
          if (c[static_cast<size_t>(r)] && !((a >> ((x + r) % p)) & 1u)) boundary += c[static_cast<size_t>(r)];
      }
      best = std::min(best, static_cast<double>(boundary) / static_cast<double>(degree * size));
    }
    return best;
  }
  // Arcs {0..m-1}: a shift by r leaves min(m, |r|) points.
  for (int64_t m = 1; m <= half; ++m) {
    int64_t boundary = 0;
    for (int64_t r = 1; r < p; ++r)
      if (c[static_cast<size_t>(r)]) boundary += c[static_cast<size_t>(r)] * std::min(m, std::min(r, p - r));
    best = std::min(best, static_cast<double>(boundary) / static_cast<double>(degree * m));
  }
  return best;
}

}  // namespace

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

GeneratorMultiset dilated_generators(const AbelianGroup& group, const GeneratorMultiset& gens, int64_t p) {
  std::vector<Generator> out;
  for (int64_t k = 1; k <= (p - 1) / 2; ++k)
    for (const auto& s : gens.entries()) out.push_back({group.scale(s.element, k), s.mult});
  return GeneratorMultiset(std::move(out));
}

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::kVerified: return "verified";
    case BoundStatus::kConsistent: return "consistent";
    case BoundStatus::kViolated: return "violated";
  }
  return "?";
}

ZpnReport zpn_approx(int64_t p, int64_t n_dim, const GeneratorMultiset& gens) {
  if (p == 2) throw ValidationError("zpn: p = 2 gives an empty dilation");
  if (!is_prime(p)) throw ValidationError("zpn: p = " + std::to_string(p) + " is not an odd prime");
  if (n_dim < 1) throw ValidationError("zpn: dimension must be positive");
  const int64_t order = checked_power(p, n_dim, int64_t{1} << 20);
  if (order > (int64_t{1} << 20))
    throw SizeGuardError("zpn: p^n exceeds 2^20");
  if (gens.degree() == 0) throw ValidationError("zpn: empty generator set");

  const AbelianGroup group = AbelianGroup::power(p, static_cast<int>(n_dim));
  if (!validate_generators(group, gens).empty()) throw ValidationError("zpn: generators are not symmetric");
  const GeneratorMultiset dilated = dilated_generators(group, gens, p);

  ZpnReport r;
  r.p = p;
  r.n_dim = n_dim;
  r.degree = gens.degree();
  r.dilated_degree = dilated.degree();

  const auto lo = lowest_nontrivial(character_eigenvalues(group, gens));
  const auto lo_prime = lowest_nontrivial(character_eigenvalues(group, dilated));
  r.lambda2 = lo.value;
  r.lambda2_prime = lo_prime.value;
  r.witness_character = group.element(lo_prime.index);

  std::vector<uint8_t> member(static_cast<size_t>(order), 0);
  for (int64_t x = 0; x < order; ++x)
    member[static_cast<size_t>(x)] = group.pairing(r.witness_character, group.element(x)) % p == 0;
  r.witness_cut = Cut(std::move(member));
  const auto wc = phase_counts(group, gens, r.witness_character, p);
  r.witness_conductance = 1.0 - static_cast<double>(wc[0]) / static_cast<double>(r.degree);
  r.witness_ok = r.witness_conductance <= r.lambda2_prime + kTol;

  const double factor = (static_cast<double>(p) + 1.0) / 2.0;
  if (order <= 26) {
    const Graph g = build_cayley(group, gens);
    const Graph gp = build_cayley(group, dilated);
    const double phi = brute_force_sparsest(g, Objective::kConductance).value;
    const double phi_p = brute_force_sparsest(gp, Objective::kConductance).value;
    r.exact_phi = true;
    r.phi_lo = r.phi_hi = phi;
    r.lower = phi <= r.lambda2_prime + kTol ? BoundStatus::kVerified : BoundStatus::kViolated;
    r.upper = r.lambda2_prime <= factor * phi + kTol ? BoundStatus::kVerified : BoundStatus::kViolated;
    r.phi_prime = phi_p;
    r.c2_ok = phi <= phi_p + kTol && phi_p <= (static_cast<double>(p) + 1.0) / 4.0 * phi + kTol;
    r.c3_ok = r.lambda2_prime / 2.0 <= phi_p + kTol && phi_p <= r.lambda2_prime + kTol;
  } else {
    r.phi_lo = r.lambda2 / 2.0;
    double hi = r.witness_conductance;
    // Projective representatives: first nonzero coordinate equal to 1.
    for (int64_t idx = 1; idx < order; ++idx) {
      const GroupElement g = group.element(idx);
      const auto lead = std::find_if(g.residues.begin(), g.residues.end(), [](int64_t v) { return v != 0; });
      if (*lead != 1) continue;
      hi = std::min(hi, best_union_cut(phase_counts(group, gens, g, p), p, r.degree));
    }
    r.phi_hi = hi;
    r.lower = r.witness_ok ? BoundStatus::kVerified
              : r.phi_lo <= r.lambda2_prime + kTol ? BoundStatus::kConsistent
                                                   : BoundStatus::kViolated;
    if (r.lambda2_prime <= factor * r.phi_lo + kTol)
      r.upper = BoundStatus::kVerified;
    else if (r.lambda2_prime <= factor * r.phi_hi + kTol)
      r.upper = BoundStatus::kConsistent;
    else
      r.upper = BoundStatus::kViolated;
  }
  r.ok = r.witness_ok && r.lower != BoundStatus::kViolated && r.upper != BoundStatus::kViolated &&
         r.c3_ok.value_or(true);
  return r;
}

// ---- codes ----------------------------------------------------------------

int64_t gf2_rank(std::vector<std::vector<uint8_t>> rows) {
  int64_t rank = 0;
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  for (size_t c = 0; c < cols && rank < static_cast<int64_t>(rows.size()); ++c) {
    size_t pivot = static_cast<size_t>(rank);
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<size_t>(rank)]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<size_t>(rank) || !rows[i][c]) continue;
      for (size_t j = c; j < cols; ++j) rows[i][j] ^= rows[static_cast<size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

BinaryLinearCode::BinaryLinearCode(std::vector<std::vector<uint8_t>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) throw ValidationError("code: empty generator matrix");
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) throw ValidationError("code: ragged generator matrix");
    for (uint8_t b : row)
      if (b > 1) throw ValidationError("code: entries must be 0 or 1");
  }
  if (rows_.size() > 62) throw SizeGuardError("code: dimension above 62");
  const int64_t rank = gf2_rank(rows_);
  if (rank != dimension())
    throw ValidationError("code: generator matrix has rank " + std::to_string(rank) + " < " +
                          std::to_string(dimension()) + " (Cayley graph disconnected)");
}

BinaryLinearCode BinaryLinearCode::parse(const std::string& text) {
  std::vector<std::vector<uint8_t>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<uint8_t> row;
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      for (char ch : tok) {
        if (ch == ',') continue;
        if (ch != '0' && ch != '1') throw ValidationError("code: unexpected character '" + std::string(1, ch) + "'");
        row.push_back(static_cast<uint8_t>(ch - '0'));
      }
    }
    rows.push_back(std::move(row));
  }
  return BinaryLinearCode(std::move(rows));
}

BinaryLinearCode BinaryLinearCode::identity(int64_t k) {
  std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(k), std::vector<uint8_t>(static_cast<size_t>(k), 0));
  for (int64_t i = 0; i < k; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return BinaryLinearCode(std::move(rows));
}

BinaryLinearCode BinaryLinearCode::repetition(int64_t len) {
  return BinaryLinearCode({std::vector<uint8_t>(static_cast<size_t>(len), 1)});
}

BinaryLinearCode BinaryLinearCode::parity(int64_t k) {
  std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(k), std::vector<uint8_t>(static_cast<size_t>(k + 1), 0));
  for (int64_t i = 0; i < k; ++i) {
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    rows[static_cast<size_t>(i)][static_cast<size_t>(k)] = 1;
  }
  return BinaryLinearCode(std::move(rows));
}

BinaryLinearCode BinaryLinearCode::hamming74() {
  return BinaryLinearCode({{1, 0, 0, 0, 1, 1, 0},
                           {0, 1, 0, 0, 1, 0, 1},
                           {0, 0, 1, 0, 0, 1, 1},
                           {0, 0, 0, 1, 1, 1, 1}});
}

BinaryLinearCode BinaryLinearCode::random(int64_t k, int64_t len, uint64_t seed) {
  if (k < 1 || len < k) throw ValidationError("code: need 1 <= k <= block length");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  for (;;) {
    std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(k), std::vector<uint8_t>(static_cast<size_t>(len)));
    for (auto& row : rows)
      for (auto& b : row) b = bit(rng) ? 1 : 0;
    if (gf2_rank(rows) == k) return BinaryLinearCode(std::move(rows));
  }
}

namespace {

// Columns packed as k-bit integers (bit i = row i).
std::vector<uint64_t> packed_columns(const BinaryLinearCode& code) {
  std::vector<uint64_t> cols(static_cast<size_t>(code.block_length()), 0);
  for (int64_t i = 0; i < code.dimension(); ++i)
    for (int64_t j = 0; j < code.block_length(); ++j)
      if (code.rows()[static_cast<size_t>(i)][static_cast<size_t>(j)]) cols[static_cast<size_t>(j)] |= uint64_t{1} << i;
  return cols;
}

}  // namespace

Graph code_to_cayley(const BinaryLinearCode& code) {
  if (code.dimension() > 12) throw SizeGuardError("code_to_cayley: k above 12");
  const int k = static_cast<int>(code.dimension());
  const AbelianGroup group = AbelianGroup::power(2, k);
  std::vector<Generator> gens;
  for (int64_t j = 0; j < code.block_length(); ++j) {
    GroupElement s{std::vector<int64_t>(static_cast<size_t>(k))};
    for (int i = 0; i < k; ++i) s.residues[static_cast<size_t>(i)] = code.rows()[static_cast<size_t>(i)][static_cast<size_t>(j)];
    gens.push_back({std::move(s), 1});
  }
  Graph g = build_cayley(group, GeneratorMultiset(std::move(gens)));
  g.set_name("code[" + std::to_string(code.block_length()) + "," + std::to_string(k) + "]");
  return g;
}

WeightCensus min_weight_census(const BinaryLinearCode& code) {
  if (code.dimension() > 20) throw SizeGuardError("min_weight_census: k above 20");
  const size_t words = static_cast<size_t>((code.block_length() + 63) / 64);
  std::vector<std::vector<uint64_t>> rows(static_cast<size_t>(code.dimension()), std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < static_cast<size_t>(code.block_length()); ++j)
      if (code.rows()[i][j]) rows[i][j / 64] |= uint64_t{1} << (j % 64);

  WeightCensus best{std::numeric_limits<int64_t>::max(), 0};
  std::vector<uint64_t> word(words, 0);
  const uint64_t total = uint64_t{1} << code.dimension();
  for (uint64_t step = 1; step < total; ++step) {
    const auto& row = rows[static_cast<size_t>(std::countr_zero(step))];
    int64_t weight = 0;
    for (size_t w = 0; w < words; ++w) {
      word[w] ^= row[w];
      weight += std::popcount(word[w]);
    }
    if (weight < best.distance)
      best = {weight, 1};
    else if (weight == best.distance)
      ++best.count;
  }
  return best;
}

CodeSpectrumReport code_spectrum_check(const BinaryLinearCode& code) {
  if (code.dimension() > 16) throw SizeGuardError("code_spectrum_check: k above 16");
  CodeSpectrumReport r;
  r.k = code.dimension();
  r.block_length = code.block_length();
  r.census = min_weight_census(code);

  // Character x sums (-1)^{<x, s>} over the columns s: d - sum = d * lambda_x.
  const auto cols = packed_columns(code);
  const int64_t d = r.block_length;
  r.lambda2_num = std::numeric_limits<int64_t>::max();
  for (uint64_t x = 1; x < (uint64_t{1} << r.k); ++x) {
    int64_t sum = 0;
    for (uint64_t s : cols) sum += (std::popcount(x & s) & 1) ? -1 : 1;
    const int64_t num = d - sum;
    if (num < r.lambda2_num) {
      r.lambda2_num = num;
      r.exact_multiplicity = 1;
    } else if (num == r.lambda2_num) {
      ++r.exact_multiplicity;
    }
  }

  const AbelianGroup group = AbelianGroup::power(2, static_cast<int>(r.k));
  std::vector<Generator> gens;
  for (uint64_t s : cols) {
    GroupElement e{std::vector<int64_t>(static_cast<size_t>(r.k))};
    for (int64_t i = 0; i < r.k; ++i) e.residues[static_cast<size_t>(i)] = static_cast<int64_t>((s >> i) & 1u);
    gens.push_back({std::move(e), 1});
  }
  const auto eig = character_eigenvalues(group, GeneratorMultiset(std::move(gens)));
  r.float_lambda2 = lowest_nontrivial(eig).value;
  for (const auto& e : eig)
    if (e.character != 0 && std::abs(e.eigenvalue - r.float_lambda2) <= kEigenTolerance) ++r.float_multiplicity;

  r.distance_ok = r.lambda2_num == 2 * r.census.distance;
  r.multiplicity_ok = r.exact_multiplicity == r.census.count;
  r.float_ok = std::abs(r.float_lambda2 - static_cast<double>(r.lambda2_num) / static_cast<double>(d)) <= kTol &&
               r.float_multiplicity == r.exact_multiplicity;
  r.ok = r.distance_ok && r.multiplicity_ok && r.float_ok;
  return r;
}

// ---- cycles ---------------------------------------------------------------

FourierProfile cycle_fourier_profile(int64_t n, const Cut& q, const std::vector<double>& eps_list) {
  if (n < 3) throw ValidationError("cycle profile: n must be at least 3");
  if (q.universe() != n) throw ValidationError("cycle profile: cut universe differs from n");
  for (double e : eps_list)
    if (!(e > 0.0 && e < 1.0)) throw ValidationError("cycle profile: eps must lie in (0, 1)");

  FourierProfile f;
  f.n = n;
  const auto verts = q.vertices();

  // Arc: exactly one in-to-out transition around the cycle (or trivial).
  int64_t transitions = 0;
  for (int64_t x = 0; x < n; ++x) transitions += q.contains(x) && !q.contains((x + 1) % n);
  f.is_arc = transitions == 1 || !q.proper();
  f.is_bisection = f.is_arc && n % 4 == 0 && q.size() == n / 2;

  f.power.assign(static_cast<size_t>(n), 0.0);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int64_t a = 0; a < n; ++a) {
    double re = 0.0, im = 0.0;
    for (int64_t x : verts) {
      const double angle = two_pi * static_cast<double>((a * x) % n) / static_cast<double>(n);
      re += std::cos(angle);
      im -= std::sin(angle);
    }
    f.power[static_cast<size_t>(a)] = (re * re + im * im) / static_cast<double>(n);
  }
  const double size = static_cast<double>(q.size());
  f.centered_norm2 = size - size * size / static_cast<double>(n);

  f.order.push_back(0);
  for (int64_t a = 1; static_cast<int64_t>(f.order.size()) < n; ++a) {
    f.order.push_back(a);
    if (static_cast<int64_t>(f.order.size()) < n && n - a != a) f.order.push_back(n - a);
  }

  for (double e : eps_list) {
    TailMass t;
    t.eps = e;
    t.cutoff = static_cast<int64_t>(std::ceil(1.0 / e - 1e-12));
    double mass = 0.0;
    for (int64_t pos = t.cutoff + 1; pos < n; ++pos) mass += f.power[static_cast<size_t>(f.order[static_cast<size_t>(pos)])];
    t.mass = f.centered_norm2 > 0.0 ? mass / f.centered_norm2 : 0.0;
    t.in_window = t.mass >= e / 20.0 && t.mass <= 20.0 * e;
    f.tails.push_back(t);
  }

  for (int64_t a = 2; a < n; a += 2) f.max_even_power = std::max(f.max_even_power, f.power[static_cast<size_t>(a)]);
  f.even_ok = f.max_even_power < 1e-12;

  if (f.power[1] > 0.0) {
    f.decay_min = std::numeric_limits<double>::infinity();
    f.decay_max = 0.0;
    for (int64_t a = 1; a <= n / 2; a += 2) {
      const double ratio = static_cast<double>(a * a) * f.power[static_cast<size_t>(a)] / f.power[1];
      f.decay_min = std::min(f.decay_min, ratio);
      f.decay_max = std::max(f.decay_max, ratio);
    }
    f.decay_ok = f.decay_min >= 0.25 && f.decay_max <= 4.0;
  }

  const double phi = 1.0 / static_cast<double>(n / 2);
  for (int64_t a = 0; a < n; ++a)
    if (1.0 - std::cos(two_pi * static_cast<double>(a) / static_cast<double>(n)) <= phi + kEigenTolerance) ++f.mul_phi;
  const double root = std::sqrt(static_cast<double>(n));
  f.mul_ok = static_cast<double>(f.mul_phi) >= root / 4.0 && static_cast<double>(f.mul_phi) <= 4.0 * root;

  const bool tails_ok = std::all_of(f.tails.begin(), f.tails.end(), [](const TailMass& t) { return t.in_window; });
  f.ok = f.is_bisection && f.even_ok && f.decay_ok && tails_ok && f.mul_ok;
  return f;
}

}  // namespace abelcut
