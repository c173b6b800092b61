#include "abelcut/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "abelcut/errors.hpp"
#include "abelcut/parallel.hpp"

namespace abelcut {

namespace {

void require_proper(const Cut& q, const Graph& g) {
  if (q.universe() != g.size()) throw ValidationError("cut universe does not match graph size");
  if (!q.proper()) throw ValidationError("cut functional needs a proper nonempty subset");
}

// Exact ratio num/den with den > 0.
struct Ratio {
  int64_t num = 0;
  int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

int compare(const Ratio& a, const Ratio& b) {
  const __int128 l = static_cast<__int128>(a.num) * b.den;
  const __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

bool mask_lex_less(uint64_t a, uint64_t b) {
  while (a && b) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct Candidate {
  Ratio value{1, 0};
  uint64_t mask = 0;
  bool valid = false;
};

bool better(const Candidate& a, const Candidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  const int c = compare(a.value, b.value);
  if (c != 0) return c < 0;
  return mask_lex_less(a.mask, b.mask);
}

}  // namespace

int64_t boundary_size(const Graph& g, const Cut& q) {
  if (q.universe() != g.size()) throw ValidationError("cut universe does not match graph size");
  int64_t b = 0;
  for (int64_t u = 0; u < g.size(); ++u) {
    if (!q.contains(u)) continue;
    for (const auto& nb : g.neighbors(u)) {
      if (!q.contains(nb.vertex)) b += nb.mult;
    }
  }
  return b;
}

int64_t volume(const Graph& g, const Cut& q) {
  int64_t v = 0;
  for (int64_t u = 0; u < g.size(); ++u) {
    if (q.contains(u)) v += g.degree(u);
  }
  return v;
}

double conductance(const Graph& g, const Cut& q) {
  require_proper(q, g);
  const int64_t vol = volume(g, q);
  if (vol == 0) throw ValidationError("conductance undefined for a zero-volume set");
  return static_cast<double>(boundary_size(g, q)) / static_cast<double>(vol);
}

double partition_conductance(const Graph& g, const Cut& q) {
  require_proper(q, g);
  const int64_t vol = volume(g, q);
  const int64_t small = std::min(vol, g.total_volume() - vol);
  if (small == 0) throw ValidationError("conductance undefined for a zero-volume side");
  return static_cast<double>(boundary_size(g, q)) / static_cast<double>(small);
}

double sparsity(const Graph& g, const Cut& q) {
  require_proper(q, g);
  const double s = static_cast<double>(q.size());
  return static_cast<double>(boundary_size(g, q)) / (s * (static_cast<double>(g.size()) - s));
}

RayleighReport rayleigh_consistency(const Graph& g, const Cut& q, double tol) {
  require_proper(q, g);
  RayleighReport r;
  const int64_t n = g.size();
  const auto d = g.regular_degree();
  r.regular = d.has_value();
  r.conductance = conductance(g, q);
  r.scaled_sparsity = static_cast<double>(n) * sparsity(g, q);

  const Eigen::MatrixXd lap = normalized_laplacian(g);
  Eigen::VectorXd sqrt_deg(n);
  for (int64_t i = 0; i < n; ++i) sqrt_deg(i) = std::sqrt(static_cast<double>(g.degree(i)));
  Eigen::VectorXd ind(n);
  for (int64_t i = 0; i < n; ++i) ind(i) = q.contains(i) ? 1.0 : 0.0;

  // phi = 1^T D^{1/2} L D^{1/2} 1 / 1^T D 1
  const Eigen::VectorXd weighted = sqrt_deg.cwiseProduct(ind);
  r.conductance_quotient = weighted.dot(lap * weighted) / weighted.squaredNorm();

  const Eigen::VectorXd centered = centered_indicator(q);
  if (r.regular) {
    r.sparsity_quotient =
        static_cast<double>(*d) * centered.dot(lap * centered) / centered.squaredNorm();
  } else {
    // Combinatorial Laplacian D - A_0.
    Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(n, n);
    for (int64_t u = 0; u < n; ++u) {
      comb(u, u) += static_cast<double>(g.degree(u));
      for (const auto& nb : g.neighbors(u)) comb(u, nb.vertex) -= static_cast<double>(nb.mult);
    }
    r.sparsity_quotient = centered.dot(comb * centered) / centered.squaredNorm();
  }
  r.ok = std::abs(r.conductance - r.conductance_quotient) <= tol &&
         std::abs(r.scaled_sparsity - r.sparsity_quotient) <= tol;
  return r;
}

CutResult brute_force_sparsest(const Graph& g, Objective objective) {
  const int64_t n = g.size();
  if (n > 26) throw SizeGuardError("exhaustive cut search limited to n <= 26");
  if (n < 2) throw ValidationError("a graph with fewer than two vertices has no proper cut");

  const int free_bits = static_cast<int>(n - 1);  // vertex n-1 stays outside Q
  const int chunk_bits = std::min(free_bits, 6);
  const int64_t chunks = int64_t{1} << chunk_bits;
  const int low_bits = free_bits - chunk_bits;
  const int64_t total_vol = g.total_volume();

  std::vector<int64_t> loop(static_cast<size_t>(n));
  for (int64_t v = 0; v < n; ++v) loop[static_cast<size_t>(v)] = g.adjacency(v, v);

  std::vector<Candidate> best(static_cast<size_t>(chunks));
  parallel_for(chunks, [&](int64_t chunk) {
    // inner[v] = sum_{u in Q, u != v} A(v,u)
    std::vector<int64_t> inner(static_cast<size_t>(n), 0);
    uint64_t mask = 0;
    int64_t boundary = 0, vol = 0, size = 0;
    auto toggle = [&](int64_t x) {
      const bool adding = !((mask >> x) & 1U);
      const int64_t outside = g.degree(x) - loop[static_cast<size_t>(x)];
      if (adding) {
        boundary += outside - 2 * inner[static_cast<size_t>(x)];
        vol += g.degree(x);
        ++size;
        mask |= uint64_t{1} << x;
      } else {
        boundary -= outside - 2 * inner[static_cast<size_t>(x)];
        vol -= g.degree(x);
        --size;
        mask &= ~(uint64_t{1} << x);
      }
      const int64_t sign = adding ? 1 : -1;
      for (const auto& nb : g.neighbors(x)) {
        if (nb.vertex != x) inner[static_cast<size_t>(nb.vertex)] += sign * nb.mult;
      }
    };
    for (int b = 0; b < chunk_bits; ++b) {
      if ((chunk >> b) & 1) toggle(low_bits + b);
    }
    Candidate local;
    auto consider = [&] {
      if (size == 0 || size == n) return;
      Candidate c;
      c.valid = true;
      if (objective == Objective::kConductance) {
        const int64_t other = total_vol - vol;
        if (std::min(vol, other) == 0) return;
        c.value = {boundary, std::min(vol, other)};
        if (vol < other) {
          c.mask = mask;
        } else {
          const uint64_t comp = ((uint64_t{1} << n) - 1) & ~mask;
          c.mask = (vol > other || mask_lex_less(comp, mask)) ? comp : mask;
        }
      } else {
        c.value = {boundary, size * (n - size)};
        const uint64_t comp = ((uint64_t{1} << n) - 1) & ~mask;
        if (2 * size < n) {
          c.mask = mask;
        } else if (2 * size > n) {
          c.mask = comp;
        } else {
          c.mask = mask_lex_less(comp, mask) ? comp : mask;
        }
      }
      if (better(c, local)) local = c;
    };
    consider();
    const uint64_t steps = uint64_t{1} << low_bits;
    for (uint64_t i = 1; i < steps; ++i) {
      toggle(std::countr_zero(i));  // Gray code order
      consider();
    }
    best[static_cast<size_t>(chunk)] = local;
  });

  Candidate overall;
  for (const auto& c : best) {
    if (better(c, overall)) overall = c;
  }
  if (!overall.valid) throw ValidationError("no cut with positive volume on both sides");
  return {Cut::from_mask(n, overall.mask), overall.value.value()};
}

void for_each_cut(const Graph& g, const CutVisitor& visit) {
  const int64_t n = g.size();
  if (n > 26) throw SizeGuardError("exhaustive cut enumeration limited to n <= 26");
  if (n < 1) return;
  std::vector<int64_t> inner(static_cast<size_t>(n), 0);
  uint64_t mask = 0;
  int64_t boundary = 0, vol = 0, size = 0;
  visit(mask, boundary, vol, size);
  const uint64_t steps = uint64_t{1} << (n - 1);
  for (uint64_t i = 1; i < steps; ++i) {
    const int x = std::countr_zero(i);
    const bool adding = !((mask >> x) & 1U);
    const int64_t sign = adding ? 1 : -1;
    boundary += sign * (g.degree(x) - g.adjacency(x, x) - 2 * inner[static_cast<size_t>(x)]);
    vol += sign * g.degree(x);
    size += sign;
    mask ^= uint64_t{1} << x;
    for (const auto& nb : g.neighbors(x)) {
      if (nb.vertex != x) inner[static_cast<size_t>(nb.vertex)] += sign * nb.mult;
    }
    visit(mask, boundary, vol, size);
  }
}

std::vector<Cut> threshold_cuts(const Eigen::VectorXd& v) {
  const int64_t n = v.size();
  std::vector<int64_t> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) { return v(a) > v(b); });
  std::vector<Cut> out;
  std::vector<uint8_t> members(static_cast<size_t>(n), 0);
  for (int64_t k = 0; k + 1 < n; ++k) {
    members[static_cast<size_t>(order[static_cast<size_t>(k)])] = 1;
    if (v(order[static_cast<size_t>(k)]) > v(order[static_cast<size_t>(k + 1)])) out.emplace_back(members);
  }
  return out;
}

namespace {

// Sweep over threshold cuts of x, tracking the best partition conductance.
void sweep(const Graph& g, const Eigen::VectorXd& x, CutResult& best, bool& have) {
  const int64_t n = g.size();
  std::vector<int64_t> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) { return x(a) > x(b); });
  std::vector<uint8_t> members(static_cast<size_t>(n), 0);
  int64_t boundary = 0, vol = 0;
  for (int64_t k = 0; k + 1 < n; ++k) {
    const int64_t u = order[static_cast<size_t>(k)];
    int64_t to_inside = 0;
    for (const auto& nb : g.neighbors(u)) {
      if (nb.vertex != u && members[static_cast<size_t>(nb.vertex)]) to_inside += nb.mult;
    }
    boundary += g.degree(u) - g.adjacency(u, u) - 2 * to_inside;
    vol += g.degree(u);
    members[static_cast<size_t>(u)] = 1;
    if (!(x(u) > x(order[static_cast<size_t>(k + 1)]))) continue;
    const int64_t other = g.total_volume() - vol;
    const int64_t small = std::min(vol, other);
    if (small == 0) continue;
    const double value = static_cast<double>(boundary) / static_cast<double>(small);
    Cut side(members);
    if (vol > other || (vol == other && lex_less(side.complement(), side))) side = side.complement();
    if (!have || value < best.value - 1e-15 ||
        (std::abs(value - best.value) <= 1e-15 && lex_less(side, best.cut))) {
      best = {std::move(side), value};
      have = true;
    }
  }
}

}  // namespace

CutResult fiedler_cut(const Graph& g, const Spectrum& spectrum) {
  const int64_t n = g.size();
  if (n < 2) throw ValidationError("a graph with fewer than two vertices has no proper cut");
  if (connectivity(g) != 1) throw ValidationError("Fiedler cut requires a connected graph");
  const auto [lo, hi] = spectrum.eigenspace_range(1);
  Eigen::VectorXd inv_sqrt_deg(n);
  for (int64_t i = 0; i < n; ++i) inv_sqrt_deg(i) = 1.0 / std::sqrt(static_cast<double>(g.degree(i)));

  std::vector<Eigen::VectorXd> candidates;
  const int64_t first = std::max<int64_t>(lo, 1);
  for (int64_t i = first; i < hi; ++i) candidates.push_back(spectrum.eigenvector(i));
  const int64_t pair_cap = std::min<int64_t>(hi, first + 8);
  for (int64_t i = first; i < pair_cap; ++i) {
    for (int64_t j = i + 1; j < pair_cap; ++j) {
      candidates.push_back(spectrum.eigenvector(i) + spectrum.eigenvector(j));
      candidates.push_back(spectrum.eigenvector(i) - spectrum.eigenvector(j));
    }
  }
  CutResult best;
  bool have = false;
  for (const auto& v : candidates) sweep(g, v.cwiseProduct(inv_sqrt_deg), best, have);
  if (!have) throw ValidationError("Fiedler vector is constant; no threshold cut");
  return best;
}

std::vector<Cut> expander_decomposition(const Graph& g, double tau) {
  const int64_t n = g.size();
  if (n > 20) throw SizeGuardError("expander decomposition search limited to n <= 20");
  const uint64_t full = (uint64_t{1} << n) - 1;
  const size_t states = size_t{1} << n;
  std::vector<int64_t> boundary(states, 0), vol(states, 0);
  for (uint64_t mask = 1; mask <= full; ++mask) {
    const int v = std::countr_zero(mask);
    const uint64_t rest = mask & (mask - 1);
    int64_t to_rest = 0;
    for (uint64_t r = rest; r; r &= r - 1) to_rest += g.adjacency(v, std::countr_zero(r));
    boundary[mask] = boundary[rest] + g.degree(v) - g.adjacency(v, v) - 2 * to_rest;
    vol[mask] = vol[rest] + g.degree(v);
  }
  auto non_expanding = [&](uint64_t m) {
    return vol[m] > 0 && static_cast<double>(boundary[m]) <= tau * static_cast<double>(vol[m]) + 1e-12;
  };

  std::vector<Cut> pieces;
  uint64_t remaining = full;
  while (remaining) {
    uint64_t pick = 0;
    int pick_size = 65;
    for (uint64_t sub = remaining; sub; sub = (sub - 1) & remaining) {
      if (!non_expanding(sub)) continue;
      const int sz = std::popcount(sub);
      if (sz < pick_size || (sz == pick_size && mask_lex_less(sub, pick))) {
        pick = sub;
        pick_size = sz;
      }
    }
    if (!pick) {
      pieces.push_back(Cut::from_mask(n, remaining));
      break;
    }
    pieces.push_back(Cut::from_mask(n, pick));
    remaining &= ~pick;
  }
  return pieces;
}

}  // namespace abelcut
