#include "abelcut/walks.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"

namespace abelcut {

namespace {

void require_cayley(const Graph& g, const char* what) {
  if (!g.is_cayley()) {
    throw ValidationError(std::string(what) + " requires a vertex-transitive (Cayley) graph");
  }
}

double spectral_moment(const Spectrum& spectrum, double exponent) {
  double acc = 0.0;
  for (double lam : spectrum.eigenvalues()) {
    const double base = std::max(0.0, 1.0 - lam / 2.0);
    acc += std::pow(base, exponent);
  }
  return acc / static_cast<double>(spectrum.size());
}

}  // namespace

double collision_spectral(const Graph& g, const Spectrum& spectrum, int64_t t) {
  require_cayley(g, "spectral collision probability");
  if (t < 0) throw ValidationError("walk length must be nonnegative");
  if (t == 0) return 1.0;
  return spectral_moment(spectrum, 2.0 * static_cast<double>(t));
}

CollisionProfile collision_profile_spectral(const Graph& g, const Spectrum& spectrum, int64_t t_max) {
  CollisionProfile p{CollisionMethod::kSpectral, {}};
  for (int64_t t = 0; t <= t_max; ++t) p.values.push_back(collision_spectral(g, spectrum, t));
  return p;
}

CollisionProfile collision_profile_direct(const Graph& g, int64_t t_max) {
  const int64_t n = g.size();
  for (int64_t u = 0; u < n; ++u) {
    if (g.degree(u) == 0) throw ValidationError("random walk undefined at an isolated vertex");
  }
  CollisionProfile p{CollisionMethod::kDirect, {}};
  std::vector<double> cur(static_cast<size_t>(n), 0.0), next(static_cast<size_t>(n));
  cur[0] = 1.0;
  p.values.push_back(1.0);
  for (int64_t t = 1; t <= t_max; ++t) {
    for (int64_t v = 0; v < n; ++v) next[static_cast<size_t>(v)] = 0.5 * cur[static_cast<size_t>(v)];
    for (int64_t u = 0; u < n; ++u) {
      const double share = 0.5 * cur[static_cast<size_t>(u)] / static_cast<double>(g.degree(u));
      if (share == 0.0) continue;
      for (const auto& nb : g.neighbors(u)) {
        next[static_cast<size_t>(nb.vertex)] += share * static_cast<double>(nb.mult);
      }
    }
    cur.swap(next);
    double sq = 0.0;
    for (double x : cur) sq += x * x;
    p.values.push_back(sq);
  }
  return p;
}

double collision_direct(const Graph& g, int64_t t) {
  if (t < 0) throw ValidationError("walk length must be nonnegative");
  return collision_profile_direct(g, t).values.back();
}

double log_cp_ratio_bound(int64_t degree) {
  return 4.0 * static_cast<double>(degree) * std::log(2.0 * std::numbers::e);
}

RatioBoundReport cp_ratio_bound_check(const Graph& g, const Spectrum& spectrum, int64_t t_max) {
  require_cayley(g, "collision ratio bound");
  RatioBoundReport r;
  r.degree = g.provenance()->generators.degree();
  const double log_bound = log_cp_ratio_bound(r.degree);
  r.bound = std::exp(log_bound);
  r.ok = true;
  for (int64_t t = 1; t <= t_max; ++t) {
    const double ratio = collision_spectral(g, spectrum, t) / collision_spectral(g, spectrum, 2 * t);
    r.ratios.push_back(ratio);
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax_t = t;
    }
    if (std::log(ratio) > log_bound + 1e-9 && !r.violation_t) {
      r.violation_t = t;
      r.ok = false;
    }
  }
  return r;
}

MultiplicityCertificate multiplicity_certificate(const Graph& g, const Spectrum& spectrum, double tau) {
  require_cayley(g, "multiplicity certificate");
  if (connectivity(g) != 1) throw ValidationError("multiplicity certificate requires a connected graph");
  MultiplicityCertificate c;
  c.lambda2 = spectrum.lambda2();
  const double tol = spectrum.eq_tolerance();
  if (tau < c.lambda2 - tol || tau > 1.5 + tol) {
    throw ValidationError("tau must lie in [lambda2, 3/2]");
  }
  c.tau = std::clamp(tau, c.lambda2, 1.5);
  const int64_t d = g.provenance()->generators.degree();

  // Ratios that land within rounding noise of an integer are not pushed up.
  c.kappa = static_cast<int64_t>(std::ceil(c.tau / c.lambda2 - 1e-9));
  c.dim_low = threshold_rank(spectrum, c.tau);
  c.t = static_cast<int64_t>(std::floor(std::log(static_cast<double>(c.dim_low)) / (4.0 * c.tau)));

  const double num = c.t == 0 ? 1.0 : spectral_moment(spectrum, 2.0 * static_cast<double>(c.t));
  const double den =
      c.t == 0 ? 1.0 : spectral_moment(spectrum, 2.0 * static_cast<double>(c.t * (c.kappa + 1)));
  c.ratio = num / den;
  c.lower_bound = std::sqrt(static_cast<double>(c.dim_low)) / (2.0 * std::exp(3.0));
  c.lower_ok = c.ratio >= c.lower_bound - 1e-9;

  const double doublings = std::ceil(std::log2(static_cast<double>(c.kappa + 1)) - 1e-12);
  c.log_doubling_bound = log_cp_ratio_bound(d) * doublings;
  c.doubling_ok = std::log(c.ratio) <= c.log_doubling_bound + 1e-9;

  c.log2_multiplicity_bound = 20.0 * static_cast<double>(d) * std::log2(3.0 * c.tau / c.lambda2) + 11.0;
  c.multiplicity_ok = std::log2(static_cast<double>(c.dim_low)) <= c.log2_multiplicity_bound + 1e-9;

  c.ok = c.lower_ok && c.doubling_ok && c.multiplicity_ok;
  return c;
}

BuserReport buser_check(const Graph& g, const Spectrum& spectrum, const Cut& q, int64_t t) {
  require_cayley(g, "Buser check");
  if (!q.proper()) throw ValidationError("Buser check needs a proper nonempty subset");
  if (t < 1) throw ValidationError("Buser check needs t >= 1");
  const int64_t n = g.size();
  Eigen::VectorXd ind(n);
  for (int64_t i = 0; i < n; ++i) ind(i) = q.contains(i) ? 1.0 : 0.0;
  const Eigen::VectorXd coeffs = spectrum.eigenvectors().transpose() * ind;
  double acc = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    const double lam = spectrum.eigenvalue(i);
    acc += coeffs(i) * coeffs(i) * (1.0 - std::pow(1.0 - lam, 2.0 * static_cast<double>(t)));
  }
  BuserReport r;
  r.lhs = acc / static_cast<double>(q.size());
  const double d = static_cast<double>(g.provenance()->generators.degree());
  r.rhs = 2.0 * std::sqrt(static_cast<double>(t) * d) * conductance(g, q);
  r.ok = r.lhs <= r.rhs + 1e-9;
  return r;
}

double power_conductance_materialized(const Graph& g, const Cut& q, int64_t t) {
  const auto d = g.regular_degree();
  if (!d) throw ValidationError("materialized graph power needs a regular graph");
  const int64_t n = g.size();
  if (n > 256) throw SizeGuardError("materialized graph power limited to n <= 256");
  if (!q.proper()) throw ValidationError("conductance needs a proper nonempty subset");
  Eigen::MatrixXd w(n, n);
  for (int64_t u = 0; u < n; ++u) {
    for (int64_t v = 0; v < n; ++v) w(u, v) = static_cast<double>(g.adjacency(u, v)) / static_cast<double>(*d);
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  for (int64_t s = 0; s < 2 * t; ++s) p = p * w;
  double crossing = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    if (!q.contains(i)) continue;
    for (int64_t j = 0; j < n; ++j) {
      if (!q.contains(j)) crossing += p(i, j);
    }
  }
  return crossing / static_cast<double>(q.size());
}

}  // namespace abelcut
