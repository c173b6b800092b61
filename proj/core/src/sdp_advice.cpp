#include "abelcut/sdp_advice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>


#include "abelcut/cuts.hpp"
#include "abelcut/errors.hpp"

namespace abelcut {

PseudomomentMatrix::PseudomomentMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2) {
    throw ValidationError("moment matrix must be square with at least one vertex");
  }
}

PseudomomentMatrix PseudomomentMatrix::integral(const Cut& q) {
  const int64_t n = q.universe();
  Eigen::VectorXd x(n + 1);
  x(0) = 1.0;
  for (int64_t i = 0; i < n; ++i) x(i + 1) = q.contains(i) ? 1.0 : 0.0;
  return PseudomomentMatrix(x * x.transpose());
}

double PseudomomentMatrix::distance(int64_t a, int64_t b) const {
  if (a == b) return 0.0;
  if (a == kZero) std::swap(a, b);
  const int64_t pa = a == kOne ? 0 : a + 1;
  if (b == kZero) return m_(pa, pa);
  const int64_t pb = b == kOne ? 0 : b + 1;
  return m_(pa, pa) + m_(pb, pb) - 2.0 * m_(pa, pb);
}

double PseudomomentMatrix::spreading() const {
  double acc = 0.0;
  for (int64_t i = 0; i < vertices(); ++i) {
    for (int64_t j = i + 1; j < vertices(); ++j) acc += distance(i, j);
  }
  return acc;
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Packed lower triangle, off-diagonals scaled by sqrt(2) so the Euclidean
// inner product matches the trace inner product.
struct SvecLayout {
  int64_t dim;
  std::vector<int64_t> offset;

  explicit SvecLayout(int64_t d) : dim(d), offset(static_cast<size_t>(d)) {
    int64_t o = 0;
    for (int64_t p = 0; p < d; ++p) {
      offset[static_cast<size_t>(p)] = o;
      o += d - p;
    }
  }
  int64_t size() const { return dim * (dim + 1) / 2; }
  int64_t index(int64_t p, int64_t q) const {
    if (p > q) std::swap(p, q);
    return offset[static_cast<size_t>(p)] + (q - p);
  }

  Eigen::VectorXd pack(const Eigen::MatrixXd& m) const {
    Eigen::VectorXd v(size());
    for (int64_t p = 0; p < dim; ++p) {
      v(index(p, p)) = m(p, p);
      for (int64_t q = p + 1; q < dim; ++q) v(index(p, q)) = kSqrt2 * m(q, p);
    }
    return v;
  }
  Eigen::MatrixXd unpack(const Eigen::VectorXd& v) const {
    Eigen::MatrixXd m(dim, dim);
    for (int64_t p = 0; p < dim; ++p) {
      m(p, p) = v(index(p, p));
      for (int64_t q = p + 1; q < dim; ++q) m(p, q) = m(q, p) = v(index(p, q)) / kSqrt2;
    }
    return m;
  }
};

// Linear functional of M given by entry coefficients (p <= q), coefficient on
// the symmetric pair counted once.
using EntryForm = std::map<std::pair<int64_t, int64_t>, double>;

void add_entry(EntryForm& f, int64_t p, int64_t q, double c) {
  if (p > q) std::swap(p, q);
  f[{p, q}] += c;
}

void add_distance(EntryForm& f, int64_t a, int64_t b, double c) {
  if (a == b) return;
  if (a == PseudomomentMatrix::kZero) std::swap(a, b);
  const int64_t pa = a == PseudomomentMatrix::kOne ? 0 : a + 1;
  if (b == PseudomomentMatrix::kZero) {
    add_entry(f, pa, pa, c);
    return;
  }
  const int64_t pb = b == PseudomomentMatrix::kOne ? 0 : b + 1;
  add_entry(f, pa, pa, c);
  add_entry(f, pb, pb, c);
  add_entry(f, pa, pb, -2.0 * c);
}

struct Row {
  std::vector<std::pair<int64_t, double>> coeffs;  // svec coordinates
  double rhs = 0.0;
  bool inequality = false;
};

Row make_row(const SvecLayout& s, const EntryForm& f, double rhs, bool inequality) {
  Row r;
  r.rhs = rhs;
  r.inequality = inequality;
  for (const auto& [pq, c] : f) {
    if (c == 0.0) continue;
    const auto [p, q] = pq;
    r.coeffs.emplace_back(s.index(p, q), p == q ? c : c / kSqrt2);
  }
  return r;
}

double row_value(const Row& r, const Eigen::VectorXd& y) {
  double v = 0.0;
  for (const auto& [idx, c] : r.coeffs) v += c * y(idx);
  return v;
}

Eigen::MatrixXd psd_part(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

// Projection onto {A y = b}, where y stacks svec(M) and one slack per
// inequality row.
class AffineProjector {
 public:
  AffineProjector(const std::vector<Row>& rows, int64_t svec_size) {
    int64_t slack = 0;
    std::vector<Eigen::Triplet<double>> trips;
    for (size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [idx, c] : rows[r].coeffs) trips.emplace_back(static_cast<int>(r), static_cast<int>(idx), c);
      if (rows[r].inequality) {
        trips.emplace_back(static_cast<int>(r), static_cast<int>(svec_size + slack), 1.0);
        ++slack;
      }
    }
    b_.resize(static_cast<int64_t>(rows.size()));
    for (size_t r = 0; r < rows.size(); ++r) b_(static_cast<int64_t>(r)) = rows[r].rhs;
    a_.resize(static_cast<int64_t>(rows.size()), svec_size + slack);
    a_.setFromTriplets(trips.begin(), trips.end());
    solver_.compute(Eigen::SparseMatrix<double>(a_ * a_.transpose()));
    if (solver_.info() != Eigen::Success) throw SolverError("constraint system is rank deficient");
  }

  /// Returns the projection y - A^T mu and stores the multiplier mu.
  Eigen::VectorXd project(const Eigen::VectorXd& y, Eigen::VectorXd& mu) const {
    mu = solver_.solve(a_ * y - b_);
    return y - a_.transpose() * mu;
  }
  const Eigen::VectorXd& rhs() const { return b_; }

 private:
  Eigen::SparseMatrix<double> a_;
  Eigen::VectorXd b_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver_;
};

}  // namespace

std::vector<TriangleViolation> triangle_violations(const PseudomomentMatrix& m, int64_t top_k, double tol) {
  const int64_t n = m.vertices();
  std::vector<int64_t> pts{PseudomomentMatrix::kZero, PseudomomentMatrix::kOne};
  for (int64_t i = 0; i < n; ++i) pts.push_back(i);
  const size_t p = pts.size();
  std::vector<double> d(p * p, 0.0);
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = a + 1; b < p; ++b) d[a * p + b] = d[b * p + a] = m.distance(pts[a], pts[b]);
  }
  std::vector<TriangleViolation> out;
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = a + 1; b < p; ++b) {
      const double dab = d[a * p + b];
      for (size_t c = 0; c < p; ++c) {
        if (c == a || c == b) continue;
        const double v = dab - d[a * p + c] - d[c * p + b];
        if (v > tol) out.push_back({{pts[a], pts[b], pts[c]}, v});
      }
    }
  }
  auto order = [](const TriangleViolation& x, const TriangleViolation& y) {
    if (x.violation != y.violation) return x.violation > y.violation;
    return x.ijk < y.ijk;
  };
  if (top_k >= 0 && static_cast<int64_t>(out.size()) > top_k) {
    std::partial_sort(out.begin(), out.begin() + top_k, out.end(), order);
    out.resize(static_cast<size_t>(top_k));
  } else {
    std::sort(out.begin(), out.end(), order);
  }
  return out;
}

MomentAudit audit_moments(const PseudomomentMatrix& m, const Cut& q, double eps, double tol) {
  MomentAudit a;
  const Eigen::MatrixXd& mat = m.matrix();
  const int64_t n = m.vertices();
  a.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(mat, Eigen::EigenvaluesOnly).eigenvalues()(0);
  a.boolean_error = std::abs(mat(0, 0) - 1.0);
  double corr = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    a.boolean_error = std::max(a.boolean_error, std::abs(mat(0, i + 1) - mat(i + 1, i + 1)));
    corr += q.contains(i) ? 1.0 - mat(i + 1, i + 1) : mat(i + 1, i + 1);
  }
  a.correlation_excess = std::max(0.0, corr - eps * static_cast<double>(q.size()));
  const auto worst = triangle_violations(m, 1, 0.0);
  a.worst_triangle = worst.empty() ? 0.0 : worst.front().violation;
  a.ok = a.min_eigenvalue >= -10.0 * tol && a.boolean_error <= tol && a.correlation_excess <= tol &&
         a.worst_triangle <= tol;
  return a;
}

SdpSolution solve_advice_sdp(const Graph& g, const Cut& q, double eps, const SolverConfig& cfg) {
  const int64_t n = g.size();
  if (q.universe() != n) throw ValidationError("advice cut universe does not match graph size");
  if (!q.proper()) throw ValidationError("advice must be a proper nonempty subset");
  if (!(eps >= 0.0 && eps <= 0.05 + 1e-12)) throw ValidationError("eps must lie in [0, 1/20]");
  if (!(cfg.tolerance > 0.0)) throw ValidationError("solver tolerance must be positive");
  if (n > 400) throw SizeGuardError("advice SDP limited to n <= 400");

  const SvecLayout layout(n + 1);
  const int64_t msize = layout.size();
  const int64_t batch = cfg.batch_size > 0 ? cfg.batch_size : 16 * n;

  // Objective: sum over undirected edges of d(i, j), scaled to unit max.
  EntryForm obj;
  for (int64_t u = 0; u < n; ++u) {
    for (const auto& nb : g.neighbors(u)) {
      if (nb.vertex > u) add_distance(obj, u, nb.vertex, static_cast<double>(nb.mult));
    }
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(msize);
  for (const auto& [idx, v] : make_row(layout, obj, 0.0, false).coeffs) c(idx) += v;
  const Eigen::VectorXd c_unit = c / std::max(1.0, c.cwiseAbs().maxCoeff());

  std::vector<Row> rows;
  {
    EntryForm f;
    add_entry(f, 0, 0, 1.0);
    rows.push_back(make_row(layout, f, 1.0, false));
  }
  for (int64_t i = 0; i < n; ++i) {
    EntryForm f;
    add_entry(f, 0, i + 1, 1.0);
    add_entry(f, i + 1, i + 1, -1.0);
    rows.push_back(make_row(layout, f, 0.0, false));
  }
  {
    EntryForm f;
    for (int64_t i = 0; i < n; ++i) add_entry(f, i + 1, i + 1, q.contains(i) ? -1.0 : 1.0);
    const double qs = static_cast<double>(q.size());
    rows.push_back(make_row(layout, f, eps * qs - qs, true));
  }
  const size_t fixed_rows = rows.size();
  std::vector<std::array<int64_t, 3>> tri_keys;  // parallel to rows[fixed_rows..]
  std::set<std::array<int64_t, 3>> seen;

  // Iterate: z = (svec M, slacks) starts at the advice, which is feasible.
  auto slack_for = [](const Row& r, const Eigen::VectorXd& m) { return std::max(0.0, r.rhs - row_value(r, m)); };
  Eigen::VectorXd zm = layout.pack(PseudomomentMatrix::integral(q).matrix());
  std::vector<double> zs{slack_for(rows.back(), zm)}, us{0.0};
  Eigen::VectorXd um = Eigen::VectorXd::Zero(msize);

  SolverDiagnostics diag;
  double rho = 1.0;
  const double alpha = 1.6;
  // Cutting-plane rounds are solved loosely until the triangle violations get
  // small; only then is the tolerance applied.
  const double loose = std::max(cfg.tolerance, 1e-4);
  bool tight = loose == cfg.tolerance;
  double tight_primal = 0.1 * cfg.tolerance;

  for (int64_t round = 0;; ++round) {
    const AffineProjector proj(rows, msize);
    const int64_t ns = static_cast<int64_t>(zs.size());
    const int64_t total = msize + ns;
    Eigen::VectorXd z(total), u(total), cost = Eigen::VectorXd::Zero(total);
    z << zm, Eigen::Map<const Eigen::VectorXd>(zs.data(), ns);
    u << um, Eigen::Map<const Eigen::VectorXd>(us.data(), ns);
    cost.head(msize) = c_unit;

    const double primal_tol = tight ? tight_primal : 0.1 * loose;
    const double dual_tol = tight ? cfg.tolerance : loose;
    bool converged = false;
    double rp = 0.0, rd = 0.0, gap = 0.0;
    Eigen::VectorXd mu;
    int adaptations = 0;
    for (int64_t it = 0; it < cfg.max_iterations; ++it) {
      const Eigen::VectorXd x = proj.project(z - u - cost / rho, mu);
      const Eigen::VectorXd xh = alpha * x + (1.0 - alpha) * z;
      const Eigen::VectorXd w = xh + u;
      z.head(msize) = layout.pack(psd_part(layout.unpack(w.head(msize))));
      z.tail(ns) = w.tail(ns).cwiseMax(0.0);
      u += xh - z;
      ++diag.iterations;
      rp = (x - z).cwiseAbs().maxCoeff();
      if (it % 10 != 9) continue;

      // Dual pair from the affine step: lambda = -rho mu with slack
      // S = c - A^T lambda = -rho (x - z + u) once the iteration settles.
      const Eigen::VectorXd slack = -rho * (x - z + u);
      const double psd_gap = std::max(
          0.0, -Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(layout.unpack(slack.head(msize)), Eigen::EigenvaluesOnly)
                    .eigenvalues()(0));
      const double lin_gap = std::max(0.0, -slack.tail(ns).minCoeff());
      rd = std::max(psd_gap, lin_gap);
      const double pobj = cost.dot(z);
      const double dobj = -rho * proj.rhs().dot(mu);
      gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
      if (rp <= primal_tol && rd <= dual_tol && gap <= dual_tol) {
        converged = true;
        break;
      }
      // Unbounded balancing can cycle; fixed rho always converges.
      if (it % 50 == 49 && adaptations < 24) {
        const double pr = rp / primal_tol, dr = std::max(rd, gap) / dual_tol;
        if (pr > 10.0 * dr) {
          rho *= 2.0;
          u /= 2.0;
          ++adaptations;
        } else if (dr > 10.0 * pr) {
          rho /= 2.0;
          u *= 2.0;
          ++adaptations;
        }
      }
    }
    diag.primal_residual = rp;
    diag.dual_residual = rd;
    diag.duality_gap = gap;
    diag.rho = rho;
    diag.triangle_rounds = round + 1;
    if (!converged) throw SolverError("advice SDP did not converge within the iteration budget");
    zm = z.head(msize);
    um = u.head(msize);

    const PseudomomentMatrix current(layout.unpack(zm));
    const auto viol = triangle_violations(current, -1, cfg.tolerance);
    if (!tight && (viol.empty() || viol.front().violation < 10.0 * loose)) tight = true;
    if (viol.empty() && tight) {
      diag.converged = true;
      diag.objective = c.dot(zm);
      diag.active_triangles = static_cast<int64_t>(tri_keys.size());
      return {current, diag};
    }
    if (round + 1 >= cfg.max_rounds) throw SolverError("triangle generation did not terminate");

    // Keep the correlation row and every triangle whose dual is alive or whose
    // slack is small; the rest are dropped until violated again.
    std::vector<Row> kept(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(fixed_rows));
    std::vector<std::array<int64_t, 3>> kept_keys;
    std::vector<double> kzs{z(msize)}, kus{u(msize)};
    for (size_t t = 0; t < tri_keys.size(); ++t) {
      const int64_t si = msize + 1 + static_cast<int64_t>(t);
      if (z(si) > 1e-3 && u(si) == 0.0) {
        seen.erase(tri_keys[t]);
        continue;
      }
      kept.push_back(rows[fixed_rows + t]);
      kept_keys.push_back(tri_keys[t]);
      kzs.push_back(z(si));
      kus.push_back(u(si));
    }
    int64_t added = 0;
    for (const auto& v : viol) {
      const std::array<int64_t, 3> key{std::min(v.ijk[0], v.ijk[1]), std::max(v.ijk[0], v.ijk[1]), v.ijk[2]};
      if (!seen.insert(key).second) continue;
      EntryForm f;
      add_distance(f, v.ijk[0], v.ijk[1], 1.0);
      add_distance(f, v.ijk[0], v.ijk[2], -1.0);
      add_distance(f, v.ijk[2], v.ijk[1], -1.0);
      kept.push_back(make_row(layout, f, 0.0, true));
      kept_keys.push_back(key);
      kzs.push_back(slack_for(kept.back(), zm));
      kus.push_back(0.0);
      if (++added >= batch) break;
    }
    // Violated rows already present are only met to solver accuracy.
    if (added == 0 && tight) tight_primal /= 10.0;
    rows = std::move(kept);
    tri_keys = std::move(kept_keys);
    zs = std::move(kzs);
    us = std::move(kus);
  }
}

BallCut ball_rounding(const PseudomomentMatrix& m, const Graph& g) {
  const int64_t n = g.size();
  if (m.vertices() != n) throw ValidationError("moment matrix does not match graph size");
  bool have = false;
  BallCut best{Cut(std::vector<uint8_t>(static_cast<size_t>(n), 0)), 0.0, 0, 0.0};
  int64_t best_num = 0, best_den = 1;
  std::vector<int64_t> order(static_cast<size_t>(n));
  std::vector<double> dist(static_cast<size_t>(n));
  for (int64_t center = 0; center < n; ++center) {
    for (int64_t i = 0; i < n; ++i) dist[static_cast<size_t>(i)] = m.distance(center, i);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int64_t a, int64_t b) { return dist[static_cast<size_t>(a)] < dist[static_cast<size_t>(b)]; });
    std::vector<uint8_t> members(static_cast<size_t>(n), 0);
    int64_t boundary = 0;
    for (int64_t k = 0; k + 1 < n; ++k) {
      const int64_t v = order[static_cast<size_t>(k)];
      int64_t to_inside = 0;
      for (const auto& nb : g.neighbors(v)) {
        if (nb.vertex != v && members[static_cast<size_t>(nb.vertex)]) to_inside += nb.mult;
      }
      boundary += g.degree(v) - g.adjacency(v, v) - 2 * to_inside;
      members[static_cast<size_t>(v)] = 1;
      const double radius = dist[static_cast<size_t>(v)];
      if (!(dist[static_cast<size_t>(order[static_cast<size_t>(k + 1)])] > radius)) continue;
      const int64_t size = k + 1;
      const int64_t den = size * (n - size);
      Cut ball(members);
      if (2 * size > n || (2 * size == n && lex_less(ball.complement(), ball))) ball = ball.complement();
      const __int128 lhs = static_cast<__int128>(boundary) * best_den;
      const __int128 rhs = static_cast<__int128>(best_num) * den;
      if (!have || lhs < rhs || (lhs == rhs && lex_less(ball, best.cut))) {
        best = {std::move(ball), 0.0, center, radius};
        best_num = boundary;
        best_den = den;
        have = true;
      }
    }
  }
  if (!have) throw SolverError("every ball is empty or the whole vertex set; degenerate moment matrix");
  best.sparsity = sparsity(g, best.cut);
  return best;
}

AdviceResult advice_cut(const Graph& g, const Cut& q, double eps, const SolverConfig& cfg) {
  const SdpSolution sol = solve_advice_sdp(g, q, eps, cfg);
  const BallCut ball = ball_rounding(sol.moments, g);
  AdviceResult r{ball.cut, ball.sparsity, sol.diagnostics.objective, sol.moments.spreading(), 0.0, sol.diagnostics};
  r.objective_ratio = r.spreading > 0.0 ? r.sdp_objective / r.spreading : 0.0;
  return r;
}

}  // namespace abelcut
