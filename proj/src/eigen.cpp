#include "supergraph/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "supergraph/error.hpp"

namespace supergraph {

double frobenius_norm(const RealMatrix& m) {
  double s = 0;
  for (double v : m.data()) s += v * v;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues_sorted(const RealMatrix& m, const JacobiOptions& opts) {
  const std::size_t n = m.size();
  double max_abs = 0;
  for (double v : m.data()) max_abs = std::max(max_abs, std::abs(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > opts.symmetry_tol * std::max(1.0, max_abs))
        throw NotSymmetric("entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                           std::to_string(j) + "," + std::to_string(i) + ") differ");

  RealMatrix a = m;
  const double norm = frobenius_norm(m);
  const double target = opts.convergence_tol * norm;
  const double negligible = opts.negligible_tol * norm;
  double off = off_diagonal_norm(a);
  for (int sweep = 0; off > target; ++sweep) {
    if (sweep == opts.max_sweeps)
      throw NoConvergence("Jacobi did not converge in " + std::to_string(opts.max_sweeps) + " sweeps", off);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotating on rounding noise inside a degenerate cluster only
        // shuffles the remaining off-diagonal mass and stalls convergence.
        if (std::abs(apq) <= negligible) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Rotation zeroing a(p,q) (Rutishauser's stable form).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
    off = off_diagonal_norm(a);
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum jacobi_eigenvalues(const RealMatrix& m, const JacobiOptions& opts) {
  const double tol = opts.grouping_tol * std::max(1.0, frobenius_norm(m));
  return snap_to_integers(Spectrum::group(jacobi_eigenvalues_sorted(m, opts), tol), tol);
}

bool interlacing_check(const std::vector<double>& full, const std::vector<double>& sub, double slack) {
  const std::size_t n = full.size();
  const std::size_t m = sub.size();
  if (m > n || m == 0) return false;
  for (std::size_t k = 0; k < m; ++k) {
    if (full[k] > sub[k] + slack) return false;
    if (sub[k] > full[k + n - m] + slack) return false;
  }
  return true;
}

}  // namespace supergraph
