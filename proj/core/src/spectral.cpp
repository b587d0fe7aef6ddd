#include "graphsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "graphsim/errors.hpp"

namespace graphsim {

namespace {

constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s += 2.0 * a[static_cast<std::size_t>(i) * n + j] *
           a[static_cast<std::size_t>(i) * n + j];
  return std::sqrt(s);
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw InputError(std::string(what) + " requires a connected graph");
}

} // namespace

SpectralDecomposition eigenvalues(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      a[static_cast<std::size_t>(u) * n + v] = 1.0;

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double tol = 1e-12 * n;
  int sweep = 0;
  bool converged = n < 2 || offdiag_frobenius(a, n) < tol;
  while (!converged && sweep < kMaxSweeps) {
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0)
          continue;
        // Rotation angle that annihilates a_pq (Golub & Van Loan form).
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::hypot(1.0, theta))
                             : 1.0 / (theta - std::hypot(1.0, theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
    converged = offdiag_frobenius(a, n) < tol;
  }

  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      residual = std::max(residual, std::abs(at(i, j)));

  if (!converged)
    throw ConvergenceError(
        "Jacobi eigensolver did not converge within " +
            std::to_string(kMaxSweeps) + " sweeps (residual " +
            std::to_string(residual) + ")",
        residual);

  SpectralDecomposition spec;
  spec.eigenvalues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    spec.eigenvalues[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(),
            std::greater<>());
  spec.residual = residual;
  spec.sweeps = sweep;

  // Trace and Frobenius identities of the adjacency spectrum.
  double sum = 0.0, sumsq = 0.0;
  for (double ev : spec.eigenvalues) {
    sum += ev;
    sumsq += ev * ev;
  }
  const double two_m = 2.0 * g.edge_count();
  if (std::abs(sum) > 1e-8 * n)
    throw ConvergenceError("eigenvalue sum deviates from zero trace: " +
                               std::to_string(sum),
                           std::abs(sum));
  if (std::abs(sumsq - two_m) > 1e-6 * (1.0 + two_m))
    throw ConvergenceError("eigenvalue square sum deviates from 2|E|: " +
                               std::to_string(sumsq),
                           std::abs(sumsq - two_m));
  return spec;
}

double graph_energy(const SpectralDecomposition& spec) {
  double s = 0.0;
  for (double ev : spec.eigenvalues)
    s += std::abs(ev);
  return s;
}

double estrada_index(const SpectralDecomposition& spec) {
  double s = 0.0;
  for (double ev : spec.eigenvalues)
    s += std::exp(ev);
  return s;
}

double resolvent_energy(const SpectralDecomposition& spec, int n) {
  double s = 0.0;
  for (double ev : spec.eigenvalues) {
    const double denom = n - ev;
    if (denom <= 1e-12)
      throw Error("resolvent energy undefined: eigenvalue reaches n");
    s += 1.0 / denom;
  }
  return s;
}

double graph_energy(const Graph& g) {
  require_connected(g, "graph_energy");
  return graph_energy(eigenvalues(g));
}

double estrada_index(const Graph& g) {
  require_connected(g, "estrada_index");
  return estrada_index(eigenvalues(g));
}

double resolvent_energy(const Graph& g) {
  require_connected(g, "resolvent_energy");
  return resolvent_energy(eigenvalues(g), g.vertex_count());
}

} // namespace graphsim
