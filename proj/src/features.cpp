#include "rankability/features.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "rankability/error.hpp"
#include "rankability/rank_spectral.hpp"

namespace rankability {

long long count_triangles(const Digraph& g) {
  int n = g.n();
  std::vector<long long> a2(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!g.edge(i, k)) continue;
      for (int j = 0; j < n; ++j)
        if (g.edge(k, j)) ++a2[static_cast<std::size_t>(i) * n + j];
    }
  long long trace3 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.edge(j, i)) trace3 += a2[static_cast<std::size_t>(i) * n + j];
  return trace3 / 3;
}

long long count_contradictions(const Digraph& g) {
  long long count = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.edge(i, j) && g.edge(j, i)) ++count;
  return count;
}

long long count_draws(const Digraph& g) {
  long long count = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.edge(i, j) && !g.edge(j, i)) ++count;
  return count;
}

double out_degree_std(const Digraph& g) {
  std::vector<int> deg = g.out_degrees();
  double n = static_cast<double>(deg.size());
  double mean = 0.0;
  for (int d : deg) mean += d;
  mean /= n;
  double ss = 0.0;
  for (int d : deg) ss += (d - mean) * (d - mean);
  return std::sqrt(ss / n);
}

double algebraic_connectivity(const Digraph& g) {
  int n = g.n();
  SpectralParts parts = spectral_parts(g);
  Eigen::MatrixXd sym = 0.5 * (parts.laplacian + parts.laplacian.transpose());

  // Helmert columns: orthonormal and orthogonal to the all-ones vector.
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    double m = static_cast<double>(j + 1);
    double scale = 1.0 / std::sqrt(m * (m + 1.0));
    for (int i = 0; i <= j; ++i) q(i, j) = scale;
    q(j + 1, j) = -m * scale;
  }

  Eigen::MatrixXd restricted = q.transpose() * sym * q;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(restricted);
  if (solver.info() != Eigen::Success)
    throw Error(Errc::no_convergence, "symmetric eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

FeatureVector feature_vector(const Digraph& g) {
  return FeatureVector{
      static_cast<double>(count_triangles(g)),
      static_cast<double>(count_contradictions(g)),
      out_degree_std(g),
      algebraic_connectivity(g),
      static_cast<double>(count_draws(g)),
  };
}

}  // namespace rankability
