#include "rankability/rank_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "rankability/error.hpp"

namespace rankability {

SpectralParts spectral_parts(const Digraph& g) {
  int n = g.n();
  SpectralParts parts;
  parts.adjacency = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.edge(i, j)) parts.adjacency(i, j) = 1.0;
  Eigen::VectorXd deg = parts.adjacency.rowwise().sum();
  parts.degree = deg.asDiagonal();
  parts.laplacian = parts.degree - parts.adjacency;
  parts.benchmark = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) parts.benchmark(i, i) = static_cast<double>(n - 1 - i);
  return parts;
}

Spectrum eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw Error(Errc::non_square, "matrix is " + std::to_string(m.rows()) + "x" +
                                      std::to_string(m.cols()));
  if (m.rows() == 0) throw Error(Errc::empty_spectrum, "matrix has no rows");
  if (!m.allFinite()) throw Error(Errc::invalid_input, "matrix has non-finite entries");

  Eigen::Index n = m.rows();
  Eigen::RealSchur<Eigen::MatrixXd> schur(n);
  schur.setMaxIterations(100 * n);
  schur.compute(m, /*computeU=*/false);
  if (schur.info() != Eigen::Success)
    throw Error(Errc::no_convergence, "Schur iteration hit the sweep cap");

  const Eigen::MatrixXd& t = schur.matrixT();
  Spectrum out;
  out.reserve(static_cast<std::size_t>(n));
  Eigen::Index i = 0;
  while (i < n) {
    if (i == n - 1 || t(i + 1, i) == 0.0) {
      out.emplace_back(t(i, i), 0.0);
      ++i;
      continue;
    }
    double p = 0.5 * (t(i, i) - t(i + 1, i + 1));
    double mid = t(i + 1, i + 1) + p;
    double disc = p * p + t(i + 1, i) * t(i, i + 1);
    if (disc < 0.0) {
      double z = std::sqrt(-disc);
      out.emplace_back(mid, z);
      out.emplace_back(mid, -z);
    } else {
      double s = std::sqrt(disc);
      out.emplace_back(mid + s, 0.0);
      out.emplace_back(mid - s, 0.0);
    }
    i += 2;
  }
  return out;
}

double spectral_variation(const Spectrum& a, const Spectrum& b) {
  if (a.empty() || b.empty()) throw Error(Errc::empty_spectrum, "spectrum is empty");
  double worst = 0.0;
  for (const auto& x : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& y : b) nearest = std::min(nearest, std::abs(x - y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

double hausdorff_distance(const Spectrum& a, const Spectrum& b) {
  return std::max(spectral_variation(a, b), spectral_variation(b, a));
}

SpectralReport spectral_rankability_report(const Digraph& g) {
  int n = g.n();
  SpectralParts parts = spectral_parts(g);

  Spectrum degree_spectrum;
  Spectrum benchmark_spectrum;
  degree_spectrum.reserve(n);
  benchmark_spectrum.reserve(n);
  for (int i = 0; i < n; ++i) {
    degree_spectrum.emplace_back(parts.degree(i, i), 0.0);
    benchmark_spectrum.emplace_back(parts.benchmark(i, i), 0.0);
  }
  Spectrum laplacian_spectrum = eigenvalues(parts.laplacian);

  double hd_degree = hausdorff_distance(degree_spectrum, benchmark_spectrum);
  double hd_laplacian = hausdorff_distance(laplacian_spectrum, benchmark_spectrum);

  SpectralReport report;
  report.raw = 1.0 - (hd_degree + hd_laplacian) / (2.0 * (n - 1));
  report.value = std::clamp(report.raw, 0.0, 1.0);
  report.clamped = report.value != report.raw;
  return report;
}

double spectral_rankability(const Digraph& g) { return spectral_rankability_report(g).value; }

double spectral_rankability_cycle(int n) {
  if (n < 3) throw Error(Errc::too_small, "cycle needs at least 3 vertices");
  double denom = 2.0 * n - 2.0;
  if (n % 2 == 0) return 1.0 - (2.0 * n - 5.0) / denom;
  double angle = M_PI / n;
  std::complex<double> gap(n - 2.0 - std::cos(angle), std::sin(angle));
  return 1.0 - (n - 2.0 + std::abs(gap)) / denom;
}

}  // namespace rankability
