#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "rankability/digraph.hpp"

namespace rankability {

using Spectrum = std::vector<std::complex<double>>;

struct SpectralParts {
  Eigen::MatrixXd adjacency;
  Eigen::MatrixXd degree;     // diagonal matrix of out-degrees
  Eigen::MatrixXd laplacian;  // degree - adjacency
  Eigen::MatrixXd benchmark;  // diag(n-1, n-2, ..., 0)
};

SpectralParts spectral_parts(const Digraph& g);

// Eigenvalues of a real square matrix, Hessenberg reduction plus shifted QR
// with an iteration cap of 100 sweeps per row. Order is unspecified.
Spectrum eigenvalues(const Eigen::MatrixXd& m);

// max over a in A of min over b in B of |a - b|.
double spectral_variation(const Spectrum& a, const Spectrum& b);

double hausdorff_distance(const Spectrum& a, const Spectrum& b);

struct SpectralReport {
  double value = 0.0;  // raw clamped to [0, 1]
  double raw = 0.0;
  bool clamped = false;
};

// 1 - (hd(spec(D), spec(S)) + hd(spec(L), spec(S))) / (2 (n - 1)) where S is
// the benchmark spectrum of the complete dominance graph on n vertices.
SpectralReport spectral_rankability_report(const Digraph& g);
double spectral_rankability(const Digraph& g);

// Closed form for the n-cycle, n >= 3.
double spectral_rankability_cycle(int n);

}  // namespace rankability
