#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankability/forest.hpp"
#include "rankability/rank_edge.hpp"
#include "rankability/synth.hpp"

namespace rankability {

// 1-based positions after sorting ascending; ties share the mean of their
// positions.
std::vector<double> fractional_ranks(const std::vector<double>& values);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// Pearson correlation of the fractional ranks.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

enum class Measure { edge, spectral, forest };

const char* measure_name(Measure m);
Measure measure_from_name(const std::string& name);

struct ExperimentConfig {
  int n = 8;
  bool sparse = false;  // applies to both generators
  GeneratorId train_generator = GeneratorId::target_dominance;
  GeneratorId test_generator = GeneratorId::target_dominance;
  int train_count = 1000;
  int test_count = 1000;
  std::uint64_t seed = 0;
  int edge_max_n = 8;  // the edge measure runs only when n <= this
  std::vector<Measure> measures = {Measure::edge, Measure::spectral, Measure::forest};
  DatasetConfig dataset;  // parameter ranges; generator/n/count/seed overwritten
  TrainConfig forest;     // seed and trained_n overwritten
  SearchOptions search;   // used by the edge measure
};

struct MeasureSeries {
  Measure measure = Measure::edge;
  bool available = false;
  std::string note;            // reason when unavailable
  std::vector<double> values;  // one per test graph
  double rho = 0.0;            // Spearman against labels, NaN when degenerate
};

struct ExperimentResult {
  std::vector<double> labels;
  std::vector<MeasureSeries> series;
};

// Draws a train and a test set from the same generator family, fits a forest
// on the training features when requested, and correlates every measure with
// the ground-truth labels on the test set.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Pairwise Spearman matrix; all series must share one length of at least 2.
std::vector<std::vector<double>> correlation_matrix(
    const std::vector<std::vector<double>>& series);

}  // namespace rankability
