#include "rankability/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rankability/error.hpp"
#include "rankability/rank_spectral.hpp"

namespace rankability {

std::vector<double> fractional_ranks(const std::vector<double>& values) {
  std::size_t n = values.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j are 1-based ranks i+1..j+1; ties share their mean.
    double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(Errc::length_mismatch, "need two equal-length series of at least 2 entries");
  double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw Error(Errc::degenerate_input, "correlation of a constant series is undefined");
  return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw Error(Errc::length_mismatch, "need two equal-length series of at least 2 entries");
  return pearson(fractional_ranks(x), fractional_ranks(y));
}

const char* measure_name(Measure m) {
  switch (m) {
    case Measure::edge: return "edge";
    case Measure::spectral: return "spectral";
    case Measure::forest: return "forest";
  }
  return "unknown";
}

Measure measure_from_name(const std::string& name) {
  if (name == "edge") return Measure::edge;
  if (name == "spectral") return Measure::spectral;
  if (name == "forest") return Measure::forest;
  throw Error(Errc::bad_config, "unknown measure '" + name + "'");
}

namespace {

double safe_spearman(const std::vector<double>& x, const std::vector<double>& y,
                     std::string& note) {
  try {
    return spearman(x, y);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_input) throw;
    note = "degenerate series";
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  DatasetConfig train_cfg = config.dataset;
  train_cfg.generator = generator_with_sparsity(config.train_generator, config.sparse);
  train_cfg.n = config.n;
  train_cfg.count = config.train_count;
  train_cfg.seed = Rng(config.seed, 101).next_u64();
  DatasetConfig test_cfg = config.dataset;
  test_cfg.generator = generator_with_sparsity(config.test_generator, config.sparse);
  test_cfg.n = config.n;
  test_cfg.count = config.test_count;
  test_cfg.seed = Rng(config.seed, 102).next_u64();

  std::vector<LabeledSample> test = generate_dataset(test_cfg);
  ExperimentResult result;
  result.labels.reserve(test.size());
  for (const LabeledSample& s : test) result.labels.push_back(s.label);

  bool wants_forest = false;
  for (Measure m : config.measures) wants_forest = wants_forest || m == Measure::forest;

  RandomForestModel model;
  if (wants_forest) {
    std::vector<LabeledSample> train = generate_dataset(train_cfg);
    std::vector<FeatureVector> xs;
    std::vector<double> ys;
    xs.reserve(train.size());
    ys.reserve(train.size());
    for (const LabeledSample& s : train) {
      xs.push_back(feature_vector(s.graph));
      ys.push_back(s.label);
    }
    TrainConfig forest_cfg = config.forest;
    forest_cfg.seed = Rng(config.seed, 103).next_u64();
    forest_cfg.trained_n = config.n;
    model = fit_forest(xs, ys, forest_cfg);
  }

  for (Measure m : config.measures) {
    MeasureSeries series;
    series.measure = m;
    if (m == Measure::edge && config.n > config.edge_max_n) {
      series.note = "n exceeds the edge-measure limit of " + std::to_string(config.edge_max_n);
      result.series.push_back(std::move(series));
      continue;
    }
    series.values.reserve(test.size());
    for (const LabeledSample& s : test) {
      switch (m) {
        case Measure::edge:
          series.values.push_back(edge_rankability(s.graph, config.search));
          break;
        case Measure::spectral:
          series.values.push_back(spectral_rankability(s.graph));
          break;
        case Measure::forest:
          series.values.push_back(predict(model, feature_vector(s.graph)));
          break;
      }
    }
    series.available = true;
    series.rho = safe_spearman(series.values, result.labels, series.note);
    result.series.push_back(std::move(series));
  }
  return result;
}

std::vector<std::vector<double>> correlation_matrix(
    const std::vector<std::vector<double>>& series) {
  if (series.empty()) return {};
  std::size_t len = series.front().size();
  for (const auto& s : series)
    if (s.size() != len)
      throw Error(Errc::length_mismatch, "series lengths differ");
  if (len < 2) throw Error(Errc::length_mismatch, "series need at least 2 entries");

  std::size_t m = series.size();
  std::vector<std::vector<double>> matrix(m, std::vector<double>(m, 1.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::string note;
      double rho = safe_spearman(series[i], series[j], note);
      matrix[i][j] = rho;
      matrix[j][i] = rho;
    }
  return matrix;
}

}  // namespace rankability
