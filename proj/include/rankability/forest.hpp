#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankability/digraph.hpp"
#include "rankability/features.hpp"
#include "rankability/rng.hpp"

namespace rankability {

struct TrainConfig {
  int n_trees = 100;
  int max_features = feature_count;  // candidate features per split
  int min_samples_split = 2;
  int min_samples_leaf = 1;
  int max_depth = 0;  // 0 = unlimited
  bool bootstrap = true;
  std::uint64_t seed = 0;
  int trained_n = 0;  // vertex count the model expects, 0 = unchecked
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;
};

// Preorder, root at index 0; children always follow their parent.
using Tree = std::vector<TreeNode>;

struct RandomForestModel {
  TrainConfig config;
  double label_min = 0.0;
  double label_max = 0.0;
  std::vector<Tree> trees;
};

// Variance-reduction CART. Tree t draws from the derived stream
// (config.seed, t): first the bootstrap indices, then any per-node feature
// subsets (none are drawn when max_features covers every feature). Splits
// maximize sum_left^2 / n_left + sum_right^2 / n_right over midpoint
// thresholds between consecutive distinct values; ties go to the lowest
// feature index, then the smallest threshold.
RandomForestModel fit_forest(const std::vector<FeatureVector>& x, const std::vector<double>& y,
                             const TrainConfig& config);

// Mean of per-tree leaf values, clamped to the training label range.
double predict(const RandomForestModel& model, const FeatureVector& x);

// Feature extraction plus prediction. Rejects a graph whose size differs
// from config.trained_n unless allow_mismatch is set.
double rf_rankability(const RandomForestModel& model, const Digraph& g,
                      bool allow_mismatch = false);

// JSON, with thresholds and leaf values as hex float strings so a reloaded
// model predicts bit-identically.
void save_model(const std::string& path, const RandomForestModel& model);
RandomForestModel load_model(const std::string& path);

}  // namespace rankability
