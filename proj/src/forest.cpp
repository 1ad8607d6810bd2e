#include "rankability/forest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <utility>

#include <json.hpp>

#include "rankability/error.hpp"

namespace rankability {

namespace {

struct SplitChoice {
  bool found = false;
  int feature = -1;
  double threshold = 0.0;
  double score = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<FeatureVector>& x, const std::vector<double>& y,
              const TrainConfig& config, Rng& rng, double label_min, double label_max)
      : x_(x), y_(y), config_(config), rng_(rng), label_min_(label_min), label_max_(label_max) {}

  Tree build(std::vector<int> indices) {
    Tree tree;
    grow(tree, std::move(indices), 0);
    return tree;
  }

 private:
  int grow(Tree& tree, std::vector<int> indices, int depth) {
    int id = static_cast<int>(tree.size());
    tree.push_back({});

    // Leaf statistics run over the sorted label multiset so that nothing
    // here depends on row order.
    std::vector<double> ys;
    ys.reserve(indices.size());
    for (int i : indices) ys.push_back(y_[i]);
    std::sort(ys.begin(), ys.end());

    bool pure = ys.front() == ys.back();
    bool too_small = static_cast<int>(indices.size()) < config_.min_samples_split;
    bool too_deep = config_.max_depth > 0 && depth >= config_.max_depth;

    SplitChoice split;
    if (!pure && !too_small && !too_deep) split = best_split(indices);

    if (!split.found) {
      double sum = 0.0;
      for (double v : ys) sum += v;
      tree[id].value = std::clamp(sum / static_cast<double>(ys.size()), label_min_, label_max_);
      return id;
    }

    std::vector<int> left, right;
    for (int i : indices) {
      if (x_[i][split.feature] <= split.threshold) left.push_back(i);
      else right.push_back(i);
    }
    indices.clear();
    indices.shrink_to_fit();

    tree[id].feature = split.feature;
    tree[id].threshold = split.threshold;
    int l = grow(tree, std::move(left), depth + 1);
    tree[id].left = l;
    int r = grow(tree, std::move(right), depth + 1);
    tree[id].right = r;
    return id;
  }

  SplitChoice best_split(const std::vector<int>& indices) {
    int n = static_cast<int>(indices.size());

    std::array<int, feature_count> candidates;
    std::iota(candidates.begin(), candidates.end(), 0);
    int n_candidates = feature_count;
    if (config_.max_features < feature_count) {
      for (int i = 0; i < config_.max_features; ++i) {
        int j = i + static_cast<int>(rng_.next_index(feature_count - i));
        std::swap(candidates[i], candidates[j]);
      }
      n_candidates = config_.max_features;
      std::sort(candidates.begin(), candidates.begin() + n_candidates);
    }

    SplitChoice best;
    std::vector<std::pair<double, double>> vals(n);
    for (int c = 0; c < n_candidates; ++c) {
      int f = candidates[c];
      for (int i = 0; i < n; ++i) vals[i] = {x_[indices[i]][f], y_[indices[i]]};
      // Sorting by (value, label) makes every sum below independent of the
      // order training rows arrived in.
      std::sort(vals.begin(), vals.end());
      if (vals.front().first == vals.back().first) continue;

      double total = 0.0;
      for (const auto& [value, label] : vals) total += label;
      double left_sum = 0.0;
      for (int i = 0; i + 1 < n; ++i) {
        left_sum += vals[i].second;
        if (vals[i].first == vals[i + 1].first) continue;
        int n_left = i + 1;
        int n_right = n - n_left;
        if (n_left < config_.min_samples_leaf || n_right < config_.min_samples_leaf) continue;
        double right_sum = total - left_sum;
        double score = left_sum * left_sum / n_left + right_sum * right_sum / n_right;
        if (!best.found || score > best.score) {
          double threshold = 0.5 * (vals[i].first + vals[i + 1].first);
          // Midpoint rounding must not move the boundary past the right
          // neighbour, or the partition would disagree with the score.
          if (!(threshold < vals[i + 1].first)) threshold = vals[i].first;
          best.found = true;
          best.feature = f;
          best.threshold = threshold;
          best.score = score;
        }
      }
    }
    return best;
  }

  const std::vector<FeatureVector>& x_;
  const std::vector<double>& y_;
  const TrainConfig& config_;
  Rng& rng_;
  double label_min_;
  double label_max_;
};

double predict_tree(const Tree& tree, const FeatureVector& x) {
  int at = 0;
  while (tree[at].feature >= 0)
    at = x[tree[at].feature] <= tree[at].threshold ? tree[at].left : tree[at].right;
  return tree[at].value;
}

std::string hex_double(double v) {
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::hex);
  return std::string(buf, res.ptr);
}

double parse_hex_double(const nlohmann::json& j) {
  if (!j.is_string()) throw Error(Errc::corrupt_model, "expected a hex float string");
  const auto& s = j.get_ref<const std::string&>();
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v, std::chars_format::hex);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error(Errc::corrupt_model, "bad hex float '" + s + "'");
  return v;
}

}  // namespace

RandomForestModel fit_forest(const std::vector<FeatureVector>& x, const std::vector<double>& y,
                             const TrainConfig& config) {
  if (x.empty()) throw Error(Errc::empty_training_set, "no training rows");
  if (x.size() != y.size())
    throw Error(Errc::length_mismatch, std::to_string(x.size()) + " rows vs " +
                                           std::to_string(y.size()) + " labels");
  if (config.n_trees < 1) throw Error(Errc::bad_config, "n_trees must be at least 1");
  if (config.max_features < 1 || config.max_features > feature_count)
    throw Error(Errc::bad_config, "max_features must lie in [1, " +
                                      std::to_string(feature_count) + "]");
  if (config.min_samples_split < 2)
    throw Error(Errc::bad_config, "min_samples_split must be at least 2");
  if (config.min_samples_leaf < 1)
    throw Error(Errc::bad_config, "min_samples_leaf must be at least 1");
  if (config.max_depth < 0) throw Error(Errc::bad_config, "max_depth must be nonnegative");
  for (const FeatureVector& row : x)
    for (double v : row)
      if (!std::isfinite(v)) throw Error(Errc::invalid_input, "features must be finite");
  for (double v : y)
    if (!std::isfinite(v)) throw Error(Errc::invalid_input, "labels must be finite");

  RandomForestModel model;
  model.config = config;
  auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  model.label_min = *lo;
  model.label_max = *hi;

  int n = static_cast<int>(x.size());
  model.trees.reserve(config.n_trees);
  for (int t = 0; t < config.n_trees; ++t) {
    Rng rng(config.seed, static_cast<std::uint64_t>(t));
    std::vector<int> indices(n);
    if (config.bootstrap) {
      for (int& i : indices) i = static_cast<int>(rng.next_index(static_cast<std::size_t>(n)));
    } else {
      std::iota(indices.begin(), indices.end(), 0);
    }
    TreeBuilder builder(x, y, config, rng, model.label_min, model.label_max);
    model.trees.push_back(builder.build(std::move(indices)));
  }
  return model;
}

double predict(const RandomForestModel& model, const FeatureVector& x) {
  if (model.trees.empty()) throw Error(Errc::corrupt_model, "model has no trees");
  for (double v : x)
    if (!std::isfinite(v)) throw Error(Errc::invalid_input, "features must be finite");
  double sum = 0.0;
  for (const Tree& tree : model.trees) sum += predict_tree(tree, x);
  return std::clamp(sum / static_cast<double>(model.trees.size()), model.label_min,
                    model.label_max);
}

double rf_rankability(const RandomForestModel& model, const Digraph& g, bool allow_mismatch) {
  if (!allow_mismatch && model.config.trained_n != 0 && g.n() != model.config.trained_n)
    throw Error(Errc::vertex_count_mismatch,
                "model trained on " + std::to_string(model.config.trained_n) +
                    " vertices, graph has " + std::to_string(g.n()));
  return predict(model, feature_vector(g));
}

void save_model(const std::string& path, const RandomForestModel& model) {
  nlohmann::json j;
  j["format"] = "rankability.forest";
  j["version"] = 1;
  nlohmann::json names = nlohmann::json::array();
  for (std::string_view name : feature_names) names.push_back(std::string(name));
  j["feature_names"] = std::move(names);
  j["config"] = {
      {"n_trees", model.config.n_trees},
      {"max_features", model.config.max_features},
      {"min_samples_split", model.config.min_samples_split},
      {"min_samples_leaf", model.config.min_samples_leaf},
      {"max_depth", model.config.max_depth},
      {"bootstrap", model.config.bootstrap},
      {"seed", model.config.seed},
      {"trained_n", model.config.trained_n},
  };
  j["label_min"] = hex_double(model.label_min);
  j["label_max"] = hex_double(model.label_max);
  nlohmann::json trees = nlohmann::json::array();
  for (const Tree& tree : model.trees) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const TreeNode& node : tree) {
      if (node.feature < 0) {
        nodes.push_back({{"v", hex_double(node.value)}});
      } else {
        nodes.push_back({{"f", node.feature},
                         {"t", hex_double(node.threshold)},
                         {"l", node.left},
                         {"r", node.right}});
      }
    }
    trees.push_back(std::move(nodes));
  }
  j["trees"] = std::move(trees);

  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  out << j.dump() << '\n';
  if (!out) throw Error(Errc::io_error, "write failed for " + path);
}

RandomForestModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::corrupt_model, path + " is not valid JSON");
  }

  try {
    if (!j.contains("version")) throw Error(Errc::corrupt_model, "missing version field");
    int version = j.at("version").get<int>();
    if (version != 1)
      throw Error(Errc::schema_version_mismatch,
                  "model schema version " + std::to_string(version) + ", expected 1");
    if (j.value("format", std::string()) != "rankability.forest")
      throw Error(Errc::corrupt_model, "unexpected format tag");

    const auto& names = j.at("feature_names");
    if (names.size() != feature_names.size())
      throw Error(Errc::corrupt_model, "feature set mismatch");
    for (std::size_t i = 0; i < feature_names.size(); ++i)
      if (names.at(i).get<std::string>() != feature_names[i])
        throw Error(Errc::corrupt_model, "feature set mismatch");

    RandomForestModel model;
    const auto& cfg = j.at("config");
    model.config.n_trees = cfg.at("n_trees").get<int>();
    model.config.max_features = cfg.at("max_features").get<int>();
    model.config.min_samples_split = cfg.at("min_samples_split").get<int>();
    model.config.min_samples_leaf = cfg.at("min_samples_leaf").get<int>();
    model.config.max_depth = cfg.at("max_depth").get<int>();
    model.config.bootstrap = cfg.at("bootstrap").get<bool>();
    model.config.seed = cfg.at("seed").get<std::uint64_t>();
    model.config.trained_n = cfg.at("trained_n").get<int>();
    model.label_min = parse_hex_double(j.at("label_min"));
    model.label_max = parse_hex_double(j.at("label_max"));

    for (const auto& jtree : j.at("trees")) {
      Tree tree;
      int size = static_cast<int>(jtree.size());
      if (size == 0) throw Error(Errc::corrupt_model, "empty tree");
      tree.reserve(size);
      int id = 0;
      for (const auto& jnode : jtree) {
        TreeNode node;
        if (jnode.contains("v")) {
          node.value = parse_hex_double(jnode.at("v"));
        } else {
          node.feature = jnode.at("f").get<int>();
          node.threshold = parse_hex_double(jnode.at("t"));
          node.left = jnode.at("l").get<int>();
          node.right = jnode.at("r").get<int>();
          if (node.feature < 0 || node.feature >= feature_count)
            throw Error(Errc::corrupt_model, "feature index out of range");
          // Preorder: children strictly after the parent, so walks terminate.
          if (node.left <= id || node.left >= size || node.right <= id || node.right >= size)
            throw Error(Errc::corrupt_model, "child index out of range");
        }
        tree.push_back(node);
        ++id;
      }
      model.trees.push_back(std::move(tree));
    }
    if (model.trees.empty()) throw Error(Errc::corrupt_model, "model has no trees");
    return model;
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception&) {
    throw Error(Errc::corrupt_model, path + " has missing or malformed fields");
  }
}

}  // namespace rankability
