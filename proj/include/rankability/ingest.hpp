#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankability/digraph.hpp"
#include "rankability/forest.hpp"
#include "rankability/rank_edge.hpp"
#include "rankability/synth.hpp"

namespace rankability {

struct MatchRecord {
  std::string season;
  std::string team_a;
  std::string team_b;
  int score_a = 0;
  int score_b = 0;
};

// CSV with header season,team_a,team_b,score_a,score_b. Plain commas only;
// fields are trimmed, scores are nonnegative integers.
std::vector<MatchRecord> parse_matches(const std::string& path);

std::vector<std::string> list_seasons(const std::vector<MatchRecord>& records);

struct SeasonGraph {
  std::string season;
  std::vector<std::string> teams;  // sorted; position = vertex index
  Digraph graph;
};

// Edge a -> b when a outscored b in at least one match of the season.
SeasonGraph season_graph(const std::vector<MatchRecord>& records, const std::string& season);

struct IngestOptions {
  int edge_max_n = 8;
  SearchOptions search;
  bool auto_train = true;
  int train_count = 1000;
  std::uint64_t train_seed = 20260815;
  DatasetConfig dataset;  // template for auto-training data
  TrainConfig forest;     // template for auto-training
};

struct SeasonScores {
  std::string season;
  int n_teams = 0;
  std::optional<double> edge;  // absent when the season is too large
  double spectral = 0.0;
  bool spectral_clamped = false;
  double forest = 0.0;
};

struct IngestResult {
  std::vector<SeasonScores> seasons;
  std::vector<std::string> measure_names;
  // Pairwise Spearman over seasons where both measures are defined; NaN when
  // fewer than two such seasons exist or a series is constant.
  std::vector<std::vector<double>> correlations;
};

// Scores each season with every measure. Forest models are cached per team
// count in `models`; missing ones are trained on demand from the dataset
// template (or rejected when auto_train is off).
IngestResult score_seasons(const std::vector<MatchRecord>& records,
                           const std::vector<std::string>& seasons,
                           std::map<int, RandomForestModel>& models, const IngestOptions& opts);

// seasons.csv, correlations.csv, timeseries.svg, scatter_matrix.svg.
void write_ingest_outputs(const IngestResult& result, const std::string& out_dir);

}  // namespace rankability
