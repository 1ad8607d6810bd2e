#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankability/digraph.hpp"
#include "rankability/rng.hpp"

namespace rankability {

enum class GeneratorId { target_dominance, sparse_target_dominance, elo, sparse_elo };

const char* generator_name(GeneratorId id);
GeneratorId generator_from_name(const std::string& name);
bool generator_is_sparse(GeneratorId id);
bool generator_is_elo(GeneratorId id);
GeneratorId generator_with_sparsity(GeneratorId id, bool sparse);

// Flip each off-diagonal entry of the complete dominance graph independently
// with probability p, p in [0, 0.5]. Entries scan in row-major order.
Digraph perturb_dominance(int n, double p, Rng& rng);

// Keep each existing edge independently with probability c, scanning edges in
// row-major order.
Digraph sparsify(const Digraph& g, double c, Rng& rng);

// Label paired with perturb_dominance + sparsify: c * (1 - 2p).
double perturbation_label(double p, double c);

// Win expectancy of a rating-a player against a rating-b player.
double elo_expected(double rating_a, double rating_b);

struct MatchProbabilities {
  double first_wins = 0.0;
  double second_wins = 0.0;
  double draw = 0.0;
};

// Draw chance is the product of the two win expectancies; the remainder is
// split between the players in proportion to their expectancies.
MatchProbabilities elo_match_probabilities(double rating_a, double rating_b);

// One round-robin pass adds an edge per decided match; passes accumulate.
// Pairs scan in lexicographic order, one uniform draw per pair per pass.
Digraph elo_graph(const std::vector<double>& abilities, int passes, Rng& rng);

// Mean pairwise win-probability gap scaled by edge retention c:
// 2 c / (n (n - 1)) * sum over i < j of |P(i beats j) - P(j beats i)|.
double elo_label(const std::vector<double>& abilities, double c);

struct DatasetConfig {
  GeneratorId generator = GeneratorId::target_dominance;
  int n = 8;
  int count = 1000;
  std::uint64_t seed = 0;
  double p_min = 0.0;
  double p_max = 0.5;
  double c_min = 0.0;
  double c_max = 1.0;
  // Elo abilities for a sample are uniform on [0, W] with a per-sample width
  // W = ability_width_max * u^ability_width_exponent, u uniform on [0, 1); a
  // fixed width would leave every large tournament with nearly the same
  // label.
  double ability_width_max = 8000.0;
  double ability_width_exponent = 2.5;
  int elo_passes = 2;
};

struct LabeledSample {
  Digraph graph;
  double label = 0.0;
  double p = 0.0;  // NaN for Elo samples
  double c = 1.0;
};

// Sample s draws from the derived stream (seed, s): parameters first
// (p or width/abilities, then c when sparse), then graph randomness.
std::vector<LabeledSample> generate_dataset(const DatasetConfig& config);

// One adjacency file per sample plus labels.csv (id, label, p, c, generator).
void write_dataset(const std::string& dir, const std::vector<LabeledSample>& samples,
                   GeneratorId generator);

struct StoredDataset {
  std::vector<std::string> ids;
  std::vector<Digraph> graphs;
  std::vector<double> labels;
};

StoredDataset read_dataset(const std::string& dir);

}  // namespace rankability
