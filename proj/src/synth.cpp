#include "rankability/synth.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "rankability/error.hpp"

namespace rankability {

namespace {

void check_probability(double value, double lo, double hi, const char* what) {
  if (!(value >= lo && value <= hi))
    throw Error(Errc::bad_probability, std::string(what) + " must lie in [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string format_full(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::string sample_id(std::size_t index) {
  std::ostringstream out;
  out << 'g' << std::setw(5) << std::setfill('0') << index;
  return out.str();
}

}  // namespace

const char* generator_name(GeneratorId id) {
  switch (id) {
    case GeneratorId::target_dominance: return "target";
    case GeneratorId::sparse_target_dominance: return "sparse-target";
    case GeneratorId::elo: return "elo";
    case GeneratorId::sparse_elo: return "sparse-elo";
  }
  return "unknown";
}

GeneratorId generator_from_name(const std::string& name) {
  if (name == "target") return GeneratorId::target_dominance;
  if (name == "sparse-target") return GeneratorId::sparse_target_dominance;
  if (name == "elo") return GeneratorId::elo;
  if (name == "sparse-elo") return GeneratorId::sparse_elo;
  throw Error(Errc::bad_config, "unknown generator '" + name + "'");
}

bool generator_is_sparse(GeneratorId id) {
  return id == GeneratorId::sparse_target_dominance || id == GeneratorId::sparse_elo;
}

bool generator_is_elo(GeneratorId id) {
  return id == GeneratorId::elo || id == GeneratorId::sparse_elo;
}

GeneratorId generator_with_sparsity(GeneratorId id, bool sparse) {
  if (generator_is_elo(id)) return sparse ? GeneratorId::sparse_elo : GeneratorId::elo;
  return sparse ? GeneratorId::sparse_target_dominance : GeneratorId::target_dominance;
}

Digraph perturb_dominance(int n, double p, Rng& rng) {
  check_probability(p, 0.0, 0.5, "flip probability");
  Digraph g = Digraph::complete_dominance(n);
  std::vector<std::uint8_t> bits = g.bits();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng.bernoulli(p)) bits[static_cast<std::size_t>(i) * n + j] ^= 1;
    }
  return Digraph::from_bits(n, std::move(bits));
}

Digraph sparsify(const Digraph& g, double c, Rng& rng) {
  check_probability(c, 0.0, 1.0, "retention probability");
  int n = g.n();
  std::vector<std::uint8_t> bits = g.bits();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::size_t at = static_cast<std::size_t>(i) * n + j;
      if (bits[at] && !rng.bernoulli(c)) bits[at] = 0;
    }
  return Digraph::from_bits(n, std::move(bits));
}

double perturbation_label(double p, double c) {
  check_probability(p, 0.0, 0.5, "flip probability");
  check_probability(c, 0.0, 1.0, "retention probability");
  return c * (1.0 - 2.0 * p);
}

double elo_expected(double rating_a, double rating_b) {
  return 1.0 / (1.0 + std::pow(10.0, (rating_b - rating_a) / 400.0));
}

MatchProbabilities elo_match_probabilities(double rating_a, double rating_b) {
  double ea = elo_expected(rating_a, rating_b);
  double eb = elo_expected(rating_b, rating_a);
  MatchProbabilities probs;
  probs.draw = ea * eb;
  probs.first_wins = ea * (1.0 - probs.draw);
  probs.second_wins = eb * (1.0 - probs.draw);
  return probs;
}

Digraph elo_graph(const std::vector<double>& abilities, int passes, Rng& rng) {
  int n = static_cast<int>(abilities.size());
  if (n < 2) throw Error(Errc::too_small, "need at least 2 abilities");
  if (passes < 1) throw Error(Errc::bad_config, "passes must be at least 1");
  for (double a : abilities)
    if (!std::isfinite(a)) throw Error(Errc::invalid_input, "abilities must be finite");

  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  for (int pass = 0; pass < passes; ++pass)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        MatchProbabilities probs = elo_match_probabilities(abilities[i], abilities[j]);
        double tau = rng.next_double();
        if (tau < probs.first_wins)
          bits[static_cast<std::size_t>(i) * n + j] = 1;
        else if (tau > probs.first_wins + probs.draw)
          bits[static_cast<std::size_t>(j) * n + i] = 1;
      }
  return Digraph::from_bits(n, std::move(bits));
}

double elo_label(const std::vector<double>& abilities, double c) {
  int n = static_cast<int>(abilities.size());
  if (n < 2) throw Error(Errc::too_small, "need at least 2 abilities");
  check_probability(c, 0.0, 1.0, "retention probability");
  double gap = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatchProbabilities probs = elo_match_probabilities(abilities[i], abilities[j]);
      gap += std::abs(probs.first_wins - probs.second_wins);
    }
  return 2.0 * c * gap / (static_cast<double>(n) * (n - 1));
}

std::vector<LabeledSample> generate_dataset(const DatasetConfig& config) {
  if (config.n < 2) throw Error(Errc::too_small, "samples need at least 2 vertices");
  if (config.count < 1) throw Error(Errc::bad_config, "count must be at least 1");
  check_probability(config.p_min, 0.0, 0.5, "p_min");
  check_probability(config.p_max, 0.0, 0.5, "p_max");
  check_probability(config.c_min, 0.0, 1.0, "c_min");
  check_probability(config.c_max, 0.0, 1.0, "c_max");
  if (config.p_min > config.p_max || config.c_min > config.c_max)
    throw Error(Errc::bad_config, "empty parameter range");
  if (!(config.ability_width_max > 0.0) || !(config.ability_width_exponent >= 0.0))
    throw Error(Errc::bad_config, "ability width parameters must be positive");
  if (config.elo_passes < 1) throw Error(Errc::bad_config, "passes must be at least 1");

  bool sparse = generator_is_sparse(config.generator);
  std::vector<LabeledSample> samples;
  samples.reserve(config.count);
  for (int s = 0; s < config.count; ++s) {
    Rng rng(config.seed, static_cast<std::uint64_t>(s));
    if (generator_is_elo(config.generator)) {
      double width = config.ability_width_max *
                     std::pow(rng.next_double(), config.ability_width_exponent);
      std::vector<double> abilities(config.n);
      for (double& a : abilities) a = rng.uniform(0.0, width);
      double c = sparse ? rng.uniform(config.c_min, config.c_max) : 1.0;
      Digraph g = elo_graph(abilities, config.elo_passes, rng);
      if (sparse) g = sparsify(g, c, rng);
      samples.push_back({std::move(g), elo_label(abilities, c),
                         std::numeric_limits<double>::quiet_NaN(), c});
    } else {
      double p = rng.uniform(config.p_min, config.p_max);
      double c = sparse ? rng.uniform(config.c_min, config.c_max) : 1.0;
      Digraph g = perturb_dominance(config.n, p, rng);
      if (sparse) g = sparsify(g, c, rng);
      samples.push_back({std::move(g), perturbation_label(p, c), p, c});
    }
  }
  return samples;
}

void write_dataset(const std::string& dir, const std::vector<LabeledSample>& samples,
                   GeneratorId generator) {
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir + "/labels.csv");
  if (!csv) throw Error(Errc::io_error, "cannot open " + dir + "/labels.csv for writing");
  csv << "id,label,p,c,generator\n";
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const LabeledSample& sample = samples[s];
    std::string id = sample_id(s);
    csv << id << ',' << format_full(sample.label) << ','
        << (std::isnan(sample.p) ? std::string() : format_full(sample.p)) << ','
        << format_full(sample.c) << ',' << generator_name(generator) << '\n';
    save_digraph(dir + "/" + id + ".txt", sample.graph);
  }
  if (!csv) throw Error(Errc::io_error, "write failed for " + dir + "/labels.csv");
}

StoredDataset read_dataset(const std::string& dir) {
  std::ifstream csv(dir + "/labels.csv");
  if (!csv) throw Error(Errc::io_error, "cannot open " + dir + "/labels.csv");
  std::string line;
  if (!std::getline(csv, line)) throw Error(Errc::missing_header, "labels.csv is empty");
  if (line.rfind("id,label", 0) != 0)
    throw Error(Errc::missing_header, "labels.csv must start with an id,label header");
  StoredDataset data;
  std::size_t line_no = 1;
  while (std::getline(csv, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::size_t first = line.find(',');
    std::size_t second = line.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw Error(Errc::malformed_row, "labels.csv line " + std::to_string(line_no));
    std::string id = line.substr(0, first);
    double label = 0.0;
    try {
      label = std::stod(line.substr(first + 1, second - first - 1));
    } catch (const std::exception&) {
      throw Error(Errc::malformed_row, "labels.csv line " + std::to_string(line_no));
    }
    data.graphs.push_back(load_digraph(dir + "/" + id + ".txt"));
    data.labels.push_back(label);
    data.ids.push_back(std::move(id));
  }
  return data;
}

}  // namespace rankability
