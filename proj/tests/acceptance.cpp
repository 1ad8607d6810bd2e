// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single [PASS]/[FAIL] line. Exit status is the failure count.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rankability/digraph.hpp"
#include "rankability/eval.hpp"
#include "rankability/features.hpp"
#include "rankability/forest.hpp"
#include "rankability/ingest.hpp"
#include "rankability/rank_edge.hpp"
#include "rankability/rank_spectral.hpp"
#include "rankability/rng.hpp"
#include "rankability/synth.hpp"

namespace {

using rankability::Digraph;

constexpr std::uint64_t kTableOneSeed = 1;
constexpr std::uint64_t kTableTwoSeed = 1;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& outcome) : outcome_(outcome) {}

  void require(bool ok, const std::string& label) {
    if (ok) return;
    outcome_.pass = false;
    append(label);
  }

  void in_band(double value, double lo, double hi, const std::string& label) {
    std::ostringstream text;
    text << label << "=" << value;
    if (!(value >= lo && value <= hi)) {
      outcome_.pass = false;
      text << " outside [" << lo << ", " << hi << "]";
    }
    append(text.str());
  }

 private:
  void append(const std::string& text) {
    if (!outcome_.detail.empty()) outcome_.detail += "; ";
    outcome_.detail += text;
  }

  Outcome& outcome_;
};

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Independent restatements of the two cycle closed forms.
double cycle_edge_closed_form(int n) {
  return 1.0 - (2.0 + static_cast<double>(n - 1) * (n - 2)) / (factorial(n) * (n - 1));
}

double cycle_spectral_closed_form(int n) {
  if (n % 2 == 0) return 1.0 - (2.0 * n - 5.0) / (2.0 * n - 2.0);
  std::complex<double> root = std::polar(1.0, -M_PI / n);
  double gap = std::abs(std::complex<double>(n - 2.0, 0.0) - root);
  return 1.0 - (n - 2.0 + gap) / (2.0 * n - 2.0);
}

Digraph random_graph(int n, double density, rankability::Rng& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && rng.bernoulli(density)) bits[static_cast<std::size_t>(i) * n + j] = 1;
  return Digraph::from_bits(n, std::move(bits));
}

long long triangles_by_enumeration(const Digraph& g) {
  long long total = 0;
  int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (g.edge(a, b) && g.edge(b, c) && g.edge(c, a)) ++total;
        if (g.edge(a, c) && g.edge(c, b) && g.edge(b, a)) ++total;
      }
  return total;
}

Outcome criterion_worked_example() {
  Outcome outcome;
  Checker check(outcome);
  auto g = Digraph::from_adjacency({{0, 1, 1, 1}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}});
  auto kp = rankability::compute_kp(g, {});
  check.require(kp.k == 1 && kp.p == 2,
                "kp=(" + std::to_string(kp.k) + "," + std::to_string(kp.p) + ") want (1,2)");
  double re = rankability::edge_rankability(g, {});
  check.require(std::abs(re - (1.0 - 2.0 / 144.0)) <= 1e-12, "r_e=" + std::to_string(re));
  double rs = rankability::spectral_rankability(g);
  check.require(std::abs(rs - 2.0 / 3.0) <= 1e-9, "r_s=" + std::to_string(rs));
  if (outcome.pass) outcome.detail = "kp=(1,2), r_e=1-2/144, r_s=2/3";
  return outcome;
}

Outcome criterion_cycle_oracles() {
  Outcome outcome;
  Checker check(outcome);
  for (int n = 3; n <= 8; ++n) {
    auto cycle = Digraph::cycle(n);
    auto kp = rankability::compute_kp(cycle, {});
    long long want_k = 1 + static_cast<long long>(n - 2) * (n - 1) / 2;
    check.require(kp.k == want_k && kp.p == n,
                  "cycle n=" + std::to_string(n) + " kp=(" + std::to_string(kp.k) + "," +
                      std::to_string(kp.p) + ")");
    double re = rankability::edge_rankability(cycle, {});
    check.require(std::abs(re - cycle_edge_closed_form(n)) <= 1e-12,
                  "cycle n=" + std::to_string(n) + " r_e=" + std::to_string(re));
  }
  for (int n = 3; n <= 12; ++n) {
    double rs = rankability::spectral_rankability(Digraph::cycle(n));
    check.require(std::abs(rs - cycle_spectral_closed_form(n)) <= 1e-6,
                  "cycle n=" + std::to_string(n) + " r_s=" + std::to_string(rs));
  }
  if (outcome.pass) outcome.detail = "edge n=3..8 exact, spectral n=3..12 within 1e-6";
  return outcome;
}

Outcome criterion_oracle_equivalence() {
  Outcome outcome;
  Checker check(outcome);
  rankability::Rng rng(90210, 0);
  const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.85};
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int n = 4 + trial % 4;
    auto g = random_graph(n, densities[trial % 5], rng);
    auto fast = rankability::compute_kp(g, {});
    auto slow = rankability::compute_kp_bruteforce(g);
    if (fast.k != slow.k || fast.p != slow.p) ++mismatches;
    if (rankability::count_triangles(g) != triangles_by_enumeration(g)) ++mismatches;
  }
  check.require(mismatches == 0, std::to_string(mismatches) + " oracle mismatches");
  if (outcome.pass) outcome.detail = "500 graphs, search=bruteforce, trace=enumeration";
  return outcome;
}

double experiment_rho(const rankability::ExperimentConfig& config, rankability::Measure m) {
  auto result = rankability::run_experiment(config);
  for (const auto& series : result.series)
    if (series.measure == m) return series.rho;
  return std::nan("");
}

Outcome criterion_table_one() {
  Outcome outcome;
  Checker check(outcome);
  rankability::ExperimentConfig config;
  config.seed = kTableOneSeed;

  config.n = 8;
  auto n8 = rankability::run_experiment(config);
  check.in_band(n8.series[0].rho, 0.747 - 0.08, 0.747 + 0.08, "r_e n8");
  check.in_band(n8.series[1].rho, 0.584 - 0.08, 0.584 + 0.08, "r_s n8");
  check.in_band(n8.series[2].rho, 0.868 - 0.06, 0.868 + 0.06, "r_f n8");

  config.measures = {rankability::Measure::spectral, rankability::Measure::forest};
  config.n = 20;
  auto n20 = rankability::run_experiment(config);
  check.in_band(n20.series[0].rho, 0.888 - 0.05, 0.888 + 0.05, "r_s n20");
  check.in_band(n20.series[1].rho, 0.968 - 0.03, 0.968 + 0.03, "r_f n20");

  config.n = 50;
  auto n50 = rankability::run_experiment(config);
  check.in_band(n50.series[0].rho, 0.969 - 0.03, 0.969 + 0.03, "r_s n50");
  check.in_band(n50.series[1].rho, 0.994 - 0.02, 0.994 + 0.02, "r_f n50");

  config.sparse = true;
  config.measures = {rankability::Measure::forest};
  config.n = 8;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.676 - 0.10, 0.676 + 0.10,
                "r_f n8 sparse");
  config.n = 20;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.912 - 0.05, 0.912 + 0.05,
                "r_f n20 sparse");
  config.n = 50;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.976 - 0.03, 0.976 + 0.03,
                "r_f n50 sparse");
  return outcome;
}

Outcome criterion_table_two() {
  Outcome outcome;
  Checker check(outcome);
  rankability::ExperimentConfig config;
  config.seed = kTableTwoSeed;
  config.test_generator = rankability::GeneratorId::elo;
  config.dataset.elo_passes = 2;
  config.measures = {rankability::Measure::forest};

  config.n = 8;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.882 - 0.08, 0.882 + 0.08,
                "r_f n8");

  config.n = 20;
  config.measures = {rankability::Measure::spectral, rankability::Measure::forest};
  auto n20 = rankability::run_experiment(config);
  check.in_band(n20.series[0].rho, 0.931 - 0.05, 0.931 + 0.05, "r_s n20");
  check.in_band(n20.series[1].rho, 0.979 - 0.03, 0.979 + 0.03, "r_f n20");

  config.n = 50;
  config.measures = {rankability::Measure::forest};
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.995 - 0.02, 0.995 + 0.02,
                "r_f n50");

  config.sparse = true;
  config.n = 8;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.764 - 0.10, 0.764 + 0.10,
                "r_f n8 sparse");
  config.n = 20;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.911 - 0.05, 0.911 + 0.05,
                "r_f n20 sparse");
  config.n = 50;
  check.in_band(experiment_rho(config, rankability::Measure::forest), 0.967 - 0.03, 0.967 + 0.03,
                "r_f n50 sparse");
  return outcome;
}

Outcome criterion_forest_properties() {
  Outcome outcome;
  Checker check(outcome);
  rankability::Rng rng(606060, 0);

  std::vector<rankability::FeatureVector> x;
  std::vector<double> y;
  for (int i = 0; i < 200; ++i) {
    rankability::FeatureVector row;
    for (double& v : row) v = rng.uniform(0.0, 40.0);
    x.push_back(row);
    y.push_back(0.25 + 0.5 * rng.next_double());
  }
  rankability::TrainConfig config;
  config.seed = 19;
  auto model = rankability::fit_forest(x, y, config);

  double lo = model.label_min;
  double hi = model.label_max;
  int out_of_range = 0;
  for (int i = 0; i < 10000; ++i) {
    rankability::FeatureVector probe;
    for (double& v : probe) v = rng.uniform(-10.0, 60.0);
    double v = rankability::predict(model, probe);
    if (!(v >= lo && v <= hi)) ++out_of_range;
  }
  check.require(out_of_range == 0,
                std::to_string(out_of_range) + " of 10000 predictions out of range");

  auto retrained = rankability::fit_forest(x, y, config);
  auto dir = std::filesystem::temp_directory_path();
  auto path_a = dir / "rankability_acceptance_a.rf";
  auto path_b = dir / "rankability_acceptance_b.rf";
  rankability::save_model(path_a.string(), model);
  rankability::save_model(path_b.string(), retrained);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  check.require(slurp(path_a) == slurp(path_b), "retrained model bytes differ");

  auto loaded = rankability::load_model(path_a.string());
  int prediction_diffs = 0;
  for (int i = 0; i < 200; ++i) {
    rankability::FeatureVector probe;
    for (double& v : probe) v = rng.uniform(-10.0, 60.0);
    if (rankability::predict(model, probe) != rankability::predict(loaded, probe))
      ++prediction_diffs;
  }
  check.require(prediction_diffs == 0,
                std::to_string(prediction_diffs) + " save/load prediction diffs");
  std::filesystem::remove(path_a);
  std::filesystem::remove(path_b);

  std::fill(y.begin(), y.end(), 0.5);
  auto constant = rankability::fit_forest(x, y, config);
  bool constant_ok = true;
  for (int i = 0; i < 100; ++i) {
    rankability::FeatureVector probe;
    for (double& v : probe) v = rng.uniform(-10.0, 60.0);
    constant_ok = constant_ok && rankability::predict(constant, probe) == 0.5;
  }
  check.require(constant_ok, "constant-target forest drifted from 0.5");
  if (outcome.pass)
    outcome.detail = "range containment 10000/10000, bit-identical retrain, exact round trip";
  return outcome;
}

Outcome criterion_spearman() {
  Outcome outcome;
  Checker check(outcome);
  check.require(std::abs(rankability::spearman({0.5, 1.5, 7.0}, {2.0, 3.0, 9.0}) - 1.0) <= 1e-12,
                "increasing pair");
  check.require(std::abs(rankability::spearman({0.5, 1.5, 7.0}, {9.0, 3.0, 2.0}) + 1.0) <= 1e-12,
                "reversed pair");
  check.require(std::abs(rankability::spearman({1, 2, 3}, {1, 3, 2}) - 0.5) <= 1e-12,
                "single swap");
  check.require(
      std::abs(rankability::spearman({1, 1, 2}, {1, 2, 3}) - std::sqrt(3.0) / 2.0) <= 1e-12,
      "tie case");

  rankability::Rng rng(515151, 0);
  int drifts = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(25), b(25);
    for (double& v : a) v = rng.uniform(-4.0, 4.0);
    for (double& v : b) v = rng.uniform(-4.0, 4.0);
    double rho = rankability::spearman(a, b);
    std::vector<double> ta = a, tb = b;
    for (double& v : ta) v = v * v * v + 2.0 * v;
    for (double& v : tb) v = std::exp(0.5 * v);
    if (std::abs(rho - rankability::spearman(ta, tb)) > 1e-12) ++drifts;
  }
  check.require(drifts == 0, std::to_string(drifts) + " monotone-transform drifts");
  if (outcome.pass) outcome.detail = "4 worked examples, 100 transform-invariant vectors";
  return outcome;
}

Outcome criterion_pipeline() {
  Outcome outcome;
  Checker check(outcome);

  auto dir = std::filesystem::temp_directory_path() / "rankability_acceptance_pipeline";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto csv_path = dir / "matches.csv";
  {
    std::ofstream csv(csv_path);
    csv << "season,team_a,team_b,score_a,score_b\n";
    rankability::Rng rng(777, 0);
    for (int season = 0; season < 30; ++season) {
      int n = season % 5 == 4 ? 9 : 6;
      double p = 0.45 * season / 29.0;
      auto g = rankability::perturb_dominance(n, p, rng);
      std::ostringstream tag;
      tag << "s" << (season < 10 ? "0" : "") << season;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (g.edge(i, j))
            csv << tag.str() << ",t" << 10 + i << ",t" << 10 + j << ",1,0\n";
    }
  }

  auto records = rankability::parse_matches(csv_path.string());
  std::map<int, rankability::RandomForestModel> models;
  rankability::IngestOptions opts;
  auto result = rankability::score_seasons(records, {}, models, opts);
  check.require(result.seasons.size() == 30,
                std::to_string(result.seasons.size()) + " seasons, want 30");

  int bad_entries = 0;
  int wrong_edge_population = 0;
  std::vector<double> spectral, forest;
  for (const auto& season : result.seasons) {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(season.spectral) || !in_unit(season.forest)) ++bad_entries;
    if (season.edge && !in_unit(*season.edge)) ++bad_entries;
    if (season.edge.has_value() != (season.n_teams <= 8)) ++wrong_edge_population;
    spectral.push_back(season.spectral);
    forest.push_back(season.forest);
  }
  check.require(bad_entries == 0, std::to_string(bad_entries) + " scores outside [0,1]");
  check.require(wrong_edge_population == 0, "edge population does not match n<=8");

  double rho = rankability::spearman(spectral, forest);
  std::ostringstream rho_text;
  rho_text << "spearman(r_s,r_f)=" << rho;
  check.require(rho > 0.5, rho_text.str());

  rankability::write_ingest_outputs(result, (dir / "report").string());
  check.require(std::filesystem::exists(dir / "report" / "seasons.csv") &&
                    std::filesystem::exists(dir / "report" / "correlations.csv") &&
                    std::filesystem::exists(dir / "report" / "timeseries.svg") &&
                    std::filesystem::exists(dir / "report" / "scatter_matrix.svg"),
                "missing report files");
  if (outcome.pass) outcome.detail = rho_text.str() + ", 30 seasons scored";
  std::filesystem::remove_all(dir);
  return outcome;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no enforced budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "worked example exactness", 1.0, criterion_worked_example},
      {2, "cycle closed forms", 30.0, criterion_cycle_oracles},
      {3, "dual-route oracle equivalence", 120.0, criterion_oracle_equivalence},
      {4, "dominance-target correlation table", 600.0, criterion_table_one},
      {5, "elo-transfer correlation table", 0.0, criterion_table_two},
      {6, "forest properties", 0.0, criterion_forest_properties},
      {7, "rank correlation suite", 0.0, criterion_spearman},
      {8, "season pipeline smoke", 120.0, criterion_pipeline},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      outcome.pass = false;
      if (!outcome.detail.empty()) outcome.detail += "; ";
      outcome.detail += "over the " + std::to_string(criterion.budget_seconds) + "s budget";
    }
    if (!outcome.pass) ++failures;

    std::ostringstream line;
    line << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
         << criterion.name;
    if (!outcome.detail.empty()) line << " (" << outcome.detail << ")";
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " [" << elapsed << "s]";
    std::cout << line.str() << std::endl;
  }
  return failures;
}
