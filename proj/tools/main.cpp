#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankability/digraph.hpp"
#include "rankability/error.hpp"
#include "rankability/eval.hpp"
#include "rankability/features.hpp"
#include "rankability/forest.hpp"
#include "rankability/ingest.hpp"
#include "rankability/rank_edge.hpp"
#include "rankability/rank_spectral.hpp"
#include "rankability/svg.hpp"
#include "rankability/synth.hpp"

namespace {

using namespace rankability;

std::string format_full(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::string format_short(double v) {
  if (!std::isfinite(v)) return "NA";
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v;
  return out.str();
}

std::string format_complex(const std::complex<double>& z) {
  std::ostringstream out;
  out << std::setprecision(9) << z.real();
  if (z.imag() != 0.0) out << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

void print_spectrum(const char* name, const Spectrum& spectrum) {
  std::cout << name << " = {";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << format_complex(spectrum[i]);
  }
  std::cout << "}\n";
}

void run_rank_edge(const std::string& graph_file, int max_n, double time_budget,
                   bool list_minimizers, int threads) {
  Digraph g = load_digraph(graph_file);
  SearchOptions opts;
  opts.max_n = max_n;
  opts.time_budget_seconds = time_budget;
  opts.collect_minimizers = list_minimizers;
  opts.threads = threads;
  KPResult kp = compute_kp(g, opts);
  double r = edge_rankability_from(g.n(), kp);
  std::cout << "n = " << g.n() << "\n";
  std::cout << "k = " << kp.k << "\n";
  std::cout << "p = " << kp.p << "\n";
  std::cout << "r_e = " << std::setprecision(12) << r << "\n";
  if (list_minimizers) {
    std::cout << "minimizers:\n";
    for (const VertexOrdering& order : kp.minimizers) {
      for (std::size_t i = 0; i < order.size(); ++i)
        std::cout << (i ? " " : "") << order[i];
      std::cout << "\n";
    }
  }
}

void run_rank_spectral(const std::string& graph_file, bool report_spectra) {
  Digraph g = load_digraph(graph_file);
  SpectralReport report = spectral_rankability_report(g);
  std::cout << "n = " << g.n() << "\n";
  std::cout << "r_s = " << std::setprecision(12) << report.value << "\n";
  if (report.clamped)
    std::cout << "clamped from " << std::setprecision(12) << report.raw << "\n";
  if (report_spectra) {
    SpectralParts parts = spectral_parts(g);
    Spectrum degree, benchmark;
    for (int i = 0; i < g.n(); ++i) {
      degree.emplace_back(parts.degree(i, i), 0.0);
      benchmark.emplace_back(parts.benchmark(i, i), 0.0);
    }
    Spectrum laplacian = eigenvalues(parts.laplacian);
    print_spectrum("spec(D)", degree);
    print_spectrum("spec(L)", laplacian);
    print_spectrum("spec(S)", benchmark);
    std::cout << "hd(spec(D), spec(S)) = " << std::setprecision(12)
              << hausdorff_distance(degree, benchmark) << "\n";
    std::cout << "hd(spec(L), spec(S)) = " << std::setprecision(12)
              << hausdorff_distance(laplacian, benchmark) << "\n";
  }
}

void run_gen(const DatasetConfig& config, const std::string& out_dir) {
  std::vector<LabeledSample> samples = generate_dataset(config);
  write_dataset(out_dir, samples, config.generator);
  std::cout << "wrote " << samples.size() << " samples to " << out_dir << "\n";
}

void run_features(const std::string& graph_file, const std::string& dir,
                  const std::string& out_path) {
  if (!graph_file.empty()) {
    Digraph g = load_digraph(graph_file);
    FeatureVector f = feature_vector(g);
    for (int i = 0; i < feature_count; ++i)
      std::cout << feature_names[i] << " = " << std::setprecision(12) << f[i] << "\n";
    return;
  }
  StoredDataset data = read_dataset(dir);
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::io_error, "cannot open " + out_path + " for writing");
  out << "id";
  for (int i = 0; i < feature_count; ++i) out << ',' << feature_names[i];
  out << ",label\n";
  for (std::size_t s = 0; s < data.graphs.size(); ++s) {
    FeatureVector f = feature_vector(data.graphs[s]);
    out << data.ids[s];
    for (int i = 0; i < feature_count; ++i) out << ',' << format_full(f[i]);
    out << ',' << format_full(data.labels[s]) << '\n';
  }
  std::cout << "wrote features for " << data.graphs.size() << " graphs to " << out_path << "\n";
}

void run_train(const std::string& data_dir, const std::string& out_path, int trees,
               std::uint64_t seed) {
  StoredDataset data = read_dataset(data_dir);
  if (data.graphs.empty()) throw Error(Errc::empty_training_set, data_dir + " holds no samples");
  int n = data.graphs.front().n();
  for (const Digraph& g : data.graphs)
    if (g.n() != n)
      throw Error(Errc::vertex_count_mismatch, "training graphs have mixed vertex counts");
  std::vector<FeatureVector> xs;
  xs.reserve(data.graphs.size());
  for (const Digraph& g : data.graphs) xs.push_back(feature_vector(g));
  TrainConfig config;
  config.n_trees = trees;
  config.seed = seed;
  config.trained_n = n;
  RandomForestModel model = fit_forest(xs, data.labels, config);
  save_model(out_path, model);
  std::cout << "trained " << trees << " trees on " << xs.size() << " samples (n = " << n
            << "), saved to " << out_path << "\n";
}

void run_predict(const std::string& model_path, const std::string& graph_file,
                 bool allow_mismatch) {
  RandomForestModel model = load_model(model_path);
  Digraph g = load_digraph(graph_file);
  double value = rf_rankability(model, g, allow_mismatch);
  std::cout << "r_f = " << std::setprecision(12) << value << "\n";
}

void run_experiment_cmd(int table, int n, std::uint64_t seed, bool sparse, int train_count,
                        int test_count, int edge_max_n, const std::string& out_path,
                        std::string scatter_path) {
  ExperimentConfig config;
  config.n = n;
  config.sparse = sparse;
  config.train_generator = GeneratorId::target_dominance;
  config.test_generator = table == 2 ? GeneratorId::elo : GeneratorId::target_dominance;
  config.train_count = train_count;
  config.test_count = test_count;
  config.seed = seed;
  config.edge_max_n = edge_max_n;

  ExperimentResult result = run_experiment(config);

  const char* variant = sparse ? "sparse" : "complete";
  std::ofstream out(out_path);
  if (!out) throw Error(Errc::io_error, "cannot open " + out_path + " for writing");
  out << "measure,n,variant,rho\n";
  std::cout << "table " << table << ", n = " << n << ", " << variant << "\n";
  std::map<Measure, std::string> csv_names = {{Measure::edge, "r_e"},
                                              {Measure::spectral, "r_s"},
                                              {Measure::forest, "r_f"}};
  for (const MeasureSeries& series : result.series) {
    std::string cell = series.available && std::isfinite(series.rho)
                           ? format_full(series.rho)
                           : std::string("NA");
    out << csv_names[series.measure] << ',' << n << ',' << variant << ',' << cell << '\n';
    std::cout << "  " << csv_names[series.measure] << ": "
              << (series.available ? format_short(series.rho) : "NA");
    if (!series.note.empty()) std::cout << "  (" << series.note << ")";
    std::cout << "\n";
  }

  if (scatter_path.empty()) {
    std::filesystem::path p(out_path);
    scatter_path = (p.parent_path() / "scatter.csv").string();
  }
  std::ofstream scatter(scatter_path);
  if (!scatter) throw Error(Errc::io_error, "cannot open " + scatter_path + " for writing");
  scatter << "label,r_e,r_s,r_f\n";
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    scatter << format_full(result.labels[i]);
    for (const MeasureSeries& series : result.series)
      scatter << ',' << (series.available ? format_full(series.values[i]) : std::string());
    scatter << '\n';
  }
  std::cout << "wrote " << out_path << " and " << scatter_path << "\n";
}

void run_plot(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw Error(Errc::io_error, "cannot open " + in_path);
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::missing_header, in_path + " is empty");

  std::vector<std::string> names;
  std::stringstream header(line);
  std::string field;
  while (std::getline(header, field, ',')) names.push_back(field);
  if (names.size() < 2)
    throw Error(Errc::missing_header, in_path + " needs an x column and a y column");

  std::vector<PlotSeries> series(names.size() - 1);
  for (std::size_t s = 0; s + 1 < names.size(); ++s) series[s].name = names[s + 1];
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    while (std::getline(row, field, ',')) cells.push_back(field);
    cells.resize(names.size());
    double x = 0.0;
    try {
      x = std::stod(cells[0]);
    } catch (const std::exception&) {
      throw Error(Errc::malformed_row, in_path + " line " + std::to_string(line_no));
    }
    for (std::size_t s = 0; s + 1 < names.size(); ++s) {
      double y = std::numeric_limits<double>::quiet_NaN();
      if (!cells[s + 1].empty()) {
        try {
          y = std::stod(cells[s + 1]);
        } catch (const std::exception&) {
          throw Error(Errc::malformed_row, in_path + " line " + std::to_string(line_no));
        }
      }
      series[s].x.push_back(x);
      series[s].y.push_back(y);
    }
  }

  std::ofstream out(out_path);
  if (!out) throw Error(Errc::io_error, "cannot open " + out_path + " for writing");
  out << scatter_svg(in_path, names[0], "value", series);
  std::cout << "wrote " << out_path << "\n";
}

std::vector<std::string> read_season_order(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::vector<std::string> seasons;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    seasons.push_back(line.substr(b, e - b + 1));
  }
  return seasons;
}

void run_ingest(const std::string& matches_path, const std::string& models_dir, bool auto_train,
                int edge_max_n, int train_count, std::uint64_t train_seed,
                const std::string& order_path, const std::string& out_dir) {
  std::vector<MatchRecord> records = parse_matches(matches_path);
  std::vector<std::string> seasons;
  if (!order_path.empty()) seasons = read_season_order(order_path);

  std::map<int, RandomForestModel> models;
  if (std::filesystem::is_directory(models_dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(models_dir)) {
      std::string name = entry.path().filename().string();
      if (name.size() < 4 || name.front() != 'n' || name.substr(name.size() - 3) != ".rf")
        continue;
      int n = 0;
      try {
        n = std::stoi(name.substr(1, name.size() - 4));
      } catch (const std::exception&) {
        continue;
      }
      models.emplace(n, load_model(entry.path().string()));
    }
  }
  std::size_t preloaded = models.size();

  IngestOptions opts;
  opts.edge_max_n = edge_max_n;
  opts.auto_train = auto_train;
  opts.train_count = train_count;
  opts.train_seed = train_seed;

  IngestResult result = score_seasons(records, seasons, models, opts);
  write_ingest_outputs(result, out_dir);

  if (models.size() > preloaded) {
    std::filesystem::create_directories(models_dir);
    for (const auto& [n, model] : models) {
      std::string path = models_dir + "/n" + std::to_string(n) + ".rf";
      if (!std::filesystem::exists(path)) save_model(path, model);
    }
  }

  for (const SeasonScores& s : result.seasons) {
    std::cout << s.season << ": n = " << s.n_teams;
    if (s.edge) std::cout << ", r_e = " << format_short(*s.edge);
    std::cout << ", r_s = " << format_short(s.spectral) << ", r_f = " << format_short(s.forest)
              << "\n";
  }
  std::cout << "wrote report to " << out_dir << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankability measures for directed graphs"};
  app.require_subcommand(1);

  // rank edge / rank spectral
  CLI::App* rank = app.add_subcommand("rank", "score a single graph");
  rank->require_subcommand(1);

  std::string edge_graph_file;
  int edge_opt_max_n = 12;
  double edge_time_budget = 0.0;
  bool edge_list_minimizers = false;
  int edge_threads = 1;
  CLI::App* rank_edge_cmd = rank->add_subcommand("edge", "edit-distance rankability");
  rank_edge_cmd->add_option("--graph-file", edge_graph_file, "adjacency matrix file")->required();
  rank_edge_cmd->add_option("--max-n", edge_opt_max_n, "largest graph the search accepts");
  rank_edge_cmd->add_option("--time-budget", edge_time_budget, "seconds before the search aborts");
  rank_edge_cmd->add_flag("--list-minimizers", edge_list_minimizers,
                          "print every minimizing ordering");
  rank_edge_cmd->add_option("--threads", edge_threads, "search worker threads");
  rank_edge_cmd->callback([&] {
    run_rank_edge(edge_graph_file, edge_opt_max_n, edge_time_budget, edge_list_minimizers,
                  edge_threads);
  });

  std::string spectral_graph_file;
  bool report_spectra = false;
  CLI::App* rank_spectral_cmd = rank->add_subcommand("spectral", "spectral rankability");
  rank_spectral_cmd->add_option("--graph-file", spectral_graph_file, "adjacency matrix file")
      ->required();
  rank_spectral_cmd->add_flag("--report-spectra", report_spectra,
                              "print the spectra and Hausdorff distances");
  rank_spectral_cmd->callback([&] { run_rank_spectral(spectral_graph_file, report_spectra); });

  // gen
  DatasetConfig gen_config;
  std::string gen_model = "target";
  std::string gen_out;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a labeled synthetic dataset");
  gen_cmd->add_option("--model", gen_model, "target|sparse-target|elo|sparse-elo")->required();
  gen_cmd->add_option("--n", gen_config.n, "vertices per graph")->required();
  gen_cmd->add_option("--count", gen_config.count, "number of samples")->required();
  gen_cmd->add_option("--seed", gen_config.seed, "dataset seed");
  gen_cmd->add_option("--out", gen_out, "output directory")->required();
  gen_cmd->add_option("--p-min", gen_config.p_min, "flip probability lower bound");
  gen_cmd->add_option("--p-max", gen_config.p_max, "flip probability upper bound");
  gen_cmd->add_option("--c-min", gen_config.c_min, "retention lower bound");
  gen_cmd->add_option("--c-max", gen_config.c_max, "retention upper bound");
  gen_cmd->add_option("--passes", gen_config.elo_passes, "round-robin passes");
  gen_cmd->add_option("--width-max", gen_config.ability_width_max, "largest ability width");
  gen_cmd->add_option("--width-exponent", gen_config.ability_width_exponent,
                      "ability width exponent");
  gen_cmd->callback([&] {
    gen_config.generator = generator_from_name(gen_model);
    run_gen(gen_config, gen_out);
  });

  // features
  std::string features_graph_file, features_dir, features_out;
  CLI::App* features_cmd = app.add_subcommand("features", "compute the five graph features");
  features_cmd->add_option("--graph-file", features_graph_file, "adjacency matrix file");
  features_cmd->add_option("--dir", features_dir, "dataset directory to batch");
  features_cmd->add_option("--out", features_out, "output CSV for --dir mode");
  features_cmd->callback([&] {
    if (features_graph_file.empty() == features_dir.empty())
      throw Error(Errc::bad_config, "pass exactly one of --graph-file or --dir");
    if (!features_dir.empty() && features_out.empty())
      throw Error(Errc::bad_config, "--dir mode needs --out");
    run_features(features_graph_file, features_dir, features_out);
  });

  // train / predict
  std::string train_data, train_out;
  int train_trees = 100;
  std::uint64_t train_seed = 0;
  CLI::App* train_cmd = app.add_subcommand("train", "fit a random forest on a dataset");
  train_cmd->add_option("--data", train_data, "dataset directory")->required();
  train_cmd->add_option("--out", train_out, "model file")->required();
  train_cmd->add_option("--trees", train_trees, "number of trees");
  train_cmd->add_option("--seed", train_seed, "training seed");
  train_cmd->callback([&] { run_train(train_data, train_out, train_trees, train_seed); });

  std::string predict_model, predict_graph_file;
  bool predict_allow_mismatch = false;
  CLI::App* predict_cmd = app.add_subcommand("predict", "score a graph with a trained model");
  predict_cmd->add_option("--model", predict_model, "model file")->required();
  predict_cmd->add_option("--graph-file", predict_graph_file, "adjacency matrix file")
      ->required();
  predict_cmd->add_flag("--allow-mismatch", predict_allow_mismatch,
                        "score graphs whose size differs from the training size");
  predict_cmd->callback(
      [&] { run_predict(predict_model, predict_graph_file, predict_allow_mismatch); });

  // experiment / plot
  int exp_table = 1;
  int exp_n = 8;
  std::uint64_t exp_seed = 0;
  bool exp_sparse = false;
  int exp_train_count = 1000, exp_test_count = 1000, exp_edge_max_n = 8;
  std::string exp_out, exp_scatter_out;
  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "correlate measures with labels on synthetic data");
  experiment_cmd->add_option("--table", exp_table, "1: same-family test, 2: tournament test")
      ->check(CLI::Range(1, 2))
      ->required();
  experiment_cmd->add_option("--n", exp_n, "vertices per graph")->required();
  experiment_cmd->add_option("--seed", exp_seed, "experiment seed");
  experiment_cmd->add_flag("--sparse", exp_sparse, "sparse variant");
  experiment_cmd->add_option("--train-count", exp_train_count, "training graphs");
  experiment_cmd->add_option("--test-count", exp_test_count, "test graphs");
  experiment_cmd->add_option("--re-max-n", exp_edge_max_n, "edge measure size limit");
  experiment_cmd->add_option("--out", exp_out, "correlation table CSV")->required();
  experiment_cmd->add_option("--scatter-out", exp_scatter_out,
                             "scatter CSV (default: scatter.csv next to --out)");
  experiment_cmd->callback([&] {
    run_experiment_cmd(exp_table, exp_n, exp_seed, exp_sparse, exp_train_count, exp_test_count,
                       exp_edge_max_n, exp_out, exp_scatter_out);
  });

  std::string plot_in, plot_out;
  CLI::App* plot_cmd = app.add_subcommand("plot", "render a CSV as a scatter SVG");
  plot_cmd->add_option("--in", plot_in, "input CSV, first column is x")->required();
  plot_cmd->add_option("--out", plot_out, "output SVG")->required();
  plot_cmd->callback([&] { run_plot(plot_in, plot_out); });

  // ingest
  std::string ingest_matches, ingest_models, ingest_order, ingest_out;
  bool ingest_auto_train = true;
  int ingest_edge_max_n = 8;
  int ingest_train_count = 1000;
  std::uint64_t ingest_train_seed = 20260815;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "score real seasons from match results");
  ingest_cmd->add_option("--matches", ingest_matches, "match results CSV")->required();
  ingest_cmd->add_option("--models", ingest_models, "model cache directory")->required();
  ingest_cmd->add_flag("--auto-train,!--no-auto-train", ingest_auto_train,
                       "train missing per-size models on demand");
  ingest_cmd->add_option("--re-max-n", ingest_edge_max_n, "edge measure size limit");
  ingest_cmd->add_option("--train-count", ingest_train_count, "samples per auto-trained model");
  ingest_cmd->add_option("--train-seed", ingest_train_seed, "seed for auto-training");
  ingest_cmd->add_option("--order", ingest_order,
                         "file with one season key per line; restricts the report to those "
                         "seasons, in that order (default: all seasons, sorted)");
  ingest_cmd->add_option("--out", ingest_out, "report directory")->required();
  ingest_cmd->callback([&] {
    run_ingest(ingest_matches, ingest_models, ingest_auto_train, ingest_edge_max_n,
               ingest_train_count, ingest_train_seed, ingest_order, ingest_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
