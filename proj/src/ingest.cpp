#include "rankability/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include "rankability/error.hpp"
#include "rankability/eval.hpp"
#include "rankability/rank_spectral.hpp"
#include "rankability/svg.hpp"

namespace rankability {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

int parse_score(const std::string& text, std::size_t line_no) {
  if (text.empty())
    throw Error(Errc::malformed_row, "empty score on line " + std::to_string(line_no));
  long long value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::malformed_row,
                  "score '" + text + "' on line " + std::to_string(line_no) +
                      " is not a nonnegative integer");
    value = value * 10 + (c - '0');
    if (value > 1000000000)
      throw Error(Errc::malformed_row, "score overflow on line " + std::to_string(line_no));
  }
  return static_cast<int>(value);
}

std::string format_full(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

std::vector<MatchRecord> parse_matches(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::missing_header, path + " is empty");
  const std::vector<std::string> expected = {"season", "team_a", "team_b", "score_a", "score_b"};
  if (split_fields(line) != expected)
    throw Error(Errc::missing_header,
                path + " must start with season,team_a,team_b,score_a,score_b");

  std::vector<MatchRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 5)
      throw Error(Errc::malformed_row, std::to_string(fields.size()) + " fields on line " +
                                           std::to_string(line_no) + ", expected 5");
    MatchRecord rec;
    rec.season = fields[0];
    rec.team_a = fields[1];
    rec.team_b = fields[2];
    if (rec.season.empty() || rec.team_a.empty() || rec.team_b.empty())
      throw Error(Errc::malformed_row, "empty field on line " + std::to_string(line_no));
    if (rec.team_a == rec.team_b)
      throw Error(Errc::malformed_row, "team plays itself on line " + std::to_string(line_no));
    rec.score_a = parse_score(fields[3], line_no);
    rec.score_b = parse_score(fields[4], line_no);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<std::string> list_seasons(const std::vector<MatchRecord>& records) {
  std::set<std::string> seen;
  for (const MatchRecord& rec : records) seen.insert(rec.season);
  return {seen.begin(), seen.end()};
}

SeasonGraph season_graph(const std::vector<MatchRecord>& records, const std::string& season) {
  std::set<std::string> team_set;
  bool found = false;
  for (const MatchRecord& rec : records) {
    if (rec.season != season) continue;
    found = true;
    team_set.insert(rec.team_a);
    team_set.insert(rec.team_b);
  }
  if (!found) throw Error(Errc::unknown_season, "no matches for season '" + season + "'");
  if (team_set.size() < 2)
    throw Error(Errc::too_few_teams, "season '" + season + "' needs at least 2 teams");

  std::vector<std::string> teams(team_set.begin(), team_set.end());
  int n = static_cast<int>(teams.size());
  auto index_of = [&](const std::string& name) {
    return static_cast<int>(std::lower_bound(teams.begin(), teams.end(), name) - teams.begin());
  };
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
  for (const MatchRecord& rec : records) {
    if (rec.season != season) continue;
    int a = index_of(rec.team_a);
    int b = index_of(rec.team_b);
    if (rec.score_a > rec.score_b) bits[static_cast<std::size_t>(a) * n + b] = 1;
    else if (rec.score_b > rec.score_a) bits[static_cast<std::size_t>(b) * n + a] = 1;
  }
  return SeasonGraph{season, std::move(teams), Digraph::from_bits(n, std::move(bits))};
}

IngestResult score_seasons(const std::vector<MatchRecord>& records,
                           const std::vector<std::string>& seasons,
                           std::map<int, RandomForestModel>& models, const IngestOptions& opts) {
  std::vector<std::string> chosen = seasons.empty() ? list_seasons(records) : seasons;
  if (chosen.empty()) throw Error(Errc::unknown_season, "input contains no seasons");

  IngestResult result;
  result.measure_names = {"r_e", "r_s", "r_f"};
  for (const std::string& season : chosen) {
    SeasonGraph sg = season_graph(records, season);
    int n = sg.graph.n();

    SeasonScores scores;
    scores.season = season;
    scores.n_teams = n;

    SpectralReport report = spectral_rankability_report(sg.graph);
    scores.spectral = report.value;
    scores.spectral_clamped = report.clamped;

    auto it = models.find(n);
    if (it == models.end()) {
      if (!opts.auto_train)
        throw Error(Errc::model_missing, "no model for " + std::to_string(n) + " teams");
      DatasetConfig data_cfg = opts.dataset;
      data_cfg.n = n;
      data_cfg.count = opts.train_count;
      data_cfg.seed = Rng(opts.train_seed, 2 * static_cast<std::uint64_t>(n)).next_u64();
      std::vector<LabeledSample> train = generate_dataset(data_cfg);
      std::vector<FeatureVector> xs;
      std::vector<double> ys;
      xs.reserve(train.size());
      ys.reserve(train.size());
      for (const LabeledSample& s : train) {
        xs.push_back(feature_vector(s.graph));
        ys.push_back(s.label);
      }
      TrainConfig forest_cfg = opts.forest;
      forest_cfg.seed = Rng(opts.train_seed, 2 * static_cast<std::uint64_t>(n) + 1).next_u64();
      forest_cfg.trained_n = n;
      it = models.emplace(n, fit_forest(xs, ys, forest_cfg)).first;
    }
    scores.forest = rf_rankability(it->second, sg.graph);

    if (n <= opts.edge_max_n && n <= opts.search.max_n)
      scores.edge = edge_rankability(sg.graph, opts.search);

    result.seasons.push_back(std::move(scores));
  }

  std::size_t count = result.seasons.size();
  double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> cols(3, std::vector<double>(count, nan));
  for (std::size_t i = 0; i < count; ++i) {
    const SeasonScores& s = result.seasons[i];
    if (s.edge) cols[0][i] = *s.edge;
    cols[1][i] = s.spectral;
    cols[2][i] = s.forest;
  }
  result.correlations.assign(3, std::vector<double>(3, nan));
  for (int i = 0; i < 3; ++i) result.correlations[i][i] = 1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      std::vector<double> a, b;
      for (std::size_t s = 0; s < count; ++s)
        if (std::isfinite(cols[i][s]) && std::isfinite(cols[j][s])) {
          a.push_back(cols[i][s]);
          b.push_back(cols[j][s]);
        }
      double rho = nan;
      if (a.size() >= 2) {
        try {
          rho = spearman(a, b);
        } catch (const Error& e) {
          if (e.code() != Errc::degenerate_input) throw;
        }
      }
      result.correlations[i][j] = rho;
      result.correlations[j][i] = rho;
    }
  return result;
}

void write_ingest_outputs(const IngestResult& result, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream out(out_dir + "/seasons.csv");
    if (!out) throw Error(Errc::io_error, "cannot open " + out_dir + "/seasons.csv for writing");
    out << "season,n_teams,r_e,r_s,r_f\n";
    for (const SeasonScores& s : result.seasons)
      out << s.season << ',' << s.n_teams << ','
          << (s.edge ? format_full(*s.edge) : std::string()) << ',' << format_full(s.spectral)
          << ',' << format_full(s.forest) << '\n';
    if (!out) throw Error(Errc::io_error, "write failed in " + out_dir);
  }
  {
    std::ofstream out(out_dir + "/correlations.csv");
    if (!out)
      throw Error(Errc::io_error, "cannot open " + out_dir + "/correlations.csv for writing");
    out << "measure";
    for (const std::string& name : result.measure_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < result.measure_names.size(); ++i) {
      out << result.measure_names[i];
      for (std::size_t j = 0; j < result.measure_names.size(); ++j) {
        double v = result.correlations[i][j];
        out << ',' << (std::isfinite(v) ? format_full(v) : std::string());
      }
      out << '\n';
    }
  }

  std::size_t count = result.seasons.size();
  double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<PlotSeries> series(3);
  std::vector<std::vector<double>> cols(3, std::vector<double>(count, nan));
  for (int m = 0; m < 3; ++m) {
    series[m].name = result.measure_names[m];
    series[m].x.resize(count);
    series[m].y.resize(count, nan);
  }
  for (std::size_t i = 0; i < count; ++i) {
    const SeasonScores& s = result.seasons[i];
    for (int m = 0; m < 3; ++m) series[m].x[i] = static_cast<double>(i);
    if (s.edge) series[0].y[i] = *s.edge;
    series[1].y[i] = s.spectral;
    series[2].y[i] = s.forest;
    if (s.edge) cols[0][i] = *s.edge;
    cols[1][i] = s.spectral;
    cols[2][i] = s.forest;
  }
  {
    std::ofstream out(out_dir + "/timeseries.svg");
    if (!out) throw Error(Errc::io_error, "cannot open " + out_dir + "/timeseries.svg for writing");
    out << line_chart_svg("rankability by season", "season index", "score", series);
  }
  {
    std::ofstream out(out_dir + "/scatter_matrix.svg");
    if (!out)
      throw Error(Errc::io_error, "cannot open " + out_dir + "/scatter_matrix.svg for writing");
    out << scatter_matrix_svg(result.measure_names, cols);
  }
}

}  // namespace rankability
