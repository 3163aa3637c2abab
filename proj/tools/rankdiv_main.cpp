// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: synth, tokens, diversity, fit, relevance, regress,
// plot and run-grid subcommands over line-delimited JSON corpora.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankdiv/csv.hpp"
#include "rankdiv/pipeline.hpp"
#include "rankdiv/plot.hpp"
#include "rankdiv/synth.hpp"
#include "rankdiv/tokenstats.hpp"

namespace {

using namespace rankdiv;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

GeoPoint parse_center(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--center", "expected lat,lon");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--center", "expected lat,lon");
  }
}

StudyWindow parse_window(const std::vector<std::string>& w) {
  const auto start = parse_iso8601(w[0]);
  const auto end = parse_iso8601(w[1]);
  if (!start || !end || *end <= *start)
    throw CLI::ValidationError("--window", "expected two ISO-8601 instants, start < end");
  return {*start, *end - *start};
}

// label=path pairs for plot inputs
std::pair<std::string, std::string> split_label(const std::string& s, const char* flag) {
  const auto eq = s.find('=');
  if (eq == std::string::npos)
    throw CLI::ValidationError(flag, "expected label=path");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

struct CommonInput {
  std::vector<std::string> inputs;
  std::vector<std::string> window_args = {"2014-01-01", "2015-01-01"};
};

void add_input_flags(CLI::App* cmd, CommonInput& in) {
  cmd->add_option("--input", in.inputs, "input .jsonl corpus (repeatable)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--window", in.window_args, "study window: <start-iso8601> <end-iso8601>")
      ->expected(2);
}

std::vector<CorpusRecord> read_inputs(const CommonInput& in) {
  RunConfig cfg;
  cfg.inputs = in.inputs;
  cfg.window = parse_window(in.window_args);
  std::size_t skipped = 0;
  auto records = load_corpus(cfg, &skipped);
  if (skipped)
    std::cerr << "note: skipped " << skipped << " malformed/out-of-window lines\n";
  if (records.empty()) throw std::runtime_error("no valid records in input");
  return records;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  write_file_atomic(p, content);
}

int run(int argc, char** argv) {
  CLI::App app{"rank-diversity corpus analytics"};
  app.set_version_flag("--version", std::string("rankdiv ") + std::string(kEngineVersion) +
                                        " (config schema v" +
                                        std::to_string(kConfigSchemaVersion) + ")");
  app.require_subcommand(1);

  // ---- synth ----
  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  SyntheticSpec sspec;
  std::string synth_model = "zipf", synth_out = "corpus.jsonl", synth_origin;
  long long synth_bin_hours = 24;
  synth->add_option("--model", synth_model)->check(CLI::IsMember({"zipf", "random-typing"}));
  synth->add_option("--vocab", sspec.vocabulary_size, "zipf vocabulary size");
  synth->add_option("--exponent", sspec.zipf_exponent, "zipf exponent");
  synth->add_option("--alphabet", sspec.alphabet_size, "random-typing alphabet size");
  synth->add_option("--space-prob", sspec.space_probability, "random-typing end-of-word probability");
  synth->add_option("--tokens-per-record", sspec.tokens_per_record);
  synth->add_option("--records-per-bin", sspec.records_per_bin)->required();
  synth->add_option("--bins", sspec.bins, "number of time bins T")->required();
  synth->add_option("--seed", sspec.seed);
  synth->add_option("--origin", synth_origin, "first bin start (ISO-8601)");
  synth->add_option("--bin-hours", synth_bin_hours, "width of one synthetic bin");
  std::string synth_center = "19.4326,-99.1332";
  synth->add_option("--center", synth_center, "scatter center lat,lon");
  synth->add_option("--scatter-km", sspec.scatter_km, "records scattered over this disk");
  synth->add_option("--out", synth_out, "output .jsonl path");

  // ---- tokens ----
  auto* tokens = app.add_subcommand("tokens", "special-token leaderboards and diversity");
  CommonInput tokens_in;
  add_input_flags(tokens, tokens_in);
  std::string tokens_class = "hashtag", tokens_out = "-", tokens_country = "corpus";
  int tokens_top = kDefaultLeaderboardK;
  int tokens_dt = 24;
  bool tokens_diversity = false;
  tokens->add_option("--token-class", tokens_class)
      ->check(CLI::IsMember({"emoji", "hashtag", "mention"}));
  tokens->add_option("--top", tokens_top, "leaderboard length K");
  tokens->add_option("--country", tokens_country);
  tokens->add_flag("--diversity", tokens_diversity, "emit a rank-diversity curve instead");
  tokens->add_option("--dt-hours", tokens_dt)->check(CLI::IsMember({3, 6, 12, 24, 48, 96}));
  tokens->add_option("--out", tokens_out, "output CSV ('-' for stdout)");

  // ---- diversity ----
  auto* diversity = app.add_subcommand("diversity", "rank-diversity curve for one cell");
  CommonInput div_in;
  add_input_flags(diversity, div_in);
  int div_n = 1, div_dt = 24;
  std::string div_center, div_out = "-", div_traj_surface, div_traj_out = "-";
  double div_radius = 0;
  std::size_t div_sample = 0;
  std::uint64_t div_seed = 0;
  std::string div_rank_mode = "min-vocab";
  diversity->add_option("--ngram", div_n)->check(CLI::Range(1, 5));
  diversity->add_option("--dt-hours", div_dt)->check(CLI::IsMember({3, 6, 12, 24, 48, 96}));
  diversity->add_option("--center", div_center, "lat,lon (with --radius-km)");
  diversity->add_option("--radius-km", div_radius, "spatial filter radius");
  diversity->add_option("--sample-size", div_sample, "sample n records without replacement");
  diversity->add_option("--seed", div_seed);
  diversity->add_option("--rank-mode", div_rank_mode)
      ->check(CLI::IsMember({"min-vocab", "union"}));
  diversity->add_option("--trajectory", div_traj_surface, "also emit this surface's rank trajectory");
  diversity->add_option("--trajectory-out", div_traj_out);
  diversity->add_option("--out", div_out, "curve CSV ('-' for stdout)");

  // ---- fit ----
  auto* fit_cmd = app.add_subcommand("fit", "fit the sigmoid to a curve CSV");
  std::string fit_curve, fit_out = "-";
  int fit_bins = 0;
  fit_cmd->add_option("--curve", fit_curve, "curve CSV (k,d)")->required()->check(CLI::ExistingFile);
  fit_cmd->add_option("--bins", fit_bins, "T used to produce the curve")->required();
  fit_cmd->add_option("--out", fit_out);

  // ---- relevance ----
  auto* relevance_cmd = app.add_subcommand("relevance", "eta per scale from a fits CSV");
  std::string rel_fits, rel_country = "corpus", rel_out = "-";
  relevance_cmd->add_option("--fits", rel_fits)->required()->check(CLI::ExistingFile);
  relevance_cmd->add_option("--country", rel_country);
  relevance_cmd->add_option("--out", rel_out);

  // ---- regress ----
  auto* regress = app.add_subcommand("regress", "regression of mu on the scales");
  std::string reg_fits, reg_country = "corpus", reg_out = "-", reg_model = "both";
  std::string reg_spatial = "log10";
  regress->add_option("--fits", reg_fits)->required()->check(CLI::ExistingFile);
  regress->add_option("--country", reg_country);
  regress->add_option("--model", reg_model)
      ->check(CLI::IsMember({"linear", "multiplicative", "both"}));
  regress->add_option("--spatial-predictor", reg_spatial)
      ->check(CLI::IsMember({"log10", "linear"}));
  regress->add_option("--out", reg_out);

  // ---- plot ----
  auto* plot_cmd = app.add_subcommand("plot", "render artifacts as SVG");
  std::string plot_kind, plot_out = "plot.svg";
  std::vector<std::string> plot_curves, plot_fits, plot_trajs;
  int plot_bins = 0;
  plot_cmd->add_option("--kind", plot_kind)
      ->required()
      ->check(CLI::IsMember({"diversity-curves", "mu-vs-time", "mu-vs-radius", "eta-bars",
                             "trajectories", "token-diversity"}));
  plot_cmd->add_option("--curve", plot_curves, "label=path of a curve CSV (repeatable)");
  plot_cmd->add_option("--bins", plot_bins, "T for the curve CSVs");
  plot_cmd->add_option("--fits", plot_fits, "country=path of a fits CSV (repeatable)");
  plot_cmd->add_option("--trajectory", plot_trajs, "label=path of a trajectory CSV (repeatable)");
  plot_cmd->add_option("--out", plot_out);

  // ---- run-grid ----
  auto* run_grid_cmd = app.add_subcommand("run-grid", "full scale-grid pipeline");
  run_grid_cmd->set_config("--config", "", "key=value config file; flags override");
  RunConfig cfg;
  CommonInput grid_in;
  add_input_flags(run_grid_cmd, grid_in);
  std::string grid_center = "19.4326,-99.1332", grid_rank_mode = "min-vocab";
  std::string grid_spatial_pred = "log10", grid_out_dir = "out";
  std::string grid_radius_series;
  std::size_t grid_sample = 0;
  run_grid_cmd->add_option("--country", cfg.country);
  run_grid_cmd->add_option("--center", grid_center, "capital-center lat,lon");
  run_grid_cmd->add_option("--radius-km", cfg.radii, "explicit radius list (km)");
  run_grid_cmd->add_option("--radius-series", grid_radius_series,
                           "e.g. 3x2^10 for 3,6,...,1536 km");
  run_grid_cmd->add_flag("--country-cap", cfg.country_cap, "append a whole-country cell");
  run_grid_cmd->add_option("--country-cap-radius-km", cfg.country_cap_radius_km);
  run_grid_cmd->add_option("--dt-hours", cfg.dt_hours)->check(CLI::IsMember({3, 6, 12, 24, 48, 96}));
  run_grid_cmd->add_option("--ngram", cfg.ngram_sizes)->check(CLI::Range(1, 5));
  run_grid_cmd->add_option("--sample-size", grid_sample);
  run_grid_cmd->add_option("--seed", cfg.seed);
  run_grid_cmd->add_option("--rank-mode", grid_rank_mode)
      ->check(CLI::IsMember({"min-vocab", "union"}));
  run_grid_cmd->add_option("--spatial-predictor", grid_spatial_pred)
      ->check(CLI::IsMember({"log10", "linear"}));
  run_grid_cmd->add_option("--out-dir", grid_out_dir);
  run_grid_cmd->add_option("--threads", cfg.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*synth) {
    sspec.model = synth_model == "zipf" ? SynthModel::Zipf : SynthModel::RandomTyping;
    if (!synth_origin.empty()) {
      const auto t = parse_iso8601(synth_origin);
      if (!t) throw CLI::ValidationError("--origin", "not an ISO-8601 instant");
      sspec.origin = *t;
    }
    sspec.bin_seconds = synth_bin_hours * 3600;
    const auto c = parse_center(synth_center);
    sspec.center_lat = c.lat;
    sspec.center_lon = c.lon;
    SynthGenerator gen(sspec);
    std::ofstream out(synth_out, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + synth_out);
    for (std::uint64_t i = 0; i < sspec.record_count(); ++i)
      out << serialize_record(gen.record(i)) << '\n';
    std::cerr << "wrote " << sspec.record_count() << " records to " << synth_out << '\n';
    return kExitOk;
  }

  if (*tokens) {
    const auto records = read_inputs(tokens_in);
    const auto cls = *token_class_from_string(tokens_class);
    if (tokens_diversity) {
      const auto window = parse_window(tokens_in.window_args);
      TemporalScale scale{tokens_dt, window.origin, window.span_hours()};
      const auto curve = class_rank_diversity(records, cls, scale);
      write_output(tokens_out, curve_to_csv(curve));
    } else {
      const auto board = leaderboard(records, cls, tokens_top, tokens_country);
      write_output(tokens_out, leaderboard_to_csv(board));
    }
    return kExitOk;
  }

  if (*diversity) {
    auto records = read_inputs(div_in);
    std::sort(records.begin(), records.end(),
              [](const CorpusRecord& a, const CorpusRecord& b) { return a.id < b.id; });
    std::vector<std::size_t> keep(records.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    if (!div_center.empty() && div_radius > 0)
      keep = filter_within(records, SpatialScale{parse_center(div_center), div_radius, false});
    if (div_sample > 0) keep = sample_without_replacement(keep, div_sample, div_seed);

    const auto window = parse_window(div_in.window_args);
    TemporalScale scale{div_dt, window.origin, window.span_hours()};
    const int t_bins = scale.bin_count();
    if (t_bins < 1) throw std::runtime_error("study window shorter than one bin");
    std::vector<CountMap> counts(t_bins);
    for (const std::size_t r : keep) {
      const auto bin = bin_index(records[r].timestamp, scale);
      if (!bin) continue;
      for (const auto& g : ngrams(tokenize(records[r].text), div_n))
        ++counts[*bin][g.joined()];
    }
    std::vector<RankTable> tables;
    for (int b = 0; b < t_bins; ++b) {
      if (counts[b].empty()) throw std::runtime_error("empty bin " + std::to_string(b));
      tables.push_back(rank_bin(b, counts[b]));
    }
    const auto mode = div_rank_mode == "union" ? RankMode::Union : RankMode::MinVocab;
    write_output(div_out, curve_to_csv(rank_diversity(tables, mode)));
    if (!div_traj_surface.empty())
      write_output(div_traj_out,
                   trajectory_to_csv(rank_trajectory(tables, div_traj_surface)));
    return kExitOk;
  }

  if (*fit_cmd) {
    const auto curve = curve_from_csv(read_file(fit_curve), fit_bins);
    const auto params = fit_sigmoid(curve);
    std::string csv = "mu,sigma,rmse,n_points,flags\n";
    csv += format_double(params.mu) + "," + format_double(params.sigma) + "," +
           format_double(params.rmse) + "," + std::to_string(params.n_points) + "," +
           std::to_string(params.flags) + "\n";
    write_output(fit_out, csv);
    return kExitOk;
  }

  if (*relevance_cmd) {
    const auto grid = mu_grid_from_fits_csv(rel_fits, rel_country);
    write_output(rel_out, relevance_to_csv(relevance(grid)));
    return kExitOk;
  }

  if (*regress) {
    const auto grid = mu_grid_from_fits_csv(reg_fits, reg_country);
    const auto spatial =
        reg_spatial == "linear" ? SpatialPredictor::Linear : SpatialPredictor::Log10;
    std::string csv;
    for (const auto kind : {RegressionKind::Linear, RegressionKind::Multiplicative}) {
      if (reg_model == "linear" && kind != RegressionKind::Linear) continue;
      if (reg_model == "multiplicative" && kind != RegressionKind::Multiplicative) continue;
      Eigen::MatrixXd design;
      Eigen::VectorXd response;
      build_design(grid, kind, design, response, spatial);
      const auto rep = ols_fit(design, response, kind);
      const auto block = regression_to_csv(reg_country, rep);
      if (csv.empty())
        csv = block;
      else  // drop the duplicate header
        csv += block.substr(block.find('\n') + 1);
    }
    write_output(reg_out, csv);
    return kExitOk;
  }

  if (*plot_cmd) {
    std::string svg;
    if (plot_kind == "diversity-curves" || plot_kind == "token-diversity") {
      if (plot_curves.empty() || plot_bins < 1)
        throw CLI::ValidationError("--curve", "this kind needs --curve and --bins");
      std::vector<LabeledCurve> lc;
      for (const auto& spec : plot_curves) {
        const auto [label, path] = split_label(spec, "--curve");
        lc.push_back({label, curve_from_csv(read_file(path), plot_bins)});
      }
      svg = plot_kind == "token-diversity" ? plot_token_diversity(lc)
                                           : plot_diversity_curves(lc);
    } else if (plot_kind == "mu-vs-time" || plot_kind == "mu-vs-radius") {
      if (plot_fits.empty())
        throw CLI::ValidationError("--fits", "this kind needs --fits");
      std::vector<MuGrid> grids;
      for (const auto& spec : plot_fits) {
        const auto [country, path] = split_label(spec, "--fits");
        grids.push_back(mu_grid_from_fits_csv(path, country));
      }
      svg = plot_mu_panels(grids, plot_kind == "mu-vs-time" ? MuPanelAxis::Temporal
                                                            : MuPanelAxis::Spatial);
    } else if (plot_kind == "eta-bars") {
      if (plot_fits.empty())
        throw CLI::ValidationError("--fits", "eta-bars needs --fits");
      std::vector<RelevanceReport> reports;
      for (const auto& spec : plot_fits) {
        const auto [country, path] = split_label(spec, "--fits");
        reports.push_back(relevance(mu_grid_from_fits_csv(path, country)));
      }
      svg = plot_eta_bars(reports);
    } else {  // trajectories
      if (plot_trajs.empty())
        throw CLI::ValidationError("--trajectory", "trajectories needs --trajectory");
      std::vector<RankTrajectory> trajs;
      for (const auto& spec : plot_trajs) {
        const auto [label, path] = split_label(spec, "--trajectory");
        RankTrajectory t;
        t.surface = label;
        for (const auto& row : read_csv(path)) {
          if (row.size() != 2) throw std::runtime_error("bad trajectory CSV row");
          if (row[1].empty())
            t.ranks.push_back(std::nullopt);
          else
            t.ranks.push_back(static_cast<std::uint32_t>(std::stoul(row[1])));
        }
        trajs.push_back(std::move(t));
      }
      svg = plot_trajectories(trajs);
    }
    write_output(plot_out, svg);
    return kExitOk;
  }

  if (*run_grid_cmd) {
    cfg.inputs = grid_in.inputs;
    cfg.window = parse_window(grid_in.window_args);
    cfg.center = parse_center(grid_center);
    if (!grid_radius_series.empty()) {
      int count = 0;
      if (std::sscanf(grid_radius_series.c_str(), "3x2^%d", &count) != 1 || count < 1)
        throw CLI::ValidationError("--radius-series", "expected 3x2^<count>");
      cfg.radii = radius_series(count);
    }
    if (grid_sample > 0) cfg.sample_size = grid_sample;
    cfg.rank_mode = grid_rank_mode == "union" ? RankMode::Union : RankMode::MinVocab;
    cfg.spatial_predictor =
        grid_spatial_pred == "linear" ? SpatialPredictor::Linear : SpatialPredictor::Log10;
    cfg.out_dir = grid_out_dir;
    cfg.validate();
    const auto result = run_grid(cfg);
    write_file_atomic(cfg.out_dir / "relevance.csv", relevance_to_csv(relevance(result.mu)));
    std::string reg_csv;
    for (const auto kind : {RegressionKind::Linear, RegressionKind::Multiplicative}) {
      Eigen::MatrixXd design;
      Eigen::VectorXd response;
      build_design(result.mu, kind, design, response, cfg.spatial_predictor);
      const auto rep = ols_fit(design, response, kind);
      const auto block = regression_to_csv(cfg.country, rep);
      reg_csv += reg_csv.empty() ? block : block.substr(block.find('\n') + 1);
    }
    write_file_atomic(cfg.out_dir / "regression.csv", reg_csv);
    std::cerr << "wrote " << result.fits.size() << " cells to " << cfg.out_dir.string()
              << '\n';
    return kExitOk;
  }

  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const rankdiv::DegenerateCurveError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const rankdiv::CellError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
}
