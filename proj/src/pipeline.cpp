// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "rankdiv/csv.hpp"
#include "rankdiv/tokenize.hpp"

namespace rankdiv {

namespace {

int effective_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 4;
}

// Run tasks [0, count) over a small worker pool; exceptions are captured per
// task and rethrown in task order.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (count == 0) return;
  const int workers = std::min<std::size_t>(std::max(threads, 1), count);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < count; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
}

std::string radius_label(double radius_km, bool cap) {
  if (cap) return "all";
  const double rounded = std::round(radius_km);
  if (std::abs(radius_km - rounded) < 1e-9)
    return std::to_string(static_cast<long long>(rounded));
  return format_double(radius_km);
}

}  // namespace

void RunConfig::validate() const {
  if (ngram_sizes.empty() || radii.empty() || dt_hours.empty())
    throw std::invalid_argument("all scale series must be non-empty");
  for (int n : ngram_sizes)
    if (n < 1 || n > 5) throw std::invalid_argument("ngram size out of [1,5]");
  for (int dt : dt_hours) {
    const bool ok = std::find(std::begin(kAllowedDtHours), std::end(kAllowedDtHours), dt) !=
                    std::end(kAllowedDtHours);
    if (!ok) throw std::invalid_argument("dt_hours must be one of 3,6,12,24,48,96");
  }
  for (double r : radii)
    if (!(r > 0)) throw std::invalid_argument("radii must be positive");
  if (!std::is_sorted(radii.begin(), radii.end()))
    throw std::invalid_argument("radii must be increasing");
  if (window.span_seconds <= 0) throw std::invalid_argument("empty study window");
}

std::string config_to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema"] = kConfigSchemaVersion;
  j["inputs"] = cfg.inputs;
  j["window_start"] = cfg.window.origin;
  j["window_span_seconds"] = cfg.window.span_seconds;
  j["country"] = cfg.country;
  j["center_lat"] = cfg.center.lat;
  j["center_lon"] = cfg.center.lon;
  j["radii_km"] = cfg.radii;
  j["country_cap"] = cfg.country_cap;
  j["country_cap_radius_km"] = cfg.country_cap_radius_km;
  j["dt_hours"] = cfg.dt_hours;
  j["ngram_sizes"] = cfg.ngram_sizes;
  if (cfg.sample_size)
    j["sample_size"] = *cfg.sample_size;
  else
    j["sample_size"] = nullptr;
  j["seed"] = cfg.seed;
  j["rank_mode"] = cfg.rank_mode == RankMode::MinVocab ? "min-vocab" : "union";
  j["spatial_predictor"] =
      cfg.spatial_predictor == SpatialPredictor::Log10 ? "log10" : "linear";
  j["out_dir"] = cfg.out_dir.string();
  j["threads"] = cfg.threads;
  return j.dump(2);
}

RunConfig config_from_json(const std::string& json) {
  const auto j = nlohmann::json::parse(json);
  RunConfig cfg;
  cfg.inputs = j.at("inputs").get<std::vector<std::string>>();
  cfg.window.origin = j.at("window_start").get<std::int64_t>();
  cfg.window.span_seconds = j.at("window_span_seconds").get<std::int64_t>();
  cfg.country = j.at("country").get<std::string>();
  cfg.center.lat = j.at("center_lat").get<double>();
  cfg.center.lon = j.at("center_lon").get<double>();
  cfg.radii = j.at("radii_km").get<std::vector<double>>();
  cfg.country_cap = j.at("country_cap").get<bool>();
  cfg.country_cap_radius_km = j.at("country_cap_radius_km").get<double>();
  cfg.dt_hours = j.at("dt_hours").get<std::vector<int>>();
  cfg.ngram_sizes = j.at("ngram_sizes").get<std::vector<int>>();
  if (!j.at("sample_size").is_null())
    cfg.sample_size = j.at("sample_size").get<std::size_t>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.rank_mode =
      j.at("rank_mode").get<std::string>() == "union" ? RankMode::Union : RankMode::MinVocab;
  cfg.spatial_predictor = j.at("spatial_predictor").get<std::string>() == "linear"
                              ? SpatialPredictor::Linear
                              : SpatialPredictor::Log10;
  cfg.out_dir = j.at("out_dir").get<std::string>();
  cfg.threads = j.at("threads").get<int>();
  return cfg;
}

std::vector<CorpusRecord> load_corpus(const RunConfig& cfg, std::size_t* skipped) {
  std::vector<CorpusRecord> records;
  std::size_t bad = 0;
  for (const auto& path : cfg.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input " + path);
    JsonlReader reader(in, cfg.window);
    while (auto rec = reader.next()) records.push_back(std::move(*rec));
    bad += reader.lines_skipped();
  }
  if (skipped) *skipped = bad;
  return records;
}

std::string curve_to_csv(const RankDiversityCurve& curve) {
  std::string out = "k,d\n";
  for (int k = 1; k <= curve.k_max; ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(curve.d(k));
    out += '\n';
  }
  return out;
}

RankDiversityCurve curve_from_csv(const std::string& content, int bins) {
  RankDiversityCurve curve;
  curve.bins = bins;
  std::size_t pos = content.find('\n');  // header
  while (pos != std::string::npos && pos + 1 < content.size()) {
    const std::size_t end = content.find('\n', pos + 1);
    const auto line = content.substr(pos + 1, end == std::string::npos
                                                  ? std::string::npos
                                                  : end - pos - 1);
    pos = end;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw std::runtime_error("bad curve CSV row: " + line);
    const double d = std::stod(cells[1]);
    curve.occupants.push_back(static_cast<std::uint32_t>(std::llround(d * bins)));
  }
  curve.k_max = static_cast<int>(curve.occupants.size());
  return curve;
}

std::string fits_to_csv(const std::vector<CellFit>& fits) {
  std::string out = "N,radius_km,dt_hours,mu,sigma,rmse,n_points,flags\n";
  for (const auto& f : fits) {
    out += std::to_string(f.ngram);
    out += ',';
    out += format_double(f.radius_km);
    out += ',';
    out += std::to_string(f.dt_hours);
    out += ',';
    out += format_double(f.params.mu);
    out += ',';
    out += format_double(f.params.sigma);
    out += ',';
    out += format_double(f.params.rmse);
    out += ',';
    out += std::to_string(f.params.n_points);
    out += ',';
    out += std::to_string(f.params.flags);
    out += '\n';
  }
  return out;
}

std::string trajectory_to_csv(const RankTrajectory& traj) {
  std::string out = "bin,rank\n";
  for (std::size_t b = 0; b < traj.ranks.size(); ++b) {
    out += std::to_string(b);
    out += ',';
    out += traj.ranks[b] ? std::to_string(*traj.ranks[b]) : std::string();
    out += '\n';
  }
  return out;
}

std::string relevance_to_csv(const RelevanceReport& rep) {
  std::string out = "country,axis,eta\n";
  const std::pair<const char*, double> rows[] = {
      {"grammatical", rep.eta_grammatical},
      {"spatial", rep.eta_spatial},
      {"temporal", rep.eta_temporal},
  };
  for (const auto& [axis, value] : rows) {
    out += rep.country;
    out += ',';
    out += axis;
    out += ',';
    out += format_double(value);
    out += '\n';
  }
  return out;
}

std::string regression_to_csv(const std::string& country, const RegressionReport& rep) {
  const char* model = rep.kind == RegressionKind::Linear ? "linear" : "multiplicative";
  std::string out = "country,model,term,beta,se,t,p\n";
  for (std::size_t c = 0; c < rep.terms.size(); ++c) {
    out += country;
    out += ',';
    out += model;
    out += ',';
    out += rep.terms[c];
    out += ',';
    out += format_double(rep.beta[static_cast<Eigen::Index>(c)]);
    out += ',';
    out += format_double(rep.se[static_cast<Eigen::Index>(c)]);
    out += ',';
    out += format_double(rep.t[static_cast<Eigen::Index>(c)]);
    out += ',';
    out += format_p_value(rep.p[static_cast<Eigen::Index>(c)]);
    out += '\n';
  }
  out += country;
  out += ',';
  out += model;
  out += ",F,";
  out += format_double(rep.f_statistic);
  out += ',';
  out += std::to_string(rep.df1);
  out += ',';
  out += std::to_string(rep.df2);
  out += ',';
  out += format_p_value(rep.f_p_value);
  out += '\n';
  return out;
}

MuGrid mu_grid_from_fits_csv(const std::filesystem::path& path, const std::string& country) {
  const auto rows = read_csv(path);
  std::set<int> ns, dts;
  std::set<double> radii;
  for (const auto& r : rows) {
    if (r.size() < 8) throw std::runtime_error("bad fits CSV row");
    ns.insert(std::stoi(r[0]));
    radii.insert(std::stod(r[1]));
    dts.insert(std::stoi(r[2]));
  }
  ScaleGrid axes;
  axes.grammatical.assign(ns.begin(), ns.end());
  axes.spatial_km.assign(radii.begin(), radii.end());
  axes.temporal_hours.assign(dts.begin(), dts.end());
  MuGrid grid(axes, country);
  auto pos_of = [](const auto& vec, auto v) {
    return static_cast<std::size_t>(
        std::distance(vec.begin(), std::find(vec.begin(), vec.end(), v)));
  };
  for (const auto& r : rows) {
    grid.set(pos_of(axes.grammatical, std::stoi(r[0])),
             pos_of(axes.spatial_km, std::stod(r[1])),
             pos_of(axes.temporal_hours, std::stoi(r[2])), std::stod(r[3]));
  }
  grid.require_complete();
  return grid;
}

GridResult run_grid(const RunConfig& cfg, std::vector<CorpusRecord> records) {
  cfg.validate();
  if (records.empty()) throw std::runtime_error("empty corpus");

  // Stable order by id so sampling is reproducible across input orderings.
  std::sort(records.begin(), records.end(),
            [](const CorpusRecord& a, const CorpusRecord& b) { return a.id < b.id; });

  const int threads = effective_threads(cfg.threads);

  // Tokenize once; grid cells reuse the cached word surfaces.
  std::vector<std::vector<std::string>> words(records.size());
  parallel_for(records.size(), threads, [&](std::size_t i) {
    for (auto& t : tokenize(records[i].text))
      if (t.cls == TokenClass::Word) words[i].push_back(std::move(t.surface));
  });

  // Spatial axis: explicit circles, then optionally the whole-country cap.
  struct SpatialCell {
    double numeric_radius;
    bool cap;
  };
  std::vector<SpatialCell> spatial;
  for (double r : cfg.radii) spatial.push_back({r, false});
  if (cfg.country_cap) {
    const double cap_r =
        cfg.country_cap_radius_km > 0 ? cfg.country_cap_radius_km : 2.0 * cfg.radii.back();
    spatial.push_back({cap_r, true});
  }

  const auto smallest_pool =
      filter_within(records, SpatialScale{cfg.center, cfg.radii.front(), false});
  const std::size_t n = cfg.sample_size.value_or(smallest_pool.size());
  if (n == 0) throw std::runtime_error("no records inside the smallest circle");
  if (n > smallest_pool.size())
    throw std::runtime_error("sample size " + std::to_string(n) + " exceeds the " +
                             std::to_string(smallest_pool.size()) +
                             " records inside the smallest circle");

  // One sample per radius, shared by every (N, dt) cell of that radius.
  std::vector<std::vector<std::size_t>> samples(spatial.size());
  parallel_for(spatial.size(), threads, [&](std::size_t j) {
    const auto pool =
        filter_within(records, SpatialScale{cfg.center, spatial[j].numeric_radius,
                                            spatial[j].cap});
    if (n > pool.size())
      throw std::runtime_error("sample size exceeds population at radius " +
                               radius_label(spatial[j].numeric_radius, spatial[j].cap));
    samples[j] = sample_without_replacement(pool, n, cfg.seed);
  });

  ScaleGrid axes;
  axes.grammatical = cfg.ngram_sizes;
  for (const auto& s : spatial) axes.spatial_km.push_back(s.numeric_radius);
  axes.temporal_hours = cfg.dt_hours;

  struct CellOut {
    CellFit fit;
    std::string csv;
  };
  const std::size_t cell_count = axes.cell_count();
  std::vector<CellOut> cells(cell_count);

  const auto nj = spatial.size();
  const auto ns = cfg.dt_hours.size();
  parallel_for(cell_count, threads, [&](std::size_t c) {
    const std::size_t i = c / (nj * ns);
    const std::size_t j = (c / ns) % nj;
    const std::size_t s = c % ns;
    const int ngram_n = cfg.ngram_sizes[i];
    const int dt = cfg.dt_hours[s];
    try {
      TemporalScale tscale{dt, cfg.window.origin, cfg.window.span_hours()};
      const int t_bins = tscale.bin_count();
      if (t_bins < 1) throw std::runtime_error("study window shorter than one bin");
      std::vector<CountMap> counts(t_bins);
      for (const std::size_t rec : samples[j]) {
        const auto bin = bin_index(records[rec].timestamp, tscale);
        if (!bin) continue;
        const auto& w = words[rec];
        if (w.size() < static_cast<std::size_t>(ngram_n)) continue;
        for (std::size_t p = 0; p + ngram_n <= w.size(); ++p) {
          std::string key = w[p];
          for (int q = 1; q < ngram_n; ++q) {
            key += ' ';
            key += w[p + q];
          }
          ++counts[*bin][std::move(key)];
        }
      }
      std::vector<RankTable> tables;
      tables.reserve(t_bins);
      for (int b = 0; b < t_bins; ++b) {
        if (counts[b].empty())
          throw std::runtime_error("empty bin " + std::to_string(b));
        tables.push_back(rank_bin(b, counts[b]));
      }
      const auto curve = rank_diversity(tables, cfg.rank_mode);

      CellOut out;
      out.fit.ngram = ngram_n;
      out.fit.radius_km = spatial[j].numeric_radius;
      out.fit.country_cap = spatial[j].cap;
      out.fit.dt_hours = dt;
      out.fit.params = fit_sigmoid(curve);
      out.fit.curve_file = cfg.country + "_N" + std::to_string(ngram_n) + "_r" +
                           radius_label(spatial[j].numeric_radius, spatial[j].cap) +
                           "_dt" + std::to_string(dt) + ".csv";
      out.csv = curve_to_csv(curve);
      out.fit.checksum = fnv1a(out.csv);
      cells[c] = std::move(out);
    } catch (const CellError&) {
      throw;
    } catch (const std::exception& e) {
      throw CellError(ngram_n, spatial[j].numeric_radius, dt, e.what());
    }
  });

  // All cells succeeded: write everything. Nothing is written on failure.
  std::filesystem::create_directories(cfg.out_dir);
  GridResult result{MuGrid(axes, cfg.country), {}, cfg.out_dir / "manifest.json"};
  for (std::size_t c = 0; c < cell_count; ++c) {
    const std::size_t i = c / (nj * ns);
    const std::size_t j = (c / ns) % nj;
    const std::size_t s = c % ns;
    write_file_atomic(cfg.out_dir / cells[c].fit.curve_file, cells[c].csv);
    result.mu.set(i, j, s, cells[c].fit.params.mu);
    result.fits.push_back(cells[c].fit);
  }
  write_file_atomic(cfg.out_dir / ("fits_" + cfg.country + ".csv"),
                    fits_to_csv(result.fits));

  nlohmann::ordered_json manifest;
  manifest["engine_version"] = std::string(kEngineVersion);
  manifest["config"] = nlohmann::ordered_json::parse(config_to_json(cfg));
  manifest["sample_size"] = n;
  manifest["rank_mode"] =
      cfg.rank_mode == RankMode::MinVocab ? "min-vocab" : "union";
  auto cell_list = nlohmann::ordered_json::array();
  for (const auto& f : result.fits) {
    nlohmann::ordered_json cj;
    cj["file"] = f.curve_file;
    cj["checksum"] = f.checksum;
    cell_list.push_back(cj);
  }
  manifest["cells"] = cell_list;
  write_file_atomic(result.manifest_path, manifest.dump(2));
  return result;
}

GridResult run_grid(const RunConfig& cfg) { return run_grid(cfg, load_corpus(cfg)); }

}  // namespace rankdiv
