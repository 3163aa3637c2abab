// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rankdiv/fit.hpp"
#include "rankdiv/rankdiv.hpp"
#include "rankdiv/record.hpp"
#include "rankdiv/scales.hpp"
#include "rankdiv/stats.hpp"

namespace rankdiv {

inline constexpr std::string_view kEngineVersion = "1.0.0";
inline constexpr int kConfigSchemaVersion = 1;

struct RunConfig {
  std::vector<std::string> inputs;
  StudyWindow window{1388534400, 365LL * 86400};  // calendar year 2014
  std::string country = "synthetic";
  GeoPoint center{19.4326, -99.1332};
  std::vector<double> radii = {3, 6, 12, 24, 48, 96, 192, 384, 768, 1536};
  bool country_cap = false;           // append a whole-country (no filter) cell
  double country_cap_radius_km = 0.0; // numeric stand-in for the cap; 0 = 2x last radius
  std::vector<int> dt_hours = {3, 6, 12, 24, 48, 96};
  std::vector<int> ngram_sizes = {1, 2, 3, 4, 5};
  std::optional<std::size_t> sample_size;  // default: population of smallest circle
  std::uint64_t seed = 0;
  RankMode rank_mode = RankMode::MinVocab;
  SpatialPredictor spatial_predictor = SpatialPredictor::Log10;
  std::filesystem::path out_dir = "out";
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;  // throws std::invalid_argument
};

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& json);

struct CellFit {
  int ngram = 1;
  double radius_km = 0.0;
  bool country_cap = false;
  int dt_hours = 0;
  SigmoidParams params;
  std::string curve_file;
  std::uint64_t checksum = 0;
};

struct CellError : std::runtime_error {
  CellError(int n, double radius, int dt, const std::string& cause)
      : std::runtime_error("cell (N=" + std::to_string(n) +
                           ", r=" + std::to_string(radius) +
                           "km, dt=" + std::to_string(dt) + "h): " + cause),
        ngram(n), radius_km(radius), dt_hours(dt) {}
  int ngram;
  double radius_km;
  int dt_hours;
};

struct GridResult {
  MuGrid mu;
  std::vector<CellFit> fits;
  std::filesystem::path manifest_path;
};

// Whole pipeline over an already-loaded corpus: per-radius sampling, per-cell
// n-gram diversity curves and sigmoid fits, CSV + manifest output. Records
// are ordered by id internally. Throws CellError on any cell failure after
// removing partial outputs.
GridResult run_grid(const RunConfig& cfg, std::vector<CorpusRecord> records);

// Loads records from cfg.inputs, then runs.
GridResult run_grid(const RunConfig& cfg);

std::vector<CorpusRecord> load_corpus(const RunConfig& cfg, std::size_t* skipped = nullptr);

// CSV emitters shared by the CLI subcommands.
std::string curve_to_csv(const RankDiversityCurve& curve);
std::string fits_to_csv(const std::vector<CellFit>& fits);
std::string trajectory_to_csv(const RankTrajectory& traj);
std::string relevance_to_csv(const RelevanceReport& rep);
std::string regression_to_csv(const std::string& country, const RegressionReport& rep);

// Parse a curve CSV (k,d columns) back into a curve; needs T to restore the
// integer numerators.
RankDiversityCurve curve_from_csv(const std::string& content, int bins);

// Parse a fits CSV back into a MuGrid (axes inferred from the rows).
MuGrid mu_grid_from_fits_csv(const std::filesystem::path& path, const std::string& country);

}  // namespace rankdiv
