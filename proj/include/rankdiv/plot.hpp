// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "rankdiv/rankdiv.hpp"
#include "rankdiv/stats.hpp"

namespace rankdiv {

struct LabeledCurve {
  std::string label;
  RankDiversityCurve curve;
};

// All emitters return a self-contained SVG 1.1 document with deterministic
// bytes for fixed input.
std::string plot_diversity_curves(const std::vector<LabeledCurve>& curves,
                                  const std::string& title = "Rank diversity");

// Panel grid: columns = grammatical N values, rows = countries. Each panel
// plots mu against the chosen axis (log-x).
enum class MuPanelAxis { Temporal, Spatial };
std::string plot_mu_panels(const std::vector<MuGrid>& grids, MuPanelAxis axis);

std::string plot_eta_bars(const std::vector<RelevanceReport>& reports);

std::string plot_trajectories(const std::vector<RankTrajectory>& trajectories,
                              const std::string& title = "Rank evolution");

std::string plot_token_diversity(const std::vector<LabeledCurve>& curves);

}  // namespace rankdiv
