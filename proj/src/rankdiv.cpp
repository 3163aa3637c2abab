// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/rankdiv.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace rankdiv {

RankTable rank_bin(int bin_id, const CountMap& counts) {
  if (counts.empty()) throw std::invalid_argument("empty bin");
  RankTable table;
  table.bin_id = bin_id;
  table.entries.assign(counts.begin(), counts.end());
  std::sort(table.entries.begin(), table.entries.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  return table;
}

RankDiversityCurve rank_diversity(std::span<const RankTable> tables, RankMode mode) {
  if (tables.empty()) throw std::invalid_argument("rank_diversity needs T >= 1 bins");
  std::size_t k_max = 0;
  if (mode == RankMode::MinVocab) {
    k_max = std::numeric_limits<std::size_t>::max();
    for (const auto& t : tables) k_max = std::min(k_max, t.vocabulary_size());
  } else {
    for (const auto& t : tables) k_max = std::max(k_max, t.vocabulary_size());
  }

  RankDiversityCurve curve;
  curve.bins = static_cast<int>(tables.size());
  curve.k_max = static_cast<int>(k_max);
  curve.mode = mode;
  curve.occupants.resize(k_max, 0);

  std::vector<std::unordered_set<std::string_view>> occupants(k_max);
  for (const auto& t : tables) {
    const std::size_t v = std::min(k_max, t.vocabulary_size());
    for (std::size_t k = 0; k < v; ++k) occupants[k].insert(t.entries[k].first);
  }
  for (std::size_t k = 0; k < k_max; ++k)
    curve.occupants[k] = static_cast<std::uint32_t>(occupants[k].size());
  return curve;
}

RankTrajectory rank_trajectory(std::span<const RankTable> tables, std::string surface) {
  RankTrajectory traj;
  traj.surface = std::move(surface);
  traj.ranks.reserve(tables.size());
  for (const auto& t : tables) {
    std::optional<std::uint32_t> rank;
    for (std::size_t k = 0; k < t.entries.size(); ++k)
      if (t.entries[k].first == traj.surface) {
        rank = static_cast<std::uint32_t>(k + 1);
        break;
      }
    traj.ranks.push_back(rank);
  }
  return traj;
}

}  // namespace rankdiv
