// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rankdiv {

using CountMap = std::unordered_map<std::string, std::uint64_t>;

// Ranks 1..V by descending count; equal counts break ties lexicographically
// (bytewise on the NFC surface).
struct RankTable {
  int bin_id = 0;
  // entries[r-1] = (surface, count) at rank r
  std::vector<std::pair<std::string, std::uint64_t>> entries;

  std::size_t vocabulary_size() const { return entries.size(); }
};

// Throws std::invalid_argument on an empty bin: the caller must fail the
// whole cell rather than silently change T.
RankTable rank_bin(int bin_id, const CountMap& counts);

enum class RankMode {
  MinVocab,  // report ranks up to the smallest bin vocabulary
  Union,     // report every rank occupied in any bin
};

struct RankDiversityCurve {
  int bins = 0;   // T
  int k_max = 0;
  RankMode mode = RankMode::MinVocab;
  // occupants[k-1] = |X(k)|; d(k) = occupants[k-1] / T
  std::vector<std::uint32_t> occupants;

  double d(int k) const { return static_cast<double>(occupants[k - 1]) / bins; }
};

RankDiversityCurve rank_diversity(std::span<const RankTable> tables,
                                  RankMode mode = RankMode::MinVocab);

struct RankTrajectory {
  std::string surface;
  // ranks[b] = rank in bin b, or nullopt where the surface is absent
  std::vector<std::optional<std::uint32_t>> ranks;
};

RankTrajectory rank_trajectory(std::span<const RankTable> tables, std::string surface);

}  // namespace rankdiv
