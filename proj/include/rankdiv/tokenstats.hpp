// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "rankdiv/rankdiv.hpp"
#include "rankdiv/record.hpp"
#include "rankdiv/scales.hpp"
#include "rankdiv/tokenize.hpp"

namespace rankdiv {

struct TokenLeaderboard {
  TokenClass cls = TokenClass::Hashtag;
  std::string country;
  // (surface, count), counts non-increasing, lexicographic on ties
  std::vector<std::pair<std::string, std::uint64_t>> top;
};

inline constexpr int kDefaultLeaderboardK = 20;

// Whole-window aggregate counts for one special-token class, top K.
TokenLeaderboard leaderboard(std::span<const CorpusRecord> corpus, TokenClass cls,
                             int k = kDefaultLeaderboardK, std::string country = {});

// CSV with header `rank,surface,count`, ranks starting at 1.
std::string leaderboard_to_csv(const TokenLeaderboard& board);

// Rank diversity of single tokens of one class, binned by `scale`.
// Same semantics (and failure mode on empty bins) as rank_diversity.
RankDiversityCurve class_rank_diversity(std::span<const CorpusRecord> corpus,
                                        TokenClass cls, const TemporalScale& scale,
                                        RankMode mode = RankMode::MinVocab);

// Per-bin rank tables for one class; building block for the above.
std::vector<RankTable> class_rank_tables(std::span<const CorpusRecord> corpus,
                                         TokenClass cls, const TemporalScale& scale);

}  // namespace rankdiv
