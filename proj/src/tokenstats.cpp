// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/tokenstats.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankdiv {

TokenLeaderboard leaderboard(std::span<const CorpusRecord> corpus, TokenClass cls,
                             int k, std::string country) {
  if (k < 1) throw std::invalid_argument("leaderboard K must be >= 1");
  CountMap counts;
  for (const auto& rec : corpus)
    for (auto& t : tokenize(rec.text))
      if (t.cls == cls) ++counts[std::move(t.surface)];

  TokenLeaderboard board;
  board.cls = cls;
  board.country = std::move(country);
  board.top.assign(counts.begin(), counts.end());
  std::sort(board.top.begin(), board.top.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (board.top.size() > static_cast<std::size_t>(k)) board.top.resize(k);
  return board;
}

std::string leaderboard_to_csv(const TokenLeaderboard& board) {
  std::string csv = "rank,surface,count\n";
  for (std::size_t r = 0; r < board.top.size(); ++r)
    csv += std::to_string(r + 1) + "," + board.top[r].first + "," +
           std::to_string(board.top[r].second) + "\n";
  return csv;
}

std::vector<RankTable> class_rank_tables(std::span<const CorpusRecord> corpus,
                                         TokenClass cls, const TemporalScale& scale) {
  const int t = scale.bin_count();
  if (t < 1) throw std::invalid_argument("temporal scale yields no complete bins");
  std::vector<CountMap> counts(t);
  for (const auto& rec : corpus) {
    const auto bin = bin_index(rec.timestamp, scale);
    if (!bin) continue;
    for (auto& tok : tokenize(rec.text))
      if (tok.cls == cls) ++counts[*bin][std::move(tok.surface)];
  }
  std::vector<RankTable> tables;
  tables.reserve(t);
  for (int b = 0; b < t; ++b) {
    if (counts[b].empty())
      throw std::invalid_argument("empty bin " + std::to_string(b) +
                                  " for class " + std::string(to_string(cls)));
    tables.push_back(rank_bin(b, counts[b]));
  }
  return tables;
}

RankDiversityCurve class_rank_diversity(std::span<const CorpusRecord> corpus,
                                        TokenClass cls, const TemporalScale& scale,
                                        RankMode mode) {
  const auto tables = class_rank_tables(corpus, cls, scale);
  return rank_diversity(tables, mode);
}

}  // namespace rankdiv
