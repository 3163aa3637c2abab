// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankdiv/record.hpp"

namespace rankdiv {

enum class SynthModel { Zipf, RandomTyping };

struct SyntheticSpec {
  SynthModel model = SynthModel::Zipf;
  // zipf model
  std::uint32_t vocabulary_size = 0;
  double zipf_exponent = 1.0;
  // random-typing model
  std::uint32_t alphabet_size = 26;
  double space_probability = 0.2;
  // common
  std::uint32_t tokens_per_record = 10;
  std::uint32_t records_per_bin = 0;
  std::uint32_t bins = 0;  // T
  std::uint64_t seed = 0;
  // record placement
  std::int64_t origin = 1388534400;  // 2014-01-01T00:00:00Z
  std::int64_t bin_seconds = 86400;
  double center_lat = 19.4326;
  double center_lon = -99.1332;
  double scatter_km = 100.0;  // records scattered uniformly over this disk

  // throws std::invalid_argument on violated invariants
  void validate() const;
  std::uint64_t record_count() const {
    return static_cast<std::uint64_t>(records_per_bin) * bins;
  }
};

// Pure function of (spec, index); parallel evaluation is deterministic.
class SynthGenerator {
 public:
  explicit SynthGenerator(SyntheticSpec spec);

  CorpusRecord record(std::uint64_t index) const;
  std::vector<std::string> tokens(std::uint64_t index) const;

  const SyntheticSpec& spec() const { return spec_; }

 private:
  SyntheticSpec spec_;
  std::vector<double> zipf_cdf_;  // cumulative P(rank <= r), zipf model only
};

}  // namespace rankdiv
