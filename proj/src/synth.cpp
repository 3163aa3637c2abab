// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rankdiv/rng.hpp"

namespace rankdiv {

namespace {
constexpr double kEarthRadiusKm = 6371.0;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void SyntheticSpec::validate() const {
  if (model == SynthModel::Zipf) {
    if (vocabulary_size == 0) throw std::invalid_argument("vocabulary_size must be positive");
    if (!(zipf_exponent > 0.0)) throw std::invalid_argument("zipf_exponent must be > 0");
  } else {
    if (alphabet_size == 0) throw std::invalid_argument("alphabet_size must be positive");
    if (!(space_probability > 0.0 && space_probability < 1.0))
      throw std::invalid_argument("space_probability must be in (0,1)");
  }
  if (tokens_per_record == 0) throw std::invalid_argument("tokens_per_record must be positive");
  if (records_per_bin == 0) throw std::invalid_argument("records_per_bin must be positive");
  if (bins == 0) throw std::invalid_argument("bins must be positive");
  if (bin_seconds <= 0) throw std::invalid_argument("bin_seconds must be positive");
}

SynthGenerator::SynthGenerator(SyntheticSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.model == SynthModel::Zipf) {
    zipf_cdf_.resize(spec_.vocabulary_size);
    double acc = 0.0;
    for (std::uint32_t r = 1; r <= spec_.vocabulary_size; ++r) {
      acc += std::pow(static_cast<double>(r), -spec_.zipf_exponent);
      zipf_cdf_[r - 1] = acc;
    }
    for (auto& c : zipf_cdf_) c /= acc;
    zipf_cdf_.back() = 1.0;
  }
}

std::vector<std::string> SynthGenerator::tokens(std::uint64_t index) const {
  CounterRng rng(spec_.seed, index * 2 + 1);
  std::vector<std::string> out;
  out.reserve(spec_.tokens_per_record);
  if (spec_.model == SynthModel::Zipf) {
    for (std::uint32_t t = 0; t < spec_.tokens_per_record; ++t) {
      const double u = rng.uniform();
      const auto it = std::upper_bound(zipf_cdf_.begin(), zipf_cdf_.end(), u);
      const auto rank = static_cast<std::uint32_t>(it - zipf_cdf_.begin()) + 1;
      out.push_back("w" + std::to_string(rank));
    }
  } else {
    for (std::uint32_t t = 0; t < spec_.tokens_per_record; ++t) {
      std::string word;
      do {
        const auto letter = rng.bounded(spec_.alphabet_size);
        word.push_back(static_cast<char>('a' + letter % 26));
        if (spec_.alphabet_size > 26) word += std::to_string(letter / 26);
      } while (rng.uniform() >= spec_.space_probability);
      out.push_back(std::move(word));
    }
  }
  return out;
}

CorpusRecord SynthGenerator::record(std::uint64_t index) const {
  CounterRng rng(spec_.seed, index * 2);
  CorpusRecord rec;
  rec.id = "s" + std::to_string(index);
  const std::uint64_t bin = index / spec_.records_per_bin;
  const auto offset = static_cast<std::int64_t>(
      rng.bounded(static_cast<std::uint64_t>(spec_.bin_seconds)));
  rec.timestamp = spec_.origin + static_cast<std::int64_t>(bin) * spec_.bin_seconds + offset;

  // Uniform over a disk of scatter_km around the center (small-angle offsets).
  const double theta = rng.uniform() * 2.0 * kPi;
  const double dist = std::sqrt(rng.uniform()) * spec_.scatter_km;
  const double dlat = (dist / kEarthRadiusKm) * std::cos(theta) * (180.0 / kPi);
  const double coslat = std::max(0.1, std::cos(spec_.center_lat * kPi / 180.0));
  const double dlon = (dist / kEarthRadiusKm) * std::sin(theta) / coslat * (180.0 / kPi);
  rec.latitude = spec_.center_lat + dlat;
  rec.longitude = spec_.center_lon + dlon;

  const auto toks = tokens(index);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) rec.text += ' ';
    rec.text += toks[i];
  }
  return rec;
}

}  // namespace rankdiv
