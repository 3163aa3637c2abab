// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/scales.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rankdiv/rng.hpp"

namespace rankdiv {

std::optional<int> bin_index(std::int64_t timestamp, const TemporalScale& scale) {
  if (timestamp < scale.origin)
    throw std::domain_error("timestamp before temporal origin");
  const std::int64_t dt = static_cast<std::int64_t>(scale.delta_t_hours) * 3600;
  const std::int64_t id = (timestamp - scale.origin) / dt;
  if (id >= scale.bin_count()) return std::nullopt;
  return static_cast<int>(id);
}

double haversine_km(GeoPoint a, GeoPoint b) {
  constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
  const double lat1 = a.lat * kDegToRad;
  const double lat2 = b.lat * kDegToRad;
  const double dlat = (b.lat - a.lat) * kDegToRad;
  const double dlon = (b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(dlat / 2.0);
  const double s2 = std::sin(dlon / 2.0);
  const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

std::vector<double> radius_series(int count) {
  std::vector<double> out;
  out.reserve(count);
  double r = 3.0;
  for (int m = 0; m < count; ++m, r *= 2.0) out.push_back(r);
  return out;
}

std::vector<std::size_t> filter_within(std::span<const CorpusRecord> records,
                                       const SpatialScale& scale) {
  std::vector<std::size_t> out;
  if (scale.country_cap) {
    out.resize(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) out[i] = i;
    return out;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    const GeoPoint p{records[i].latitude, records[i].longitude};
    if (haversine_km(scale.center, p) <= scale.radius_km) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> sample_without_replacement(std::span<const std::size_t> pool,
                                                    std::size_t n, std::uint64_t seed) {
  if (n > pool.size())
    throw std::invalid_argument("sample size exceeds population within radius");
  std::vector<std::size_t> shuffled(pool.begin(), pool.end());
  CounterRng rng(seed, 0x5a3);
  // Partial Fisher-Yates: only the first n positions need settling.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + rng.bounded(shuffled.size() - i);
    std::swap(shuffled[i], shuffled[j]);
  }
  shuffled.resize(n);
  std::sort(shuffled.begin(), shuffled.end());
  return shuffled;
}

}  // namespace rankdiv
