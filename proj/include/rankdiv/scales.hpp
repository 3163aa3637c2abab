// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rankdiv/record.hpp"

namespace rankdiv {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr int kAllowedDtHours[] = {3, 6, 12, 24, 48, 96};

struct TemporalScale {
  int delta_t_hours = 24;
  std::int64_t origin = 0;
  double span_hours = 0.0;

  // Trailing partial bin is dropped.
  int bin_count() const {
    return static_cast<int>(span_hours / delta_t_hours);
  }
};

// floor((ts - origin) / dt). nullopt for the dropped partial bin; throws
// std::domain_error for ts before origin.
std::optional<int> bin_index(std::int64_t timestamp, const TemporalScale& scale);

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

double haversine_km(GeoPoint a, GeoPoint b);

struct SpatialScale {
  GeoPoint center;
  double radius_km = 3.0;
  bool country_cap = false;  // whole country: no spatial filter
};

// 3, 6, 12, ... (3 * 2^m for m in [0, count))
std::vector<double> radius_series(int count);

// Indices (into `records`) whose distance from the center is <= radius_km;
// all indices when country_cap is set. Preserves input order.
std::vector<std::size_t> filter_within(std::span<const CorpusRecord> records,
                                       const SpatialScale& scale);

// Uniform n-subset without replacement via partial Fisher-Yates, returned
// sorted ascending. Throws std::invalid_argument if n > pool size.
std::vector<std::size_t> sample_without_replacement(std::span<const std::size_t> pool,
                                                    std::size_t n, std::uint64_t seed);

struct ScaleGrid {
  std::vector<int> grammatical;    // N values
  std::vector<double> spatial_km;  // radius values (largest may be country cap)
  std::vector<int> temporal_hours; // delta t values

  std::size_t cell_count() const {
    return grammatical.size() * spatial_km.size() * temporal_hours.size();
  }
};

}  // namespace rankdiv
