// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>

#include "rankdiv/rankdiv.hpp"

namespace rankdiv {

// Standard normal CDF/PDF and inverse CDF. gaussian_cdf is erfc-based,
// absolute error well under 1e-12.
double gaussian_cdf(double z);
double gaussian_pdf(double z);
double probit(double p);  // inverse of gaussian_cdf on (0, 1)

struct SigmoidParams {
  double mu = 0.0;     // log10-rank where the curve crosses 1/2
  double sigma = 1.0;  // > 0, log10-rank units
  double rmse = 0.0;
  int n_points = 0;    // occupied log-rank bins entering the fit
  std::uint32_t flags = 0;

  static constexpr std::uint32_t kNotConverged = 1u << 0;
};

// Phi((log10 k - mu) / sigma). Throws std::invalid_argument for sigma <= 0.
double sigmoid_eval(double mu, double sigma, double k);

struct DegenerateCurveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Least squares of Phi_{mu,sigma}(log10 k) against d(k), weighted so each
// log-rank bin (25 per decade) carries unit total weight. Initialization by
// probit regression on clamped d; refinement by damped Gauss-Newton.
// Throws DegenerateCurveError when the curve cannot pin down a crossing.
SigmoidParams fit_sigmoid(const RankDiversityCurve& curve);

// Same fit on explicit (log10 k, d) samples; fit_sigmoid delegates here.
// `clamp_lo`/`clamp_hi` bound d for the probit initialization only.
SigmoidParams fit_sigmoid_points(std::span<const double> log10_k,
                                 std::span<const double> d,
                                 double clamp_lo, double clamp_hi);

}  // namespace rankdiv
