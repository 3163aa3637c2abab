// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/fit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace rankdiv {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr int kBinsPerDecade = 25;
constexpr int kMaxIterations = 200;
constexpr int kMaxHalvings = 30;
constexpr double kStepTolerance = 1e-9;
}  // namespace

double gaussian_cdf(double z) { return 0.5 * std::erfc(-z / kSqrt2); }

double gaussian_pdf(double z) {
  constexpr double kInvSqrt2Pi = 0.39894228040143267794;
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double probit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("probit domain is (0,1)");
  // Acklam's rational approximation, then Halley refinement against the
  // erfc-based CDF; good to ~1e-15 over (0,1).
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    const double e = gaussian_cdf(x) - p;
    const double u = e / gaussian_pdf(x);
    x -= u / (1.0 + x * u / 2.0);
  }
  return x;
}

double sigmoid_eval(double mu, double sigma, double k) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  return gaussian_cdf((std::log10(k) - mu) / sigma);
}

SigmoidParams fit_sigmoid_points(std::span<const double> log10_k,
                                 std::span<const double> d,
                                 double clamp_lo, double clamp_hi) {
  const std::size_t n = log10_k.size();
  if (n != d.size()) throw std::invalid_argument("size mismatch");

  std::vector<double> dc(n);
  for (std::size_t i = 0; i < n; ++i)
    dc[i] = std::clamp(d[i], clamp_lo, clamp_hi);

  bool below = false, above = false;
  for (double v : dc) {
    below |= v < 0.5;
    above |= v > 0.5;
  }
  if (n < 8 || !below || !above)
    throw DegenerateCurveError("curve does not cross 1/2 with enough points");

  // Per-point weight: 1 / (points sharing its log-rank bin), so each occupied
  // bin carries unit total weight and dense high-rank decades do not dominate.
  std::map<long, int> bin_counts;
  std::vector<long> bin_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    bin_of[i] = static_cast<long>(std::floor(log10_k[i] * kBinsPerDecade));
    ++bin_counts[bin_of[i]];
  }
  Eigen::VectorXd w(n), x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = 1.0 / bin_counts[bin_of[i]];
    x[i] = log10_k[i];
    y[i] = d[i];
  }
  const double w_total = w.sum();

  // Probit-linearized start: Phi^-1(d) ~ (x - mu)/sigma.
  double mu, sigma;
  {
    double sw = 0, sx = 0, sz = 0, sxx = 0, sxz = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double z = probit(dc[i]);
      sw += w[i];
      sx += w[i] * x[i];
      sz += w[i] * z;
      sxx += w[i] * x[i] * x[i];
      sxz += w[i] * x[i] * z;
    }
    const double det = sw * sxx - sx * sx;
    const double slope = (sw * sxz - sx * sz) / det;
    const double intercept = (sz - slope * sx) / sw;
    if (std::isfinite(slope) && slope > 0.0) {
      sigma = 1.0 / slope;
      mu = -intercept * sigma;
    } else {
      mu = sx / sw;
      sigma = 1.0;
    }
  }

  auto loss_at = [&](double m, double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = gaussian_cdf((x[i] - m) / s) - y[i];
      acc += w[i] * r * r;
    }
    return acc;
  };

  double loss = loss_at(mu, sigma);
  bool converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    Eigen::Matrix2d jtj = Eigen::Matrix2d::Zero();
    Eigen::Vector2d jtr = Eigen::Vector2d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      const double z = (x[i] - mu) / sigma;
      const double phi = gaussian_pdf(z);
      const double r = gaussian_cdf(z) - y[i];
      Eigen::Vector2d j(-phi / sigma, -z * phi / sigma);
      jtj += w[i] * j * j.transpose();
      jtr += w[i] * r * j;
    }
    Eigen::Vector2d step = jtj.ldlt().solve(-jtr);
    if (!step.allFinite()) break;

    bool improved = false;
    for (int h = 0; h <= kMaxHalvings; ++h, step *= 0.5) {
      const double mu_try = mu + step[0];
      const double sigma_try = sigma + step[1];
      if (sigma_try <= 0.0) continue;
      const double loss_try = loss_at(mu_try, sigma_try);
      if (loss_try <= loss) {
        mu = mu_try;
        sigma = sigma_try;
        loss = loss_try;
        improved = true;
        if (step.norm() < kStepTolerance) converged = true;
        break;
      }
    }
    if (!improved) {
      converged = true;  // no descent direction left at this precision
      break;
    }
  }

  SigmoidParams params;
  params.mu = mu;
  params.sigma = sigma;
  params.rmse = std::sqrt(loss / w_total);
  params.n_points = static_cast<int>(bin_counts.size());
  if (!converged) params.flags |= SigmoidParams::kNotConverged;
  return params;
}

SigmoidParams fit_sigmoid(const RankDiversityCurve& curve) {
  std::vector<double> x, d;
  x.reserve(curve.k_max);
  d.reserve(curve.k_max);
  for (int k = 1; k <= curve.k_max; ++k) {
    x.push_back(std::log10(static_cast<double>(k)));
    d.push_back(curve.d(k));
  }
  const double lo = 1.0 / (2.0 * curve.bins);
  return fit_sigmoid_points(x, d, lo, 1.0 - lo);
}

}  // namespace rankdiv
