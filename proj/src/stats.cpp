// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/stats.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rankdiv {

std::string_view to_string(ScaleAxis a) {
  switch (a) {
    case ScaleAxis::Grammatical: return "grammatical";
    case ScaleAxis::Spatial: return "spatial";
    case ScaleAxis::Temporal: return "temporal";
  }
  return "?";
}

MuGrid::MuGrid(ScaleGrid axes, std::string country)
    : axes_(std::move(axes)), country_(std::move(country)) {
  if (axes_.grammatical.empty() || axes_.spatial_km.empty() || axes_.temporal_hours.empty())
    throw std::invalid_argument("MuGrid axes must be non-empty");
  mu_.resize(axes_.cell_count(), 0.0);
  set_.resize(axes_.cell_count(), false);
}

std::size_t MuGrid::index(std::size_t i, std::size_t j, std::size_t s) const {
  if (i >= axes_.grammatical.size() || j >= axes_.spatial_km.size() ||
      s >= axes_.temporal_hours.size())
    throw std::out_of_range("MuGrid cell out of range");
  return (i * axes_.spatial_km.size() + j) * axes_.temporal_hours.size() + s;
}

void MuGrid::set(std::size_t i, std::size_t j, std::size_t s, double mu) {
  const auto idx = index(i, j, s);
  mu_[idx] = mu;
  set_[idx] = true;
}

double MuGrid::at(std::size_t i, std::size_t j, std::size_t s) const {
  return mu_[index(i, j, s)];
}

bool MuGrid::complete() const {
  for (bool b : set_)
    if (!b) return false;
  return true;
}

void MuGrid::require_complete() const {
  if (!complete()) throw std::invalid_argument("MuGrid has unset cells");
}

namespace {

double cell_for(const MuGrid& g, ScaleAxis axis, std::size_t a, std::size_t b,
                std::size_t s) {
  switch (axis) {
    case ScaleAxis::Grammatical: return g.at(s, a, b);
    case ScaleAxis::Spatial: return g.at(a, s, b);
    case ScaleAxis::Temporal: return g.at(a, b, s);
  }
  return 0.0;
}

}  // namespace

double eta(const MuGrid& grid, ScaleAxis axis) {
  grid.require_complete();
  const auto& ax = grid.axes();
  std::size_t len_a, len_b, len_sel;
  switch (axis) {
    case ScaleAxis::Grammatical:
      len_sel = ax.grammatical.size();
      len_a = ax.spatial_km.size();
      len_b = ax.temporal_hours.size();
      break;
    case ScaleAxis::Spatial:
      len_sel = ax.spatial_km.size();
      len_a = ax.grammatical.size();
      len_b = ax.temporal_hours.size();
      break;
    case ScaleAxis::Temporal:
      len_sel = ax.temporal_hours.size();
      len_a = ax.grammatical.size();
      len_b = ax.spatial_km.size();
      break;
  }
  if (len_sel < 2) throw std::invalid_argument("eta needs >= 2 values on the axis");

  double sum_sd = 0.0;
  for (std::size_t a = 0; a < len_a; ++a) {
    for (std::size_t b = 0; b < len_b; ++b) {
      double mean = 0.0;
      for (std::size_t s = 0; s < len_sel; ++s) mean += cell_for(grid, axis, a, b, s);
      mean /= static_cast<double>(len_sel);
      double ss = 0.0;
      for (std::size_t s = 0; s < len_sel; ++s) {
        const double dmu = cell_for(grid, axis, a, b, s) - mean;
        ss += dmu * dmu;
      }
      sum_sd += std::sqrt(ss / static_cast<double>(len_sel - 1));
    }
  }
  return sum_sd / static_cast<double>(len_a * len_b);
}

RelevanceReport relevance(const MuGrid& grid) {
  RelevanceReport r;
  r.country = grid.country();
  r.eta_grammatical = eta(grid, ScaleAxis::Grammatical);
  r.eta_spatial = eta(grid, ScaleAxis::Spatial);
  r.eta_temporal = eta(grid, ScaleAxis::Temporal);
  return r;
}

void build_design(const MuGrid& grid, RegressionKind kind,
                  Eigen::MatrixXd& design, Eigen::VectorXd& response,
                  SpatialPredictor spatial) {
  grid.require_complete();
  const auto& ax = grid.axes();
  const auto rows = static_cast<Eigen::Index>(grid.cell_count());
  const Eigen::Index cols = kind == RegressionKind::Linear ? 4 : 7;
  design.resize(rows, cols);
  response.resize(rows);

  Eigen::Index row = 0;
  for (std::size_t i = 0; i < ax.grammatical.size(); ++i) {
    for (std::size_t j = 0; j < ax.spatial_km.size(); ++j) {
      for (std::size_t s = 0; s < ax.temporal_hours.size(); ++s, ++row) {
        const double x1 = std::log10(static_cast<double>(ax.grammatical[i]));
        const double x2 = spatial == SpatialPredictor::Log10
                              ? std::log10(ax.spatial_km[j])
                              : ax.spatial_km[j];
        const double x3 = std::log10(static_cast<double>(ax.temporal_hours[s]));
        design(row, 0) = 1.0;
        design(row, 1) = x1;
        design(row, 2) = x2;
        design(row, 3) = x3;
        if (kind == RegressionKind::Multiplicative) {
          design(row, 4) = x1 * x2;
          design(row, 5) = x1 * x3;
          design(row, 6) = x2 * x3;
        }
        response[row] = grid.at(i, j, s);
      }
    }
  }
}

RegressionReport ols_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                         RegressionKind kind) {
  const auto h = design.rows();
  const auto l = design.cols();
  if (h != response.size()) throw std::invalid_argument("design/response size mismatch");
  if (h <= l) throw std::invalid_argument("need more observations than parameters");

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < l) {
    const auto bad = qr.colsPermutation().indices()[l - 1];
    throw std::invalid_argument("rank-deficient design, column " + std::to_string(bad));
  }

  RegressionReport rep;
  rep.kind = kind;
  rep.observations = static_cast<int>(h);
  rep.parameters = static_cast<int>(l);
  rep.beta = qr.solve(response);

  const Eigen::VectorXd residuals = response - design * rep.beta;
  rep.rss = residuals.squaredNorm();
  const double mean_y = response.mean();
  const double tss = (response.array() - mean_y).square().sum();
  rep.df1 = static_cast<int>(l) - 1;
  rep.df2 = static_cast<int>(h - l);
  const double s2 = rep.rss / rep.df2;

  const Eigen::MatrixXd xtx_inv =
      (design.transpose() * design).ldlt().solve(Eigen::MatrixXd::Identity(l, l));
  rep.se.resize(l);
  rep.t.resize(l);
  rep.p.resize(l);
  for (Eigen::Index c = 0; c < l; ++c) {
    rep.se[c] = std::sqrt(s2 * xtx_inv(c, c));
    rep.t[c] = rep.beta[c] / rep.se[c];
    rep.p[c] = 2.0 * (1.0 - t_cdf(std::abs(rep.t[c]), rep.df2));
  }
  rep.r_squared = tss > 0.0 ? 1.0 - rep.rss / tss : 1.0;
  rep.f_statistic = ((tss - rep.rss) / rep.df1) / s2;
  rep.f_p_value = 1.0 - f_cdf(rep.f_statistic, rep.df1, rep.df2);

  rep.terms = {"beta0", "beta1", "beta2", "beta3"};
  if (l == 7) {
    rep.terms.push_back("beta4");
    rep.terms.push_back("beta5");
    rep.terms.push_back("beta6");
  } else {
    rep.terms.resize(static_cast<std::size_t>(l));
  }
  return rep;
}

namespace {

// ln Gamma via Lanczos.
double lgamma_pos(double x) { return std::lgamma(x); }

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("incomplete_beta needs a,b > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = lgamma_pos(a + b) - lgamma_pos(a) - lgamma_pos(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  // Symmetry switch keeps the continued fraction in its fast-converging region.
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double t_cdf(double x, int df) {
  if (df < 1) throw std::invalid_argument("t_cdf needs df >= 1");
  if (x == 0.0) return 0.5;
  const double v = static_cast<double>(df);
  const double ib = incomplete_beta(v / 2.0, 0.5, v / (v + x * x));
  return x > 0.0 ? 1.0 - 0.5 * ib : 0.5 * ib;
}

double f_cdf(double x, int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("f_cdf needs d1,d2 >= 1");
  if (x <= 0.0) return 0.0;
  const double a = static_cast<double>(d1);
  const double b = static_cast<double>(d2);
  return incomplete_beta(a / 2.0, b / 2.0, a * x / (a * x + b));
}

std::string format_p_value(double p) {
  if (p < 2.2e-16) return "<2.2e-16";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

}  // namespace rankdiv
