// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rankdiv/scales.hpp"

namespace rankdiv {

enum class ScaleAxis { Grammatical, Spatial, Temporal };

std::string_view to_string(ScaleAxis a);

// mu per (grammatical i, spatial j, temporal s) cell. Dense and complete:
// any missing cell rejects the grid at construction.
class MuGrid {
 public:
  MuGrid(ScaleGrid axes, std::string country);

  void set(std::size_t i, std::size_t j, std::size_t s, double mu);
  double at(std::size_t i, std::size_t j, std::size_t s) const;
  bool complete() const;
  // throws std::invalid_argument when a cell is unset
  void require_complete() const;

  const ScaleGrid& axes() const { return axes_; }
  const std::string& country() const { return country_; }
  std::size_t cell_count() const { return axes_.cell_count(); }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t s) const;

  ScaleGrid axes_;
  std::string country_;
  std::vector<double> mu_;
  std::vector<bool> set_;
};

struct RelevanceReport {
  std::string country;
  double eta_grammatical = 0.0;
  double eta_spatial = 0.0;
  double eta_temporal = 0.0;
};

// Average over the other two axes of the sample standard deviation (N-1
// denominator) of mu along `axis`. Requires >= 2 values on the axis.
double eta(const MuGrid& grid, ScaleAxis axis);
RelevanceReport relevance(const MuGrid& grid);

enum class RegressionKind { Linear, Multiplicative };
enum class SpatialPredictor { Log10, Linear };

// Response mu per cell; predictors X1 = log10 N, X2 = radius (log10 or raw),
// X3 = log10 dt. Linear: [1, X1, X2, X3]; multiplicative appends the three
// pairwise products.
void build_design(const MuGrid& grid, RegressionKind kind,
                  Eigen::MatrixXd& design, Eigen::VectorXd& response,
                  SpatialPredictor spatial = SpatialPredictor::Log10);

struct RegressionReport {
  RegressionKind kind = RegressionKind::Linear;
  std::vector<std::string> terms;
  Eigen::VectorXd beta;
  Eigen::VectorXd se;
  Eigen::VectorXd t;
  Eigen::VectorXd p;  // two-sided
  double f_statistic = 0.0;
  int df1 = 0;  // l - 1
  int df2 = 0;  // H - l
  double f_p_value = 0.0;
  double r_squared = 0.0;
  double rss = 0.0;
  int observations = 0;  // H
  int parameters = 0;    // l
};

// Least squares via column-pivoted QR; throws std::invalid_argument on a
// rank-deficient design (naming the offending column) or H <= l.
RegressionReport ols_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                         RegressionKind kind = RegressionKind::Linear);

// Regularized incomplete beta I_x(a, b); continued fraction with the
// symmetry switch, 300-iteration cap.
double incomplete_beta(double a, double b, double x);

double t_cdf(double x, int df);
double f_cdf(double x, int d1, int d2);

// Matches the common table convention for vanishingly small p.
std::string format_p_value(double p);

}  // namespace rankdiv
