// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "rankdiv/stats.hpp"

using namespace rankdiv;

namespace {

ScaleGrid mexico_axes() {
  ScaleGrid ax;
  ax.grammatical = {1, 2, 3, 4, 5};
  ax.spatial_km = {3, 6, 12, 24, 48, 96, 192, 384, 768, 1536};
  ax.temporal_hours = {3, 6, 12, 24, 48, 96};
  return ax;
}

MuGrid random_grid(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.5, 3.5);
  MuGrid grid(mexico_axes(), "mx");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      for (std::size_t s = 0; s < 6; ++s) grid.set(i, j, s, u(rng));
  return grid;
}

// Triple-loop oracle for eta, written against the axis layout directly.
double eta_oracle(const MuGrid& g, ScaleAxis axis) {
  const auto& ax = g.axes();
  const std::size_t ni = ax.grammatical.size();
  const std::size_t nj = ax.spatial_km.size();
  const std::size_t ns = ax.temporal_hours.size();
  double total = 0;
  std::size_t pairs = 0;
  auto sd = [](const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= v.size();
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (v.size() - 1));
  };
  if (axis == ScaleAxis::Grammatical) {
    for (std::size_t j = 0; j < nj; ++j)
      for (std::size_t s = 0; s < ns; ++s) {
        std::vector<double> v;
        for (std::size_t i = 0; i < ni; ++i) v.push_back(g.at(i, j, s));
        total += sd(v);
        ++pairs;
      }
  } else if (axis == ScaleAxis::Spatial) {
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t s = 0; s < ns; ++s) {
        std::vector<double> v;
        for (std::size_t j = 0; j < nj; ++j) v.push_back(g.at(i, j, s));
        total += sd(v);
        ++pairs;
      }
  } else {
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t j = 0; j < nj; ++j) {
        std::vector<double> v;
        for (std::size_t s = 0; s < ns; ++s) v.push_back(g.at(i, j, s));
        total += sd(v);
        ++pairs;
      }
  }
  return total / pairs;
}

}  // namespace

TEST_CASE("constant grid has zero eta on all axes") {
  MuGrid grid(mexico_axes(), "mx");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      for (std::size_t s = 0; s < 6; ++s) grid.set(i, j, s, 1.7);
  for (auto axis : {ScaleAxis::Grammatical, ScaleAxis::Spatial, ScaleAxis::Temporal})
    CHECK(eta(grid, axis) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("two-value axis with constant delta gives delta over sqrt 2") {
  ScaleGrid ax;
  ax.grammatical = {1, 2};
  ax.spatial_km = {3, 6, 12};
  ax.temporal_hours = {24, 48};
  MuGrid grid(ax, "t");
  const double delta = 0.8;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t s = 0; s < 2; ++s) {
      grid.set(0, j, s, 1.0);
      grid.set(1, j, s, 1.0 + delta);
    }
  CHECK(eta(grid, ScaleAxis::Grammatical) ==
        doctest::Approx(delta / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("eta equals the triple-loop oracle") {
  for (unsigned seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto grid = random_grid(seed);
    for (auto axis : {ScaleAxis::Grammatical, ScaleAxis::Spatial, ScaleAxis::Temporal})
      CHECK(std::abs(eta(grid, axis) - eta_oracle(grid, axis)) < 1e-12);
  }
}

TEST_CASE("eta invariances") {
  const auto grid = random_grid(9);
  const double base = eta(grid, ScaleAxis::Temporal);

  // shift invariance
  MuGrid shifted = grid;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      for (std::size_t s = 0; s < 6; ++s) shifted.set(i, j, s, grid.at(i, j, s) + 4.2);
  CHECK(eta(shifted, ScaleAxis::Temporal) == doctest::Approx(base).epsilon(1e-12));

  // scaling by c > 0 scales eta by c
  MuGrid scaled = grid;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      for (std::size_t s = 0; s < 6; ++s) scaled.set(i, j, s, grid.at(i, j, s) * 2.5);
  CHECK(eta(scaled, ScaleAxis::Temporal) == doctest::Approx(2.5 * base).epsilon(1e-12));

  // permuting the non-selected axes leaves eta unchanged
  MuGrid permuted = grid;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 10; ++j)
      for (std::size_t s = 0; s < 6; ++s)
        permuted.set(4 - i, 9 - j, s, grid.at(i, j, s));
  CHECK(eta(permuted, ScaleAxis::Temporal) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("eta rejects single-value axes and incomplete grids") {
  ScaleGrid ax;
  ax.grammatical = {1};
  ax.spatial_km = {3, 6};
  ax.temporal_hours = {24, 48};
  MuGrid grid(ax, "t");
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t s = 0; s < 2; ++s) grid.set(0, j, s, 1.0);
  CHECK_THROWS_AS(eta(grid, ScaleAxis::Grammatical), std::invalid_argument);

  MuGrid incomplete(mexico_axes(), "mx");
  incomplete.set(0, 0, 0, 1.0);
  CHECK_THROWS_AS(eta(incomplete, ScaleAxis::Temporal), std::invalid_argument);
}

TEST_CASE("design matrix shapes and values") {
  const auto grid = random_grid(3);
  Eigen::MatrixXd design;
  Eigen::VectorXd response;
  build_design(grid, RegressionKind::Linear, design, response);
  CHECK(design.rows() == 300);
  CHECK(design.cols() == 4);
  build_design(grid, RegressionKind::Multiplicative, design, response);
  CHECK(design.cols() == 7);
  // first cell is (N=1, r=3, dt=3): X1 = log10(1) = 0
  CHECK(design(0, 1) == doctest::Approx(0.0));
  CHECK(design(0, 2) == doctest::Approx(std::log10(3.0)));
  CHECK(design(0, 3) == doctest::Approx(std::log10(3.0)));
  CHECK(design(0, 4) == doctest::Approx(design(0, 1) * design(0, 2)));

  build_design(grid, RegressionKind::Linear, design, response, SpatialPredictor::Linear);
  CHECK(design(0, 2) == doctest::Approx(3.0));
}

TEST_CASE("exact interpolation gives zero residual") {
  Eigen::MatrixXd design(10, 2);
  Eigen::VectorXd y(10);
  for (int i = 0; i < 10; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = i;
    y[i] = 2.0 * i;
  }
  const auto rep = ols_fit(design, y);
  CHECK(std::abs(rep.beta[0]) < 1e-12);
  CHECK(rep.beta[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rep.rss < 1e-20);
}

TEST_CASE("simple regression matches closed form") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-2, 2);
  Eigen::MatrixXd design(10, 2);
  Eigen::VectorXd y(10);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < 10; ++i) {
    const double x = u(rng);
    const double v = 0.7 + 1.9 * x + u(rng) * 0.1;
    design(i, 0) = 1.0;
    design(i, 1) = x;
    y[i] = v;
    sx += x; sy += v; sxx += x * x; sxy += x * v;
  }
  const double n = 10;
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  const auto rep = ols_fit(design, y);
  CHECK(std::abs(rep.beta[1] - slope) < 1e-10);
  CHECK(std::abs(rep.beta[0] - intercept) < 1e-10);
}

TEST_CASE("synthetic multivariate recovery with noise") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> ux(-1, 1);
  std::uniform_real_distribution<double> ue(-0.01, 0.01);
  const int h = 300;
  Eigen::MatrixXd design(h, 3);
  Eigen::VectorXd y(h);
  for (int i = 0; i < h; ++i) {
    const double x1 = ux(rng), x2 = ux(rng);
    design(i, 0) = 1.0;
    design(i, 1) = x1;
    design(i, 2) = x2;
    y[i] = 1.0 + 2.0 * x1 + 3.0 * x2 + ue(rng);
  }
  const auto rep = ols_fit(design, y);
  CHECK(std::abs(rep.beta[0] - 1.0) <= 3 * rep.se[0]);
  CHECK(std::abs(rep.beta[1] - 2.0) <= 3 * rep.se[1]);
  CHECK(std::abs(rep.beta[2] - 3.0) <= 3 * rep.se[2]);
  CHECK(rep.f_p_value < 1e-6);
  CHECK(rep.r_squared > 0.99);
}

TEST_CASE("residuals are orthogonal to the design columns") {
  const auto grid = random_grid(15);
  Eigen::MatrixXd design;
  Eigen::VectorXd y;
  build_design(grid, RegressionKind::Multiplicative, design, y);
  const auto rep = ols_fit(design, y, RegressionKind::Multiplicative);
  const Eigen::VectorXd resid = y - design * rep.beta;
  for (int c = 0; c < design.cols(); ++c)
    CHECK(std::abs(design.col(c).dot(resid)) < 1e-8 * design.rows());
}

TEST_CASE("linear model equals multiplicative with interaction columns removed") {
  const auto grid = random_grid(21);
  Eigen::MatrixXd d_lin, d_mul;
  Eigen::VectorXd y1, y2;
  build_design(grid, RegressionKind::Linear, d_lin, y1);
  build_design(grid, RegressionKind::Multiplicative, d_mul, y2);
  const auto lin = ols_fit(d_lin, y1);
  const auto trimmed = ols_fit(d_mul.leftCols(4), y2);
  for (int c = 0; c < 4; ++c) {
    CHECK(lin.beta[c] == doctest::Approx(trimmed.beta[c]).epsilon(1e-12));
    CHECK(lin.t[c] == doctest::Approx(trimmed.t[c]).epsilon(1e-12));
  }
  CHECK(lin.f_statistic == doctest::Approx(trimmed.f_statistic).epsilon(1e-12));
}

TEST_CASE("shift in response moves only the intercept") {
  const auto grid = random_grid(33);
  Eigen::MatrixXd design;
  Eigen::VectorXd y;
  build_design(grid, RegressionKind::Linear, design, y);
  const auto base = ols_fit(design, y);
  const Eigen::VectorXd y2 = y.array() + 5.0;
  const auto shifted = ols_fit(design, y2);
  CHECK(shifted.beta[0] == doctest::Approx(base.beta[0] + 5.0).epsilon(1e-10));
  for (int c = 1; c < 4; ++c)
    CHECK(shifted.beta[c] == doctest::Approx(base.beta[c]).epsilon(1e-9));
}

TEST_CASE("ols rejects bad shapes") {
  Eigen::MatrixXd design(3, 4);
  design.setOnes();
  Eigen::VectorXd y(3);
  y.setZero();
  CHECK_THROWS_AS(ols_fit(design, y), std::invalid_argument);  // H <= l

  Eigen::MatrixXd collinear(10, 3);
  Eigen::VectorXd y2(10);
  for (int i = 0; i < 10; ++i) {
    collinear(i, 0) = 1.0;
    collinear(i, 1) = i;
    collinear(i, 2) = 2.0 * i;  // duplicate direction
    y2[i] = i;
  }
  CHECK_THROWS_AS(ols_fit(collinear, y2), std::invalid_argument);
}

TEST_CASE("t and f cdf symmetry and reference values") {
  for (int df : {1, 5, 10, 100})
    CHECK(t_cdf(0.0, df) == doctest::Approx(0.5).epsilon(1e-10));
  for (int d : {1, 3, 10, 50})
    CHECK(f_cdf(1.0, d, d) == doctest::Approx(0.5).epsilon(1e-10));
  // frozen references from standard statistical tables
  CHECK(t_cdf(2.0, 10) == doctest::Approx(0.9633059826146297).epsilon(1e-6));
  CHECK(t_cdf(1.812461, 10) == doctest::Approx(0.95).epsilon(1e-6));
  CHECK(f_cdf(3.708, 3, 326) == doctest::Approx(0.9880289925323683).epsilon(1e-6));
  CHECK(t_cdf(-2.0, 10) == doctest::Approx(1.0 - 0.9633059826146297).epsilon(1e-6));
  CHECK_THROWS_AS(t_cdf(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(f_cdf(1.0, 0, 5), std::invalid_argument);
}

TEST_CASE("p-value formatting convention") {
  CHECK(format_p_value(1e-20) == "<2.2e-16");
  CHECK(format_p_value(0.04) == "0.04");
}
