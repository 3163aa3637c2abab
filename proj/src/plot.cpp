// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rankdiv {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  if (std::abs(v - std::round(v)) < 1e-9)
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
  else
    std::snprintf(buf, sizeof buf, "%.2g", v);
  return buf;
}

struct Frame {
  double x0, y0, w, h;       // pixel box
  double xmin, xmax, ymin, ymax;  // data box

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
  double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void open_svg(std::string& s, int w, int h) {
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
  s += std::to_string(w);
  s += "\" height=\"";
  s += std::to_string(h);
  s += "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void text(std::string& s, double x, double y, const std::string& str,
          const char* anchor = "start", int size = 12) {
  s += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"" +
       std::to_string(size) + "\" font-family=\"sans-serif\" text-anchor=\"" + anchor +
       "\">" + str + "</text>\n";
}

void line(std::string& s, double x1, double y1, double x2, double y2,
          const char* stroke = "#333", double width = 1.0) {
  s += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
       "\" y2=\"" + fmt(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
       fmt(width) + "\"/>\n";
}

// Axes with log10 ticks on x (decades) and linear ticks on y.
void draw_axes(std::string& s, const Frame& f, const std::string& xlabel,
               const std::string& ylabel, bool log_x) {
  line(s, f.x0, f.y0 + f.h, f.x0 + f.w, f.y0 + f.h);
  line(s, f.x0, f.y0, f.x0, f.y0 + f.h);
  if (log_x) {
    for (int e = static_cast<int>(std::ceil(f.xmin)); e <= std::floor(f.xmax); ++e) {
      const double x = f.px(e);
      line(s, x, f.y0 + f.h, x, f.y0 + f.h + 4);
      text(s, x, f.y0 + f.h + 16, "10^" + std::to_string(e), "middle", 10);
    }
  } else {
    for (int i = 0; i <= 4; ++i) {
      const double v = f.xmin + (f.xmax - f.xmin) * i / 4.0;
      const double x = f.px(v);
      line(s, x, f.y0 + f.h, x, f.y0 + f.h + 4);
      text(s, x, f.y0 + f.h + 16, fmt_tick(v), "middle", 10);
    }
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = f.ymin + (f.ymax - f.ymin) * i / 4.0;
    const double y = f.py(v);
    line(s, f.x0 - 4, y, f.x0, y);
    text(s, f.x0 - 8, y + 4, fmt_tick(v), "end", 10);
  }
  text(s, f.x0 + f.w / 2, f.y0 + f.h + 34, xlabel, "middle");
  s += "<text x=\"" + fmt(f.x0 - 36) + "\" y=\"" + fmt(f.y0 + f.h / 2) +
       "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\" transform=\"rotate(-90 " +
       fmt(f.x0 - 36) + " " + fmt(f.y0 + f.h / 2) + ")\">" + ylabel + "</text>\n";
}

void polyline(std::string& s, const std::vector<std::pair<double, double>>& pts,
              const char* stroke) {
  if (pts.empty()) return;
  s += "<polyline fill=\"none\" stroke=\"";
  s += stroke;
  s += "\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts) {
    s += fmt(x);
    s += ',';
    s += fmt(y);
    s += ' ';
  }
  if (s.back() == ' ') s.pop_back();
  s += "\"/>\n";
}

void legend(std::string& s, const Frame& f, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double y = f.y0 + 14 + 16 * static_cast<double>(i);
    line(s, f.x0 + f.w - 110, y - 4, f.x0 + f.w - 92, y - 4,
         kPalette[i % kPaletteSize], 2.0);
    text(s, f.x0 + f.w - 88, y, labels[i], "start", 11);
  }
}

}  // namespace

std::string plot_diversity_curves(const std::vector<LabeledCurve>& curves,
                                  const std::string& title) {
  if (curves.empty()) throw std::invalid_argument("no curves to plot");
  const int w = 640, h = 480;
  Frame f{60, 40, w - 190.0, h - 110.0, 0, 1, 0, 1};
  for (const auto& c : curves)
    f.xmax = std::max(f.xmax, std::log10(std::max(2, c.curve.k_max)));

  std::string s;
  open_svg(s, w, h);
  text(s, w / 2.0, 24, title, "middle", 14);
  draw_axes(s, f, "rank k (log scale)", "d(k)", /*log_x=*/true);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    std::vector<std::pair<double, double>> pts;
    for (int k = 1; k <= curves[i].curve.k_max; ++k)
      pts.emplace_back(f.px(std::log10(static_cast<double>(k))),
                       f.py(curves[i].curve.d(k)));
    polyline(s, pts, kPalette[i % kPaletteSize]);
    labels.push_back(curves[i].label);
  }
  legend(s, f, labels);
  s += "</svg>\n";
  return s;
}

std::string plot_mu_panels(const std::vector<MuGrid>& grids, MuPanelAxis axis) {
  if (grids.empty()) throw std::invalid_argument("no grids to plot");
  const auto& ax0 = grids.front().axes();
  const int cols = static_cast<int>(ax0.grammatical.size());
  const int rows = static_cast<int>(grids.size());
  const int pw = 190, ph = 160;
  const int w = 70 + cols * pw, h = 60 + rows * ph;

  std::string s;
  open_svg(s, w, h);
  const char* xlabel = axis == MuPanelAxis::Temporal ? "dt (h, log)" : "radius (km, log)";
  text(s, w / 2.0, 20, std::string("mu vs ") + xlabel, "middle", 14);

  for (int r = 0; r < rows; ++r) {
    const auto& grid = grids[r];
    const auto& ax = grid.axes();
    double mu_min = 1e300, mu_max = -1e300;
    for (std::size_t i = 0; i < ax.grammatical.size(); ++i)
      for (std::size_t j = 0; j < ax.spatial_km.size(); ++j)
        for (std::size_t t = 0; t < ax.temporal_hours.size(); ++t) {
          mu_min = std::min(mu_min, grid.at(i, j, t));
          mu_max = std::max(mu_max, grid.at(i, j, t));
        }
    if (mu_max <= mu_min) mu_max = mu_min + 1;

    for (int c = 0; c < cols && c < static_cast<int>(ax.grammatical.size()); ++c) {
      Frame f{70.0 + c * pw, 40.0 + r * ph, pw - 40.0, ph - 55.0, 0, 1, mu_min, mu_max};
      const auto& sel = axis == MuPanelAxis::Temporal
                            ? std::vector<double>(ax.temporal_hours.begin(),
                                                  ax.temporal_hours.end())
                            : ax.spatial_km;
      f.xmin = std::log10(sel.front());
      f.xmax = std::log10(sel.back());
      if (f.xmax <= f.xmin) f.xmax = f.xmin + 1;
      s += "<g class=\"panel\" data-country=\"" + grid.country() + "\" data-ngram=\"" +
           std::to_string(ax.grammatical[c]) + "\">\n";
      draw_axes(s, f, xlabel, "mu", /*log_x=*/true);
      text(s, f.x0 + f.w / 2, f.y0 - 4,
           grid.country() + " N=" + std::to_string(ax.grammatical[c]), "middle", 10);
      // one series per value of the non-plotted axis
      const std::size_t other = axis == MuPanelAxis::Temporal ? ax.spatial_km.size()
                                                              : ax.temporal_hours.size();
      for (std::size_t o = 0; o < other; ++o) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t v = 0; v < sel.size(); ++v) {
          const double mu = axis == MuPanelAxis::Temporal ? grid.at(c, o, v)
                                                          : grid.at(c, v, o);
          pts.emplace_back(f.px(std::log10(sel[v])), f.py(mu));
        }
        polyline(s, pts, kPalette[o % kPaletteSize]);
      }
      s += "</g>\n";
    }
  }
  s += "</svg>\n";
  return s;
}

std::string plot_eta_bars(const std::vector<RelevanceReport>& reports) {
  if (reports.empty()) throw std::invalid_argument("no relevance reports to plot");
  const int w = 520, h = 360;
  double eta_max = 0;
  for (const auto& r : reports)
    eta_max = std::max({eta_max, r.eta_grammatical, r.eta_spatial, r.eta_temporal});
  if (eta_max <= 0) eta_max = 1;
  Frame f{70, 40, w - 120.0, h - 110.0, 0, 1, 0, eta_max * 1.1};

  std::string s;
  open_svg(s, w, h);
  text(s, w / 2.0, 24, "Scale relevance", "middle", 14);
  line(s, f.x0, f.y0 + f.h, f.x0 + f.w, f.y0 + f.h);
  line(s, f.x0, f.y0, f.x0, f.y0 + f.h);
  for (int i = 0; i <= 4; ++i) {
    const double v = f.ymax * i / 4.0;
    text(s, f.x0 - 8, f.py(v) + 4, fmt_tick(v), "end", 10);
    line(s, f.x0 - 4, f.py(v), f.x0, f.py(v));
  }
  const int groups = static_cast<int>(reports.size());
  const double group_w = f.w / groups;
  for (int g = 0; g < groups; ++g) {
    const double etas[3] = {reports[g].eta_grammatical, reports[g].eta_spatial,
                            reports[g].eta_temporal};
    const char* names[3] = {"grammatical", "spatial", "temporal"};
    const double bar_w = group_w / 4.0;
    for (int b = 0; b < 3; ++b) {
      const double x = f.x0 + g * group_w + (b + 0.5) * bar_w;
      const double y = f.py(etas[b]);
      s += "<rect class=\"eta-bar\" data-axis=\"" + std::string(names[b]) +
           "\" data-value=\"" + fmt(etas[b]) + "\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
           "\" width=\"" + fmt(bar_w * 0.8) + "\" height=\"" + fmt(f.y0 + f.h - y) +
           "\" fill=\"" + kPalette[b] + "\"/>\n";
    }
    text(s, f.x0 + (g + 0.5) * group_w, f.y0 + f.h + 18, reports[g].country, "middle", 11);
  }
  legend(s, f, {"grammatical", "spatial", "temporal"});
  s += "</svg>\n";
  return s;
}

std::string plot_trajectories(const std::vector<RankTrajectory>& trajectories,
                              const std::string& title) {
  if (trajectories.empty()) throw std::invalid_argument("no trajectories to plot");
  const int w = 640, h = 480;
  double rank_max = 1, bins = 1;
  for (const auto& t : trajectories) {
    bins = std::max(bins, static_cast<double>(t.ranks.size()));
    for (const auto& r : t.ranks)
      if (r) rank_max = std::max(rank_max, static_cast<double>(*r));
  }
  Frame f{60, 40, w - 190.0, h - 110.0, 0, std::max(1.0, bins - 1), 0,
          std::log10(rank_max) + 0.1};

  std::string s;
  open_svg(s, w, h);
  text(s, w / 2.0, 24, title, "middle", 14);
  draw_axes(s, f, "time bin", "rank (log scale)", /*log_x=*/false);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    // absence breaks the line into segments
    std::vector<std::pair<double, double>> pts;
    for (std::size_t b = 0; b < trajectories[i].ranks.size(); ++b) {
      if (trajectories[i].ranks[b]) {
        pts.emplace_back(f.px(static_cast<double>(b)),
                         f.py(std::log10(static_cast<double>(*trajectories[i].ranks[b]))));
      } else {
        polyline(s, pts, kPalette[i % kPaletteSize]);
        pts.clear();
      }
    }
    polyline(s, pts, kPalette[i % kPaletteSize]);
    labels.push_back(trajectories[i].surface);
  }
  legend(s, f, labels);
  s += "</svg>\n";
  return s;
}

std::string plot_token_diversity(const std::vector<LabeledCurve>& curves) {
  return plot_diversity_curves(curves, "Rank diversity by token class");
}

}  // namespace rankdiv
