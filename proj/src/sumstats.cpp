#include "ppnet/sumstats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ppnet/errors.hpp"

namespace ppnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_grid(const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw std::invalid_argument("r_grid must be non-empty");
  if (r_grid.front() != 0.0) throw std::invalid_argument("r_grid must start at 0");
  for (std::size_t i = 1; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > r_grid[i - 1])) {
      throw std::invalid_argument("r_grid must be strictly increasing");
    }
  }
}

}  // namespace

std::string statistic_name(Statistic s) {
  switch (s) {
    case Statistic::K: return "K";
    case Statistic::L: return "L";
    case Statistic::G: return "G";
  }
  return "?";
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return grid;
}

double k_validity_bound(const Window& window) { return window.shorter_side() / 4.0; }

std::vector<double> default_r_grid(const Window& window, std::size_t n) {
  return linspace(0.0, k_validity_bound(window), n);
}

SummaryCurve estimate_K(const PointPattern& pattern, const std::vector<double>& r_grid) {
  check_grid(r_grid);
  const std::size_t n = pattern.size();
  if (n < 2) throw numeric_error("estimate_K requires at least 2 points");
  const Window& w = pattern.window();
  const double bound = k_validity_bound(w);
  if (r_grid.back() > bound + 1e-12) {
    throw std::invalid_argument("estimate_K: max r " + std::to_string(r_grid.back()) +
                                " exceeds validity bound min(side)/4 = " + std::to_string(bound));
  }

  // bin each unordered pair's translation-corrected contribution at its distance
  std::vector<double> bins(r_grid.size() + 1, 0.0);
  const double width = w.width();
  const double height = w.height();
  auto pts = pattern.points();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = std::abs(pts[i].x - pts[j].x);
      const double dy = std::abs(pts[i].y - pts[j].y);
      const double d = std::hypot(dx, dy);
      if (d > r_grid.back()) continue;
      const double weight = (width - dx) * (height - dy) / (width * height);
      // first grid index whose r covers this pair (ties at exactly r included)
      const auto it = std::lower_bound(r_grid.begin(), r_grid.end(), d);
      bins[static_cast<std::size_t>(it - r_grid.begin())] += 2.0 / weight;  // both orders
    }
  }

  SummaryCurve curve;
  curve.statistic = Statistic::K;
  curve.r_grid = r_grid;
  curve.correction = "translation";
  curve.n_points = n;
  curve.values.resize(r_grid.size());
  curve.defined.assign(r_grid.size(), 1);
  const double scale = w.area() / (static_cast<double>(n) * static_cast<double>(n));
  double cumulative = 0.0;
  for (std::size_t g = 0; g < r_grid.size(); ++g) {
    cumulative += bins[g];
    curve.values[g] = scale * cumulative;
  }
  return curve;
}

SummaryCurve K_to_L(const SummaryCurve& k_curve) {
  if (k_curve.statistic != Statistic::K) {
    throw std::invalid_argument("K_to_L expects a K curve");
  }
  SummaryCurve out = k_curve;
  out.statistic = Statistic::L;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    if (!out.defined[i]) continue;
    if (out.values[i] < 0.0) {
      throw std::invalid_argument("K_to_L: negative K value at grid index " + std::to_string(i));
    }
    out.values[i] = std::sqrt(out.values[i] / std::numbers::pi);
  }
  return out;
}

SummaryCurve estimate_L(const PointPattern& pattern, const std::vector<double>& r_grid) {
  return K_to_L(estimate_K(pattern, r_grid));
}

SummaryCurve estimate_G(const PointPattern& pattern, const std::vector<double>& r_grid) {
  check_grid(r_grid);
  const std::size_t n = pattern.size();
  if (n < 2) throw numeric_error("estimate_G requires at least 2 points");
  auto pts = pattern.points();
  const Window& w = pattern.window();

  std::vector<double> nn_dist(n, std::numeric_limits<double>::infinity());
  std::vector<double> border_dist(n);
  for (std::size_t i = 0; i < n; ++i) border_dist[i] = w.boundary_distance(pts[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = squared_distance(pts[i], pts[j]);
      nn_dist[i] = std::min(nn_dist[i], d2);
      nn_dist[j] = std::min(nn_dist[j], d2);
    }
  }
  for (double& d : nn_dist) d = std::sqrt(d);

  SummaryCurve curve;
  curve.statistic = Statistic::G;
  curve.r_grid = r_grid;
  curve.correction = "border";
  curve.n_points = n;
  curve.values.resize(r_grid.size());
  curve.defined.assign(r_grid.size(), 1);
  for (std::size_t g = 0; g < r_grid.size(); ++g) {
    const double r = r_grid[g];
    std::size_t qualifying = 0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (border_dist[i] >= r) {
        ++qualifying;
        if (nn_dist[i] <= r) ++hits;
      }
    }
    if (qualifying == 0) {
      curve.values[g] = kNaN;
      curve.defined[g] = 0;
    } else {
      curve.values[g] = static_cast<double>(hits) / static_cast<double>(qualifying);
    }
  }
  return curve;
}

double theoretical_G_poisson(double lambda, double r) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("theoretical_G_poisson: lambda must be >= 0");
  if (!(r >= 0.0)) throw std::invalid_argument("theoretical_G_poisson: r must be >= 0");
  return 1.0 - std::exp(-std::numbers::pi * lambda * r * r);
}

void save_curve(const SummaryCurve& curve, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot open curve file for writing: " + path.string());
  out << "# statistic " << statistic_name(curve.statistic) << " correction " << curve.correction
      << " n_points " << curve.n_points << "\n";
  out << "r,value,defined\n";
  char buf[96];
  for (std::size_t i = 0; i < curve.r_grid.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d\n", curve.r_grid[i],
                  curve.defined[i] ? curve.values[i] : kNaN, curve.defined[i] ? 1 : 0);
    out << buf;
  }
  if (!out) throw data_error("write failed: " + path.string());
}

SummaryCurve load_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open curve file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw data_error(path.string() + ": empty file");
  std::istringstream meta(line);
  std::string hash, k1, stat, k2, corr, k3;
  std::size_t n_points = 0;
  meta >> hash >> k1 >> stat >> k2 >> corr >> k3 >> n_points;
  if (hash != "#" || k1 != "statistic" || k2 != "correction" || k3 != "n_points") {
    throw data_error(path.string() + ":1: bad metadata line");
  }
  SummaryCurve curve;
  if (stat == "K") curve.statistic = Statistic::K;
  else if (stat == "L") curve.statistic = Statistic::L;
  else if (stat == "G") curve.statistic = Statistic::G;
  else throw data_error(path.string() + ":1: unknown statistic '" + stat + "'");
  curve.correction = corr;
  curve.n_points = n_points;

  if (!std::getline(in, line) || (line != "r,value,defined" && line != "r,value,defined\r")) {
    throw data_error(path.string() + ":2: expected header 'r,value,defined'");
  }
  std::size_t lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double r, v;
    int def;
    if (std::sscanf(line.c_str(), "%lg,%lg,%d", &r, &v, &def) != 3) {
      throw data_error(path.string() + ":" + std::to_string(lineno) + ": malformed row");
    }
    curve.r_grid.push_back(r);
    curve.values.push_back(def ? v : kNaN);
    curve.defined.push_back(def ? 1 : 0);
  }
  return curve;
}

}  // namespace ppnet
