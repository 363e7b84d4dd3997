#include "ppnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ppnet {

Window::Window(double x0, double x1, double y0, double y1)
    : x_min(x0), x_max(x1), y_min(y0), y_max(y1) {
  if (!(std::isfinite(x0) && std::isfinite(x1) && std::isfinite(y0) && std::isfinite(y1))) {
    throw std::invalid_argument("window coordinates must be finite");
  }
  if (!(x_max > x_min && y_max > y_min)) {
    throw std::invalid_argument("window requires x_max > x_min and y_max > y_min");
  }
}

double Window::boundary_distance(const Point& p) const {
  const double dx = std::min(p.x - x_min, x_max - p.x);
  const double dy = std::min(p.y - y_min, y_max - p.y);
  return std::min(dx, dy);
}

PointPattern::PointPattern(std::vector<Point> points, Window window)
    : points_(std::move(points)), window_(window) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (!(std::isfinite(p.x) && std::isfinite(p.y))) {
      throw std::invalid_argument("point " + std::to_string(i) + " has non-finite coordinates");
    }
    if (!window_.contains(p)) {
      throw std::invalid_argument("point " + std::to_string(i) + " lies outside the window");
    }
  }
  // simple-process invariant: no exact duplicates
  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points_[a].x != points_[b].x) return points_[a].x < points_[b].x;
    return points_[a].y < points_[b].y;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Point& a = points_[order[i - 1]];
    const Point& b = points_[order[i]];
    if (a.x == b.x && a.y == b.y) {
      throw std::invalid_argument("pattern contains two points at identical coordinates");
    }
  }
}

std::size_t close_pair_count(std::span<const Point> points, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("close_pair_count: r must be >= 0");
  const double r2 = r * r;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (squared_distance(points[i], points[j]) <= r2) ++count;
    }
  }
  return count;
}

std::size_t close_pair_count(const PointPattern& pattern, double r) {
  return close_pair_count(pattern.points(), r);
}

std::size_t close_neighbour_count(const Point& u, std::span<const Point> points, double r) {
  if (!(r >= 0.0)) throw std::invalid_argument("close_neighbour_count: r must be >= 0");
  const double r2 = r * r;
  std::size_t count = 0;
  for (const Point& p : points) {
    if (p.x == u.x && p.y == u.y) continue;
    if (squared_distance(u, p) <= r2) ++count;
  }
  return count;
}

std::size_t close_neighbour_count(const Point& u, const PointPattern& pattern, double r) {
  return close_neighbour_count(u, pattern.points(), r);
}

std::size_t close_neighbour_count_strict(const Point& u, std::span<const Point> points, double r) {
  const double r2 = r * r;
  std::size_t count = 0;
  for (const Point& p : points) {
    if (p.x == u.x && p.y == u.y) continue;
    if (squared_distance(u, p) < r2) ++count;
  }
  return count;
}

bool has_close_pair_strict(std::span<const Point> points, double r) {
  const double r2 = r * r;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (squared_distance(points[i], points[j]) < r2) return true;
    }
  }
  return false;
}

double min_nn_distance(const PointPattern& pattern) {
  if (pattern.size() < 2) {
    throw std::invalid_argument("min_nn_distance requires at least 2 points");
  }
  double best = std::numeric_limits<double>::infinity();
  auto pts = pattern.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, squared_distance(pts[i], pts[j]));
    }
  }
  return std::sqrt(best);
}

}  // namespace ppnet
