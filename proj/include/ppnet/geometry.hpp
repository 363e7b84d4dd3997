#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ppnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Axis-aligned rectangular observation window in abstract length units.
struct Window {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  Window() = default;
  Window(double x0, double x1, double y0, double y1);

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  double shorter_side() const { return width() < height() ? width() : height(); }

  bool contains(const Point& p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }

  // Distance from p to the window boundary (p assumed inside).
  double boundary_distance(const Point& p) const;

  Window dilated(double margin) const {
    return Window(x_min - margin, x_max + margin, y_min - margin, y_max + margin);
  }
};

/// A finite simple point pattern inside a window. Immutable after
/// construction; construction validates that all points are finite, lie in
/// the window (boundary inclusive) and that no two coincide exactly.
class PointPattern {
 public:
  PointPattern(std::vector<Point> points, Window window);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const Window& window() const { return window_; }

 private:
  std::vector<Point> points_;
  Window window_;
};

/// p(z): number of unordered point pairs at distance <= r (ties count).
std::size_t close_pair_count(const PointPattern& pattern, double r);
std::size_t close_pair_count(std::span<const Point> points, double r);

/// t(u, z): number of points of the pattern within distance <= r of u,
/// not counting a point exactly coincident with u.
std::size_t close_neighbour_count(const Point& u, const PointPattern& pattern, double r);
std::size_t close_neighbour_count(const Point& u, std::span<const Point> points, double r);

// Strict-inequality variant (distance < r); used by the hard-core family,
// where pairs at exactly the hard-core distance are allowed.
std::size_t close_neighbour_count_strict(const Point& u, std::span<const Point> points, double r);
bool has_close_pair_strict(std::span<const Point> points, double r);

/// Smallest nearest-neighbour distance of the pattern (requires n >= 2).
double min_nn_distance(const PointPattern& pattern);

}  // namespace ppnet
