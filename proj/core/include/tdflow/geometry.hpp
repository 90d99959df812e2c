#pragma once

#include <cmath>
#include <vector>

namespace tdflow {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

/// Normal angle convention used throughout: a direction at angle theta
/// (measured from the positive y-axis) has components (sin theta, cos theta).
inline Vec2 direction(double theta) { return {std::sin(theta), std::cos(theta)}; }
inline double direction_angle(Vec2 v) { return std::atan2(v.x, v.y); }

struct Polyline {
  std::vector<Vec2> pts;
  bool closed = false;
};

/// Signed area of a closed polygon (positive when counterclockwise).
inline double polygon_area(const std::vector<Vec2>& pts) {
  double twice = 0.0;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& p = pts[i];
    const Vec2& q = pts[(i + 1) % m];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

/// Even-odd point-in-polygon test.
bool point_in_polygon(const std::vector<Vec2>& poly, Vec2 p);

}  // namespace tdflow
