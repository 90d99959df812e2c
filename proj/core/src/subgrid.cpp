#include <algorithm>
#include <array>
#include <cmath>

#include "tdflow/grid.hpp"

namespace tdflow {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

double tri_area(Vec2 a, Vec2 b, Vec2 c) {
  return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

// Occupied fraction of {g >= 0} in the unit cell with corner values given in
// cyclic order (0,0), (1,0), (1,1), (0,1).
double cell_fraction(const std::array<double, 4>& g) {
  static const Vec2 corner[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  int inside_count = 0;
  for (double v : g)
    if (v >= 0.0) ++inside_count;
  if (inside_count == 0) return 0.0;
  if (inside_count == 4) return 1.0;

  const bool saddle = inside_count == 2 && (g[0] >= 0.0) == (g[2] >= 0.0);
  if (saddle) {
    const double center = 0.25 * (g[0] + g[1] + g[2] + g[3]);
    if (center < 0.0) {
      // Two disconnected corner triangles.
      double area = 0.0;
      for (int k = 0; k < 4; ++k) {
        if (g[k] < 0.0) continue;
        const int prev = (k + 3) % 4, next = (k + 1) % 4;
        const double tp = g[k] / (g[k] - g[prev]);
        const double tn = g[k] / (g[k] - g[next]);
        const Vec2 a = corner[k];
        const Vec2 b = a + tp * (corner[prev] - a);
        const Vec2 c = a + tn * (corner[next] - a);
        area += tri_area(a, b, c);
      }
      return clamp01(area);
    }
    // center >= 0: fall through, the cyclic walk yields the connected band.
  }

  std::array<Vec2, 8> poly;
  int m = 0;
  for (int k = 0; k < 4; ++k) {
    const int next = (k + 1) % 4;
    if (g[k] >= 0.0) poly[m++] = corner[k];
    if ((g[k] >= 0.0) != (g[next] >= 0.0)) {
      const double t = g[k] / (g[k] - g[next]);
      poly[m++] = corner[k] + t * (corner[next] - corner[k]);
    }
  }
  double twice = 0.0;
  for (int k = 0; k < m; ++k) {
    const Vec2& p = poly[k];
    const Vec2& q = poly[(k + 1) % m];
    twice += p.x * q.y - q.x * p.y;
  }
  return clamp01(0.5 * std::abs(twice));
}

}  // namespace

SubgridInterface subgrid_extract(const ScalarField& f, double level) {
  const Grid& g = f.grid();
  const int n = g.n;
  SubgridInterface out;
  out.vertex_weights = ScalarField(g);
  out.cell_fractions.assign(g.size(), 0.0);

  double lo = f[0], hi = f[0];
  for (double v : f.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (level < lo || level > hi) {
    out.trivial = true;
    const double fill = level < lo ? 1.0 : 0.0;
    std::fill(out.cell_fractions.begin(), out.cell_fractions.end(), fill);
    std::fill(out.vertex_weights.values().begin(), out.vertex_weights.values().end(), fill);
    return out;
  }

  const double dx = g.dx();
  for (int j = 0; j < n; ++j) {
    const int jp = (j + 1) % n;
    for (int i = 0; i < n; ++i) {
      const int ip = (i + 1) % n;
      const std::array<double, 4> gv = {f(i, j) - level, f(ip, j) - level, f(ip, jp) - level,
                                        f(i, jp) - level};
      out.cell_fractions[g.index(i, j)] = cell_fraction(gv);
      // grid-line crossings, recorded once per edge (right and top of (i,j))
      if ((gv[0] >= 0.0) != (gv[1] >= 0.0)) {
        const double t = gv[0] / (gv[0] - gv[1]);
        out.crossings.push_back({g.x(i) + t * dx, g.y(j)});
      }
      if ((gv[0] >= 0.0) != (gv[3] >= 0.0)) {
        const double t = gv[0] / (gv[0] - gv[3]);
        out.crossings.push_back({g.x(i), g.y(j) + t * dx});
      }
    }
  }

  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    for (int i = 0; i < n; ++i) {
      const int im = (i + n - 1) % n;
      const double w = 0.25 * (out.cell_fractions[g.index(im, jm)] +
                               out.cell_fractions[g.index(i, jm)] +
                               out.cell_fractions[g.index(im, j)] +
                               out.cell_fractions[g.index(i, j)]);
      out.vertex_weights(i, j) = clamp01(w);
    }
  }
  return out;
}

}  // namespace tdflow
