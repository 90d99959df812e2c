#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tdflow/geometry.hpp"

namespace tdflow {

/// Uniform periodic square grid on [x_min, x_max] x [y_min, y_max].
/// n points per axis (power of two, >= 16), square cells of size dx.
/// Point (i, j) sits at (x_min + i dx, y_min + j dx); fields are stored
/// row-major with index j * n + i.
struct Grid {
  double x_min = -5.0, x_max = 5.0;
  double y_min = -5.0, y_max = 5.0;
  int n = 0;

  Grid() = default;
  explicit Grid(int n_points, double x0 = -5.0, double x1 = 5.0, double y0 = -5.0,
                double y1 = 5.0);

  double dx() const { return (x_max - x_min) / n; }
  double length() const { return x_max - x_min; }
  double cell_area() const { return dx() * dx(); }
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dx(); }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * n + i; }
  std::size_t size() const { return static_cast<std::size_t>(n) * n; }
  /// Centered displacement coordinate for lattice offset m in [0, n):
  /// m <= n/2 maps to m*dx, larger offsets wrap to negative values.
  double centered(int m) const { return (m <= n / 2 ? m : m - n) * dx(); }
  /// Physical frequency for spectral index m in [0, n): j/L with j in [-n/2, n/2).
  double frequency(int m) const { return (m < n / 2 ? m : m - n) / length(); }

  bool operator==(const Grid& o) const = default;
};

class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0) : grid_(g), v_(g.size(), fill) {}
  ScalarField(const Grid& g, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  double& operator()(int i, int j) { return v_[grid_.index(i, j)]; }
  double operator()(int i, int j) const { return v_[grid_.index(i, j)]; }
  double& operator[](std::size_t k) { return v_[k]; }
  double operator[](std::size_t k) const { return v_[k]; }
  std::vector<double>& values() { return v_; }
  const std::vector<double>& values() const { return v_; }
  std::size_t size() const { return v_.size(); }

 private:
  Grid grid_;
  std::vector<double> v_;
};

/// Spectral coefficients on the grid's frequency lattice. Coefficient (j, k)
/// approximates the continuous transform at xi = (j/L, k/L): the forward
/// transform is the index-space DFT scaled by dx^2, the inverse applies the
/// conjugate transform scaled by 1/L^2.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(const Grid& g) : grid_(g), c_(g.size()) {}

  const Grid& grid() const { return grid_; }
  std::complex<double>& operator()(int i, int j) { return c_[grid_.index(i, j)]; }
  std::complex<double> operator()(int i, int j) const { return c_[grid_.index(i, j)]; }
  std::vector<std::complex<double>>& coeffs() { return c_; }
  const std::vector<std::complex<double>>& coeffs() const { return c_; }

 private:
  Grid grid_;
  std::vector<std::complex<double>> c_;
};

SpectralField forward_transform(const ScalarField& f);
ScalarField inverse_transform(const SpectralField& F);

/// inverse_transform(multiplier * forward_transform(f)) for a real, even
/// spectral multiplier given on the frequency lattice.
ScalarField convolve_multiplier(const ScalarField& f, const std::vector<double>& multiplier);

/// Sub-cell interface location for the level set {f = level}.
struct SubgridInterface {
  ScalarField vertex_weights;        // in [0, 1], average of 4 adjacent cell fractions
  std::vector<double> cell_fractions;  // per cell, fraction of {f >= level}
  std::vector<Vec2> crossings;       // level-set intersections with grid lines
  bool trivial = false;              // level outside [min f, max f]
};

/// Linear-interpolation marching squares with per-cell occupied-area
/// fractions. Saddle cells are resolved by the cell-center average value.
SubgridInterface subgrid_extract(const ScalarField& f, double level);

double l1_difference(const ScalarField& a, const ScalarField& b);
double l1_difference(const SubgridInterface& a, const SubgridInterface& b);

struct Components {
  std::vector<int32_t> labels;  // 0 = background, 1..count
  int count = 0;
  std::vector<int> cell_counts;   // per label, 1-based -> index 0 is label 1
  std::vector<double> areas;      // cell_counts * dx^2
};

/// 4-connectivity flood labeling of {f >= threshold}. The lattice is treated
/// as a bounded box here (no periodic wrap across edges).
Components connected_components(const ScalarField& f, double threshold = 0.5);

// Raster / CSV output. PGM is ASCII P2 with 16-bit range, top row = y_max.
void write_pgm(const ScalarField& f, const std::string& path);
void write_csv(const ScalarField& f, const std::string& path);
void write_crossings_csv(const std::vector<Vec2>& crossings, const std::string& path);

}  // namespace tdflow
