#include "tdflow/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "tdflow/errors.hpp"

namespace tdflow {

namespace detail {
void dft2d(const std::complex<double>* in, std::complex<double>* out, int n, bool forward);
}

Grid::Grid(int n_points, double x0, double x1, double y0, double y1)
    : x_min(x0), x_max(x1), y_min(y0), y_max(y1), n(n_points) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid size must be a power of two >= 16");
  const double hx = (x_max - x_min) / n;
  const double hy = (y_max - y_min) / n;
  if (std::abs(hx - hy) > 1e-12 * std::abs(hx))
    throw std::invalid_argument("grid cells must be square");
}

ScalarField::ScalarField(const Grid& g, std::vector<double> values)
    : grid_(g), v_(std::move(values)) {
  if (v_.size() != g.size()) throw std::invalid_argument("field size does not match grid");
  for (double x : v_)
    if (!std::isfinite(x)) throw std::invalid_argument("field values must be finite");
}

SpectralField forward_transform(const ScalarField& f) {
  const Grid& g = f.grid();
  std::vector<std::complex<double>> in(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) in[k] = f[k];
  SpectralField F(g);
  detail::dft2d(in.data(), F.coeffs().data(), g.n, true);
  const double scale = g.cell_area();
  for (auto& c : F.coeffs()) c *= scale;
  return F;
}

ScalarField inverse_transform(const SpectralField& F) {
  const Grid& g = F.grid();
  std::vector<std::complex<double>> out(g.size());
  detail::dft2d(F.coeffs().data(), out.data(), g.n, false);
  ScalarField f(g);
  const double scale = 1.0 / (g.length() * g.length());
  for (std::size_t k = 0; k < g.size(); ++k) f[k] = out[k].real() * scale;
  return f;
}

ScalarField convolve_multiplier(const ScalarField& f, const std::vector<double>& multiplier) {
  const Grid& g = f.grid();
  if (multiplier.size() != g.size())
    throw KernelGridMismatchError("spectral multiplier size does not match grid");
  std::vector<std::complex<double>> work(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) work[k] = f[k];
  detail::dft2d(work.data(), work.data(), g.n, true);
  for (std::size_t k = 0; k < g.size(); ++k) work[k] *= multiplier[k];
  detail::dft2d(work.data(), work.data(), g.n, false);
  ScalarField out(g);
  const double scale = 1.0 / g.size();  // unnormalized DFT round trip
  for (std::size_t k = 0; k < g.size(); ++k) out[k] = work[k].real() * scale;
  return out;
}

double l1_difference(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) throw GridMismatchError("fields live on different grids");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::abs(a[k] - b[k]);
  return sum * a.grid().cell_area();
}

double l1_difference(const SubgridInterface& a, const SubgridInterface& b) {
  return l1_difference(a.vertex_weights, b.vertex_weights);
}

Components connected_components(const ScalarField& f, double threshold) {
  const Grid& g = f.grid();
  const int n = g.n;
  Components comp;
  comp.labels.assign(g.size(), 0);
  std::vector<std::size_t> stack;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k0 = g.index(i, j);
      if (f[k0] < threshold || comp.labels[k0] != 0) continue;
      const int32_t label = ++comp.count;
      int cells = 0;
      stack.push_back(k0);
      comp.labels[k0] = label;
      while (!stack.empty()) {
        const std::size_t k = stack.back();
        stack.pop_back();
        ++cells;
        const int ci = static_cast<int>(k % n);
        const int cj = static_cast<int>(k / n);
        const int ni[4] = {ci - 1, ci + 1, ci, ci};
        const int nj[4] = {cj, cj, cj - 1, cj + 1};
        for (int d = 0; d < 4; ++d) {
          if (ni[d] < 0 || ni[d] >= n || nj[d] < 0 || nj[d] >= n) continue;
          const std::size_t kn = g.index(ni[d], nj[d]);
          if (comp.labels[kn] == 0 && f[kn] >= threshold) {
            comp.labels[kn] = label;
            stack.push_back(kn);
          }
        }
      }
      comp.cell_counts.push_back(cells);
      comp.areas.push_back(cells * g.cell_area());
    }
  }
  return comp;
}

void write_pgm(const ScalarField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path);
  const Grid& g = f.grid();
  double lo = f[0], hi = f[0];
  for (double v : f.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double span = hi > lo ? hi - lo : 1.0;
  os << "P2\n" << g.n << " " << g.n << "\n65535\n";
  for (int j = g.n - 1; j >= 0; --j) {
    for (int i = 0; i < g.n; ++i) {
      const int v = static_cast<int>(std::lround((f(i, j) - lo) / span * 65535.0));
      os << v << (i + 1 == g.n ? '\n' : ' ');
    }
  }
  if (!os) throw IoError("write failed: " + path);
}

void write_csv(const ScalarField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path);
  os << "x,y,value\n";
  char line[96];
  const Grid& g = f.grid();
  for (int j = 0; j < g.n; ++j)
    for (int i = 0; i < g.n; ++i) {
      std::snprintf(line, sizeof line, "%.10g,%.10g,%.12g\n", g.x(i), g.y(j), f(i, j));
      os << line;
    }
  if (!os) throw IoError("write failed: " + path);
}

void write_crossings_csv(const std::vector<Vec2>& crossings, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path);
  os << "x,y\n";
  char line[64];
  for (const Vec2& p : crossings) {
    std::snprintf(line, sizeof line, "%.12g,%.12g\n", p.x, p.y);
    os << line;
  }
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace tdflow
