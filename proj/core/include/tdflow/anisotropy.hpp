#pragma once

#include <string>
#include <vector>

#include "tdflow/geometry.hpp"

namespace tdflow {

/// Orientation-dependent surface tension density gamma(theta).
///
/// theta parametrizes the interface normal n = (sin theta, cos theta), i.e. it
/// is the signed angle of the outer normal against the positive y-axis.
/// Cartesian variants (Elliptic, RegularizedCrystalline) are bound to this
/// convention once, at construction, by substituting (x, y) = (sin theta,
/// cos theta). Derivatives are analytic per variant, never finite-differenced.
class AnisotropyFn {
 public:
  struct CosineMode {
    double amplitude = 0.0;
    int frequency = 0;
    double phase = 0.0;
  };

  struct Eval {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
  };

  static AnisotropyFn constant(double c);
  /// gamma(theta) = 1 + sum_j beta_j cos(m_j theta + phi_j)
  static AnisotropyFn cosine_series(std::vector<CosineMode> modes);
  /// gamma(x, y) = sqrt((a x)^2 + (b y)^2)
  static AnisotropyFn elliptic(double a, double b);
  /// gamma(x, y) = sqrt(eps^2 + x^2) + sqrt(eps^2 + y^2)
  static AnisotropyFn regularized_crystalline(double eps = 0.01);

  Eval evaluate(double theta) const;
  double value(double theta) const { return evaluate(theta).value; }

  /// Positively 1-homogeneous extension |xi| * gamma(angle of xi); 0 at xi = 0.
  double homogeneous(Vec2 xi) const;

  bool is_constant() const { return kind_ == Kind::Constant; }
  std::string describe() const;

 private:
  enum class Kind { Constant, Cosine, Elliptic, RegCrystalline };
  AnisotropyFn() = default;
  void check_positive() const;

  Kind kind_ = Kind::Constant;
  double c_ = 1.0;        // Constant
  std::vector<CosineMode> modes_;
  double a_ = 1.0, b_ = 1.0;  // Elliptic
  double eps_ = 0.01;         // RegCrystalline
};

enum class AnisotropyTag { Isotropic, Weak, Strong };

struct AnisotropyClass {
  AnisotropyTag tag = AnisotropyTag::Isotropic;
  /// min over sampled theta of gamma + gamma''
  double margin = 0.0;
};

AnisotropyClass classify(const AnisotropyFn& gamma, int n_samples = 4096);

const char* to_string(AnisotropyTag tag);

/// Boundary point of the Wulff region at parameter theta:
///   x = -gamma sin(theta) - gamma' cos(theta)
///   y =  gamma cos(theta) - gamma' sin(theta)
Vec2 wulff_envelope(const AnisotropyFn& gamma, double theta);

struct ContactSolution {
  double left_angle = 0.0;   // radians, root whose envelope point has minimal x
  double right_angle = 0.0;  // radians, maximal x
  std::vector<double> all_roots;  // radians in [-pi, pi)
};

/// Roots of gamma(t) cos t - gamma'(t) sin t + gamma_sp - gamma_sv = 0,
/// bracketed on a uniform grid and bisected to 1e-10. Throws NoRootError when
/// no sign change exists (complete wetting/dewetting regime).
ContactSolution solve_young(const AnisotropyFn& gamma, double gamma_sp, double gamma_sv);

/// Wulff envelope cut at height gamma_sv - gamma_sp, closed along the cut,
/// shifted so the cut line is y = 0 and scaled to enclose the given area.
/// The result is a closed polyline traversed from the left contact point.
Polyline winterbottom_shape(const AnisotropyFn& gamma, double gamma_sp, double gamma_sv,
                            double area, int n_samples = 4096);

}  // namespace tdflow
