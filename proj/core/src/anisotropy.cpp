#include "tdflow/anisotropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tdflow/errors.hpp"

namespace tdflow {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool point_in_polygon(const std::vector<Vec2>& poly, Vec2 p) {
  bool inside = false;
  const std::size_t m = poly.size();
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xc = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < xc) inside = !inside;
    }
  }
  return inside;
}

AnisotropyFn AnisotropyFn::constant(double c) {
  AnisotropyFn f;
  f.kind_ = Kind::Constant;
  f.c_ = c;
  f.check_positive();
  return f;
}

AnisotropyFn AnisotropyFn::cosine_series(std::vector<CosineMode> modes) {
  AnisotropyFn f;
  f.kind_ = Kind::Cosine;
  f.modes_ = std::move(modes);
  f.check_positive();
  return f;
}

AnisotropyFn AnisotropyFn::elliptic(double a, double b) {
  AnisotropyFn f;
  f.kind_ = Kind::Elliptic;
  f.a_ = a;
  f.b_ = b;
  f.check_positive();
  return f;
}

AnisotropyFn AnisotropyFn::regularized_crystalline(double eps) {
  AnisotropyFn f;
  f.kind_ = Kind::RegCrystalline;
  f.eps_ = eps;
  f.check_positive();
  return f;
}

void AnisotropyFn::check_positive() const {
  for (int i = 0; i < 4096; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / 4096.0;
    const double v = evaluate(theta).value;
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("anisotropy must be positive, got " + std::to_string(v) +
                                  " at theta=" + std::to_string(theta));
    }
  }
}

AnisotropyFn::Eval AnisotropyFn::evaluate(double theta) const {
  Eval e;
  switch (kind_) {
    case Kind::Constant:
      e.value = c_;
      break;
    case Kind::Cosine: {
      e.value = 1.0;
      for (const CosineMode& m : modes_) {
        const double arg = m.frequency * theta + m.phase;
        e.value += m.amplitude * std::cos(arg);
        e.d1 -= m.amplitude * m.frequency * std::sin(arg);
        e.d2 -= m.amplitude * m.frequency * m.frequency * std::cos(arg);
      }
      break;
    }
    case Kind::Elliptic: {
      // gamma^2 = a^2 sin^2 + b^2 cos^2;  (gamma gamma')' = gamma'^2 + gamma gamma''
      const double s = std::sin(theta), c = std::cos(theta);
      const double d = a_ * a_ - b_ * b_;
      e.value = std::sqrt(a_ * a_ * s * s + b_ * b_ * c * c);
      e.d1 = d * std::sin(2.0 * theta) / (2.0 * e.value);
      e.d2 = (d * std::cos(2.0 * theta) - e.d1 * e.d1) / e.value;
      break;
    }
    case Kind::RegCrystalline: {
      // f = sqrt(eps^2 + sin^2), g = sqrt(eps^2 + cos^2); f f' = sin(2t)/2
      const double s = std::sin(theta), c = std::cos(theta);
      const double s2 = std::sin(2.0 * theta), c2 = std::cos(2.0 * theta);
      const double f = std::sqrt(eps_ * eps_ + s * s);
      const double g = std::sqrt(eps_ * eps_ + c * c);
      const double fp = 0.5 * s2 / f;
      const double gp = -0.5 * s2 / g;
      e.value = f + g;
      e.d1 = fp + gp;
      e.d2 = (c2 - fp * fp) / f + (-c2 - gp * gp) / g;
      break;
    }
  }
  return e;
}

double AnisotropyFn::homogeneous(Vec2 xi) const {
  const double r = norm(xi);
  if (r == 0.0) return 0.0;
  return r * evaluate(direction_angle(xi)).value;
}

std::string AnisotropyFn::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Constant:
      os << "constant " << c_;
      break;
    case Kind::Cosine:
      os << "cosine";
      for (const CosineMode& m : modes_)
        os << " " << m.amplitude << " " << m.frequency << " " << m.phase;
      break;
    case Kind::Elliptic:
      os << "elliptic " << a_ << " " << b_;
      break;
    case Kind::RegCrystalline:
      os << "reg-crystalline " << eps_;
      break;
  }
  return os.str();
}

const char* to_string(AnisotropyTag tag) {
  switch (tag) {
    case AnisotropyTag::Isotropic: return "isotropic";
    case AnisotropyTag::Weak: return "weak";
    case AnisotropyTag::Strong: return "strong";
  }
  return "?";
}

AnisotropyClass classify(const AnisotropyFn& gamma, int n_samples) {
  if (n_samples < 360) throw std::invalid_argument("classify needs n_samples >= 360");
  double margin = std::numeric_limits<double>::infinity();
  bool constant = true;
  double v0 = gamma.evaluate(0.0).value;
  for (int i = 0; i < n_samples; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / n_samples;
    const auto e = gamma.evaluate(theta);
    margin = std::min(margin, e.value + e.d2);
    if (std::abs(e.value - v0) > 1e-14 || std::abs(e.d1) > 1e-14) constant = false;
  }
  AnisotropyClass cls;
  cls.margin = margin;
  if (constant)
    cls.tag = AnisotropyTag::Isotropic;
  else
    cls.tag = margin > 0.0 ? AnisotropyTag::Weak : AnisotropyTag::Strong;
  return cls;
}

Vec2 wulff_envelope(const AnisotropyFn& gamma, double theta) {
  const auto e = gamma.evaluate(theta);
  const double s = std::sin(theta), c = std::cos(theta);
  return {-e.value * s - e.d1 * c, e.value * c - e.d1 * s};
}

namespace {

double young_residual(const AnisotropyFn& gamma, double theta, double dg) {
  const auto e = gamma.evaluate(theta);
  return e.value * std::cos(theta) - e.d1 * std::sin(theta) + dg;
}

}  // namespace

ContactSolution solve_young(const AnisotropyFn& gamma, double gamma_sp, double gamma_sv) {
  const double dg = gamma_sp - gamma_sv;
  constexpr int kBrackets = 4096;
  constexpr double kTol = 1e-10;

  ContactSolution sol;
  double prev_theta = -kPi;
  double prev_val = young_residual(gamma, prev_theta, dg);
  for (int i = 1; i <= kBrackets; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / kBrackets;
    const double val = young_residual(gamma, theta, dg);
    if (prev_val == 0.0) {
      sol.all_roots.push_back(prev_theta);
    } else if ((prev_val < 0.0) != (val < 0.0)) {
      double lo = prev_theta, hi = theta, flo = prev_val;
      while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = young_residual(gamma, mid, dg);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) != (fmid < 0.0))
          hi = mid;
        else
          lo = mid, flo = fmid;
      }
      sol.all_roots.push_back(0.5 * (lo + hi));
    }
    prev_theta = theta;
    prev_val = val;
  }
  if (sol.all_roots.empty())
    throw NoRootError("no contact angle: |gamma_sv - gamma_sp| outside the envelope range "
                      "(complete wetting/dewetting)");

  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  for (double r : sol.all_roots) {
    const double x = wulff_envelope(gamma, r).x;
    const bool better_left = x < min_x || (x == min_x && std::abs(r) < std::abs(sol.left_angle));
    const bool better_right = x > max_x || (x == max_x && std::abs(r) < std::abs(sol.right_angle));
    if (better_left) {
      min_x = x;
      sol.left_angle = r;
    }
    if (better_right) {
      max_x = x;
      sol.right_angle = r;
    }
  }
  return sol;
}

Polyline winterbottom_shape(const AnisotropyFn& gamma, double gamma_sp, double gamma_sv,
                            double area, int n_samples) {
  const auto cls = classify(gamma);
  if (cls.tag == AnisotropyTag::Strong)
    throw NotWeakError("winterbottom construction requires weak or isotropic anisotropy");

  const double h = gamma_sv - gamma_sp;  // cut height on the envelope
  ContactSolution contacts;
  try {
    contacts = solve_young(gamma, gamma_sp, gamma_sv);
  } catch (const NoRootError&) {
    throw NoIntersectionError("truncation line y = gamma_sv - gamma_sp misses the Wulff shape");
  }

  // Keep the arc through the top of the envelope, between the extreme contacts.
  // For weak anisotropies y(theta) - h changes sign exactly at the contacts of
  // the connected upper arc that contains the maximal-y point.
  const double tl = contacts.left_angle;
  const double tr = contacts.right_angle;
  // Walk from the right contact to the left contact through theta = 0 (the top
  // of the shape has y(0)-ish maximal; left contact has theta > 0, right < 0
  // for shapes sitting on the substrate).
  double lo = tr, hi = tl;
  if (lo > hi) lo -= 2.0 * kPi;
  Polyline out;
  out.closed = true;
  out.pts.push_back({wulff_envelope(gamma, tl).x, h});
  for (int i = n_samples; i >= 0; --i) {
    const double theta = lo + (hi - lo) * i / n_samples;
    const Vec2 p = wulff_envelope(gamma, theta);
    if (p.y > h) out.pts.push_back(p);
  }
  out.pts.push_back({wulff_envelope(gamma, tr).x, h});

  for (Vec2& p : out.pts) p.y -= h;

  double a0 = polygon_area(out.pts);
  if (a0 < 0.0) {  // ensure counterclockwise orientation
    std::reverse(out.pts.begin(), out.pts.end());
    a0 = -a0;
  }
  if (!(a0 > 0.0))
    throw NoIntersectionError("degenerate winterbottom cut (zero enclosed area)");
  const double s = std::sqrt(area / a0);
  for (Vec2& p : out.pts) p = s * p;
  return out;
}

}  // namespace tdflow
