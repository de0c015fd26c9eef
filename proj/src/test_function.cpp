#include "lmcf/test_function.hpp"

#include <cmath>
#include <stdexcept>

namespace lmcf {

TestFunction TestFunction::radial(ComplexPoint center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("bump radius must be positive");
  const bool shifted = norm(center) > 0.0;
  return TestFunction(shifted ? BumpKind::shifted_bump : BumpKind::radial_bump,
                      std::move(center), 0.0, radius);
}

TestFunction TestFunction::annular(int n, double inner_radius, double outer_radius) {
  if (!(0.0 <= inner_radius && inner_radius < outer_radius)) {
    throw std::invalid_argument("annulus needs 0 <= r0 < R");
  }
  return TestFunction(BumpKind::annular_bump, ComplexPoint(n), inner_radius, outer_radius);
}

TestFunction TestFunction::plateau(int n, double plateau_radius, double outer_radius) {
  if (!(0.0 < plateau_radius && plateau_radius < outer_radius)) {
    throw std::invalid_argument("plateau needs 0 < r0 < R");
  }
  return TestFunction(BumpKind::plateau_bump, ComplexPoint(n), plateau_radius, outer_radius);
}

std::string TestFunction::name() const {
  switch (kind_) {
    case BumpKind::radial_bump: return "radial_bump";
    case BumpKind::shifted_bump: return "shifted_bump";
    case BumpKind::annular_bump: return "annular_bump";
    case BumpKind::plateau_bump: return "plateau_bump";
  }
  return "?";
}

double TestFunction::support_radius() const { return norm(center_) + outer_radius_; }

double TestFunction::value_at_origin() const {
  ComplexPoint origin(center_.complex_dim());
  return (*this)(origin);
}

double TestFunction::psi(double r) const {
  const double R = outer_radius_, r0 = inner_radius_;
  if (r >= R) return 0.0;
  switch (kind_) {
    case BumpKind::radial_bump:
    case BumpKind::shifted_bump: {
      const double z = 1.0 - (r / R) * (r / R);
      return z * z;
    }
    case BumpKind::annular_bump: {
      if (r <= r0) return 0.0;
      const double w = (r * r - r0 * r0) * (R * R - r * r);
      const double peak = (R * R - r0 * r0) * 0.5;
      return (w * w) / (peak * peak * peak * peak);
    }
    case BumpKind::plateau_bump: {
      if (r <= r0) return 1.0;
      const double z = (r - r0) / (R - r0);
      const double w = 1.0 - z * z;
      return w * w;
    }
  }
  return 0.0;
}

double TestFunction::dpsi_over_r(double r) const {
  const double R = outer_radius_, r0 = inner_radius_;
  if (r >= R) return 0.0;
  switch (kind_) {
    case BumpKind::radial_bump:
    case BumpKind::shifted_bump: {
      // psi'(r) = -4 r / R^2 (1 - (r/R)^2)
      return -4.0 / (R * R) * (1.0 - (r / R) * (r / R));
    }
    case BumpKind::annular_bump: {
      if (r <= r0) return 0.0;
      const double w = (r * r - r0 * r0) * (R * R - r * r);
      const double dw_dr2 = (R * R - r * r) - (r * r - r0 * r0);
      const double peak = (R * R - r0 * r0) * 0.5;
      // d(w^2)/dr = 2 w dw/dr2 * 2r
      return 4.0 * w * dw_dr2 / (peak * peak * peak * peak);
    }
    case BumpKind::plateau_bump: {
      if (r <= r0 || r == 0.0) return 0.0;
      const double z = (r - r0) / (R - r0);
      return -4.0 * z * (1.0 - z * z) / ((R - r0) * r);
    }
  }
  return 0.0;
}

double TestFunction::operator()(const ComplexPoint& x) const {
  return psi(norm(x - center_));
}

ComplexVec TestFunction::gradient(const ComplexPoint& x) const {
  const ComplexVec d = x - center_;
  return dpsi_over_r(norm(d)) * d;
}

}  // namespace lmcf
