// Nonnegative C^1 compactly supported test functions phi for the Brakke
// inequality, built from radial profiles.

#pragma once

#include <string>

#include "lmcf/complex_space.hpp"

namespace lmcf {

enum class BumpKind { radial_bump, shifted_bump, annular_bump, plateau_bump };

/// phi(x) = psi(|x - center|) with a piecewise-polynomial C^1 profile psi:
///  - radial/shifted: psi(r) = (1 - (r/R)^2)^2 on r < R
///  - annular:        psi(r) = ((r^2-r0^2)(R^2-r^2))^2 / ((R^2-r0^2)/2)^4 on
///                    r0 < r < R, vanishing at the center
///  - plateau:        psi = 1 on r <= r0, then (1 - z^2)^2 with
///                    z = (r-r0)/(R-r0) on r0 < r < R
class TestFunction {
 public:
  static TestFunction radial(ComplexPoint center, double radius);
  static TestFunction annular(int ambient_complex_dim, double inner_radius,
                              double outer_radius);
  static TestFunction plateau(int ambient_complex_dim, double plateau_radius,
                              double outer_radius);

  BumpKind kind() const { return kind_; }
  std::string name() const;
  const ComplexPoint& center() const { return center_; }
  double outer_radius() const { return outer_radius_; }
  double inner_radius() const { return inner_radius_; }
  /// phi vanishes outside the ball |x| <= support_radius().
  double support_radius() const;
  double value_at_origin() const;

  double operator()(const ComplexPoint& x) const;
  ComplexVec gradient(const ComplexPoint& x) const;

 private:
  TestFunction(BumpKind kind, ComplexPoint center, double inner, double outer)
      : kind_(kind), center_(std::move(center)), inner_radius_(inner), outer_radius_(outer) {}

  // Profile value and derivative-over-r (psi'(r)/r stays finite at r = 0).
  double psi(double r) const;
  double dpsi_over_r(double r) const;

  BumpKind kind_;
  ComplexPoint center_;
  double inner_radius_ = 0.0;
  double outer_radius_ = 1.0;
};

}  // namespace lmcf
