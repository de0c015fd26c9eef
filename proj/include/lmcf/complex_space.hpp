// Primitives for C^n viewed as R^{2n} with the standard complex structure J,
// symplectic form omega = sum dx^i ^ dy^i, and holomorphic volume form
// dz^1 ^ ... ^ dz^n.  Coordinates are interleaved (x1, y1, ..., xn, yn) so
// that J and omega act slot-locally.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lmcf {

/// A point or tangent vector of C^n stored as 2n interleaved reals.
class ComplexVec {
 public:
  ComplexVec() = default;
  explicit ComplexVec(int n) : coords_(2 * static_cast<std::size_t>(n), 0.0) {}
  static ComplexVec from_reals(std::vector<double> reals);

  int complex_dim() const { return static_cast<int>(coords_.size() / 2); }
  int real_dim() const { return static_cast<int>(coords_.size()); }

  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }

  std::complex<double> slot(int i) const {
    return {coords_[2 * static_cast<std::size_t>(i)],
            coords_[2 * static_cast<std::size_t>(i) + 1]};
  }
  void set_slot(int i, std::complex<double> z) {
    coords_[2 * static_cast<std::size_t>(i)] = z.real();
    coords_[2 * static_cast<std::size_t>(i) + 1] = z.imag();
  }

  std::span<const double> reals() const { return coords_; }

  ComplexVec& operator+=(const ComplexVec& o);
  ComplexVec& operator-=(const ComplexVec& o);
  ComplexVec& operator*=(double s);
  friend ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
  friend ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
  friend ComplexVec operator*(double s, ComplexVec a) { return a *= s; }

 private:
  std::vector<double> coords_;
};

// Points and tangent vectors share the layout; the distinction is semantic.
using ComplexPoint = ComplexVec;
using ComplexVector = ComplexVec;

/// Jv: per complex slot (a, b) -> (-b, a).  J(d/dx^i) = d/dy^i.
ComplexVec apply_J(const ComplexVec& v);

/// omega(u, v) = sum_i (u_x^i v_y^i - u_y^i v_x^i) = <Ju, v>.
double symplectic_form(const ComplexVec& u, const ComplexVec& v);

/// Standard R^{2n} dot product.
double euclidean_inner(const ComplexVec& u, const ComplexVec& v);

double norm(const ComplexVec& v);

struct FrameDeterminant {
  double modulus = 0.0;
  double phase = 0.0;  // in (-pi, pi]; 0 by convention when modulus is 0
};

/// Evaluates dz^1 ^ ... ^ dz^n on a frame of n vectors in C^n (columns of the
/// complex n x n matrix).  For an oriented orthonormal Lagrangian frame the
/// phase is the Lagrangian angle beta.
FrameDeterminant complex_determinant_of_frame(std::span<const ComplexVec> frame);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Distance between angles modulo 2*pi, in [0, pi].
double circular_distance(double a, double b);

}  // namespace lmcf
