#include "lmcf/complex_space.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lmcf {

ComplexVec ComplexVec::from_reals(std::vector<double> reals) {
  if (reals.empty() || reals.size() % 2 != 0) {
    throw std::invalid_argument("ComplexVec needs a nonempty even number of reals");
  }
  ComplexVec v;
  v.coords_ = std::move(reals);
  return v;
}

ComplexVec& ComplexVec::operator+=(const ComplexVec& o) {
  if (o.coords_.size() != coords_.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ComplexVec& ComplexVec::operator-=(const ComplexVec& o) {
  if (o.coords_.size() != coords_.size()) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ComplexVec& ComplexVec::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

ComplexVec apply_J(const ComplexVec& v) {
  ComplexVec out(v.complex_dim());
  for (int i = 0; i < v.complex_dim(); ++i) {
    out[2 * i] = -v[2 * i + 1];
    out[2 * i + 1] = v[2 * i];
  }
  return out;
}

double symplectic_form(const ComplexVec& u, const ComplexVec& v) {
  if (u.real_dim() != v.real_dim()) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < u.complex_dim(); ++i) {
    s += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
  }
  return s;
}

double euclidean_inner(const ComplexVec& u, const ComplexVec& v) {
  if (u.real_dim() != v.real_dim()) throw std::invalid_argument("dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < u.real_dim(); ++i) s += u[i] * v[i];
  return s;
}

double norm(const ComplexVec& v) { return std::sqrt(euclidean_inner(v, v)); }

FrameDeterminant complex_determinant_of_frame(std::span<const ComplexVec> frame) {
  const int n = static_cast<int>(frame.size());
  if (n == 0) throw std::invalid_argument("empty frame");
  for (const auto& v : frame) {
    if (v.complex_dim() != n) throw std::invalid_argument("frame must have n vectors in C^n");
  }
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m(i, j) = frame[static_cast<std::size_t>(j)].slot(i);
  }
  const std::complex<double> det = m.determinant();
  FrameDeterminant out;
  out.modulus = std::abs(det);
  out.phase = out.modulus == 0.0 ? 0.0 : wrap_angle(std::arg(det));
  return out;
}

double wrap_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(a, two_pi);  // (-pi, pi] up to the -pi edge
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

}  // namespace lmcf
