#include "lmcf/jets.hpp"

#include <cmath>

namespace lmcf {

Jet2 Jet2::operator-() const {
  Jet2 r = *this;
  r.v_ = -r.v_;
  for (double& x : r.g_) x = -x;
  for (double& x : r.h_) x = -x;
  return r;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  a.check_same_dim(b);
  Jet2 r = a;
  r.v_ += b.v_;
  for (std::size_t i = 0; i < r.g_.size(); ++i) r.g_[i] += b.g_[i];
  for (std::size_t i = 0; i < r.h_.size(); ++i) r.h_[i] += b.h_[i];
  return r;
}

Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

Jet2 operator*(const Jet2& a, const Jet2& b) {
  a.check_same_dim(b);
  const int k = a.dim();
  Jet2 r(0.0, k);
  r.v_ = a.v_ * b.v_;
  for (int i = 0; i < k; ++i) {
    r.g_[static_cast<std::size_t>(i)] = a.g_[static_cast<std::size_t>(i)] * b.v_ +
                                        a.v_ * b.g_[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      r.h_[static_cast<std::size_t>(i * k + j)] =
          a.h_[static_cast<std::size_t>(i * k + j)] * b.v_ +
          a.g_[static_cast<std::size_t>(i)] * b.g_[static_cast<std::size_t>(j)] +
          a.g_[static_cast<std::size_t>(j)] * b.g_[static_cast<std::size_t>(i)] +
          a.v_ * b.h_[static_cast<std::size_t>(i * k + j)];
    }
  }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  if (b.value() == 0.0) throw std::domain_error("jet division by zero value");
  return a * (1.0 / b);
}

Jet2 operator+(const Jet2& a, double c) {
  Jet2 r = a;
  r.v_ += c;
  return r;
}

Jet2 operator*(const Jet2& a, double c) {
  Jet2 r = a;
  r.v_ *= c;
  for (double& x : r.g_) x *= c;
  for (double& x : r.h_) x *= c;
  return r;
}

Jet2 operator/(double c, const Jet2& a) {
  if (a.value() == 0.0) throw std::domain_error("jet division by zero value");
  const double inv = 1.0 / a.value();
  return a.compose(c * inv, -c * inv * inv, 2.0 * c * inv * inv * inv);
}

Jet2 Jet2::compose(double f, double fp, double fpp) const {
  const int k = dim();
  Jet2 r(0.0, k);
  r.v_ = f;
  for (int i = 0; i < k; ++i) {
    r.g_[static_cast<std::size_t>(i)] = fp * g_[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      r.h_[static_cast<std::size_t>(i * k + j)] =
          fp * h_[static_cast<std::size_t>(i * k + j)] +
          fpp * g_[static_cast<std::size_t>(i)] * g_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(s, c, -s);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.compose(c, -s, -c);
}

Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose(s, c, s);
}

Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  return a.compose(c, s, c);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e);
}

Jet2 sqrt(const Jet2& a) {
  if (!(a.value() > 0.0)) throw std::domain_error("jet sqrt requires a positive value");
  const double r = std::sqrt(a.value());
  return a.compose(r, 0.5 / r, -0.25 / (r * a.value()));
}

ComplexVec JetPoint::value() const {
  ComplexVec v(complex_dim());
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) v[i] = coords[static_cast<std::size_t>(i)].value();
  return v;
}

ComplexVec JetPoint::partial(int a) const {
  ComplexVec v(complex_dim());
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) v[i] = coords[static_cast<std::size_t>(i)].grad(a);
  return v;
}

ComplexVec JetPoint::second_partial(int a, int b) const {
  ComplexVec v(complex_dim());
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) v[i] = coords[static_cast<std::size_t>(i)].hess(a, b);
  return v;
}

}  // namespace lmcf
