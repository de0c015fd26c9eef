// Forward-mode automatic differentiation to second order.  A Jet2 carries a
// value, its gradient and its Hessian with respect to k domain parameters;
// k is a runtime value so the same engine serves (mu, theta) surfaces and the
// n-dimensional lambda family.

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lmcf/complex_space.hpp"

namespace lmcf {

class Jet2 {
 public:
  Jet2() = default;
  /// Constant jet: value with zero derivatives.
  Jet2(double value, int k)
      : v_(value),
        g_(static_cast<std::size_t>(k), 0.0),
        h_(static_cast<std::size_t>(k * k), 0.0) {}

  /// Seed jet for domain parameter `index`: gradient e_index, zero Hessian.
  static Jet2 seed(double value, int k, int index) {
    Jet2 j(value, k);
    j.g_[static_cast<std::size_t>(index)] = 1.0;
    return j;
  }

  int dim() const { return static_cast<int>(g_.size()); }
  double value() const { return v_; }
  double grad(int a) const { return g_[static_cast<std::size_t>(a)]; }
  double hess(int a, int b) const { return h_[static_cast<std::size_t>(a * dim() + b)]; }

  Jet2 operator-() const;
  friend Jet2 operator+(const Jet2& a, const Jet2& b);
  friend Jet2 operator-(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator/(const Jet2& a, const Jet2& b);

  friend Jet2 operator+(const Jet2& a, double c);
  friend Jet2 operator+(double c, const Jet2& a) { return a + c; }
  friend Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
  friend Jet2 operator-(double c, const Jet2& a) { return -a + c; }
  friend Jet2 operator*(const Jet2& a, double c);
  friend Jet2 operator*(double c, const Jet2& a) { return a * c; }
  friend Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
  friend Jet2 operator/(double c, const Jet2& a);

  /// Chain rule to second order through f with derivatives f', f'' at v_.
  Jet2 compose(double f, double fp, double fpp) const;

 private:
  void check_same_dim(const Jet2& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("jet domain dimension mismatch");
  }

  double v_ = 0.0;
  std::vector<double> g_;
  std::vector<double> h_;
};

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 sqrt(const Jet2& a);  // requires a.value() > 0

/// The 2-jet of an immersion at a parameter point: one Jet2 per ambient real
/// coordinate, interleaved like ComplexVec.
struct JetPoint {
  int domain_dim = 0;
  std::vector<Jet2> coords;  // 2n entries

  int complex_dim() const { return static_cast<int>(coords.size() / 2); }
  ComplexVec value() const;
  /// Ambient tangent vector dF/du^a.
  ComplexVec partial(int a) const;
  /// Ambient second derivative d^2F/du^a du^b.
  ComplexVec second_partial(int a, int b) const;
};

}  // namespace lmcf
