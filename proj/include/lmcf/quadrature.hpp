// Adaptive Gauss-Legendre quadrature.  Local error estimates come from
// comparing a panel against its bisection; panels are refined worst-first
// until the summed estimate meets a relative-plus-absolute tolerance.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace lmcf {

/// Nodes and weights of the n-point rule on [-1, 1], cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  long evaluations = 0;
};

struct QuadOptions {
  double tolerance = 1e-8;  // stop when error < tolerance * (1 + |value|)
  int order = 16;
  int max_intervals = 4096;
};

/// Integrates f over [a, b].  `splits` lists interior points where the
/// integrand loses smoothness (support edges, creases); the initial panels
/// are cut there so the rule never straddles a kink it can know about.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {},
                     std::span<const double> splits = {});

/// Interior kink locations of v |-> f(u, v) for a given u.  Node-based error
/// estimates cannot see support arcs that fall between all sample points, so
/// integrands with moving compact support must declare their edges.
using InnerSplits = std::function<std::vector<double>(double u)>;

/// Tensor integral of f(u, v) over [a, b] x [v0, v1]: an adaptive outer
/// integral in u of adaptive inner integrals in v, cut at the declared kinks.
QuadResult integrate2d(const std::function<double(double, double)>& f, double a,
                       double b, double v0, double v1,
                       const QuadOptions& opts = {},
                       std::span<const double> u_splits = {},
                       const InnerSplits& inner_splits = nullptr);

}  // namespace lmcf
