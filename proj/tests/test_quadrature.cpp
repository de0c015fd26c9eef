#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lmcf/quadrature.hpp"

using namespace lmcf;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gauss nodes integrate polynomials up to degree 2n-1 exactly") {
  const GaussRule& rule = gauss_legendre(16);
  double x31 = 0.0, x30 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    x31 += rule.weights[i] * std::pow(rule.nodes[i], 31);
    x30 += rule.weights[i] * std::pow(rule.nodes[i], 30);
  }
  CHECK(std::abs(x31) < 1e-15);              // odd, exact zero
  CHECK(x30 == doctest::Approx(2.0 / 31.0).epsilon(1e-14));  // within the degree bound
  double sum_w = 0.0;
  for (double w : rule.weights) sum_w += w;
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("smooth integral") {
  const QuadResult r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(r.value - 2.0) <= r.error_estimate + 1e-14);
}

TEST_CASE("kinked integrand converges with an honest error estimate") {
  const double a = 1.0 / std::numbers::e;
  const double exact = (std::pow(a, 4) + std::pow(1 - a, 4)) / 4.0;
  const QuadResult r =
      integrate([a](double x) { return std::pow(std::abs(x - a), 3); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) <= std::max(r.error_estimate, 1e-12));
}

TEST_CASE("interior split points are honored") {
  const double split[] = {0.5};
  const QuadResult r = integrate(
      [](double x) { return x < 0.5 ? 1.0 : 2.0; }, 0.0, 1.0, {}, split);
  CHECK(r.value == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("tensor product integral") {
  // int_0^1 int_0^{pi/2} x^2 cos(v) dv dx = 1/3
  const QuadResult r = integrate2d(
      [](double u, double v) { return u * u * std::cos(v); }, 0.0, 1.0, 0.0,
      std::numbers::pi / 2);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("doubling the order moves the value less than the error estimate") {
  const double a = std::sqrt(0.5);
  auto f = [a](double x) { return std::sqrt(std::abs(x - a)) + std::cos(3 * x); };
  QuadOptions o16;
  o16.order = 16;
  QuadOptions o32;
  o32.order = 32;
  const QuadResult r16 = integrate(f, 0.0, 2.0, o16);
  const QuadResult r32 = integrate(f, 0.0, 2.0, o32);
  CHECK(std::abs(r16.value - r32.value) <= r16.error_estimate + r32.error_estimate);
}

TEST_CASE("non-convergence is flagged, never silent") {
  QuadOptions tiny;
  tiny.max_intervals = 4;
  tiny.tolerance = 1e-15;
  const QuadResult r = integrate(
      [](double x) { return std::sqrt(std::abs(x - 0.3141)); }, 0.0, 1.0, tiny);
  CHECK_FALSE(r.converged);
}

TEST_SUITE_END();
