#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "lmcf/jets.hpp"

using namespace lmcf;

namespace {

double max_jet_diff(const Jet2& a, const Jet2& b) {
  double m = std::abs(a.value() - b.value());
  for (int i = 0; i < a.dim(); ++i) {
    m = std::max(m, std::abs(a.grad(i) - b.grad(i)));
    for (int j = 0; j < a.dim(); ++j) {
      m = std::max(m, std::abs(a.hess(i, j) - b.hess(i, j)));
    }
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("jets");

TEST_CASE("seed squared has the right 2-jet") {
  const Jet2 u = Jet2::seed(1.5, 2, 0);
  const Jet2 sq = u * u;
  CHECK(sq.value() == doctest::Approx(2.25));
  CHECK(sq.grad(0) == doctest::Approx(3.0));
  CHECK(sq.grad(1) == 0.0);
  CHECK(sq.hess(0, 0) == doctest::Approx(2.0));
  CHECK(sq.hess(0, 1) == 0.0);
  CHECK(sq.hess(1, 1) == 0.0);
}

TEST_CASE("multiplicative identity and division") {
  const Jet2 u = Jet2::seed(3.0, 1, 0);
  const Jet2 one(1.0, 1);
  CHECK(max_jet_diff(u * one, u) == 0.0);

  const Jet2 back = (u * u) / u;
  CHECK(back.value() == doctest::Approx(3.0));
  CHECK(back.grad(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(back.hess(0, 0)) < 1e-14);

  CHECK_THROWS_AS(u / Jet2(0.0, 1), std::domain_error);
}

TEST_CASE("hyperbolic identity cosh^2 - sinh^2 = 1") {
  for (double mu0 : {-1.7, -0.3, 0.0, 0.9, 2.4}) {
    const Jet2 mu = Jet2::seed(mu0, 2, 0);
    const Jet2 id = cosh(mu) * cosh(mu) - sinh(mu) * sinh(mu);
    CHECK(id.value() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(id.grad(0)) < 1e-12);
    CHECK(std::abs(id.hess(0, 0)) < 1e-11);
  }
}

TEST_CASE("sinh seed at zero") {
  const Jet2 s = sinh(Jet2::seed(0.0, 1, 0));
  CHECK(s.value() == 0.0);
  CHECK(s.grad(0) == 1.0);
  CHECK(s.hess(0, 0) == 0.0);
}

TEST_CASE("exp is its own derivative") {
  const Jet2 e = exp(Jet2::seed(1.0, 1, 0));
  const double ev = std::exp(1.0);
  CHECK(e.value() == doctest::Approx(ev));
  CHECK(e.grad(0) == doctest::Approx(ev));
  CHECK(e.hess(0, 0) == doctest::Approx(ev));
}

TEST_CASE("sqrt domain") {
  CHECK_THROWS_AS(sqrt(Jet2::seed(-1.0, 1, 0)), std::domain_error);
  CHECK_THROWS_AS(sqrt(Jet2(0.0, 1)), std::domain_error);
  const Jet2 r = sqrt(Jet2::seed(4.0, 1, 0));
  CHECK(r.value() == doctest::Approx(2.0));
  CHECK(r.grad(0) == doctest::Approx(0.25));
}

TEST_CASE("elementary functions match central finite differences") {
  struct Case {
    const char* name;
    std::function<Jet2(const Jet2&)> jf;
    std::function<double(double)> f;
    double lo, hi;
  };
  const Case cases[] = {
      {"sin", [](const Jet2& a) { return sin(a); }, [](double x) { return std::sin(x); }, -3.0, 3.0},
      {"cos", [](const Jet2& a) { return cos(a); }, [](double x) { return std::cos(x); }, -3.0, 3.0},
      {"sinh", [](const Jet2& a) { return sinh(a); }, [](double x) { return std::sinh(x); }, -2.0, 2.0},
      {"cosh", [](const Jet2& a) { return cosh(a); }, [](double x) { return std::cosh(x); }, -2.0, 2.0},
      {"exp", [](const Jet2& a) { return exp(a); }, [](double x) { return std::exp(x); }, -2.0, 2.0},
      {"sqrt", [](const Jet2& a) { return sqrt(a); }, [](double x) { return std::sqrt(x); }, 0.3, 4.0},
  };
  std::mt19937 rng(23);
  const double h = 1e-4;
  for (const Case& c : cases) {
    CAPTURE(c.name);
    std::uniform_real_distribution<double> dist(c.lo, c.hi);
    for (int rep = 0; rep < 200; ++rep) {
      const double x = dist(rng);
      const Jet2 jx = c.jf(Jet2::seed(x, 1, 0));
      const double fd1 = (c.f(x + h) - c.f(x - h)) / (2 * h);
      const double fd2 = (c.f(x + h) - 2 * c.f(x) + c.f(x - h)) / (h * h);
      CHECK(std::abs(jx.grad(0) - fd1) <= 1e-6 * (1 + std::abs(fd1)));
      CHECK(std::abs(jx.hess(0, 0) - fd2) <= 1e-6 * (1 + std::abs(fd2)) + 1e-6);
    }
  }
}

TEST_CASE("composition association does not change the jet") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> dist(0.2, 1.5);
  for (int rep = 0; rep < 100; ++rep) {
    const Jet2 a = Jet2::seed(dist(rng), 2, 0);
    const Jet2 b = Jet2::seed(dist(rng), 2, 1);
    const Jet2 c(dist(rng), 2);

    const Jet2 left = sin((a * b) * c) + ((a + b) + c);
    const Jet2 right = sin(a * (b * c)) + (a + (b + c));
    CHECK(max_jet_diff(left, right) < 1e-13);

    const Jet2 quot1 = (a * b) / (c + a * a);
    const Jet2 quot2 = a * (b / (c + a * a));
    CHECK(max_jet_diff(quot1, quot2) < 1e-13);
  }
}

TEST_CASE("mixed partials are symmetric by construction") {
  const Jet2 x = Jet2::seed(0.7, 3, 0);
  const Jet2 y = Jet2::seed(-0.4, 3, 1);
  const Jet2 z = Jet2::seed(1.2, 3, 2);
  const Jet2 w = sin(x * y) * cosh(z) + exp(x * z);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(w.hess(a, b) == w.hess(b, a));
    }
  }
}

TEST_SUITE_END();
