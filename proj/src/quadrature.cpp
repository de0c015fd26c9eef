#include "lmcf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <stdexcept>

namespace lmcf {

namespace {

GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // Roots of P_n by Newton iteration on the three-term recurrence.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
  static std::map<int, GaussRule> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

namespace {

double panel_value(const std::function<double(double)>& f, double a, double b,
                   const GaussRule& rule, long& evals) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  evals += static_cast<long>(rule.nodes.size());
  return s * half;
}

struct Panel {
  double a, b;
  double value;   // refined estimate: left half + right half
  double error;   // |whole - refined|
};

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts, std::span<const double> splits) {
  QuadResult out;
  if (!(b > a)) return out;
  const GaussRule& rule = gauss_legendre(opts.order);

  std::vector<double> cuts{a, b};
  for (double s : splits) {
    if (s > a && s < b) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());

  // The bisection difference tracks the last refinement step; scale it up so
  // the reported estimate stays an upper bound for the remaining error.
  constexpr double kSafety = 4.0;
  auto make_panel = [&](double lo, double hi) {
    const double whole = panel_value(f, lo, hi, rule, out.evaluations);
    const double mid = 0.5 * (lo + hi);
    const double refined = panel_value(f, lo, mid, rule, out.evaluations) +
                           panel_value(f, mid, hi, rule, out.evaluations);
    return Panel{lo, hi, refined, kSafety * std::abs(whole - refined)};
  };

  auto cmp = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  double value = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = make_panel(cuts[i], cuts[i + 1]);
    value += p.value;
    error += p.error;
    heap.push(p);
  }

  int intervals = static_cast<int>(cuts.size()) - 1;
  while (error > opts.tolerance * (1.0 + std::abs(value)) && intervals < opts.max_intervals) {
    Panel worst = heap.top();
    heap.pop();
    value -= worst.value;
    error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (Panel half : {make_panel(worst.a, mid), make_panel(mid, worst.b)}) {
      value += half.value;
      error += half.error;
      heap.push(half);
    }
    ++intervals;
  }

  out.value = value;
  out.error_estimate = error;
  out.converged = error <= opts.tolerance * (1.0 + std::abs(value));
  return out;
}

QuadResult integrate2d(const std::function<double(double, double)>& f, double a,
                       double b, double v0, double v1, const QuadOptions& opts,
                       std::span<const double> u_splits, const InnerSplits& inner_splits) {
  QuadResult out;
  if (!(b > a) || !(v1 > v0)) return out;
  QuadOptions inner_opts = opts;
  // Inner integrals feed outer panel estimates; keep their absolute noise a
  // small fraction of the overall budget.
  inner_opts.tolerance = opts.tolerance * 0.02;
  long inner_evals = 0;
  bool inner_converged = true;
  double inner_error_mass = 0.0;

  auto outer = [&](double u) {
    std::vector<double> cuts;
    if (inner_splits) cuts = inner_splits(u);
    QuadResult r = integrate([&](double v) { return f(u, v); }, v0, v1, inner_opts, cuts);
    inner_evals += r.evaluations;
    inner_converged = inner_converged && r.converged;
    inner_error_mass = std::max(inner_error_mass, r.error_estimate);
    return r.value;
  };

  QuadOptions outer_opts = opts;
  outer_opts.tolerance = opts.tolerance;
  QuadResult r = integrate(outer, a, b, outer_opts, u_splits);
  out.value = r.value;
  out.error_estimate = r.error_estimate + inner_error_mass * (b - a);
  out.converged = r.converged && inner_converged;
  out.evaluations = inner_evals;
  return out;
}

}  // namespace lmcf
