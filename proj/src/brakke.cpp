#include "lmcf/brakke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lmcf/cone_geometry.hpp"
#include "lmcf/geometry.hpp"

namespace lmcf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_pq_surface(const Immersion& imm) {
  if (imm.domain_dim() != 2 || imm.ambient_complex_dim() != 2) {
    throw std::invalid_argument("Brakke quadrature covers the (p, q) surface kinds");
  }
}

// Profile values where the integrand loses smoothness: the crease/singular
// locus at 0 and, for origin-centered test functions, the profile values
// where |F| crosses a kink radius of the profile.
std::vector<double> integrand_splits(const Immersion& imm, const TestFunction& phi) {
  std::vector<double> splits{0.0};
  if (norm(phi.center()) == 0.0) {
    std::vector<double> radii{phi.outer_radius()};
    if (phi.inner_radius() > 0.0) radii.push_back(phi.inner_radius());
    for (double r : radii) {
      if (auto w = imm.profile_interval_for_radius(r)) {
        splits.push_back(w->first);
        splits.push_back(w->second);
      }
    }
  }
  return splits;
}

// Radii at which the profile of phi loses a derivative order.
std::vector<double> kink_radii(const TestFunction& phi) {
  std::vector<double> radii{phi.outer_radius()};
  if (phi.inner_radius() > 0.0) radii.push_back(phi.inner_radius());
  return radii;
}

// theta values on the circle u = const where |F(u, theta) - center| crosses a
// kink radius of the profile: scanned at fixed resolution, then bisected to
// machine precision.  Off-center test functions have their support cut into
// thin theta-arcs and no node-based error estimate can be trusted without
// these cuts.
std::vector<double> theta_arc_splits(const Immersion& imm, const TestFunction& phi, double u) {
  std::vector<double> splits;
  if (norm(phi.center()) == 0.0) return splits;  // |F| is theta-independent
  auto dist_sq = [&](double th) {
    const double params[2] = {u, th};
    const ComplexVec d = imm.evaluate(params) - phi.center();
    return euclidean_inner(d, d);
  };
  constexpr int kScan = 4096;
  static thread_local std::vector<double> samples;
  samples.assign(kScan + 1, 0.0);
  for (int i = 0; i <= kScan; ++i) samples[static_cast<std::size_t>(i)] = dist_sq(kTwoPi * i / kScan);
  for (double radius : kink_radii(phi)) {
    const double r_sq = radius * radius;
    for (int i = 0; i < kScan; ++i) {
      const double fa = samples[static_cast<std::size_t>(i)] - r_sq;
      const double fb = samples[static_cast<std::size_t>(i + 1)] - r_sq;
      if (fa == 0.0) splits.push_back(kTwoPi * i / kScan);
      if (fa * fb >= 0.0) continue;
      double a = kTwoPi * i / kScan, b = kTwoPi * (i + 1) / kScan;
      double va = fa;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        const double vm = dist_sq(mid) - r_sq;
        if (va * vm <= 0.0) {
          b = mid;
        } else {
          a = mid;
          va = vm;
        }
      }
      splits.push_back(0.5 * (a + b));
    }
  }
  return splits;
}

IntegralValue integrate_over_surface(const Immersion& imm, const TestFunction& phi,
                                     const std::function<double(const ComplexPoint&, double, double)>& weight,
                                     double window_factor, const BrakkeOptions& opts) {
  require_pq_surface(imm);
  IntegralValue out;
  auto window = imm.profile_interval_for_radius(phi.support_radius());
  if (!window) return out;
  double lo = window->first * window_factor;
  double hi = window->second * window_factor;
  if (imm.half_domain() || lo > 0.0) lo = std::max(lo, 0.0);

  auto splits = integrand_splits(imm, phi);
  QuadOptions qopts;
  qopts.tolerance = opts.quad_tolerance;
  qopts.order = opts.quad_order;
  const QuadResult r = integrate2d(
      [&](double u, double th) {
        const double params[2] = {u, th};
        const ComplexPoint f = imm.evaluate(params);
        return weight(f, u, th);
      },
      lo, hi, 0.0, kTwoPi, qopts, splits,
      [&](double u) { return theta_arc_splits(imm, phi, u); });
  out.value = r.value;
  out.error_estimate = r.error_estimate;
  out.converged = r.converged;
  if (!r.converged) {
    // Flagged, never silent: callers surface `converged` in reports.
    out.error_estimate = std::max(out.error_estimate, std::abs(r.value));
  }
  return out;
}

}  // namespace

IntegralValue mass(const Immersion& imm, const TestFunction& phi, const BrakkeOptions& opts) {
  return integrate_over_surface(
      imm, phi,
      [&](const ComplexPoint& f, double u, double) {
        const double params[2] = {u, 0.0};
        return phi(f) * imm.reference(params).area_density;
      },
      1.0, opts);
}

IntegralValue mass_with_window_factor(const Immersion& imm, const TestFunction& phi,
                                      double factor, const BrakkeOptions& opts) {
  return integrate_over_surface(
      imm, phi,
      [&](const ComplexPoint& f, double u, double) {
        const double params[2] = {u, 0.0};
        return phi(f) * imm.reference(params).area_density;
      },
      factor, opts);
}

IntegralValue truncated_area(const Immersion& imm, double radius, const BrakkeOptions& opts) {
  require_pq_surface(imm);
  IntegralValue out;
  auto window = imm.profile_interval_for_radius(radius);
  if (!window) return out;
  double lo = window->first;
  if (imm.half_domain()) lo = std::max(lo, 0.0);
  QuadOptions qopts;
  qopts.tolerance = opts.quad_tolerance;
  qopts.order = opts.quad_order;
  const double splits[] = {0.0};
  const QuadResult r = integrate(
      [&](double u) {
        const double params[2] = {u, 0.0};
        return imm.reference(params).area_density;
      },
      lo, window->second, qopts, splits);
  out.value = kTwoPi * r.value;  // the density never depends on theta
  out.error_estimate = kTwoPi * r.error_estimate;
  out.converged = r.converged;
  return out;
}

namespace {

// Pointwise concordance of the closed-form |h|^2 density against the
// jet-computed one, on a coarse grid that avoids the singular locus.
double density_concordance(const Immersion& imm, double lo, double hi,
                           const BrakkeOptions& opts) {
  double worst = 0.0;
  const int n = opts.density_check_grid;
  for (int i = 0; i < n; ++i) {
    const double u = lo + (hi - lo) * (i + 0.37) / n;
    if ((imm.profile_zero_singular() || imm.half_domain()) && std::abs(u) < 1e-8) continue;
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * (j + 0.37) / n;
      const double params[2] = {u, th};
      const GeometryAtPoint g = compute_geometry(imm, params);
      const GeometryReference ref = imm.reference(params);
      const double jet_density = euclidean_inner(g.H, g.H) * g.metric.area_density;
      const double closed_density = ref.h_norm_sq * ref.area_density;
      worst = std::max(worst, std::abs(jet_density - closed_density) /
                                  (1.0 + std::abs(closed_density)));
    }
  }
  return worst;
}

}  // namespace

FirstVariation first_variation(const Immersion& imm, const TestFunction& phi,
                               const BrakkeOptions& opts) {
  require_pq_surface(imm);
  FirstVariation out;

  const bool diverges =
      imm.profile_zero_singular() && !imm.time_indexed() && phi.value_at_origin() > 0.0;
  if (diverges) {
    // int phi |h|^2 d||V_0|| diverges at the cone point; the report carries
    // the classification, never a floating-point infinity.  The transport
    // addend stays finite and is still computed below.
    out.minus_infinity = true;
    out.curvature_part.converged = false;
  }

  if (auto window = imm.profile_interval_for_radius(phi.support_radius())) {
    double lo = window->first, hi = window->second;
    if (imm.half_domain()) lo = std::max(lo, 0.0);
    if (hi - lo > 1e-9) {  // grazing contact leaves nothing to check
      out.density_check_max_rel_err = density_concordance(imm, lo, hi, opts);
      if (out.density_check_max_rel_err > opts.density_check_tolerance) {
        throw std::runtime_error("pointwise |h|^2 density concordance failed before quadrature");
      }
    }
  }

  if (!diverges) {
    out.curvature_part = integrate_over_surface(
        imm, phi,
        [&](const ComplexPoint& f, double u, double) {
          const double params[2] = {u, 0.0};
          const GeometryReference ref = imm.reference(params);
          return -phi(f) * ref.h_norm_sq * ref.area_density;
        },
        1.0, opts);
  }

  out.transport_part = integrate_over_surface(
      imm, phi,
      [&](const ComplexPoint& f, double u, double th) {
        const double params[2] = {u, th};
        const GeometryReference ref = imm.reference(params);
        const ComplexVec h = imm.closed_form_h(params);
        return euclidean_inner(phi.gradient(f), h) * ref.area_density;
      },
      1.0, opts);
  return out;
}

int Family::time_sign() const {
  switch (kind) {
    case Kind::shrinker_St:
    case Kind::V_t_case3:
      return -1;
    case Kind::expander_Et:
    case Kind::V_t_case2:
      return +1;
    default:
      throw std::invalid_argument("not a time-scaled family kind");
  }
}

Immersion Family::limit() const {
  switch (kind) {
    case Kind::shrinker_St:
      return Immersion::make(Kind::limit_S0, pq, half_domain);
    case Kind::expander_Et:
      return Immersion::make(Kind::limit_E0, pq, half_domain);
    case Kind::V_t_case2:
      return Immersion::make(Kind::limit_V0_case2, pq, half_domain);
    case Kind::V_t_case3:
      return Immersion::make(Kind::limit_V0_case3, pq, half_domain);
    default:
      throw std::invalid_argument("not a time-scaled family kind");
  }
}

TimeDerivative mass_time_derivative(const Family& family, double t,
                                    const TestFunction& phi, const BrakkeOptions& opts) {
  if (std::abs(t) < 1e-6) {
    throw std::domain_error("|t| < 1e-6: use limit extrapolation near the singular time");
  }
  if (t * family.time_sign() <= 0.0) {
    throw std::invalid_argument("t has the wrong sign for this family");
  }
  // Central differences with two Richardson steps.  The masses entering the
  // difference are resolved an order tighter than the requested tolerance
  // because the step division amplifies their noise.
  BrakkeOptions mass_opts = opts;
  mass_opts.quad_tolerance = 0.01 * opts.quad_tolerance;
  double h = 0.02 * std::abs(t);
  if (norm(phi.center()) == 0.0) {
    // ||V_t||(phi) loses smoothness at the times where the surface's minimum
    // radius s sqrt(min_sq) crosses a kink radius of the profile; keep the
    // whole stencil strictly on one side of every such grazing time.
    const auto& pq = family.pq;
    const bool s_like = family.kind == Kind::shrinker_St || family.kind == Kind::V_t_case3;
    const double min_sq = s_like ? pq.q : pq.p;
    const double c = self_similar_constant(pq);
    std::vector<double> radii = kink_radii(phi);
    radii.push_back(phi.support_radius());
    for (double r : radii) {
      const double graze = c * r * r / min_sq;  // |t| at which s sqrt(min_sq) = r
      const double gap = std::abs(std::abs(t) - graze);
      if (gap > 0.0) h = std::min(h, 0.49 * gap);
    }
    h = std::max(h, 1e-5 * std::abs(t));
  }
  double quad_err = 0.0;
  auto m = [&](double tt) {
    const IntegralValue v = mass(family.at(tt), phi, mass_opts);
    quad_err += v.error_estimate;
    return v.value;
  };
  auto central = [&](double step) { return (m(t + step) - m(t - step)) / (2.0 * step); };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  const double d3 = central(0.25 * h);
  const double r12 = (4.0 * d2 - d1) / 3.0;
  const double r23 = (4.0 * d3 - d2) / 3.0;
  TimeDerivative out;
  out.value = (16.0 * r23 - r12) / 15.0;
  out.error_estimate = std::abs(r23 - r12) / 15.0 + quad_err / (0.5 * h);
  return out;
}

namespace {

double richardson_limit(const std::vector<double>& seq, double* error_estimate) {
  // Geometric t-sequence with ratio 2; the convergence carries sqrt|t| and
  // |t| terms, eliminated in turn (plus one guard level).
  static const double exponents[] = {0.5, 1.0, 1.5};
  std::vector<double> cur = seq;
  for (double e : exponents) {
    if (cur.size() < 2) break;
    const double r = std::pow(2.0, e);
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      next[i] = (r * cur[i + 1] - cur[i]) / (r - 1.0);
    }
    cur = std::move(next);
  }
  if (error_estimate) {
    *error_estimate = cur.size() >= 2 ? std::abs(cur.back() - cur[cur.size() - 2])
                                      : std::abs(cur.back());
  }
  return cur.back();
}

}  // namespace

LimitMatch limit_match(const Family& family, const TestFunction& phi, double t0,
                       int levels, const BrakkeOptions& opts) {
  if (phi.value_at_origin() > 1e-12) {
    throw std::domain_error("limit_match requires phi(0) = 0; use classify_divergence");
  }
  LimitMatch out;
  const int sign = family.time_sign();
  for (int k = 0; k <= levels; ++k) {
    const double t = sign * t0 * std::pow(2.0, -k);
    const FirstVariation fv = first_variation(family.at(t), phi, opts);
    out.times.push_back(t);
    out.deltas.push_back(fv.value());
  }

  BrakkeOptions target_opts = opts;
  target_opts.quad_tolerance = std::min(opts.quad_tolerance, 1e-9);
  const FirstVariation tv = first_variation(family.limit(), phi, target_opts);
  out.target = tv.value();
  out.target_error = tv.error_estimate();

  // Drop any leading members whose support misses phi entirely.
  std::vector<double> seq = out.deltas;
  std::size_t first = 0;
  while (first < seq.size() && seq[first] == 0.0) ++first;
  seq.erase(seq.begin(), seq.begin() + static_cast<long>(first));

  if (seq.empty()) {
    out.extrapolated = 0.0;
    out.extrapolation_error = 0.0;
  } else {
    out.extrapolated = richardson_limit(seq, &out.extrapolation_error);
  }
  out.pass = std::abs(out.extrapolated - out.target) < out.tolerance * (1.0 + std::abs(out.target));
  return out;
}

DivergenceFit fit_log_growth(const std::vector<double>& times,
                             const std::vector<double>& values, int window) {
  if (times.size() != values.size() || times.size() < 3) {
    throw std::invalid_argument("log-growth fit needs at least 3 samples");
  }
  DivergenceFit fit;
  fit.times = times;
  fit.values = values;
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(window), times.size());
  const std::size_t off = times.size() - m;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = off; i < times.size(); ++i) {
    const double x = std::log(1.0 / std::abs(times[i]));
    sx += x;
    sy += values[i];
    sxx += x * x;
    sxy += x * values[i];
  }
  const double n = static_cast<double>(m);
  const double denom = n * sxx - sx * sx;
  fit.log_coefficient = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.log_coefficient * sx) / n;
  double rss = 0.0;
  for (std::size_t i = off; i < times.size(); ++i) {
    const double x = std::log(1.0 / std::abs(times[i]));
    const double r = values[i] - (fit.log_coefficient * x + fit.intercept);
    rss += r * r;
  }
  const double sigma_sq = rss / std::max(1.0, n - 2.0);
  fit.log_coefficient_stderr = std::sqrt(sigma_sq * n / denom);
  return fit;
}

DivergenceFit classify_divergence(const Family& family, const TestFunction& phi,
                                  double t0, int levels, const BrakkeOptions& opts) {
  if (!(phi.value_at_origin() > 0.0)) {
    throw std::domain_error("classify_divergence requires phi(0) > 0; use limit_match");
  }
  std::vector<double> times, values;
  const int sign = family.time_sign();
  for (int k = 0; k <= levels; ++k) {
    const double t = sign * t0 * std::pow(2.0, -k);
    const Immersion imm = family.at(t);
    const IntegralValue v = integrate_over_surface(
        imm, phi,
        [&](const ComplexPoint& f, double u, double) {
          const double params[2] = {u, 0.0};
          const GeometryReference ref = imm.reference(params);
          return phi(f) * ref.h_norm_sq * ref.area_density;
        },
        1.0, opts);
    if (v.value == 0.0 && values.empty()) continue;  // support has not reached phi yet
    times.push_back(t);
    values.push_back(v.value);
  }
  DivergenceFit fit = fit_log_growth(times, values);
  if (fit.log_coefficient > 3.0 * fit.log_coefficient_stderr) {
    fit.cls = DivergenceClass::minus_infinity;
  } else {
    const std::size_t n = values.size();
    const bool cauchy = n >= 2 && std::abs(values[n - 1] - values[n - 2]) <
                                      1e-6 * (1.0 + std::abs(values[n - 1]));
    fit.cls = cauchy ? DivergenceClass::finite : DivergenceClass::inconclusive;
  }
  return fit;
}

std::complex<double> boundary_cancellation(int p, int q) {
  if (q < 1) throw std::invalid_argument("q must be a positive integer");
  std::complex<double> sum = 0.0;
  for (int k = 0; k < q; ++k) {
    sum += std::polar(1.0, kTwoPi * p * k / q);
  }
  return sum;
}

std::complex<double> boundary_first_variation(const Immersion& half_vt,
                                              const AmbientField& w,
                                              const BrakkeOptions& opts) {
  if (!half_vt.half_domain()) {
    throw std::invalid_argument("boundary term is defined for half-domain families");
  }
  const Kind kind = half_vt.kind();
  if (kind != Kind::shrinker_St && kind != Kind::expander_Et) {
    throw std::invalid_argument("boundary term supports the half-domain S_t / E_t families");
  }
  const auto& pq = half_vt.cone_params();
  const bool e_side = kind == Kind::expander_Et;
  const double weight = half_vt.scale() * std::sqrt(static_cast<double>(e_side ? pq.p : pq.q));

  QuadOptions qopts;
  qopts.tolerance = std::min(opts.quad_tolerance, 1e-12);
  qopts.order = opts.quad_order;

  auto component = [&](bool imaginary) {
    return integrate(
        [&](double th) {
          const double params[2] = {0.0, th};
          const ComplexPoint x = half_vt.evaluate(params);
          const ComplexVec field = w(x);
          ComplexVec nu(2);
          if (e_side) {
            nu.set_slot(0, std::polar(1.0, pq.p * th));  // (e^{ip theta}, 0)
          } else {
            nu.set_slot(1, std::polar(1.0, 0.5 * std::numbers::pi - pq.q * th));  // (0, i e^{-iq theta})
          }
          if (imaginary) nu = apply_J(nu);
          return euclidean_inner(field, nu) * weight;
        },
        0.0, kTwoPi, qopts);
  };
  const QuadResult re = component(false);
  const QuadResult im = component(true);
  return {re.value, im.value};
}

std::pair<Family, Family> theorem_families(TheoremId theorem, const ConeParams& pq) {
  if (theorem == TheoremId::thm_1_2) {
    if (pq.q <= 1) {
      throw std::invalid_argument(
          "Theorem 1.2 requires q > 1: the mu = 0 boundary term only cancels when the "
          "roots-of-unity sum vanishes");
    }
    return {Family{Kind::shrinker_St, pq, true}, Family{Kind::expander_Et, pq, true}};
  }
  switch (pq.parity()) {
    case ParityCase::both_odd:
      return {Family{Kind::shrinker_St, pq, false}, Family{Kind::expander_Et, pq, false}};
    case ParityCase::p_odd_q_even:
      return {Family{Kind::shrinker_St, pq, false}, Family{Kind::V_t_case2, pq, false}};
    case ParityCase::p_even_q_odd:
      return {Family{Kind::V_t_case3, pq, false}, Family{Kind::expander_Et, pq, false}};
  }
  throw std::logic_error("unreachable");
}

std::vector<TestFunction> default_test_functions(const ConeParams& pq) {
  std::vector<TestFunction> phis;
  phis.push_back(TestFunction::radial(ComplexPoint(2), 0.5));  // phi(0) > 0
  ComplexPoint on_link(2);
  const double y = 1.0 / std::sqrt(static_cast<double>(pq.p + pq.q));
  on_link.set_slot(0, y * std::sqrt(static_cast<double>(pq.q)));
  on_link.set_slot(1, std::complex<double>(0.0, y * std::sqrt(static_cast<double>(pq.p))));
  phis.push_back(TestFunction::radial(on_link, 0.4));
  ComplexPoint off_image(2);
  off_image.set_slot(0, 6.0);
  phis.push_back(TestFunction::radial(off_image, 0.3));
  phis.push_back(TestFunction::annular(2, 0.6, 1.6));
  return phis;
}

namespace {

std::vector<AmbientField> default_boundary_fields() {
  std::vector<AmbientField> ws;
  ws.push_back([](const ComplexPoint&) {
    ComplexVec w(2);
    w[0] = 1.0;
    return w;
  });
  ws.push_back([](const ComplexPoint& x) {
    ComplexVec w(2);
    w[0] = x[2];
    w[1] = -x[0] + 0.5 * x[3];
    w[2] = x[1];
    w[3] = 0.25;
    return w;
  });
  ws.push_back([](const ComplexPoint& x) {
    ComplexVec w(2);
    w[0] = x[2] * x[2] - x[3] * x[3];
    w[1] = x[0] * x[2] + 0.3;
    w[2] = x[3] * x[3];
    w[3] = x[1] * x[3] - x[2];
    return w;
  });
  return ws;
}

}  // namespace

std::vector<BrakkeReport> theorem_suite(TheoremId theorem, const ConeParams& pq,
                                        const std::vector<TestFunction>& phis,
                                        const TheoremOptions& opts) {
  const auto [neg, pos] = theorem_families(theorem, pq);
  const double c = self_similar_constant(pq);

  // The two one-sided limits name the same varifold only through the
  // parity reparametrization; witness it pointwise once per suite.
  BrakkeVerdict reparam;
  reparam.check = "limit_reparametrization";
  reparam.tolerance = 1e-12;
  switch (pq.parity()) {
    case ParityCase::both_odd:
      reparam.measured = reparametrization_error(Kind::limit_E0, pq);
      reparam.detail = "E_0(y, th) = S_0(y, th + arg y)";
      break;
    case ParityCase::p_odd_q_even:
      reparam.measured = reparametrization_error(Kind::limit_V0_case2, pq);
      reparam.detail = "V_0(y, th) = S_0(y, th + arg(y)/q)";
      break;
    case ParityCase::p_even_q_odd:
      reparam.measured = reparametrization_error(Kind::limit_V0_case3, pq);
      reparam.detail = "V_0(y, th) = E_0(y, th + arg(y)/p)";
      break;
  }
  reparam.pass = reparam.measured < reparam.tolerance;

  std::vector<BrakkeReport> reports;
  for (const TestFunction& phi : phis) {
    BrakkeReport rep;
    rep.phi_name = phi.name();
    rep.phi_at_origin = phi.value_at_origin();
    rep.negative_family = kind_id(neg.kind) + (neg.half_domain ? "(half)" : "");
    rep.positive_family = kind_id(pos.kind) + (pos.half_domain ? "(half)" : "");

    const IntegralValue m = mass(neg.at(-c), phi, opts.quadrature);
    rep.mass_at_reference_t = m.value;
    rep.quadrature_error_estimate = m.error_estimate;
    rep.first_variation_at_reference_t = first_variation(neg.at(-c), phi, opts.quadrature).value();
    rep.mass_derivative_fd_at_reference_t = mass_time_derivative(neg, -c, phi, opts.quadrature).value;

    bool all_pass = reparam.pass;
    rep.verdicts.push_back(reparam);

    // Smooth-flow identity spot checks on both sides.
    for (const Family& fam : {neg, pos}) {
      for (double mag : opts.smooth_identity_times) {
        const double t = fam.time_sign() * mag;
        const TimeDerivative ddt = mass_time_derivative(fam, t, phi, opts.quadrature);
        const FirstVariation fv = first_variation(fam.at(t), phi, opts.quadrature);
        const double err = std::abs(ddt.value - fv.value());
        const double tol = opts.smooth_identity_tolerance * (1.0 + std::abs(fv.value()));
        BrakkeVerdict v;
        v.check = "smooth_flow_identity " + kind_id(fam.kind) + " t=" + std::to_string(t);
        v.measured = err;
        v.tolerance = tol;
        v.pass = err < tol;
        all_pass = all_pass && v.pass;
        rep.verdicts.push_back(std::move(v));
      }
    }

    if (rep.phi_at_origin > 1e-12) {
      rep.divergence_negative = classify_divergence(neg, phi, opts.t0, opts.levels, opts.quadrature);
      rep.divergence_positive = classify_divergence(pos, phi, opts.t0, opts.levels, opts.quadrature);
      for (const auto* fit : {&*rep.divergence_negative, &*rep.divergence_positive}) {
        BrakkeVerdict v;
        v.check = "divergence_minus_infinity";
        v.pass = fit->cls == DivergenceClass::minus_infinity;
        v.measured = fit->log_coefficient;
        v.tolerance = 3.0 * fit->log_coefficient_stderr;
        v.detail = "limit comparison holds as -inf <= -inf";
        all_pass = all_pass && v.pass;
        rep.inconclusive = rep.inconclusive || fit->cls == DivergenceClass::inconclusive;
        rep.verdicts.push_back(std::move(v));
      }
    } else {
      rep.limit_negative = limit_match(neg, phi, opts.t0, opts.levels, opts.quadrature);
      rep.limit_positive = limit_match(pos, phi, opts.t0, opts.levels, opts.quadrature);
      for (const auto* lm : {&*rep.limit_negative, &*rep.limit_positive}) {
        BrakkeVerdict v;
        v.check = "limit_match";
        v.pass = lm->pass;
        v.measured = std::abs(lm->extrapolated - lm->target);
        v.tolerance = opts.limit_tolerance * (1.0 + std::abs(lm->target));
        v.detail = "mass-preserving equality in the Brakke comparison";
        all_pass = all_pass && v.pass;
        rep.verdicts.push_back(std::move(v));
      }
      // Both one-sided limits must meet the same t = 0 first variation.
      BrakkeVerdict v;
      v.check = "limit_targets_agree";
      v.measured = std::abs(rep.limit_negative->target - rep.limit_positive->target);
      v.tolerance = 1e-8 * (1.0 + std::abs(rep.limit_negative->target));
      v.pass = v.measured < v.tolerance;
      all_pass = all_pass && v.pass;
      rep.verdicts.push_back(std::move(v));
    }

    if (theorem == TheoremId::thm_1_2) {
      const auto ws = default_boundary_fields();
      for (const Family& fam : {neg, pos}) {
        const Immersion imm = fam.at(fam.time_sign() * opts.t0);
        double worst = 0.0;
        for (const auto& w : ws) {
          worst = std::max(worst, std::abs(boundary_first_variation(imm, w, opts.quadrature)));
        }
        BrakkeVerdict v;
        v.check = "boundary_cancellation " + kind_id(fam.kind);
        v.measured = worst;
        v.tolerance = 1e-10;
        v.pass = worst < v.tolerance;
        all_pass = all_pass && v.pass;
        rep.verdicts.push_back(std::move(v));
      }
    }

    rep.pass = all_pass;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace lmcf
