// Numerical certification of the Brakke-motion criterion: masses and first
// variations by quadrature against the closed-form densities, mass time
// derivatives by Richardson-extrapolated finite differences, t -> 0 limits by
// geometric-sequence extrapolation, and the roots-of-unity boundary
// cancellation behind the single-cone flows.

#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lmcf/immersions.hpp"
#include "lmcf/quadrature.hpp"
#include "lmcf/test_function.hpp"

namespace lmcf {

struct IntegralValue {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

struct BrakkeOptions {
  double quad_tolerance = 1e-8;
  int quad_order = 16;
  /// Pointwise |h|^2-density concordance checked on this grid before any
  /// first-variation quadrature.
  int density_check_grid = 5;
  double density_check_tolerance = 1e-9;
};

/// ||V||(phi) = int phi d||V|| over the support window solved from the
/// closed-form |F|^2.
IntegralValue mass(const Immersion& imm, const TestFunction& phi,
                   const BrakkeOptions& opts = {});

/// Mass with the profile window enlarged by `factor` beyond the solved
/// support bound (the support identity: the value must not move).
IntegralValue mass_with_window_factor(const Immersion& imm, const TestFunction& phi,
                                      double factor, const BrakkeOptions& opts = {});

/// ||V||(B_radius): the area of the piece inside the ball, with the
/// truncation done exactly by the closed-form profile window.
IntegralValue truncated_area(const Immersion& imm, double radius,
                             const BrakkeOptions& opts = {});

struct FirstVariation {
  bool minus_infinity = false;     // phi(0) > 0 on a limit kind
  IntegralValue curvature_part;    // -int phi |h|^2 d||V||
  IntegralValue transport_part;    // +int Dphi . h d||V||
  double density_check_max_rel_err = 0.0;
  double value() const { return curvature_part.value + transport_part.value; }
  double error_estimate() const {
    return curvature_part.error_estimate + transport_part.error_estimate;
  }
};

/// delta(V, phi)(h(V)) with both addends reported separately.
FirstVariation first_variation(const Immersion& imm, const TestFunction& phi,
                               const BrakkeOptions& opts = {});

/// Time-scaled family handle: builds the member at a given t.
struct Family {
  Kind kind = Kind::shrinker_St;
  ConeParams pq;
  bool half_domain = false;

  Immersion at(double t) const { return Immersion::make_at_time(kind, pq, t, half_domain); }
  /// +1 for expander-side families (t > 0), -1 for shrinker-side.
  int time_sign() const;
  /// The t -> 0 limit varifold (the single cone when half_domain).
  Immersion limit() const;
};

struct TimeDerivative {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// d/dt ||V_t||(phi) by central differences with one Richardson step.
/// Refuses |t| < 1e-6 (limit extrapolation owns that regime).
TimeDerivative mass_time_derivative(const Family& family, double t,
                                    const TestFunction& phi,
                                    const BrakkeOptions& opts = {});

struct LimitMatch {
  std::vector<double> times;
  std::vector<double> deltas;
  double extrapolated = 0.0;
  double extrapolation_error = 0.0;
  double target = 0.0;
  double target_error = 0.0;
  double tolerance = 1e-3;
  bool pass = false;
};

/// Extrapolates delta(V_t, phi)(h) along t = sign * t0 * 2^-k, k = 0..levels,
/// and compares with delta(V_0, phi)(h(V_0)) from the limit kind.  Requires
/// phi(0) = 0.
LimitMatch limit_match(const Family& family, const TestFunction& phi,
                       double t0 = 0.5, int levels = 10,
                       const BrakkeOptions& opts = {});

enum class DivergenceClass { finite, minus_infinity, inconclusive };

struct DivergenceFit {
  DivergenceClass cls = DivergenceClass::inconclusive;
  double log_coefficient = 0.0;  // A in I ~ A log(1/|t|) + B
  double intercept = 0.0;
  double log_coefficient_stderr = 0.0;
  std::vector<double> times;
  std::vector<double> values;  // int phi |h|^2 d||V_t||
};

/// Classifies the phi(0) > 0 branch: fits int phi |h|^2 d||V_t|| against
/// log(1/|t|) and calls it minus_infinity when the slope clears 3 standard
/// errors.  Requires phi(0) > 0.
DivergenceFit classify_divergence(const Family& family, const TestFunction& phi,
                                  double t0 = 0.5, int levels = 10,
                                  const BrakkeOptions& opts = {});

/// Least-squares fit of y ~ A log(1/|t|) + B over the trailing `window`
/// points; shared by classify_divergence and the reduced-model oracle.
DivergenceFit fit_log_growth(const std::vector<double>& times,
                             const std::vector<double>& values, int window = 6);

/// sum_{k=0}^{q-1} e^{2 pi i p k / q}: zero for coprime q > 1, one for q = 1.
std::complex<double> boundary_cancellation(int p, int q);

using AmbientField = std::function<ComplexVec(const ComplexPoint&)>;

/// Boundary contribution of the mu = 0 circle of a half-domain S_t or E_t to
/// the first variation along W: the quadrature of W against the conormal
/// (e^{ip theta}, 0) (E side) or (0, i e^{-iq theta}) (S side) with the
/// paper's per-sheet weight.  Real part pairs W with the conormal, imaginary
/// part with J times it.
std::complex<double> boundary_first_variation(const Immersion& half_vt,
                                              const AmbientField& w,
                                              const BrakkeOptions& opts = {});

enum class TheoremId { thm_1_1, thm_1_2 };

struct BrakkeVerdict {
  std::string check;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// One report cell: everything measured for one test function.  The scalar
/// mass / first-variation / finite-difference values are taken at the
/// reference slice t = -c (scale 1) of the negative-side family.
struct BrakkeReport {
  std::string phi_name;
  double phi_at_origin = 0.0;
  std::string negative_family;
  std::string positive_family;
  double mass_at_reference_t = 0.0;
  double first_variation_at_reference_t = 0.0;
  double mass_derivative_fd_at_reference_t = 0.0;
  double quadrature_error_estimate = 0.0;
  std::optional<LimitMatch> limit_negative;
  std::optional<LimitMatch> limit_positive;
  std::optional<DivergenceFit> divergence_negative;
  std::optional<DivergenceFit> divergence_positive;
  std::vector<BrakkeVerdict> verdicts;
  bool pass = false;
  bool inconclusive = false;
};

struct TheoremOptions {
  double t0 = 0.5;
  int levels = 10;
  std::vector<double> smooth_identity_times = {0.25, 1.0};
  double smooth_identity_tolerance = 1e-5;
  double limit_tolerance = 1e-3;
  BrakkeOptions quadrature;
};

/// The two families (t < 0 and t > 0) of the theorem for this parity case.
std::pair<Family, Family> theorem_families(TheoremId theorem, const ConeParams& pq);

/// Default test-function set: bumps at the origin, on the cone link, off the
/// image, plus an annular bump vanishing at 0.
std::vector<TestFunction> default_test_functions(const ConeParams& pq);

/// Runs the full criterion for Theorem 1.1 (eternal two-cone flow) or 1.2
/// (single-cone flow, q > 1): smooth-flow identity, limit matching for
/// phi(0) = 0, divergence classification for phi(0) > 0, and for Theorem 1.2
/// the boundary cancellation.  One report per test function.
std::vector<BrakkeReport> theorem_suite(TheoremId theorem, const ConeParams& pq,
                                        const std::vector<TestFunction>& phis,
                                        const TheoremOptions& opts = {});

}  // namespace lmcf
