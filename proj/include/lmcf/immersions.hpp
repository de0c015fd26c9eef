// Catalog of the parametrized objects under study: the Legendrian link
// gamma_pq, the four cones C_{±±}, the Hamiltonian stationary shrinker S and
// expander E with their time-scaled flows S_t / E_t, the parity-adjusted
// families V_t, the t -> 0 limit varifolds S_0 / E_0 / V_0, and the
// n-dimensional lambda family.  Every kind exposes point evaluation, exact
// 2-jet evaluation, and closed-form reference data (|F|^2, |h|^2, area
// density, Lagrangian angle).

#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lmcf/complex_space.hpp"
#include "lmcf/jets.hpp"

namespace lmcf {

enum class ParityCase { both_odd, p_odd_q_even, p_even_q_odd };

/// Coprime pair p > q >= 1 selecting a Schoen-Wolfson cone.
struct ConeParams {
  int p = 2;
  int q = 1;

  /// Validates coprimality and p > q >= 1.
  static ConeParams make(int p, int q);
  ParityCase parity() const;
};

/// c = pq / (2(p - q)); S satisfies F_perp = -2cH, E satisfies F_perp = 2cH.
double self_similar_constant(const ConeParams& pq);

/// All coprime pairs with 1 <= q < p <= pmax (the default sweep set).
std::vector<ConeParams> coprime_pairs(int pmax = 5);

/// Level set {sum_i lambda_i x_i^2 = level} rotating with speeds lambda_i,
/// parametrized in the chart that solves for x_{chart_index} with the given
/// sign.
struct LambdaParams {
  std::vector<double> lambdas;  // all nonzero
  double level = 1.0;
  double angle_offset = 0.0;  // additive constant in beta
  int chart_index = 0;
  int chart_sign = +1;
  bool chart_explicit = false;

  static LambdaParams make(std::vector<double> lambdas, double level,
                           double angle_offset = 0.0, int chart_index = -1,
                           int chart_sign = +1);
  double lambda_sum() const;
};

enum class Kind {
  gamma_pq,
  cone_pp,
  cone_pm,
  cone_mp,
  cone_mm,
  shrinker_S,
  expander_E,
  shrinker_St,
  expander_Et,
  V_t_case2,
  V_t_case3,
  limit_S0,
  limit_E0,
  limit_V0_case2,
  limit_V0_case3,
  lambda_family,
  lambda_family_t,
};

std::string kind_id(Kind kind);
std::optional<Kind> kind_from_id(const std::string& id);

/// Closed-form scalar data at a parameter point, used as the oracle against
/// which the jet-computed geometry is tested.
struct GeometryReference {
  double norm_sq = 0.0;       // |F|^2
  double h_norm_sq = 0.0;     // |h|^2
  double area_density = 0.0;  // d||V|| / (dmu dtheta)
  double beta = 0.0;          // Lagrangian angle (one branch)
};

class Immersion {
 public:
  /// Time-free (p, q) kinds: gamma, cones, S, E, limit varifolds.
  static Immersion make(Kind kind, ConeParams pq, bool half_domain = false);
  /// Time-indexed (p, q) kinds: S_t (t < 0), E_t (t > 0), V_t case 2 (t > 0,
  /// p odd q even), V_t case 3 (t < 0, p even q odd).
  static Immersion make_at_time(Kind kind, ConeParams pq, double t,
                                bool half_domain = false);
  static Immersion lambda_family(LambdaParams params);
  /// Sigma_t: level pinned to (-2t) * sum(lambda_i).
  static Immersion lambda_family_t(LambdaParams params, double t);

  Kind kind() const { return kind_; }
  std::string id() const { return kind_id(kind_); }
  bool time_indexed() const;
  double time() const { return time_; }
  bool half_domain() const { return half_domain_; }
  /// sqrt(|t| / c) for time-scaled kinds, 1 otherwise.
  double scale() const;

  const ConeParams& cone_params() const;
  const LambdaParams& lambda_params() const;

  /// Domain dimension k: 1 for gamma_pq, 2 for surfaces, n for lambda kinds.
  int domain_dim() const;
  int ambient_complex_dim() const;

  /// d(beta)/d(theta): p - q for the (p, q) kinds, sum(lambda_i) for lambda.
  double beta_slope() const;

  /// params = (mu or y, theta) for surfaces, (theta) for gamma_pq, and
  /// (free chart coordinates..., theta) for lambda kinds.
  ComplexPoint evaluate(std::span<const double> params) const;
  JetPoint evaluate_jet(std::span<const double> params) const;

  GeometryReference reference(std::span<const double> params) const;

  /// Closed-form mean curvature vector H = J grad(beta); valid on the smooth
  /// locus of every kind with domain_dim >= 2.
  ComplexVec closed_form_h(std::span<const double> params) const;

  /// True when the profile value 0 (mu = 0 or y = 0) is a parametrization
  /// crease or varifold singularity that jets must avoid.
  bool profile_zero_singular() const;

  /// The limit varifolds are single-copy after the parity adjustments.
  int multiplicity() const { return 1; }

  /// Profile interval {u : |F(u, theta)| <= radius} (theta-independent for
  /// all (p, q) kinds); nullopt when the kind has no such reduction (lambda)
  /// and an empty interval as {0, 0}-like nullopt when the surface misses the
  /// ball entirely.
  std::optional<std::pair<double, double>> profile_interval_for_radius(double radius) const;

 private:
  Immersion() = default;

  Kind kind_ = Kind::shrinker_S;
  std::variant<ConeParams, LambdaParams> params_;
  double time_ = 0.0;
  bool half_domain_ = false;

  void validate_params(std::span<const double> params, bool for_jet) const;
};

}  // namespace lmcf
