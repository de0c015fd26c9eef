// Differential-geometric operators computed from 2-jets: induced metric,
// Lagrangian residual, Lagrangian angle, mean curvature, normal projection,
// Laplace-Beltrami of the angle.  Closed forms from the immersion catalog act
// as the second route for every quantity.

#pragma once

#include <Eigen/Dense>
#include <span>

#include "lmcf/complex_space.hpp"
#include "lmcf/immersions.hpp"
#include "lmcf/jets.hpp"

namespace lmcf {

struct MetricData {
  Eigen::MatrixXd g;
  Eigen::MatrixXd g_inv;
  double area_density = 0.0;  // sqrt(det g)
};

/// g_ab = <dF/du^a, dF/du^b>.  Throws on a degenerate metric
/// (det g < 1e-20), the signature of a singular-locus evaluation.
MetricData induced_metric(const JetPoint& jet);

/// max_{a<b} |omega(dF/du^a, dF/du^b)|; zero exactly on Lagrangian frames.
double lagrangian_residual(const JetPoint& jet);

struct AngleResult {
  double beta = 0.0;    // phase of dz^1^...^dz^n on the orthonormalized frame
  double modulus = 0.0; // 1 for Lagrangian frames
};

/// Phase of the holomorphic volume form on the Gram-Schmidt orthonormalized
/// tangent frame, with no Lagrangian gate (the modulus reports how far from
/// Lagrangian the frame is).
AngleResult holomorphic_phase(const JetPoint& jet);

/// Lagrangian angle with contract checks: requires lagrangian_residual below
/// `residual_tol` and modulus within `modulus_tol` of 1.
double lagrangian_angle(const JetPoint& jet, double residual_tol = 1e-8,
                        double modulus_tol = 1e-8);

/// H = J(g^{ab} beta_b dF/du^a) for covariant angle derivatives beta_b.
ComplexVec mean_curvature(const JetPoint& jet, const MetricData& m,
                          std::span<const double> beta_grad);

/// F_perp = F - g^{ab} <F, dF/du^a> dF/du^b.
ComplexVec normal_projection(const ComplexPoint& position, const JetPoint& jet,
                             const MetricData& m);

/// g^{ab} (d^2F/du^a du^b)^perp, the trace of the second fundamental form.
/// Independent of the Lagrangian-angle machinery.
ComplexVec second_fundamental_form_trace(const JetPoint& jet, const MetricData& m);

/// Laplace-Beltrami of a function with covariant gradient beta_grad and zero
/// Hessian in the domain parameters (every catalog angle is linear), from the
/// jet-derived metric and Christoffel symbols.
double laplace_beltrami_linear(const JetPoint& jet, const MetricData& m,
                               std::span<const double> beta_grad);

/// Everything at one parameter point of a catalog immersion.  beta comes from
/// the holomorphic-volume phase; beta_closed from the catalog closed form;
/// H and beta_laplacian use the closed-form angle gradient (0, ..., slope).
struct GeometryAtPoint {
  MetricData metric;
  double lagrangian_residual = 0.0;
  double beta = 0.0;
  double beta_closed = 0.0;
  double angle_modulus = 0.0;
  Eigen::VectorXd grad_beta;  // contravariant components g^{ab} beta_b
  ComplexVec H;
  ComplexVec F_perp;
  double beta_laplacian = 0.0;
};

GeometryAtPoint compute_geometry(const Immersion& imm, std::span<const double> params);

enum class SolitonSign { shrinker, expander };

/// |F_perp - 2 c_eff H| / max(|F_perp|, |H|, eps) with 2 c_eff = -2c for
/// shrinkers, +2c for expanders (c = pq/(2(p-q))), the time t itself for the
/// time-scaled kinds, and -C/sum(lambda) for the lambda family.
double self_similarity_residual(const Immersion& imm, std::span<const double> params,
                                SolitonSign sign);
/// Same with the sign inferred from the kind.
double self_similarity_residual(const Immersion& imm, std::span<const double> params);

/// |Laplace-Beltrami of beta| from the closed-form angle and jet metric.
double hamiltonian_stationarity_residual(const Immersion& imm,
                                         std::span<const double> params);

/// Covariant angle derivatives from central differences of the computed
/// phase (the generic route; circular-unwrap safe, looser tolerance).
std::vector<double> grad_beta_from_phase(const Immersion& imm,
                                         std::span<const double> params,
                                         double step = 1e-5);

}  // namespace lmcf
