#include "lmcf/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lmcf {

MetricData induced_metric(const JetPoint& jet) {
  const int k = jet.domain_dim;
  MetricData m;
  m.g = Eigen::MatrixXd(k, k);
  std::vector<ComplexVec> frame;
  frame.reserve(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) frame.push_back(jet.partial(a));
  for (int a = 0; a < k; ++a) {
    for (int b = a; b < k; ++b) {
      const double gab = euclidean_inner(frame[static_cast<std::size_t>(a)],
                                         frame[static_cast<std::size_t>(b)]);
      m.g(a, b) = gab;
      m.g(b, a) = gab;
    }
  }
  const double det = m.g.determinant();
  if (!(det > 1e-20)) {
    throw std::domain_error("degenerate induced metric (singular-locus evaluation?)");
  }
  m.g_inv = m.g.inverse();
  m.area_density = std::sqrt(det);
  return m;
}

double lagrangian_residual(const JetPoint& jet) {
  const int k = jet.domain_dim;
  double worst = 0.0;
  for (int a = 0; a < k; ++a) {
    const ComplexVec fa = jet.partial(a);
    for (int b = a + 1; b < k; ++b) {
      worst = std::max(worst, std::abs(symplectic_form(fa, jet.partial(b))));
    }
  }
  return worst;
}

AngleResult holomorphic_phase(const JetPoint& jet) {
  const int k = jet.domain_dim;
  if (k != jet.complex_dim()) {
    throw std::invalid_argument("Lagrangian angle needs a k = n frame");
  }
  // Gram-Schmidt in the ambient Euclidean metric.
  std::vector<ComplexVec> frame;
  frame.reserve(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    ComplexVec v = jet.partial(a);
    for (const ComplexVec& u : frame) {
      v -= euclidean_inner(u, v) * u;
    }
    const double len = norm(v);
    if (!(len > 1e-14)) throw std::domain_error("degenerate frame in angle computation");
    v *= 1.0 / len;
    frame.push_back(std::move(v));
  }
  const FrameDeterminant det = complex_determinant_of_frame(frame);
  return AngleResult{det.phase, det.modulus};
}

double lagrangian_angle(const JetPoint& jet, double residual_tol, double modulus_tol) {
  if (lagrangian_residual(jet) >= residual_tol) {
    throw std::domain_error("frame is not Lagrangian: angle undefined");
  }
  const AngleResult r = holomorphic_phase(jet);
  if (std::abs(r.modulus - 1.0) > modulus_tol) {
    throw std::domain_error("holomorphic volume modulus deviates from 1");
  }
  return r.beta;
}

ComplexVec mean_curvature(const JetPoint& jet, const MetricData& m,
                          std::span<const double> beta_grad) {
  const int k = jet.domain_dim;
  ComplexVec grad(jet.complex_dim());
  for (int a = 0; a < k; ++a) {
    double up = 0.0;  // (grad beta)^a = g^{ab} beta_b
    for (int b = 0; b < k; ++b) up += m.g_inv(a, b) * beta_grad[static_cast<std::size_t>(b)];
    grad += up * jet.partial(a);
  }
  return apply_J(grad);
}

ComplexVec normal_projection(const ComplexPoint& position, const JetPoint& jet,
                             const MetricData& m) {
  const int k = jet.domain_dim;
  std::vector<ComplexVec> frame;
  std::vector<double> f_dot(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    frame.push_back(jet.partial(a));
    f_dot[static_cast<std::size_t>(a)] = euclidean_inner(position, frame.back());
  }
  ComplexVec out = position;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      out -= (m.g_inv(a, b) * f_dot[static_cast<std::size_t>(a)]) * frame[static_cast<std::size_t>(b)];
    }
  }
  return out;
}

ComplexVec second_fundamental_form_trace(const JetPoint& jet, const MetricData& m) {
  const int k = jet.domain_dim;
  ComplexVec traced(jet.complex_dim());
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      traced += m.g_inv(a, b) * jet.second_partial(a, b);
    }
  }
  // Project out the tangential part.
  std::vector<double> dots(static_cast<std::size_t>(k));
  std::vector<ComplexVec> frame;
  for (int a = 0; a < k; ++a) {
    frame.push_back(jet.partial(a));
    dots[static_cast<std::size_t>(a)] = euclidean_inner(traced, frame.back());
  }
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      traced -= (m.g_inv(a, b) * dots[static_cast<std::size_t>(a)]) * frame[static_cast<std::size_t>(b)];
    }
  }
  return traced;
}

double laplace_beltrami_linear(const JetPoint& jet, const MetricData& m,
                               std::span<const double> beta_grad) {
  const int k = jet.domain_dim;
  const int dim2n = 2 * jet.complex_dim();
  // dg_{ab}/du^c from the jet Hessians.
  auto dg = [&](int c, int a, int b) {
    double s = 0.0;
    for (int i = 0; i < dim2n; ++i) {
      const Jet2& fi = jet.coords[static_cast<std::size_t>(i)];
      s += fi.hess(c, a) * fi.grad(b) + fi.grad(a) * fi.hess(c, b);
    }
    return s;
  };
  // Delta beta = -g^{ab} Gamma^c_{ab} beta_c for linear beta.
  double lap = 0.0;
  for (int c = 0; c < k; ++c) {
    const double bc = beta_grad[static_cast<std::size_t>(c)];
    if (bc == 0.0) continue;
    double gamma_c = 0.0;  // g^{ab} Gamma^c_{ab}
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        double chris = 0.0;
        for (int d = 0; d < k; ++d) {
          chris += 0.5 * m.g_inv(c, d) * (dg(a, b, d) + dg(b, a, d) - dg(d, a, b));
        }
        gamma_c += m.g_inv(a, b) * chris;
      }
    }
    lap -= gamma_c * bc;
  }
  return lap;
}

namespace {

std::vector<double> closed_beta_grad(const Immersion& imm) {
  std::vector<double> grad(static_cast<std::size_t>(imm.domain_dim()), 0.0);
  grad.back() = imm.beta_slope();  // beta depends on theta alone, linearly
  return grad;
}

}  // namespace

GeometryAtPoint compute_geometry(const Immersion& imm, std::span<const double> params) {
  GeometryAtPoint g;
  const JetPoint jet = imm.evaluate_jet(params);
  g.metric = induced_metric(jet);
  g.lagrangian_residual = lagrangian_residual(jet);
  const AngleResult angle = holomorphic_phase(jet);
  g.beta = angle.beta;
  g.angle_modulus = angle.modulus;
  g.beta_closed = wrap_angle(imm.reference(params).beta);

  const std::vector<double> bgrad = closed_beta_grad(imm);
  const int k = imm.domain_dim();
  g.grad_beta = Eigen::VectorXd(k);
  for (int a = 0; a < k; ++a) {
    double up = 0.0;
    for (int b = 0; b < k; ++b) up += g.metric.g_inv(a, b) * bgrad[static_cast<std::size_t>(b)];
    g.grad_beta(a) = up;
  }
  g.H = mean_curvature(jet, g.metric, bgrad);
  g.F_perp = normal_projection(jet.value(), jet, g.metric);
  g.beta_laplacian = laplace_beltrami_linear(jet, g.metric, bgrad);
  return g;
}

namespace {

double soliton_two_c(const Immersion& imm, SolitonSign sign) {
  if (imm.kind() == Kind::lambda_family || imm.kind() == Kind::lambda_family_t) {
    const auto& lp = imm.lambda_params();
    const double sum = lp.lambda_sum();
    if (sum == 0.0) throw std::domain_error("lambda family with sum 0 is minimal, not self-similar");
    return -lp.level / sum;
  }
  if (imm.time_indexed()) return 2.0 * imm.time();
  const double c = self_similar_constant(imm.cone_params());
  return sign == SolitonSign::shrinker ? -2.0 * c : 2.0 * c;
}

}  // namespace

double self_similarity_residual(const Immersion& imm, std::span<const double> params,
                                SolitonSign sign) {
  const GeometryAtPoint g = compute_geometry(imm, params);
  const double two_c = soliton_two_c(imm, sign);
  const ComplexVec diff = g.F_perp - two_c * g.H;
  const double denom = std::max({norm(g.F_perp), norm(g.H), 1e-30});
  return norm(diff) / denom;
}

double self_similarity_residual(const Immersion& imm, std::span<const double> params) {
  SolitonSign sign = SolitonSign::shrinker;
  switch (imm.kind()) {
    case Kind::expander_E:
    case Kind::expander_Et:
    case Kind::V_t_case2:
      sign = SolitonSign::expander;
      break;
    default:
      break;
  }
  return self_similarity_residual(imm, params, sign);
}

double hamiltonian_stationarity_residual(const Immersion& imm,
                                         std::span<const double> params) {
  const JetPoint jet = imm.evaluate_jet(params);
  const MetricData m = induced_metric(jet);
  return std::abs(laplace_beltrami_linear(jet, m, closed_beta_grad(imm)));
}

std::vector<double> grad_beta_from_phase(const Immersion& imm,
                                         std::span<const double> params,
                                         double step) {
  const int k = imm.domain_dim();
  std::vector<double> grad(static_cast<std::size_t>(k));
  std::vector<double> work(params.begin(), params.end());
  for (int a = 0; a < k; ++a) {
    const double saved = work[static_cast<std::size_t>(a)];
    work[static_cast<std::size_t>(a)] = saved + step;
    const double bp = holomorphic_phase(imm.evaluate_jet(work)).beta;
    work[static_cast<std::size_t>(a)] = saved - step;
    const double bm = holomorphic_phase(imm.evaluate_jet(work)).beta;
    work[static_cast<std::size_t>(a)] = saved;
    grad[static_cast<std::size_t>(a)] = wrap_angle(bp - bm) / (2.0 * step);
  }
  return grad;
}

}  // namespace lmcf
