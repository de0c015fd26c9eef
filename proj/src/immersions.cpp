#include "lmcf/immersions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lmcf {
namespace {

constexpr double kPi = std::numbers::pi;

// Complex number over a generic scalar (double or Jet2), enough to express
// every catalog formula as radial profile times cis(k * theta).
template <class S>
struct Cx {
  S re, im;
};

template <class S>
Cx<S> operator+(const Cx<S>& a, const Cx<S>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <class S>
Cx<S> operator*(const Cx<S>& a, const Cx<S>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class S>
Cx<S> operator*(const S& s, const Cx<S>& a) {
  return {s * a.re, s * a.im};
}
template <class S>
Cx<S> scale(double c, const Cx<S>& a) {
  return {a.re * c, a.im * c};
}
template <class S>
Cx<S> i_times(const Cx<S>& a) {
  return {-a.im, a.re};
}
template <class S>
Cx<S> cis(const S& angle) {
  using std::cos;
  using std::sin;
  return {cos(angle), sin(angle)};
}

double value_of(double x) { return x; }
double value_of(const Jet2& x) { return x.value(); }

template <class S>
S abs_branch(const S& x) {
  return value_of(x) >= 0.0 ? x : -x;
}

double constant_like(double, double c) { return c; }
Jet2 constant_like(const Jet2& like, double c) { return Jet2(c, like.dim()); }

// Evaluates the (p, q) surface kinds.  params = (profile, theta) except
// gamma_pq which takes (theta).  The branch constants (theta shifts, sign
// flips) follow the parity-adjustment definitions with arg(mu) = 0 for
// mu >= 0 and pi for mu < 0.
template <class S>
std::vector<Cx<S>> eval_pq(Kind kind, const ConeParams& pq, double s,
                           std::span<const S> params) {
  const double p = pq.p, q = pq.q;
  const double sq = std::sqrt(q), sp = std::sqrt(p);
  using std::cosh;
  using std::sinh;

  if (kind == Kind::gamma_pq) {
    const S& th = params[0];
    const double r1 = std::sqrt(q / (p + q)), r2 = std::sqrt(p / (p + q));
    return {scale(r1, cis(th * p)), scale(r2, i_times(cis(th * (-q))))};
  }

  const S& u = params[0];
  const S& th = params[1];

  auto shrinker = [&](const S& mu, const S& theta) -> std::vector<Cx<S>> {
    return {scale(s * sq, cosh(mu) * cis(theta * p)),
            scale(s * sp, i_times(sinh(mu) * cis(theta * (-q))))};
  };
  auto expander = [&](const S& mu, const S& theta) -> std::vector<Cx<S>> {
    return {scale(s * sq, sinh(mu) * cis(theta * p)),
            scale(s * sp, i_times(cosh(mu) * cis(theta * (-q))))};
  };

  switch (kind) {
    case Kind::shrinker_S:
    case Kind::shrinker_St:
      return shrinker(u, th);
    case Kind::expander_E:
    case Kind::expander_Et:
      return expander(u, th);
    case Kind::V_t_case2: {
      // e^{i arg mu} E_t(mu, theta + arg(mu)/q)
      if (value_of(u) >= 0.0) return expander(u, th);
      auto f = expander(u, th + constant_like(u, kPi / q));
      return {scale(-1.0, f[0]), scale(-1.0, f[1])};
    }
    case Kind::V_t_case3: {
      if (value_of(u) >= 0.0) return shrinker(u, th);
      auto f = shrinker(u, th + constant_like(u, kPi / p));
      return {scale(-1.0, f[0]), scale(-1.0, f[1])};
    }
    case Kind::cone_pp:
    case Kind::cone_pm:
    case Kind::cone_mp:
    case Kind::cone_mm: {
      const double s1 = (kind == Kind::cone_pp || kind == Kind::cone_pm) ? 1.0 : -1.0;
      const double s2 = (kind == Kind::cone_pp || kind == Kind::cone_mp) ? 1.0 : -1.0;
      return {scale(s1 * sq, u * cis(th * p)), scale(s2 * sp, i_times(u * cis(th * (-q))))};
    }
    case Kind::limit_S0:
      return {scale(sq, abs_branch(u) * cis(th * p)), scale(sp, i_times(u * cis(th * (-q))))};
    case Kind::limit_E0:
      return {scale(sq, u * cis(th * p)), scale(sp, i_times(abs_branch(u) * cis(th * (-q))))};
    case Kind::limit_V0_case2: {
      if (value_of(u) >= 0.0) {
        return {scale(sq, u * cis(th * p)), scale(sp, i_times(u * cis(th * (-q))))};
      }
      const S th2 = th + constant_like(u, kPi / q);
      return {scale(-sq, u * cis(th2 * p)), scale(-sp, i_times(abs_branch(u) * cis(th2 * (-q))))};
    }
    case Kind::limit_V0_case3: {
      if (value_of(u) >= 0.0) {
        return {scale(sq, u * cis(th * p)), scale(sp, i_times(u * cis(th * (-q))))};
      }
      const S th2 = th + constant_like(u, kPi / p);
      return {scale(-sq, abs_branch(u) * cis(th2 * p)), scale(-sp, i_times(u * cis(th2 * (-q))))};
    }
    default:
      throw std::logic_error("eval_pq: not a (p,q) kind");
  }
}

template <class S>
std::vector<Cx<S>> eval_lambda(const LambdaParams& lp, std::span<const S> params) {
  const int n = static_cast<int>(lp.lambdas.size());
  const S& th = params[static_cast<std::size_t>(n - 1)];
  // Solve for x_j from the level constraint; the remaining x_i are the free
  // chart coordinates in index order.
  const int j = lp.chart_index;
  S rad = constant_like(th, lp.level);
  std::vector<const S*> free_coord(static_cast<std::size_t>(n), nullptr);
  {
    int a = 0;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      free_coord[static_cast<std::size_t>(i)] = &params[static_cast<std::size_t>(a++)];
      rad = rad - lp.lambdas[static_cast<std::size_t>(i)] *
                      (*free_coord[static_cast<std::size_t>(i)] * *free_coord[static_cast<std::size_t>(i)]);
    }
  }
  rad = rad * (1.0 / lp.lambdas[static_cast<std::size_t>(j)]);
  if (value_of(rad) < 1e-12) {
    throw std::domain_error(
        "lambda chart breakdown: level constraint admits no x_" + std::to_string(j + 1) +
        " here (radicand " + std::to_string(value_of(rad)) + ")");
  }
  using std::sqrt;
  const S xj = static_cast<double>(lp.chart_sign) * sqrt(rad);

  std::vector<Cx<S>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const S& xi = (i == j) ? xj : *free_coord[static_cast<std::size_t>(i)];
    out.push_back(xi * cis(th * lp.lambdas[static_cast<std::size_t>(i)]));
  }
  return out;
}

template <class S>
std::vector<Cx<S>> eval_any(Kind kind, const std::variant<ConeParams, LambdaParams>& params,
                            double s, std::span<const S> u) {
  if (std::holds_alternative<LambdaParams>(params)) {
    return eval_lambda(std::get<LambdaParams>(params), u);
  }
  return eval_pq(kind, std::get<ConeParams>(params), s, u);
}

}  // namespace

ConeParams ConeParams::make(int p, int q) {
  if (q < 1 || p <= q) throw std::invalid_argument("ConeParams requires p > q >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("ConeParams requires gcd(p, q) = 1");
  return ConeParams{p, q};
}

ParityCase ConeParams::parity() const {
  if (p % 2 == 1 && q % 2 == 1) return ParityCase::both_odd;
  if (p % 2 == 1) return ParityCase::p_odd_q_even;
  return ParityCase::p_even_q_odd;
}

double self_similar_constant(const ConeParams& pq) {
  return static_cast<double>(pq.p) * pq.q / (2.0 * (pq.p - pq.q));
}

std::vector<ConeParams> coprime_pairs(int pmax) {
  std::vector<ConeParams> out;
  for (int p = 2; p <= pmax; ++p) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) == 1) out.push_back(ConeParams{p, q});
    }
  }
  return out;
}

LambdaParams LambdaParams::make(std::vector<double> lambdas, double level,
                                double angle_offset, int chart_index, int chart_sign) {
  if (lambdas.empty()) throw std::invalid_argument("lambda family needs n >= 1 weights");
  for (double l : lambdas) {
    if (l == 0.0) throw std::invalid_argument("every lambda_i must be nonzero");
  }
  LambdaParams lp;
  lp.lambdas = std::move(lambdas);
  lp.level = level;
  lp.angle_offset = angle_offset;
  lp.chart_explicit = chart_index >= 0;
  if (chart_index < 0) {
    // Default chart: solve for the coordinate whose sign makes the radicand
    // positive near the origin of the free coordinates.
    chart_index = 0;
    for (int i = 0; i < static_cast<int>(lp.lambdas.size()); ++i) {
      if (level / lp.lambdas[static_cast<std::size_t>(i)] > 0.0) {
        chart_index = i;
        break;
      }
    }
  }
  if (chart_index >= static_cast<int>(lp.lambdas.size())) {
    throw std::invalid_argument("chart index out of range");
  }
  if (chart_sign != 1 && chart_sign != -1) throw std::invalid_argument("chart sign must be +-1");
  lp.chart_index = chart_index;
  lp.chart_sign = chart_sign;
  return lp;
}

double LambdaParams::lambda_sum() const {
  return std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
}

std::string kind_id(Kind kind) {
  switch (kind) {
    case Kind::gamma_pq: return "gamma_pq";
    case Kind::cone_pp: return "cone_pp";
    case Kind::cone_pm: return "cone_pm";
    case Kind::cone_mp: return "cone_mp";
    case Kind::cone_mm: return "cone_mm";
    case Kind::shrinker_S: return "shrinker_S";
    case Kind::expander_E: return "expander_E";
    case Kind::shrinker_St: return "shrinker_St";
    case Kind::expander_Et: return "expander_Et";
    case Kind::V_t_case2: return "V_t_case2";
    case Kind::V_t_case3: return "V_t_case3";
    case Kind::limit_S0: return "limit_S0";
    case Kind::limit_E0: return "limit_E0";
    case Kind::limit_V0_case2: return "limit_V0_case2";
    case Kind::limit_V0_case3: return "limit_V0_case3";
    case Kind::lambda_family: return "lambda_family";
    case Kind::lambda_family_t: return "lambda_family_t";
  }
  throw std::logic_error("unknown kind");
}

std::optional<Kind> kind_from_id(const std::string& id) {
  static const Kind all[] = {
      Kind::gamma_pq,    Kind::cone_pp,     Kind::cone_pm,        Kind::cone_mp,
      Kind::cone_mm,     Kind::shrinker_S,  Kind::expander_E,     Kind::shrinker_St,
      Kind::expander_Et, Kind::V_t_case2,   Kind::V_t_case3,      Kind::limit_S0,
      Kind::limit_E0,    Kind::limit_V0_case2, Kind::limit_V0_case3, Kind::lambda_family,
      Kind::lambda_family_t};
  for (Kind k : all) {
    if (kind_id(k) == id) return k;
  }
  return std::nullopt;
}

Immersion Immersion::make(Kind kind, ConeParams pq, bool half_domain) {
  switch (kind) {
    case Kind::gamma_pq:
    case Kind::cone_pp:
    case Kind::cone_pm:
    case Kind::cone_mp:
    case Kind::cone_mm:
    case Kind::shrinker_S:
    case Kind::expander_E:
    case Kind::limit_S0:
    case Kind::limit_E0:
      break;
    case Kind::limit_V0_case2:
      if (pq.parity() != ParityCase::p_odd_q_even) {
        throw std::invalid_argument("limit_V0_case2 requires p odd, q even");
      }
      break;
    case Kind::limit_V0_case3:
      if (pq.parity() != ParityCase::p_even_q_odd) {
        throw std::invalid_argument("limit_V0_case3 requires p even, q odd");
      }
      break;
    default:
      throw std::invalid_argument("kind " + kind_id(kind) + " requires make_at_time or lambda params");
  }
  Immersion imm;
  imm.kind_ = kind;
  imm.params_ = pq;
  imm.half_domain_ = half_domain;
  return imm;
}

Immersion Immersion::make_at_time(Kind kind, ConeParams pq, double t, bool half_domain) {
  switch (kind) {
    case Kind::shrinker_St:
      if (!(t < 0.0)) throw std::invalid_argument("shrinker_St requires t < 0");
      break;
    case Kind::expander_Et:
      if (!(t > 0.0)) throw std::invalid_argument("expander_Et requires t > 0");
      break;
    case Kind::V_t_case2:
      if (!(t > 0.0)) throw std::invalid_argument("V_t_case2 requires t > 0");
      if (pq.parity() != ParityCase::p_odd_q_even) {
        throw std::invalid_argument("V_t_case2 requires p odd, q even");
      }
      break;
    case Kind::V_t_case3:
      if (!(t < 0.0)) throw std::invalid_argument("V_t_case3 requires t < 0");
      if (pq.parity() != ParityCase::p_even_q_odd) {
        throw std::invalid_argument("V_t_case3 requires p even, q odd");
      }
      break;
    default:
      throw std::invalid_argument("kind " + kind_id(kind) + " is not time-indexed");
  }
  Immersion imm;
  imm.kind_ = kind;
  imm.params_ = pq;
  imm.time_ = t;
  imm.half_domain_ = half_domain;
  return imm;
}

Immersion Immersion::lambda_family(LambdaParams params) {
  Immersion imm;
  imm.kind_ = Kind::lambda_family;
  imm.params_ = std::move(params);
  return imm;
}

Immersion Immersion::lambda_family_t(LambdaParams params, double t) {
  const double level = -2.0 * t * params.lambda_sum();
  // Pinning the level can invalidate a chart that was only picked by
  // default; re-derive it unless the caller chose one.
  params = LambdaParams::make(params.lambdas, level, params.angle_offset,
                              params.chart_explicit ? params.chart_index : -1,
                              params.chart_sign);
  Immersion imm;
  imm.kind_ = Kind::lambda_family_t;
  imm.params_ = std::move(params);
  imm.time_ = t;
  return imm;
}

bool Immersion::time_indexed() const {
  switch (kind_) {
    case Kind::shrinker_St:
    case Kind::expander_Et:
    case Kind::V_t_case2:
    case Kind::V_t_case3:
    case Kind::lambda_family_t:
      return true;
    default:
      return false;
  }
}

double Immersion::scale() const {
  switch (kind_) {
    case Kind::shrinker_St:
    case Kind::V_t_case3:
      return std::sqrt(-time_ / self_similar_constant(cone_params()));
    case Kind::expander_Et:
    case Kind::V_t_case2:
      return std::sqrt(time_ / self_similar_constant(cone_params()));
    default:
      return 1.0;
  }
}

const ConeParams& Immersion::cone_params() const {
  if (!std::holds_alternative<ConeParams>(params_)) {
    throw std::logic_error("immersion has lambda params");
  }
  return std::get<ConeParams>(params_);
}

const LambdaParams& Immersion::lambda_params() const {
  if (!std::holds_alternative<LambdaParams>(params_)) {
    throw std::logic_error("immersion has cone params");
  }
  return std::get<LambdaParams>(params_);
}

int Immersion::domain_dim() const {
  if (kind_ == Kind::gamma_pq) return 1;
  if (std::holds_alternative<LambdaParams>(params_)) {
    return static_cast<int>(lambda_params().lambdas.size());
  }
  return 2;
}

int Immersion::ambient_complex_dim() const {
  if (std::holds_alternative<LambdaParams>(params_)) {
    return static_cast<int>(lambda_params().lambdas.size());
  }
  return 2;
}

double Immersion::beta_slope() const {
  if (std::holds_alternative<LambdaParams>(params_)) return lambda_params().lambda_sum();
  return cone_params().p - cone_params().q;
}

bool Immersion::profile_zero_singular() const {
  switch (kind_) {
    case Kind::cone_pp:
    case Kind::cone_pm:
    case Kind::cone_mp:
    case Kind::cone_mm:
    case Kind::limit_S0:
    case Kind::limit_E0:
    case Kind::limit_V0_case2:
    case Kind::limit_V0_case3:
    case Kind::V_t_case2:
    case Kind::V_t_case3:
      return true;
    default:
      return false;
  }
}

void Immersion::validate_params(std::span<const double> params, bool for_jet) const {
  if (static_cast<int>(params.size()) != domain_dim()) {
    throw std::invalid_argument("expected " + std::to_string(domain_dim()) + " parameters");
  }
  if (kind_ == Kind::gamma_pq || std::holds_alternative<LambdaParams>(params_)) return;
  const double u = params[0];
  const bool is_cone = kind_ == Kind::cone_pp || kind_ == Kind::cone_pm ||
                       kind_ == Kind::cone_mp || kind_ == Kind::cone_mm;
  if (is_cone && u < 0.0) throw std::domain_error("cones are parametrized by y >= 0");
  if (half_domain_ && u < 0.0) throw std::domain_error("half-domain immersion requires mu >= 0");
  if (for_jet && profile_zero_singular() && u == 0.0) {
    throw std::domain_error("jet evaluation on the singular locus (profile 0)");
  }
  if (for_jet && half_domain_ && u == 0.0) {
    throw std::domain_error("jet evaluation on the half-domain boundary");
  }
}

ComplexPoint Immersion::evaluate(std::span<const double> params) const {
  validate_params(params, /*for_jet=*/false);
  auto slots = eval_any<double>(kind_, params_, scale(), params);
  ComplexPoint out(static_cast<int>(slots.size()));
  for (int i = 0; i < static_cast<int>(slots.size()); ++i) {
    out.set_slot(i, {slots[static_cast<std::size_t>(i)].re, slots[static_cast<std::size_t>(i)].im});
  }
  return out;
}

JetPoint Immersion::evaluate_jet(std::span<const double> params) const {
  validate_params(params, /*for_jet=*/true);
  const int k = domain_dim();
  std::vector<Jet2> seeds;
  seeds.reserve(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) seeds.push_back(Jet2::seed(params[static_cast<std::size_t>(a)], k, a));
  auto slots = eval_any<Jet2>(kind_, params_, scale(), std::span<const Jet2>(seeds));
  JetPoint out;
  out.domain_dim = k;
  out.coords.reserve(2 * slots.size());
  for (auto& s : slots) {
    out.coords.push_back(std::move(s.re));
    out.coords.push_back(std::move(s.im));
  }
  return out;
}

GeometryReference Immersion::reference(std::span<const double> params) const {
  validate_params(params, /*for_jet=*/false);
  GeometryReference ref;
  if (std::holds_alternative<LambdaParams>(params_)) {
    const auto& lp = lambda_params();
    const ComplexPoint f = evaluate(params);
    const int n = f.complex_dim();
    double norm_sq = 0.0, g_tt = 0.0;
    for (int i = 0; i < n; ++i) {
      const double xi_sq = std::norm(f.slot(i));
      norm_sq += xi_sq;
      g_tt += lp.lambdas[static_cast<std::size_t>(i)] * lp.lambdas[static_cast<std::size_t>(i)] * xi_sq;
    }
    const double sum = lp.lambda_sum();
    ref.norm_sq = norm_sq;
    ref.h_norm_sq = sum * sum / g_tt;
    const double xj = std::abs(f.slot(lp.chart_index));
    ref.area_density = g_tt / (std::abs(lp.lambdas[static_cast<std::size_t>(lp.chart_index)]) * xj);
    ref.beta = sum * params[params.size() - 1] + lp.angle_offset;
    return ref;
  }

  const auto& pq = cone_params();
  const double p = pq.p, q = pq.q;
  const double theta = kind_ == Kind::gamma_pq ? params[0] : params[1];
  ref.beta = (p - q) * theta;
  switch (kind_) {
    case Kind::gamma_pq:
      ref.norm_sq = 1.0;
      ref.h_norm_sq = (p - q) * (p - q) / (p * q * (p + q));
      ref.area_density = std::sqrt(p * q);
      return ref;
    case Kind::shrinker_S:
    case Kind::shrinker_St:
    case Kind::V_t_case3: {
      const double s2 = scale() * scale();
      const double mu = params[0];
      const double a = p * std::cosh(mu) * std::cosh(mu) + q * std::sinh(mu) * std::sinh(mu);
      const double b = q * std::cosh(mu) * std::cosh(mu) + p * std::sinh(mu) * std::sinh(mu);
      ref.norm_sq = s2 * b;
      ref.h_norm_sq = (p - q) * (p - q) / (p * q * s2 * a);
      ref.area_density = s2 * std::sqrt(p * q) * a;
      return ref;
    }
    case Kind::expander_E:
    case Kind::expander_Et:
    case Kind::V_t_case2: {
      const double s2 = scale() * scale();
      const double mu = params[0];
      const double a = p * std::cosh(mu) * std::cosh(mu) + q * std::sinh(mu) * std::sinh(mu);
      const double b = q * std::cosh(mu) * std::cosh(mu) + p * std::sinh(mu) * std::sinh(mu);
      ref.norm_sq = s2 * a;
      ref.h_norm_sq = (p - q) * (p - q) / (p * q * s2 * b);
      ref.area_density = s2 * std::sqrt(p * q) * b;
      return ref;
    }
    default: {
      // Cones and limit varifolds share the conical forms.
      const double y = params[0];
      ref.norm_sq = y * y * (p + q);
      ref.h_norm_sq = (p - q) * (p - q) / (p * q * (p + q) * y * y);
      ref.area_density = std::abs(y) * std::sqrt(p * q) * (p + q);
      return ref;
    }
  }
}

ComplexVec Immersion::closed_form_h(std::span<const double> params) const {
  if (domain_dim() < 2) throw std::logic_error("mean curvature needs a k >= 2 kind");
  const ComplexPoint f = evaluate(params);
  const int n = f.complex_dim();
  std::vector<double> speeds(static_cast<std::size_t>(n));
  if (std::holds_alternative<LambdaParams>(params_)) {
    speeds = lambda_params().lambdas;
  } else {
    speeds[0] = cone_params().p;
    speeds[1] = -cone_params().q;
  }
  double g_tt = 0.0;
  for (int i = 0; i < n; ++i) {
    g_tt += speeds[static_cast<std::size_t>(i)] * speeds[static_cast<std::size_t>(i)] * std::norm(f.slot(i));
  }
  // H = J grad(beta) with beta depending on theta alone and g block-diagonal:
  // H = (dbeta/dtheta / g_tt) J dF/dtheta, and J dF/dtheta = -(k_i F_i).
  ComplexVec h(n);
  const double factor = -beta_slope() / g_tt;
  for (int i = 0; i < n; ++i) {
    h.set_slot(i, factor * speeds[static_cast<std::size_t>(i)] * f.slot(i));
  }
  return h;
}

std::optional<std::pair<double, double>> Immersion::profile_interval_for_radius(
    double radius) const {
  if (radius <= 0.0) return std::nullopt;
  const double r_sq = radius * radius;
  double lo = 0.0, hi = 0.0;
  switch (kind_) {
    case Kind::shrinker_S:
    case Kind::shrinker_St:
    case Kind::V_t_case3:
    case Kind::expander_E:
    case Kind::expander_Et:
    case Kind::V_t_case2: {
      const auto& pq = cone_params();
      const bool s_like = kind_ == Kind::shrinker_S || kind_ == Kind::shrinker_St ||
                          kind_ == Kind::V_t_case3;
      const double min_sq = s_like ? pq.q : pq.p;  // |F|^2 = s^2(min + (p+q) sinh^2)
      const double s2 = scale() * scale();
      const double rhs = (r_sq / s2 - min_sq) / (pq.p + pq.q);
      if (rhs < 0.0) return std::nullopt;
      hi = std::asinh(std::sqrt(rhs));
      lo = -hi;
      break;
    }
    case Kind::cone_pp:
    case Kind::cone_pm:
    case Kind::cone_mp:
    case Kind::cone_mm: {
      const auto& pq = cone_params();
      hi = radius / std::sqrt(static_cast<double>(pq.p + pq.q));
      lo = 0.0;
      break;
    }
    case Kind::limit_S0:
    case Kind::limit_E0:
    case Kind::limit_V0_case2:
    case Kind::limit_V0_case3: {
      const auto& pq = cone_params();
      hi = radius / std::sqrt(static_cast<double>(pq.p + pq.q));
      lo = -hi;
      break;
    }
    default:
      return std::nullopt;
  }
  if (half_domain_) lo = std::max(lo, 0.0);
  return std::make_pair(lo, hi);
}

}  // namespace lmcf
