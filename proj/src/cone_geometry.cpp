#include "lmcf/cone_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lmcf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

}  // namespace

ConeCoincidences identify_coincidences(const ConeParams& pq) {
  ConeCoincidences out;
  out.parity = pq.parity();
  switch (out.parity) {
    case ParityCase::both_odd:
      out.classes = {{{Kind::cone_pp, Kind::cone_mm}, {Kind::cone_pm, Kind::cone_mp}}};
      break;
    case ParityCase::p_odd_q_even:
      out.classes = {{{Kind::cone_pp, Kind::cone_mp}, {Kind::cone_pm, Kind::cone_mm}}};
      break;
    case ParityCase::p_even_q_odd:
      out.classes = {{{Kind::cone_pp, Kind::cone_pm}, {Kind::cone_mp, Kind::cone_mm}}};
      break;
  }
  return out;
}

Kind canonical_cone(Kind cone, const ConeParams& pq) {
  const ConeCoincidences cc = identify_coincidences(pq);
  for (const auto& cls : cc.classes) {
    if (cls[0] == cone || cls[1] == cone) return cls[0];
  }
  throw std::invalid_argument("not a cone kind");
}

namespace {

bool is_cone_kind(Kind k) {
  return k == Kind::cone_pp || k == Kind::cone_pm || k == Kind::cone_mp || k == Kind::cone_mm;
}

// Profile values whose theta-circle lies on the sphere |x| = radius.
std::vector<double> section_profiles(const Immersion& imm, double radius) {
  switch (imm.kind()) {
    case Kind::gamma_pq:
      throw std::invalid_argument("gamma_pq has no 2-parameter section");
    case Kind::cone_pp:
    case Kind::cone_pm:
    case Kind::cone_mp:
    case Kind::cone_mm: {
      const auto& pq = imm.cone_params();
      return {radius / std::sqrt(static_cast<double>(pq.p + pq.q))};
    }
    case Kind::limit_S0:
    case Kind::limit_E0:
    case Kind::limit_V0_case2:
    case Kind::limit_V0_case3: {
      const auto& pq = imm.cone_params();
      const double y = radius / std::sqrt(static_cast<double>(pq.p + pq.q));
      if (imm.half_domain()) return {y};
      return {y, -y};
    }
    case Kind::shrinker_S:
    case Kind::shrinker_St:
    case Kind::V_t_case3:
    case Kind::expander_E:
    case Kind::expander_Et:
    case Kind::V_t_case2: {
      const auto& pq = imm.cone_params();
      const bool s_like = imm.kind() == Kind::shrinker_S || imm.kind() == Kind::shrinker_St ||
                          imm.kind() == Kind::V_t_case3;
      const double min_sq = s_like ? pq.q : pq.p;
      const double s2 = imm.scale() * imm.scale();
      const double rhs = (radius * radius / s2 - min_sq) / (pq.p + pq.q);
      if (rhs <= 0.0) return {};
      const double mu = std::asinh(std::sqrt(rhs));
      if (imm.half_domain()) return {mu};
      return {mu, -mu};
    }
    default:
      throw std::invalid_argument("section sampling is not defined for this kind");
  }
}

}  // namespace

std::vector<SectionCurve> section_curves(const Immersion& imm, double radius,
                                         int samples, unsigned seed) {
  if (samples < 8) throw std::invalid_argument("need at least 8 section samples");
  const std::vector<double> profiles = section_profiles(imm, radius);
  if (profiles.empty()) throw std::domain_error("empty sphere section");

  const int per_branch = samples / static_cast<int>(profiles.size());
  const double offset = std::fmod(static_cast<double>(seed) * kGolden, 1.0);
  std::vector<SectionCurve> curves;
  for (double u : profiles) {
    std::vector<double> thetas(static_cast<std::size_t>(per_branch));
    for (int i = 0; i < per_branch; ++i) {
      thetas[static_cast<std::size_t>(i)] =
          kTwoPi * std::fmod(i * kGolden + offset, 1.0);
    }
    std::sort(thetas.begin(), thetas.end());
    SectionCurve curve;
    curve.points.reserve(thetas.size());
    for (double th : thetas) {
      const double params[2] = {u, th};
      curve.points.push_back(imm.evaluate(params));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

namespace {

// Flattened closed polyline in R^4; the brute-force inner loops stay
// allocation-free.
struct FlatCurve {
  std::vector<double> xs;  // 4 doubles per vertex
  std::size_t size() const { return xs.size() / 4; }
};

std::vector<FlatCurve> flatten(const std::vector<SectionCurve>& curves) {
  std::vector<FlatCurve> out;
  out.reserve(curves.size());
  for (const SectionCurve& c : curves) {
    FlatCurve f;
    f.xs.reserve(4 * c.points.size());
    for (const ComplexPoint& p : c.points) {
      for (int i = 0; i < 4; ++i) f.xs.push_back(p[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

double point_to_curves_sq(const double* x, const std::vector<FlatCurve>& curves) {
  double best = std::numeric_limits<double>::infinity();
  for (const FlatCurve& c : curves) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double* a = &c.xs[4 * i];
      const double* b = &c.xs[4 * ((i + 1) % n)];
      double ab[4], xa[4];
      double len_sq = 0.0, dot = 0.0;
      for (int d = 0; d < 4; ++d) {
        ab[d] = b[d] - a[d];
        xa[d] = x[d] - a[d];
        len_sq += ab[d] * ab[d];
        dot += xa[d] * ab[d];
      }
      double t = len_sq > 0.0 ? dot / len_sq : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      double dist_sq = 0.0;
      for (int d = 0; d < 4; ++d) {
        const double diff = xa[d] - t * ab[d];
        dist_sq += diff * diff;
      }
      best = std::min(best, dist_sq);
    }
  }
  return best;
}

double one_sided(const std::vector<FlatCurve>& from, const std::vector<FlatCurve>& to) {
  double worst = 0.0;
  for (const FlatCurve& c : from) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      worst = std::max(worst, point_to_curves_sq(&c.xs[4 * i], to));
    }
  }
  return std::sqrt(worst);
}

double curves_distance(const std::vector<SectionCurve>& a, const std::vector<SectionCurve>& b) {
  const auto fa = flatten(a);
  const auto fb = flatten(b);
  return std::max(one_sided(fa, fb), one_sided(fb, fa));
}

}  // namespace

double image_distance(const Immersion& a, const Immersion& b, double section_radius,
                      int samples, unsigned seed) {
  const auto ca = section_curves(a, section_radius, samples, seed);
  const auto cb = section_curves(b, section_radius, samples, seed + 1);
  return curves_distance(ca, cb) / section_radius;
}

double image_distance_to_union(const Immersion& a, const std::vector<Immersion>& bs,
                               double section_radius, int samples, unsigned seed) {
  const auto ca = section_curves(a, section_radius, samples, seed);
  std::vector<SectionCurve> cb;
  unsigned s = seed;
  for (const Immersion& b : bs) {
    auto curves = section_curves(b, section_radius, samples, ++s);
    for (auto& c : curves) cb.push_back(std::move(c));
  }
  return curves_distance(ca, cb) / section_radius;
}

AsymptoticConePair asymptotic_cone_pair(Kind family_kind, const ConeParams& pq,
                                        double epsilon, double radius, int samples) {
  AsymptoticConePair out;
  out.first = Kind::cone_pp;
  switch (family_kind) {
    case Kind::shrinker_S:
    case Kind::shrinker_St:
    case Kind::V_t_case3:
      // S_t approaches C_++ u C_+- ; V_t case 3 approaches C_++ u C_-+,
      // which item (iii) identifies with C_+- anyway.
      out.second = family_kind == Kind::V_t_case3 ? Kind::cone_mp : Kind::cone_pm;
      break;
    case Kind::expander_E:
    case Kind::expander_Et:
      out.second = Kind::cone_mp;
      break;
    case Kind::V_t_case2:
      out.second = Kind::cone_pm;
      break;
    default:
      throw std::invalid_argument("asymptotic cones are defined for the time families");
  }
  out.canonical_first = canonical_cone(out.first, pq);
  out.canonical_second = canonical_cone(out.second, pq);

  const double c = self_similar_constant(pq);
  const int sign = (family_kind == Kind::expander_E || family_kind == Kind::expander_Et ||
                    family_kind == Kind::V_t_case2)
                       ? +1
                       : -1;
  const double t = sign * epsilon * c;  // so scale^2 = epsilon
  Kind slice_kind = family_kind;
  if (family_kind == Kind::shrinker_S) slice_kind = Kind::shrinker_St;
  if (family_kind == Kind::expander_E) slice_kind = Kind::expander_Et;
  const Immersion slice = Immersion::make_at_time(slice_kind, pq, t);
  const std::vector<Immersion> cones = {Immersion::make(out.first, pq),
                                        Immersion::make(out.second, pq)};
  out.witness_time = t;
  out.witness_distance = image_distance_to_union(slice, cones, radius, samples);
  out.witness_threshold = 10.0 * std::sqrt(epsilon);
  out.witnessed = out.witness_distance < out.witness_threshold;
  return out;
}

double shift_coincidence_error(Kind cone_a, Kind cone_b, const ConeParams& pq, int grid) {
  if (!is_cone_kind(cone_a) || !is_cone_kind(cone_b)) {
    throw std::invalid_argument("shift witness needs two cone kinds");
  }
  const Immersion a = Immersion::make(cone_a, pq);
  const Immersion b = Immersion::make(cone_b, pq);
  double worst = 0.0;
  for (int i = 1; i <= grid; ++i) {
    const double y = static_cast<double>(i) / grid * 2.0;
    for (int j = 0; j < grid; ++j) {
      const double th = kTwoPi * j / grid;
      const double shifted[2] = {y, th + std::numbers::pi};
      const double plain[2] = {y, th};
      worst = std::max(worst, norm(a.evaluate(shifted) - b.evaluate(plain)));
    }
  }
  return worst;
}

double reparametrization_error(Kind limit_kind, const ConeParams& pq, int grid) {
  Kind base_kind;
  double shift_scale = 1.0;
  switch (limit_kind) {
    case Kind::limit_E0:
      if (pq.parity() != ParityCase::both_odd) {
        throw std::invalid_argument("E_0 = S_0 reparametrization needs p, q both odd");
      }
      base_kind = Kind::limit_S0;
      shift_scale = 1.0;
      break;
    case Kind::limit_V0_case2:
      base_kind = Kind::limit_S0;
      shift_scale = 1.0 / pq.q;
      break;
    case Kind::limit_V0_case3:
      base_kind = Kind::limit_E0;
      shift_scale = 1.0 / pq.p;
      break;
    default:
      throw std::invalid_argument("no reparametrization identity for this kind");
  }
  const Immersion lhs = Immersion::make(limit_kind, pq);
  const Immersion rhs = Immersion::make(base_kind, pq);
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    // Both signs of y; arg y = 0 or pi.
    const double y = (i + 1.0) / grid * 2.0 * (i % 2 == 0 ? 1.0 : -1.0);
    const double arg_y = y >= 0.0 ? 0.0 : std::numbers::pi;
    for (int j = 0; j < grid; ++j) {
      const double th = kTwoPi * j / grid;
      const double left[2] = {y, th};
      const double right[2] = {y, th + arg_y * shift_scale};
      worst = std::max(worst, norm(lhs.evaluate(left) - rhs.evaluate(right)));
    }
  }
  return worst;
}

}  // namespace lmcf
