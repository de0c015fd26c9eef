// Parity classification of the cones C_{±±}, numerical witnesses for their
// coincidences, asymptotic-cone identification for the time-scaled families,
// and the pointwise reparametrization identities between the limit varifolds.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "lmcf/immersions.hpp"

namespace lmcf {

/// Which of {++, +-, -+, --} describe the same cone, per parity of (p, q):
/// classes[0] always contains ++ (the Schoen-Wolfson cone C_pq); the first
/// entry of each class is its canonical representative.
struct ConeCoincidences {
  ParityCase parity;
  std::array<std::array<Kind, 2>, 2> classes;
};

ConeCoincidences identify_coincidences(const ConeParams& pq);

/// Canonical representative of the class containing `cone` under the parity
/// coincidences.
Kind canonical_cone(Kind cone, const ConeParams& pq);

/// One connected component of (image intersect sphere), sampled at `samples`
/// parameters and ordered along the curve so consecutive points bound
/// polyline segments.
struct SectionCurve {
  std::vector<ComplexPoint> points;  // closed: last connects back to first
};

std::vector<SectionCurve> section_curves(const Immersion& imm, double radius,
                                         int samples, unsigned seed = 0);

/// Symmetric Hausdorff distance between the sphere sections of two image
/// sets, scale-normalized by the section radius.  Sample points of each side
/// are matched against the polyline segments of the other (brute force).
double image_distance(const Immersion& a, const Immersion& b, double section_radius,
                      int samples, unsigned seed = 0);

/// Distance from the section of `a` to the union of sections of `bs`.
double image_distance_to_union(const Immersion& a, const std::vector<Immersion>& bs,
                               double section_radius, int samples, unsigned seed = 0);

struct AsymptoticConePair {
  Kind first = Kind::cone_pp;   // always C_++ (= C_pq)
  Kind second = Kind::cone_pp;  // the partner cone C_pq'
  Kind canonical_first = Kind::cone_pp;
  Kind canonical_second = Kind::cone_pp;
  double witness_time = 0.0;           // the rescaled slice used as witness
  double witness_distance = 0.0;       // section distance slice vs cone pair
  double witness_threshold = 0.0;      // 10 sqrt(epsilon)
  bool witnessed = false;
};

/// The pair of cones a time-scaled family approaches as t -> 0, witnessed by
/// the section distance of the t = sign * epsilon slice against the claimed
/// pair at the given radius.
AsymptoticConePair asymptotic_cone_pair(Kind family_kind, const ConeParams& pq,
                                        double epsilon = 1e-4, double radius = 1.0,
                                        int samples = 2048);

/// Max pointwise error of the theta -> theta + pi coincidence witness
/// C_a(y, theta + pi) = C_b(y, theta) over a parameter grid.
double shift_coincidence_error(Kind cone_a, Kind cone_b, const ConeParams& pq,
                               int grid = 16);

/// Max pointwise error of the limit-varifold reparametrizations:
///   limit_E0:       E_0(y, th) = S_0(y, th + arg y)   (both p, q odd)
///   limit_V0_case2: V_0(y, th) = S_0(y, th + arg(y)/q)
///   limit_V0_case3: V_0(y, th) = E_0(y, th + arg(y)/p)
double reparametrization_error(Kind limit_kind, const ConeParams& pq, int grid = 16);

}  // namespace lmcf
