#include <doctest.h>

#include <cmath>

#include "lmcf/cone_geometry.hpp"

using namespace lmcf;

TEST_SUITE_BEGIN("cone_geometry");

TEST_CASE("coincidence partition follows the parity of (p, q)") {
  const auto both_odd = identify_coincidences(ConeParams::make(3, 1));
  CHECK(both_odd.classes[0][0] == Kind::cone_pp);
  CHECK(both_odd.classes[0][1] == Kind::cone_mm);
  CHECK(both_odd.classes[1][0] == Kind::cone_pm);
  CHECK(both_odd.classes[1][1] == Kind::cone_mp);

  const auto q_even = identify_coincidences(ConeParams::make(3, 2));
  CHECK(q_even.classes[0][1] == Kind::cone_mp);
  CHECK(q_even.classes[1][0] == Kind::cone_pm);
  CHECK(q_even.classes[1][1] == Kind::cone_mm);

  const auto p_even = identify_coincidences(ConeParams::make(2, 1));
  CHECK(p_even.classes[0][1] == Kind::cone_pm);
  CHECK(p_even.classes[1][0] == Kind::cone_mp);
  CHECK(p_even.classes[1][1] == Kind::cone_mm);
}

TEST_CASE("theta + pi shift maps each cone onto its partner pointwise") {
  for (const auto& pq : coprime_pairs(7)) {
    const auto cc = identify_coincidences(pq);
    for (const auto& cls : cc.classes) {
      CHECK(shift_coincidence_error(cls[0], cls[1], pq) < 1e-12);
    }
  }
}

TEST_CASE("section distance separates distinct cones and collapses coincident ones") {
  for (const auto& pq : {ConeParams::make(3, 1), ConeParams::make(2, 1), ConeParams::make(7, 5)}) {
    CAPTURE(pq.p);
    CAPTURE(pq.q);
    const auto cc = identify_coincidences(pq);
    const Immersion a0 = Immersion::make(cc.classes[0][0], pq);
    const Immersion a1 = Immersion::make(cc.classes[0][1], pq);
    const Immersion b0 = Immersion::make(cc.classes[1][0], pq);
    const Immersion b1 = Immersion::make(cc.classes[1][1], pq);
    CHECK(image_distance(a0, a1, 1.0, 2048) < 1e-3);
    CHECK(image_distance(b0, b1, 1.0, 2048) < 1e-3);
    CHECK(image_distance(a0, b0, 1.0, 2048) > 0.05);
    CHECK(image_distance(a1, b1, 1.0, 2048) > 0.05);
  }
}

TEST_CASE("limit V0 matches S0 under the cov2 reparametrization, as sets too") {
  const ConeParams pq = ConeParams::make(3, 2);
  CHECK(reparametrization_error(Kind::limit_V0_case2, pq) < 1e-12);
  const Immersion v0 = Immersion::make(Kind::limit_V0_case2, pq);
  const Immersion s0 = Immersion::make(Kind::limit_S0, pq);
  CHECK(image_distance(v0, s0, 1.0, 2048) < 1e-3);
}

TEST_CASE("reparametrization identities cov and cov3") {
  CHECK(reparametrization_error(Kind::limit_E0, ConeParams::make(3, 1)) < 1e-12);
  CHECK(reparametrization_error(Kind::limit_E0, ConeParams::make(5, 3)) < 1e-12);
  CHECK(reparametrization_error(Kind::limit_V0_case3, ConeParams::make(2, 1)) < 1e-12);
  CHECK(reparametrization_error(Kind::limit_V0_case3, ConeParams::make(4, 1)) < 1e-12);
  // cov needs both parities odd.
  CHECK_THROWS_AS(reparametrization_error(Kind::limit_E0, ConeParams::make(3, 2)),
                  std::invalid_argument);
}

TEST_CASE("asymptotic cone pairs per family") {
  const ConeParams p32 = ConeParams::make(3, 2);
  const auto st = asymptotic_cone_pair(Kind::shrinker_St, p32);
  CHECK(st.first == Kind::cone_pp);
  CHECK(st.second == Kind::cone_pm);
  CHECK(st.witnessed);

  // For p odd, q even the raw expander pair degenerates: C_-+ = C_++ by item
  // (ii), which is exactly why case 2 swaps E_t for the adjusted V_t.
  const auto et = asymptotic_cone_pair(Kind::expander_Et, p32);
  CHECK(et.second == Kind::cone_mp);
  CHECK(et.canonical_second == Kind::cone_pp);
  CHECK(et.witnessed);
  const auto vt2 = asymptotic_cone_pair(Kind::V_t_case2, p32);
  CHECK(vt2.second == Kind::cone_pm);
  CHECK(vt2.canonical_second == Kind::cone_pm);
  CHECK(vt2.witnessed);

  const auto vt3 = asymptotic_cone_pair(Kind::V_t_case3, ConeParams::make(2, 1));
  CHECK(vt3.second == Kind::cone_mp);
  CHECK(vt3.witnessed);
}

TEST_CASE("rescaled slices approach the cone pair monotonically") {
  const ConeParams pq = ConeParams::make(3, 1);
  double prev = 1e9;
  for (int k = 0; k < 4; ++k) {
    const double eps = 1e-3 * std::pow(2.0, -k);
    const auto pair = asymptotic_cone_pair(Kind::shrinker_St, pq, eps);
    CHECK(pair.witness_distance < pair.witness_threshold);
    CHECK(pair.witness_distance < prev);
    prev = pair.witness_distance;
  }
}

TEST_SUITE_END();
