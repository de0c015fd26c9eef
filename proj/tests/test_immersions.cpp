#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lmcf/immersions.hpp"
#include "oracles.hpp"

using namespace lmcf;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Immersion> representative_catalog() {
  const ConeParams p21 = ConeParams::make(2, 1);
  const ConeParams p31 = ConeParams::make(3, 1);
  const ConeParams p32 = ConeParams::make(3, 2);
  std::vector<Immersion> all;
  all.push_back(Immersion::make(Kind::gamma_pq, p21));
  all.push_back(Immersion::make(Kind::cone_pp, p32));
  all.push_back(Immersion::make(Kind::cone_pm, p31));
  all.push_back(Immersion::make(Kind::cone_mp, p21));
  all.push_back(Immersion::make(Kind::cone_mm, p32));
  all.push_back(Immersion::make(Kind::shrinker_S, p31));
  all.push_back(Immersion::make(Kind::expander_E, p32));
  all.push_back(Immersion::make_at_time(Kind::shrinker_St, p32, -0.7));
  all.push_back(Immersion::make_at_time(Kind::expander_Et, p21, 1.3));
  all.push_back(Immersion::make_at_time(Kind::V_t_case2, p32, 0.9));
  all.push_back(Immersion::make_at_time(Kind::V_t_case3, p21, -1.1));
  all.push_back(Immersion::make(Kind::limit_S0, p31));
  all.push_back(Immersion::make(Kind::limit_E0, p32));
  all.push_back(Immersion::make(Kind::limit_V0_case2, p32));
  all.push_back(Immersion::make(Kind::limit_V0_case3, p21));
  all.push_back(Immersion::lambda_family(LambdaParams::make({1.0, 2.0, -3.0}, 2.0)));
  all.push_back(Immersion::lambda_family_t(LambdaParams::make({2.0, 1.0}, 1.0), -0.5));
  return all;
}

}  // namespace

TEST_SUITE_BEGIN("immersions");

TEST_CASE("cone parameter validation") {
  CHECK_THROWS_AS(ConeParams::make(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(ConeParams::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ConeParams::make(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(ConeParams::make(3, 0), std::invalid_argument);
  CHECK(ConeParams::make(3, 1).parity() == ParityCase::both_odd);
  CHECK(ConeParams::make(3, 2).parity() == ParityCase::p_odd_q_even);
  CHECK(ConeParams::make(2, 1).parity() == ParityCase::p_even_q_odd);
}

TEST_CASE("self-similar constant") {
  CHECK(self_similar_constant(ConeParams::make(2, 1)) == doctest::Approx(1.0));
  CHECK(self_similar_constant(ConeParams::make(3, 2)) == doctest::Approx(3.0));
  CHECK(self_similar_constant(ConeParams::make(3, 1)) == doctest::Approx(0.75));
}

TEST_CASE("sweep set covers all parity cases") {
  const auto pairs = coprime_pairs(5);
  CHECK(pairs.size() == 9);  // (2,1)(3,1)(3,2)(4,1)(4,3)(5,1)(5,2)(5,3)(5,4)
  int parities[3] = {0, 0, 0};
  for (const auto& pq : pairs) parities[static_cast<int>(pq.parity())]++;
  CHECK(parities[0] > 0);
  CHECK(parities[1] > 0);
  CHECK(parities[2] > 0);
}

TEST_CASE("time-domain validation") {
  const ConeParams pq = ConeParams::make(3, 2);
  CHECK_THROWS_AS(Immersion::make_at_time(Kind::shrinker_St, pq, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Immersion::make_at_time(Kind::expander_Et, pq, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(Immersion::make_at_time(Kind::V_t_case2, ConeParams::make(3, 1), 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(Immersion::make_at_time(Kind::V_t_case3, ConeParams::make(3, 2), -0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(Immersion::make(Kind::limit_V0_case2, ConeParams::make(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("shrinker point evaluation matches the defining formula") {
  const Immersion s = Immersion::make(Kind::shrinker_S, ConeParams::make(2, 1));
  const double at_origin[2] = {0.0, 0.0};
  const ComplexPoint f = s.evaluate(at_origin);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == 0.0);
  CHECK(f[2] == 0.0);
  CHECK(f[3] == 0.0);

  const double at[2] = {0.8, 1.1};
  const ComplexPoint g = s.evaluate(at);
  CHECK(g.slot(0) == std::complex<double>(std::cosh(0.8) * std::polar(1.0, 2 * 1.1)));
  CHECK(g.slot(1).real() ==
        doctest::Approx((std::complex<double>(0, 1) * std::sinh(0.8) * std::sqrt(2.0) *
                         std::polar(1.0, -1.1))
                            .real()));
}

TEST_CASE("gamma lies at the stated point and on the unit sphere") {
  const Immersion g = Immersion::make(Kind::gamma_pq, ConeParams::make(2, 1));
  const double zero[1] = {0.0};
  const ComplexPoint f = g.evaluate(zero);
  CHECK(f[0] == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(f[1] == 0.0);
  CHECK(f[2] == 0.0);
  CHECK(f[3] == doctest::Approx(std::sqrt(2.0 / 3.0)));

  for (const auto& pq : coprime_pairs(5)) {
    const Immersion gam = Immersion::make(Kind::gamma_pq, pq);
    for (int i = 0; i < 16; ++i) {
      const double th[1] = {2 * kPi * i / 16.0};
      const ComplexPoint x = gam.evaluate(th);
      CHECK(std::abs(euclidean_inner(x, x) - 1.0) < 1e-14);
    }
  }
}

TEST_CASE("limit varifold S0 keeps |y| in the first slot only") {
  const Immersion s0 = Immersion::make(Kind::limit_S0, ConeParams::make(2, 1));
  const double at[2] = {-1.0, 0.0};
  const ComplexPoint f = s0.evaluate(at);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == 0.0);
  CHECK(f[2] == 0.0);
  CHECK(f[3] == doctest::Approx(-std::sqrt(2.0)));
}

TEST_CASE("jet partials match the displayed derivatives at mu = 0") {
  const Immersion s = Immersion::make(Kind::shrinker_S, ConeParams::make(2, 1));
  const double at[2] = {0.0, 0.0};
  const JetPoint jet = s.evaluate_jet(at);
  const ComplexVec dmu = jet.partial(0);
  CHECK(dmu[0] == doctest::Approx(0.0));
  CHECK(dmu[1] == doctest::Approx(0.0));
  CHECK(dmu[2] == doctest::Approx(0.0));
  CHECK(dmu[3] == doctest::Approx(std::sqrt(2.0)));
  const ComplexVec dth = jet.partial(1);
  CHECK(dth[0] == doctest::Approx(0.0));
  CHECK(dth[1] == doctest::Approx(2.0));
  CHECK(dth[2] == doctest::Approx(0.0));
  CHECK(dth[3] == doctest::Approx(0.0));
}

TEST_CASE("jet gradients agree with finite differences of evaluate") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> profile(0.15, 1.4);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::uniform_real_distribution<double> sign01(0.0, 1.0);
  for (const Immersion& imm : representative_catalog()) {
    CAPTURE(imm.id());
    testing::Surface f = [&imm](std::span<const double> u) { return imm.evaluate(u); };
    const int k = imm.domain_dim();
    for (int rep = 0; rep < 12; ++rep) {
      std::vector<double> u(static_cast<std::size_t>(k));
      if (imm.id() == "gamma_pq") {
        u[0] = angle(rng);
      } else if (k == 2) {
        u[0] = profile(rng) * (sign01(rng) < 0.5 ? -1.0 : 1.0);
        const bool nonneg_only = imm.kind() == Kind::cone_pp || imm.kind() == Kind::cone_pm ||
                                 imm.kind() == Kind::cone_mp || imm.kind() == Kind::cone_mm;
        if (nonneg_only) u[0] = std::abs(u[0]);
        u[1] = angle(rng);
      } else {
        // lambda charts: keep free coordinates small so the radicand stays positive
        for (int a = 0; a < k - 1; ++a) u[static_cast<std::size_t>(a)] = 0.3 * profile(rng);
        u[static_cast<std::size_t>(k - 1)] = angle(rng);
      }
      const JetPoint jet = imm.evaluate_jet(u);
      for (int a = 0; a < k; ++a) {
        const ComplexVec exact = jet.partial(a);
        const ComplexVec fd = testing::fd_partial(f, u, a, 1e-5);
        for (int i = 0; i < exact.real_dim(); ++i) {
          CHECK(std::abs(exact[i] - fd[i]) <= 1e-6 * (1.0 + std::abs(fd[i])));
        }
      }
    }
  }
}

TEST_CASE("scaling consistency: S_t at t = -c is S, E_t at t = c is E") {
  for (const auto& pq : coprime_pairs(4)) {
    const double c = self_similar_constant(pq);
    const Immersion s = Immersion::make(Kind::shrinker_S, pq);
    const Immersion st = Immersion::make_at_time(Kind::shrinker_St, pq, -c);
    const Immersion e = Immersion::make(Kind::expander_E, pq);
    const Immersion et = Immersion::make_at_time(Kind::expander_Et, pq, c);
    for (double mu : {-1.2, 0.0, 0.4, 2.0}) {
      for (double th : {0.0, 1.0, 4.4}) {
        const double u[2] = {mu, th};
        CHECK(norm(s.evaluate(u) - st.evaluate(u)) < 1e-14);
        CHECK(norm(e.evaluate(u) - et.evaluate(u)) < 1e-14);
      }
    }
  }
}

TEST_CASE("the shrinker ansatz stays on the level set p|z1|^2 - q|z2|^2 = pq") {
  for (const auto& pq : coprime_pairs(5)) {
    const Immersion s = Immersion::make(Kind::shrinker_S, pq);
    for (double mu : {-2.0, -0.5, 0.0, 0.7, 1.9}) {
      for (double th : {0.3, 2.9, 5.5}) {
        const double u[2] = {mu, th};
        const ComplexPoint f = s.evaluate(u);
        const double level = pq.p * std::norm(f.slot(0)) - pq.q * std::norm(f.slot(1));
        CHECK(std::abs(level - pq.p * pq.q) < 1e-12 * pq.p * pq.q);
      }
    }
  }
}

TEST_CASE("V_t case 2 is continuous across mu = 0 with a genuine tangent crease") {
  const ConeParams pq = ConeParams::make(3, 2);
  const Immersion vt = Immersion::make_at_time(Kind::V_t_case2, pq, 1.0);
  for (double th : {0.0, 0.9, 3.7}) {
    const double above[2] = {0.0, th};
    const double below[2] = {-1e-12, th};
    CHECK(norm(vt.evaluate(above) - vt.evaluate(below)) < 1e-10);

    const double jet_above[2] = {1e-7, th};
    const double jet_below[2] = {-1e-7, th};
    const ComplexVec dmu_above = vt.evaluate_jet(jet_above).partial(0);
    const ComplexVec dmu_below = vt.evaluate_jet(jet_below).partial(0);
    CHECK(norm(dmu_above - dmu_below) > 0.1);
  }
}

TEST_CASE("jet evaluation refuses the singular locus") {
  const Immersion s0 = Immersion::make(Kind::limit_S0, ConeParams::make(2, 1));
  const double at[2] = {0.0, 1.0};
  CHECK_NOTHROW(s0.evaluate(at));
  CHECK_THROWS_AS(s0.evaluate_jet(at), std::domain_error);

  const Immersion cone = Immersion::make(Kind::cone_pp, ConeParams::make(2, 1));
  const double neg[2] = {-0.5, 0.0};
  CHECK_THROWS_AS(cone.evaluate(neg), std::domain_error);

  const Immersion half =
      Immersion::make_at_time(Kind::shrinker_St, ConeParams::make(3, 2), -1.0, true);
  CHECK_THROWS_AS(half.evaluate(neg), std::domain_error);
}

TEST_CASE("lambda family stays on its level set") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> coord(-0.4, 0.4);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const LambdaParams lp = LambdaParams::make({1.0, 2.0, -3.0}, 2.0);
  const Immersion sigma = Immersion::lambda_family(lp);
  for (int rep = 0; rep < 60; ++rep) {
    const double u[3] = {coord(rng), coord(rng), angle(rng)};
    const ComplexPoint f = sigma.evaluate(u);
    double level = 0.0;
    for (int i = 0; i < 3; ++i) level += lp.lambdas[static_cast<std::size_t>(i)] * std::norm(f.slot(i));
    CHECK(std::abs(level - lp.level) < 1e-12);
  }
}

TEST_CASE("lambda chart breakdown is reported") {
  const Immersion sigma = Immersion::lambda_family(LambdaParams::make({1.0, 1.0}, 1.0));
  const double outside[2] = {1.5, 0.0};  // 1 - 1.5^2 < 0: no x_j on the level set
  CHECK_THROWS_AS(sigma.evaluate(outside), std::domain_error);
  CHECK_THROWS_AS(LambdaParams::make({1.0, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("lambda_family_t pins the level to (-2t) sum(lambda)") {
  const Immersion sig_t = Immersion::lambda_family_t(LambdaParams::make({2.0, 1.0}, 99.0), -0.5);
  CHECK(sig_t.lambda_params().level == doctest::Approx(3.0));  // -2(-0.5)*3
  CHECK(sig_t.time() == doctest::Approx(-0.5));
}

TEST_CASE("closed-form reference values from the displayed equations") {
  // S_t: |F|^2 at t = -c (scale 1), mu = 0 is q cosh^2 + p sinh^2 = q
  const ConeParams p21 = ConeParams::make(2, 1);
  const Immersion st = Immersion::make_at_time(Kind::shrinker_St, p21, -1.0);
  const double at[2] = {0.0, 0.0};
  CHECK(st.reference(at).norm_sq == doctest::Approx(1.0));

  const Immersion s0 = Immersion::make(Kind::limit_S0, p21);
  const double aty[2] = {1.0, 0.3};
  CHECK(s0.reference(aty).h_norm_sq == doctest::Approx(1.0 / 6.0));
  CHECK(s0.reference(aty).area_density == doctest::Approx(3.0 * std::sqrt(2.0)));
}

TEST_CASE("evaluate rejects a wrong parameter count") {
  const Immersion s = Immersion::make(Kind::shrinker_S, ConeParams::make(2, 1));
  const double one[1] = {0.3};
  CHECK_THROWS_AS(s.evaluate(one), std::invalid_argument);
  const Immersion sigma = Immersion::lambda_family(LambdaParams::make({1.0, 2.0, -3.0}, 2.0));
  const double two[2] = {0.1, 0.2};
  CHECK_THROWS_AS(sigma.evaluate(two), std::invalid_argument);
}

TEST_CASE("kind ids round-trip") {
  for (const Immersion& imm : representative_catalog()) {
    const auto k = kind_from_id(imm.id());
    REQUIRE(k.has_value());
    CHECK(*k == imm.kind());
  }
  CHECK_FALSE(kind_from_id("no_such_kind").has_value());
}

TEST_CASE("support window solves |F| <= R exactly") {
  const ConeParams pq = ConeParams::make(3, 2);
  const Immersion st = Immersion::make_at_time(Kind::shrinker_St, pq, -1.0);
  const double R = 2.0;
  const auto w = st.profile_interval_for_radius(R);
  REQUIRE(w.has_value());
  // At the window edge |F| = R.
  const double edge[2] = {w->second, 0.0};
  CHECK(std::sqrt(st.reference(edge).norm_sq) == doctest::Approx(R).epsilon(1e-12));
  // Inside the surface misses radius R only beyond the window.
  const double past[2] = {w->second * 1.01, 0.0};
  CHECK(st.reference(past).norm_sq > R * R);

  // A ball smaller than the shrinker's neck gives an empty window.
  const Immersion deep = Immersion::make_at_time(Kind::shrinker_St, pq, -9.0);
  CHECK_FALSE(deep.profile_interval_for_radius(0.5).has_value());
}

TEST_SUITE_END();
