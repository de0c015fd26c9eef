// Command-line entry point: named verification suites over the immersion
// catalog, the soliton identities, the Brakke criterion, and the cone
// combinatorics, with deterministic JSON/CSV reports.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lmcf/brakke.hpp"
#include "lmcf/cone_geometry.hpp"
#include "lmcf/geometry.hpp"
#include "lmcf/report_io.hpp"

namespace fs = std::filesystem;
using namespace lmcf;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct CliConfig {
  int p = 2;
  int q = 1;
  std::vector<double> lambdas;
  double level = 1.0;
  double angle_offset = 0.0;
  double t0 = 0.5;
  int levels = 10;
  int grid = 20;
  double tol_lagrangian = 1e-12;
  double tol_residual = 1e-9;
  double tol_angle = 1e-10;
  double tol_quad = 1e-8;
  double tol_limit = 1e-3;
  std::string out_dir = "reports";
  unsigned seed = 0;
  std::string which = "1.1";
};

nlohmann::json config_echo(const CliConfig& c, bool with_pq, bool with_lambda) {
  nlohmann::json j;
  if (with_pq) {
    j["p"] = c.p;
    j["q"] = c.q;
  }
  if (with_lambda) {
    j["lambdas"] = c.lambdas;
    j["level"] = c.level;
    j["angle_offset"] = c.angle_offset;
  }
  j["t0"] = c.t0;
  j["levels"] = c.levels;
  j["grid"] = c.grid;
  j["seed"] = c.seed;
  j["tolerances"] = {{"lagrangian", c.tol_lagrangian},
                     {"residual", c.tol_residual},
                     {"angle", c.tol_angle},
                     {"quadrature", c.tol_quad},
                     {"limit", c.tol_limit}};
  return j;
}

struct CellPrinter {
  bool all_pass = true;
  bool inconclusive = false;

  void line(const std::string& name, bool pass, double measured, double tol,
            const std::string& extra = "") {
    all_pass = all_pass && pass;
    std::printf("[%s] %-52s %.3e (tol %.1e)%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                measured, tol, extra.empty() ? "" : " ", extra.c_str());
  }
  void info(const std::string& name, const std::string& text) {
    std::printf("[info] %-51s %s\n", name.c_str(), text.c_str());
  }
  int exit_code() const {
    if (!all_pass) return kExitFail;
    return inconclusive ? kExitInconclusive : kExitPass;
  }
};

nlohmann::json residual_cell(const std::string& name, double measured, double tol,
                             CellPrinter& out) {
  const bool pass = measured < tol;
  out.line(name, pass, measured, tol);
  nlohmann::json cell;
  cell["check"] = name;
  cell["measured"] = measured;
  cell["tolerance"] = tol;
  cell["verdict"] = pass ? "pass" : "fail";
  return cell;
}

std::vector<double> profile_grid(const Immersion& imm, int n) {
  std::vector<double> us;
  const bool positive_only = imm.half_domain() || imm.kind() == Kind::cone_pp ||
                             imm.kind() == Kind::cone_pm || imm.kind() == Kind::cone_mp ||
                             imm.kind() == Kind::cone_mm;
  for (int i = 0; i < n; ++i) {
    double u = -2.0 + 4.0 * (i + 0.37) / n;
    if (positive_only) u = 0.1 + 2.0 * (i + 0.37) / n;
    if (imm.profile_zero_singular() && std::abs(u) < 0.05) continue;
    us.push_back(u);
  }
  return us;
}

struct GridResiduals {
  double lagrangian = 0.0;
  double density = 0.0;
  double norm_sq = 0.0;
  double h_norm_sq = 0.0;
  double hamiltonian = 0.0;
  double angle_slope = 0.0;
};

GridResiduals scan_pq_immersion(const Immersion& imm, int n) {
  GridResiduals r;
  const double slope = imm.beta_slope();
  for (double u : profile_grid(imm, n)) {
    std::optional<double> beta0;
    for (int j = 0; j < n; ++j) {
      const double th = kTwoPi * j / n;
      const double params[2] = {u, th};
      const GeometryAtPoint g = compute_geometry(imm, params);
      const GeometryReference ref = imm.reference(params);
      r.lagrangian = std::max(r.lagrangian, g.lagrangian_residual);
      r.density = std::max(r.density, std::abs(g.metric.area_density - ref.area_density) /
                                          std::abs(ref.area_density));
      const ComplexPoint f = imm.evaluate(params);
      r.norm_sq = std::max(r.norm_sq, std::abs(euclidean_inner(f, f) - ref.norm_sq) /
                                          (1.0 + std::abs(ref.norm_sq)));
      r.h_norm_sq = std::max(r.h_norm_sq, std::abs(euclidean_inner(g.H, g.H) - ref.h_norm_sq) /
                                              std::abs(ref.h_norm_sq));
      r.hamiltonian = std::max(r.hamiltonian, std::abs(g.beta_laplacian));
      if (!beta0) beta0 = g.beta;
      r.angle_slope = std::max(r.angle_slope, circular_distance(g.beta - *beta0, slope * th));
    }
  }
  return r;
}

int run_verify_immersion(const CliConfig& cfg) {
  const ConeParams pq = ConeParams::make(cfg.p, cfg.q);
  const double c = self_similar_constant(pq);
  SuiteReport report;
  report.suite_id = "verify-immersion";
  report.config = config_echo(cfg, true, false);
  CellPrinter out;

  std::vector<Immersion> kinds;
  kinds.push_back(Immersion::make(Kind::shrinker_S, pq));
  kinds.push_back(Immersion::make(Kind::expander_E, pq));
  kinds.push_back(Immersion::make_at_time(Kind::shrinker_St, pq, -0.5 * c));
  kinds.push_back(Immersion::make_at_time(Kind::expander_Et, pq, 0.5 * c));
  kinds.push_back(Immersion::make(Kind::cone_pp, pq));
  kinds.push_back(Immersion::make(Kind::limit_S0, pq));
  kinds.push_back(Immersion::make(Kind::limit_E0, pq));
  if (pq.parity() == ParityCase::p_odd_q_even) {
    kinds.push_back(Immersion::make_at_time(Kind::V_t_case2, pq, 0.5 * c));
    kinds.push_back(Immersion::make(Kind::limit_V0_case2, pq));
  }
  if (pq.parity() == ParityCase::p_even_q_odd) {
    kinds.push_back(Immersion::make_at_time(Kind::V_t_case3, pq, -0.5 * c));
    kinds.push_back(Immersion::make(Kind::limit_V0_case3, pq));
  }

  for (const Immersion& imm : kinds) {
    const GridResiduals r = scan_pq_immersion(imm, cfg.grid);
    nlohmann::json cell;
    cell["kind"] = imm.id();
    bool pass = true;
    auto push = [&](const char* name, double v, double tol) {
      cell[name] = v;
      pass = pass && v < tol;
      out.line(imm.id() + " " + name, v < tol, v, tol);
    };
    push("lagrangian_residual", r.lagrangian, cfg.tol_lagrangian);
    push("area_density_rel_err", r.density, 1e-10);
    push("norm_sq_rel_err", r.norm_sq, 1e-12);
    push("h_norm_sq_rel_err", r.h_norm_sq, 1e-10);
    push("angle_slope_err", r.angle_slope, cfg.tol_angle);
    cell["verdict"] = pass ? "pass" : "fail";
    report.cells.push_back(cell);
  }

  // Two candidate closed forms for |h(V_t)|^2 differ by whether the
  // hyperbolic factor enters reciprocally; the jet-computed |H|^2 arbitrates
  // and the outcome is recorded rather than assumed.
  for (const Immersion& imm : kinds) {
    if (imm.kind() != Kind::V_t_case2 && imm.kind() != Kind::V_t_case3) continue;
    const double p = pq.p, q = pq.q;
    const double s2 = imm.scale() * imm.scale();
    double reciprocal_err = 0.0, inline_err = 0.0;
    for (double mu : profile_grid(imm, cfg.grid)) {
      const double params[2] = {mu, 1.1};
      const GeometryAtPoint g = compute_geometry(imm, params);
      const double h_sq = euclidean_inner(g.H, g.H);
      const double ch = std::cosh(mu), sh = std::sinh(mu);
      const double factor = (imm.kind() == Kind::V_t_case2) ? (q * ch * ch + p * sh * sh)
                                                            : (p * ch * ch + q * sh * sh);
      const double base = (p - q) * (p - q) / (p * q * s2);
      reciprocal_err = std::max(reciprocal_err, std::abs(h_sq - base / factor) / (base / factor));
      inline_err = std::max(inline_err, std::abs(h_sq - base * factor) / (base * factor));
    }
    nlohmann::json cell;
    cell["check"] = "curvature_form_arbitration " + imm.id();
    cell["reciprocal_form_rel_err"] = reciprocal_err;
    cell["non_reciprocal_form_rel_err"] = inline_err;
    cell["matched_form"] = reciprocal_err < inline_err ? "reciprocal" : "non_reciprocal";
    const bool pass = reciprocal_err < 1e-10 && inline_err > 1e-2;
    cell["verdict"] = pass ? "pass" : "fail";
    out.line(imm.id() + " |h|^2 matches the reciprocal form", pass, reciprocal_err, 1e-10);
    report.cells.push_back(cell);
  }

  // Catalog invariants: gamma on the unit sphere, the ansatz level set,
  // scaling consistency.
  {
    const Immersion gamma = Immersion::make(Kind::gamma_pq, pq);
    double sphere_err = 0.0;
    for (int i = 0; i < cfg.grid; ++i) {
      const double th[1] = {kTwoPi * i / cfg.grid};
      sphere_err = std::max(
          sphere_err, std::abs(euclidean_inner(gamma.evaluate(th), gamma.evaluate(th)) - 1.0));
    }
    report.cells.push_back(residual_cell("gamma_pq on unit sphere", sphere_err, 1e-14, out));

    const Immersion s = Immersion::make(Kind::shrinker_S, pq);
    double level_err = 0.0, scaling_err = 0.0;
    const Immersion st = Immersion::make_at_time(Kind::shrinker_St, pq, -c);
    for (double mu : profile_grid(s, cfg.grid)) {
      for (int j = 0; j < 8; ++j) {
        const double params[2] = {mu, kTwoPi * j / 8};
        const ComplexPoint f = s.evaluate(params);
        level_err = std::max(level_err, std::abs(pq.p * std::norm(f.slot(0)) -
                                                 pq.q * std::norm(f.slot(1)) - pq.p * pq.q));
        scaling_err = std::max(scaling_err, norm(f - st.evaluate(params)));
      }
    }
    report.cells.push_back(
        residual_cell("ansatz level set p|z1|^2-q|z2|^2", level_err, 1e-12, out));
    report.cells.push_back(residual_cell("S_t at t=-c equals S", scaling_err, 1e-14, out));
  }

  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / "verify-immersion.json";
  write_json(report, path);
  out.info("report", path.string());
  return out.exit_code();
}

int run_verify_soliton(const CliConfig& cfg) {
  const ConeParams pq = ConeParams::make(cfg.p, cfg.q);
  const double c = self_similar_constant(pq);
  SuiteReport report;
  report.suite_id = "verify-soliton";
  report.config = config_echo(cfg, true, false);
  CellPrinter out;

  struct Entry {
    Immersion imm;
    SolitonSign sign;
  };
  const std::vector<Entry> entries = {
      {Immersion::make(Kind::shrinker_S, pq), SolitonSign::shrinker},
      {Immersion::make(Kind::expander_E, pq), SolitonSign::expander},
      {Immersion::make_at_time(Kind::shrinker_St, pq, -0.5 * c), SolitonSign::shrinker},
      {Immersion::make_at_time(Kind::expander_Et, pq, 2.0 * c), SolitonSign::expander},
  };
  for (const Entry& e : entries) {
    double soliton = 0.0, hamiltonian = 0.0;
    for (double mu : profile_grid(e.imm, cfg.grid)) {
      for (int j = 0; j < cfg.grid; ++j) {
        const double params[2] = {mu, kTwoPi * j / cfg.grid};
        soliton = std::max(soliton, self_similarity_residual(e.imm, params, e.sign));
        hamiltonian = std::max(hamiltonian, hamiltonian_stationarity_residual(e.imm, params));
      }
    }
    nlohmann::json cell;
    cell["kind"] = e.imm.id();
    cell["self_similar_constant"] = c;
    cell["soliton_residual"] = soliton;
    cell["hamiltonian_residual"] = hamiltonian;
    const bool pass = soliton < cfg.tol_residual && hamiltonian < cfg.tol_residual;
    out.line(e.imm.id() + " soliton F_perp = 2cH", soliton < cfg.tol_residual, soliton,
             cfg.tol_residual);
    out.line(e.imm.id() + " Hamiltonian stationary", hamiltonian < cfg.tol_residual, hamiltonian,
             cfg.tol_residual);
    cell["verdict"] = pass ? "pass" : "fail";
    report.cells.push_back(cell);
  }

  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / "verify-soliton.json";
  write_json(report, path);
  out.info("report", path.string());
  return out.exit_code();
}

int run_lambda(const CliConfig& cfg) {
  const LambdaParams lp = LambdaParams::make(cfg.lambdas, cfg.level, cfg.angle_offset);
  const Immersion sigma = Immersion::lambda_family(lp);
  const double sum = lp.lambda_sum();
  SuiteReport report;
  report.suite_id = "lambda";
  report.config = config_echo(cfg, false, true);
  CellPrinter out;

  const int n = static_cast<int>(lp.lambdas.size());
  double lagr = 0.0, hamiltonian = 0.0, soliton = 0.0, h_norm_max = 0.0, slope_err = 0.0;
  std::mt19937 rng(cfg.seed);
  std::uniform_real_distribution<double> coord(-0.35, 0.35);
  for (int rep = 0; rep < cfg.grid * cfg.grid; ++rep) {
    std::vector<double> u(static_cast<std::size_t>(n));
    for (int a = 0; a < n - 1; ++a) u[static_cast<std::size_t>(a)] = coord(rng);
    u[static_cast<std::size_t>(n - 1)] = 0.0;
    try {
      const double beta0 = compute_geometry(sigma, u).beta;
      const double th = kTwoPi * (rep % cfg.grid) / cfg.grid;
      u[static_cast<std::size_t>(n - 1)] = th;
      const GeometryAtPoint g = compute_geometry(sigma, u);
      lagr = std::max(lagr, g.lagrangian_residual);
      hamiltonian = std::max(hamiltonian, std::abs(g.beta_laplacian));
      h_norm_max = std::max(h_norm_max, norm(g.H));
      slope_err = std::max(slope_err, circular_distance(g.beta - beta0, sum * th));
      if (sum != 0.0) {
        soliton = std::max(soliton, self_similarity_residual(sigma, u));
      }
    } catch (const std::domain_error&) {
      continue;  // chart breakdown for this draw
    }
  }

  report.cells.push_back(
      residual_cell("lambda Lagrangian residual", lagr, cfg.tol_lagrangian, out));
  report.cells.push_back(
      residual_cell("lambda Hamiltonian stationary", hamiltonian, cfg.tol_residual, out));
  report.cells.push_back(residual_cell("beta slope = sum(lambda)", slope_err, cfg.tol_angle, out));
  if (sum != 0.0) {
    report.cells.push_back(
        residual_cell("soliton F_perp = (-C/sum) H", soliton, cfg.tol_residual, out));
  } else {
    report.cells.push_back(residual_cell("special Lagrangian: |H|", h_norm_max, 1e-10, out));
  }

  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / "lambda.json";
  write_json(report, path);
  out.info("report", path.string());
  return out.exit_code();
}

int run_cones(const CliConfig& cfg) {
  const ConeParams pq = ConeParams::make(cfg.p, cfg.q);
  SuiteReport report;
  report.suite_id = "cones";
  report.config = config_echo(cfg, true, false);
  CellPrinter out;

  const ConeCoincidences cc = identify_coincidences(pq);
  nlohmann::json partition = nlohmann::json::array();
  for (const auto& cls : cc.classes) {
    partition.push_back({kind_id(cls[0]), kind_id(cls[1])});
  }
  out.info("coincidence partition", partition.dump());
  {
    nlohmann::json cell;
    cell["check"] = "identify_coincidences";
    cell["partition"] = partition;
    cell["verdict"] = "pass";
    report.cells.push_back(cell);
  }

  for (const auto& cls : cc.classes) {
    const double shift_err = shift_coincidence_error(cls[0], cls[1], pq, cfg.grid);
    report.cells.push_back(residual_cell(
        "theta+pi witness " + kind_id(cls[0]) + "=" + kind_id(cls[1]), shift_err, 1e-12, out));
    const double within = image_distance(Immersion::make(cls[0], pq),
                                         Immersion::make(cls[1], pq), 1.0, 2048, cfg.seed);
    report.cells.push_back(residual_cell(
        "section distance " + kind_id(cls[0]) + " vs " + kind_id(cls[1]), within, 1e-3, out));
  }
  {
    const double across =
        image_distance(Immersion::make(cc.classes[0][0], pq),
                       Immersion::make(cc.classes[1][0], pq), 1.0, 2048, cfg.seed);
    const bool pass = across > 0.05;
    out.line("distinct cones separated", pass, across, 0.05, "(must exceed)");
    nlohmann::json cell;
    cell["check"] = "distinct_cones_separated";
    cell["measured"] = across;
    cell["threshold"] = 0.05;
    cell["verdict"] = pass ? "pass" : "fail";
    report.cells.push_back(cell);
  }

  for (Kind family : {Kind::shrinker_St, Kind::expander_Et}) {
    const auto pair = asymptotic_cone_pair(family, pq, 1e-4, 1.0, 2048);
    nlohmann::json cell;
    cell["check"] = "asymptotic_cone_pair " + kind_id(family);
    cell["pair"] = {kind_id(pair.first), kind_id(pair.second)};
    cell["canonical_pair"] = {kind_id(pair.canonical_first), kind_id(pair.canonical_second)};
    cell["witness_distance"] = pair.witness_distance;
    cell["witness_threshold"] = pair.witness_threshold;
    cell["verdict"] = pair.witnessed ? "pass" : "fail";
    out.line("asymptotic pair " + kind_id(family) + " -> " + kind_id(pair.first) + "," +
                 kind_id(pair.second),
             pair.witnessed, pair.witness_distance, pair.witness_threshold);
    report.cells.push_back(cell);
  }

  // Parity-appropriate reparametrization identities.
  if (pq.parity() == ParityCase::both_odd) {
    report.cells.push_back(residual_cell("reparametrization E0 = S0 (cov)",
                                         reparametrization_error(Kind::limit_E0, pq, cfg.grid),
                                         1e-12, out));
  }
  if (pq.parity() == ParityCase::p_odd_q_even) {
    report.cells.push_back(
        residual_cell("reparametrization V0 = S0 (cov2)",
                      reparametrization_error(Kind::limit_V0_case2, pq, cfg.grid), 1e-12, out));
  }
  if (pq.parity() == ParityCase::p_even_q_odd) {
    report.cells.push_back(
        residual_cell("reparametrization V0 = E0 (cov3)",
                      reparametrization_error(Kind::limit_V0_case3, pq, cfg.grid), 1e-12, out));
  }

  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / "cones.json";
  write_json(report, path);
  out.info("report", path.string());
  return out.exit_code();
}

int run_theorem(const CliConfig& cfg, bool write_series) {
  const ConeParams pq = ConeParams::make(cfg.p, cfg.q);
  const TheoremId which = cfg.which == "1.2" ? TheoremId::thm_1_2 : TheoremId::thm_1_1;

  TheoremOptions opts;
  opts.t0 = cfg.t0;
  opts.levels = cfg.levels;
  opts.limit_tolerance = cfg.tol_limit;
  opts.quadrature.quad_tolerance = cfg.tol_quad;
  const auto phis = default_test_functions(pq);
  const auto reports = theorem_suite(which, pq, phis, opts);

  SuiteReport report;
  report.suite_id = cfg.which == "1.2" ? "theorem-1.2" : "theorem-1.1";
  report.config = config_echo(cfg, true, false);
  CellPrinter out;
  fs::create_directories(cfg.out_dir);

  for (std::size_t i = 0; i < reports.size(); ++i) {
    const BrakkeReport& rep = reports[i];
    for (const auto& v : rep.verdicts) {
      out.line("phi#" + std::to_string(i) + " " + rep.phi_name + " " + v.check, v.pass,
               v.measured, v.tolerance);
    }
    out.inconclusive = out.inconclusive || rep.inconclusive;
    report.cells.push_back(to_json(rep));

    if (write_series) {
      auto series = [&](const char* tag, const std::vector<double>& ts,
                        const std::vector<double>& vs) {
        std::vector<std::vector<double>> rows;
        for (std::size_t k = 0; k < ts.size(); ++k) rows.push_back({ts[k], vs[k]});
        const fs::path p = fs::path(cfg.out_dir) /
                           (report.suite_id + "_phi" + std::to_string(i) + "_" + tag + ".csv");
        write_csv_series({"t", "value"}, rows, p);
      };
      auto mass_series = [&](const char* tag, const Family& fam, const std::vector<double>& ts) {
        std::vector<double> masses;
        for (double t : ts) masses.push_back(mass(fam.at(t), phis[i], opts.quadrature).value);
        series(tag, ts, masses);
      };
      const auto fams = theorem_families(which, pq);
      if (rep.limit_negative) {
        series("delta_neg", rep.limit_negative->times, rep.limit_negative->deltas);
        mass_series("mass_neg", fams.first, rep.limit_negative->times);
      }
      if (rep.limit_positive) {
        series("delta_pos", rep.limit_positive->times, rep.limit_positive->deltas);
        mass_series("mass_pos", fams.second, rep.limit_positive->times);
      }
      if (rep.divergence_negative)
        series("hsq_neg", rep.divergence_negative->times, rep.divergence_negative->values);
      if (rep.divergence_positive)
        series("hsq_pos", rep.divergence_positive->times, rep.divergence_positive->values);
    }
  }

  const fs::path path = fs::path(cfg.out_dir) / (report.suite_id + ".json");
  write_json(report, path);
  out.info("report", path.string());
  return out.exit_code();
}

int run_sweep(const CliConfig& cfg) {
  SuiteReport report;
  report.suite_id = "sweep";
  report.config = config_echo(cfg, false, false);
  CellPrinter out;

  for (const ConeParams& pq : coprime_pairs(5)) {
    const double c = self_similar_constant(pq);
    const Immersion s = Immersion::make(Kind::shrinker_S, pq);
    const Immersion e = Immersion::make(Kind::expander_E, pq);
    double soliton = 0.0, hamiltonian = 0.0, lagr = 0.0, slope = 0.0;
    for (const Immersion* imm : {&s, &e}) {
      const GridResiduals r = scan_pq_immersion(*imm, cfg.grid);
      lagr = std::max(lagr, r.lagrangian);
      slope = std::max(slope, r.angle_slope);
      hamiltonian = std::max(hamiltonian, r.hamiltonian);
      for (double mu : profile_grid(*imm, cfg.grid)) {
        for (int j = 0; j < 8; ++j) {
          const double params[2] = {mu, kTwoPi * j / 8};
          soliton = std::max(
              soliton, self_similarity_residual(
                           *imm, params,
                           imm == &s ? SolitonSign::shrinker : SolitonSign::expander));
        }
      }
    }
    const std::string tag = "p=" + std::to_string(pq.p) + " q=" + std::to_string(pq.q);
    nlohmann::json cell;
    cell["p"] = pq.p;
    cell["q"] = pq.q;
    cell["c"] = c;
    cell["lagrangian_residual"] = lagr;
    cell["soliton_residual"] = soliton;
    cell["hamiltonian_residual"] = hamiltonian;
    cell["angle_slope_err"] = slope;
    const bool pass = lagr < cfg.tol_lagrangian && soliton < cfg.tol_residual &&
                      hamiltonian < cfg.tol_residual && slope < cfg.tol_angle;
    cell["verdict"] = pass ? "pass" : "fail";
    out.line("sweep " + tag + " identities", pass, std::max({lagr, soliton, hamiltonian, slope}),
             cfg.tol_residual);
    report.cells.push_back(cell);
  }

  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / "sweep.json";
  write_json(report, path);
  out.info("report", path.string());
  return out.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for Hamiltonian stationary shrinkers, expanders, and the "
               "Brakke flows assembled from them"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub, bool pq_required) {
    if (pq_required) {
      sub->add_option("--p", cfg.p, "first cone index (coprime with q, p > q)")->required();
      sub->add_option("--q", cfg.q, "second cone index")->required();
    }
    sub->add_option("--grid", cfg.grid, "grid points per parameter direction");
    sub->add_option("--t0", cfg.t0, "largest |t| of the extrapolation sequence");
    sub->add_option("--levels", cfg.levels, "number of halvings in the t-sequence");
    sub->add_option("--tol-lagrangian", cfg.tol_lagrangian, "Lagrangian residual tolerance");
    sub->add_option("--tol-residual", cfg.tol_residual, "soliton/stationarity tolerance");
    sub->add_option("--tol-angle", cfg.tol_angle, "angle slope tolerance");
    sub->add_option("--tol-quad", cfg.tol_quad, "quadrature relative tolerance");
    sub->add_option("--tol-limit", cfg.tol_limit, "limit-match relative tolerance");
    sub->add_option("--out", cfg.out_dir, "output directory for reports");
    sub->add_option("--seed", cfg.seed, "seed for the deterministic sampling sequences");
  };

  auto* vi =
      app.add_subcommand("verify-immersion", "catalog closed-form concordance for one (p, q)");
  add_common(vi, true);
  auto* vs =
      app.add_subcommand("verify-soliton", "soliton and stationarity identities for one (p, q)");
  add_common(vs, true);
  auto* la = app.add_subcommand("lambda", "higher-dimensional lambda family identities");
  add_common(la, false);
  la->add_option("--lambdas", cfg.lambdas, "rotation speeds lambda_i (comma separated)")
      ->required()
      ->delimiter(',')
      ->check([](const std::string& s) {
        return s == "0" || s == "0.0" || s == "-0" ? "lambda_i must be nonzero" : "";
      });
  la->add_option("--level", cfg.level, "level-set constant C");
  la->add_option("--offset", cfg.angle_offset, "additive angle constant c");
  auto* br = app.add_subcommand("brakke", "Brakke criterion for the parity case of (p, q)");
  add_common(br, true);
  auto* co = app.add_subcommand("cones", "cone coincidences, sections, asymptotics");
  add_common(co, true);
  auto* th = app.add_subcommand("theorem", "full theorem suite");
  add_common(th, true);
  th->add_option("--which", cfg.which, "1.1 or 1.2")->check(CLI::IsMember({"1.1", "1.2"}));
  auto* sw = app.add_subcommand("sweep", "identities across all coprime pairs with q < p <= 5");
  add_common(sw, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (vi->parsed()) return run_verify_immersion(cfg);
    if (vs->parsed()) return run_verify_soliton(cfg);
    if (la->parsed()) return run_lambda(cfg);
    if (br->parsed()) {
      cfg.which = "1.1";
      return run_theorem(cfg, /*write_series=*/true);
    }
    if (co->parsed()) return run_cones(cfg);
    if (th->parsed()) {
      if (cfg.which == "1.2" && cfg.q <= 1) {
        std::cerr << "usage error: Theorem 1.2 assumes q > 1 (the boundary roots-of-unity sum "
                     "1 + e^{2 pi i p/q} + ... only vanishes then); got q = "
                  << cfg.q << "\n";
        return kExitUsage;
      }
      return run_theorem(cfg, /*write_series=*/false);
    }
    if (sw->parsed()) return run_sweep(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
