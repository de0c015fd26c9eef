#include "lmcf/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace lmcf {

std::string SuiteReport::verdict() const {
  bool inconclusive = false;
  for (const auto& cell : cells) {
    const auto it = cell.find("verdict");
    if (it == cell.end()) continue;
    if (*it == "fail") return "fail";
    if (*it == "inconclusive") inconclusive = true;
  }
  return inconclusive ? "inconclusive" : "pass";
}

namespace {

std::string format_number(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("reports never carry non-finite numbers");
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void render(const nlohmann::json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys sorted
        if (!first) out += ',';
        first = false;
        out += nlohmann::json(it.key()).dump();
        out += ':';
        render(it.value(), out);
      }
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        render(j[i], out);
      }
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string canonical_json(const nlohmann::json& j) {
  std::string out;
  render(j, out);
  out += '\n';
  return out;
}

void write_json(const SuiteReport& report, const std::filesystem::path& path) {
  nlohmann::json j;
  j["suite_id"] = report.suite_id;
  j["engine_version"] = report.engine_version;
  j["config"] = report.config;
  j["cells"] = report.cells;
  j["verdict"] = report.verdict();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << canonical_json(j);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_csv_series(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    // Column names here are plain identifiers; quote defensively per RFC 4180.
    const std::string& c = columns[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : c) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      out << quoted;
    } else {
      out << c;
    }
  }
  out << '\n';
  for (const auto& row : rows) {
    if (row.size() != columns.size()) {
      throw std::invalid_argument("ragged CSV row");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json to_json(const BrakkeVerdict& v) {
  nlohmann::json j;
  j["check"] = v.check;
  j["pass"] = v.pass;
  j["measured"] = v.measured;
  j["tolerance"] = v.tolerance;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

nlohmann::json to_json(const LimitMatch& lm) {
  nlohmann::json j;
  j["times"] = lm.times;
  j["deltas"] = lm.deltas;
  j["extrapolated"] = lm.extrapolated;
  j["extrapolation_error"] = lm.extrapolation_error;
  j["target"] = lm.target;
  j["target_error"] = lm.target_error;
  j["tolerance"] = lm.tolerance;
  j["pass"] = lm.pass;
  return j;
}

nlohmann::json to_json(const DivergenceFit& fit) {
  nlohmann::json j;
  switch (fit.cls) {
    case DivergenceClass::finite: j["class"] = "finite"; break;
    case DivergenceClass::minus_infinity: j["class"] = "minus_infinity"; break;
    case DivergenceClass::inconclusive: j["class"] = "inconclusive"; break;
  }
  j["log_coefficient"] = fit.log_coefficient;
  j["intercept"] = fit.intercept;
  j["log_coefficient_stderr"] = fit.log_coefficient_stderr;
  j["times"] = fit.times;
  j["values"] = fit.values;
  return j;
}

nlohmann::json to_json(const BrakkeReport& rep) {
  nlohmann::json j;
  j["phi"] = rep.phi_name;
  j["phi_at_origin"] = rep.phi_at_origin;
  j["negative_family"] = rep.negative_family;
  j["positive_family"] = rep.positive_family;
  j["mass_at_reference_t"] = rep.mass_at_reference_t;
  j["first_variation_at_reference_t"] = rep.first_variation_at_reference_t;
  j["mass_derivative_fd_at_reference_t"] = rep.mass_derivative_fd_at_reference_t;
  j["quadrature_error_estimate"] = rep.quadrature_error_estimate;
  if (rep.limit_negative) j["limit_negative"] = to_json(*rep.limit_negative);
  if (rep.limit_positive) j["limit_positive"] = to_json(*rep.limit_positive);
  if (rep.divergence_negative) j["divergence_negative"] = to_json(*rep.divergence_negative);
  if (rep.divergence_positive) j["divergence_positive"] = to_json(*rep.divergence_positive);
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : rep.verdicts) verdicts.push_back(to_json(v));
  j["checks"] = verdicts;
  j["verdict"] = rep.inconclusive ? "inconclusive" : (rep.pass ? "pass" : "fail");
  return j;
}

}  // namespace lmcf
