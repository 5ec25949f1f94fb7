#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "annv/amplitude.hpp"
#include "annv/log_derivative.hpp"
#include "annv/residual.hpp"

namespace annv {

// n uniform points in [-half, half]^3 from a fixed-seed mt19937_64.
std::vector<Point3> audit_samples(std::size_t n = 1000, double half = 20, std::uint64_t seed = 20240611);

struct ReportOptions {
  std::vector<double> times;
  GridBox residual_box{-20, 20, -20, 20};
  int residual_resolution = 21;
  std::size_t audit_points = 1000;
  unsigned threads = 0;
};

struct Discrepancy {
  std::string kind;     // "reference-curve", "limit", "endpoint"
  std::string subject;  // e.g. "amplocal1b", "R2 t->-inf", "N"
  std::string detail;
  double reference = 0;  // value from the closed form or stated limit
  double direct = 0;     // value from direct evaluation
  double t = 0;
};

// Every known disagreement between the reference closed forms and direct evaluation
// for one scenario.
std::vector<Discrepancy> discrepancies(const Scenario& scenario, const std::vector<EquationVerdict>& verdicts);

nlohmann::ordered_json scenario_json(const Scenario& scenario);
nlohmann::ordered_json audit_json(const AuditReport& audit);
nlohmann::ordered_json verdict_json(const EquationVerdict& verdict);
nlohmann::ordered_json discrepancy_json(const Discrepancy& d);

// Top-level keys: scenario, audit, residual, arms, geometry, amplitudes, regressions, discrepancies.
// Throws PreconditionViolated for an empty time list. Reconnection-gated entries carry an "error".
nlohmann::ordered_json build_report(const Scenario& scenario, const ReportOptions& options);

}  // namespace annv
