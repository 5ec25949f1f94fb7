#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annv/geometry.hpp"
#include "annv/log_derivative.hpp"

namespace annv {

enum class ArmEpoch { Before, After, Both };
const char* to_string(ArmEpoch e);

// One sech^2 ridge: u = -(K P / 2) sech^2(theta/2), v = -(K^2 / 2) sech^2(theta/2),
// theta = sum eps_j xi_j + phase_shift.
struct ArmSpec {
  std::string label;  // "S1", "S1-2-3", "S1+2", ... stems: "S1-2", "S1+2+3", ...
  std::vector<int> eps;
  double phase_shift = 0;
  double K = 0, P = 0;
  std::string region;  // e.g. "t->-inf, y->+inf"
  ArmEpoch epoch = ArmEpoch::Both;
  bool stem = false;
  // The two tau terms that dominate on the ridge; theta = phase(upper) - phase(lower) up to overall sign.
  std::uint32_t lower = 0, upper = 0;
  PhaseForm theta;
  char axis = 'y';  // direction in which the arm runs off to infinity
  int outward = 1;

  double amplitude_u() const { return -K * P / 2; }
  double amplitude_v() const { return -K * K / 2; }
};

struct ArmCatalog {
  std::vector<ArmSpec> before, after;  // four arms each, same order
  ArmSpec stem_before, stem_after;
};

// Throws UnclassifiedScenario for custom parameter sets.
ArmCatalog arm_catalog(const Scenario& scenario);

double arm_value(const ArmSpec& spec, Component which, double x, double y, double t);

struct BandOptions {
  double half_length = 2;   // along the crest
  double half_width = 6;    // across the crest, in units of theta
  int n_along = 21;
  int n_across = 25;
  double target_factor = 0.8;  // centre where the log-weight margin first reaches target_factor * |t|
  double min_margin = 15;      // BandOutsideRegion below this
};

struct Band {
  double t = 0;
  double center_s = 0;  // arclength on the crest line
  double margin = 0;    // min over the band of (mean ridge log-weight - max other log-weight)
  std::vector<Point2> points;
};

TrajectoryLine crest_line(const ArmSpec& spec, double t);

// Log-weight margin of the ridge terms over all other terms at a point.
double ridge_margin(const TauFunction& tau, const ArmSpec& spec, double x, double y, double t);

Band designated_band(const TauFunction& tau, const ArmSpec& spec, double t, const BandOptions& options = {});

// Band along the crest restricted to y in [y0, y1].
Band band_from_y_range(const TauFunction& tau, const ArmSpec& spec, double t, double y0, double y1,
                       const BandOptions& options = {});

// sup over the band of max(|u - u_arm|, |v - v_arm|).
double arm_deviation(const TauFunction& tau, const ArmSpec& spec, const Band& band);

// Copy of the spec with its phase constant replaced.
ArmSpec with_phase_shift(const ArmSpec& spec, double shift);

}  // namespace annv
