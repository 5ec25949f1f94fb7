#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annv/geometry.hpp"
#include "annv/log_derivative.hpp"

namespace annv {

struct CrossSample {
  double s = 0, u = 0, v = 0;
};

struct CrossSection {
  TrajectoryLine line;
  double t = 0;
  std::vector<CrossSample> samples;  // uniform in arclength s along line.at(s)
};

CrossSection cross_section(const TauFunction& tau, const TrajectoryLine& line, double t, double s0, double s1, int n);

struct CrestPoint {
  double s = 0;
  Point2 at;
  double u = 0, v = 0;
};

// Extremum of the component along the line inside [s0, s1]: the sampled interior
// local extremum of largest magnitude, refined to 1e-8 in s by bisection on the
// directional derivative (golden section when the derivative has no usable sign change).
CrestPoint crest_extremum(const TauFunction& tau, const TrajectoryLine& line, double t, double s0, double s1,
                          Component which = Component::V, int samples = 512);

// Crest of a stem: the extremum of v across the stem line through the middle of its
// endpoint segment. Interior maxima are taken along the central half of the segment,
// away from the overshoot at the junctions.
struct StemAmplitude {
  Epoch epoch = Epoch::Before;
  std::string stem_label;
  double t = 0;
  double K = 0, P = 0;
  double expected_u = 0, expected_v = 0;  // -K P / 2, -K^2 / 2
  bool degenerate = false;                // K == 0
  std::optional<CrestPoint> crest;        // absent when v has no extremum across the stem
  double interior_max_abs_u = 0, interior_max_abs_v = 0;
  double s_begin = 0, s_end = 0;          // searched interval
};

StemAmplitude stem_amplitude(const Scenario& scenario, Epoch epoch, double t, const GeometryOptions& options = {});

struct ProbeDefinition {
  std::string id;  // R1..R8
  Case kase;
  Epoch epoch;     // whose endpoint pair defines the midpoint
  double stated_limit_minus;  // t -> -inf value for v as stated alongside the closed forms
  double stated_limit_plus;
};
const std::vector<ProbeDefinition>& probe_definitions();
const ProbeDefinition& probe_definition(std::string_view id);
std::vector<std::string> probes_for(Case kase);

struct MidpointProbe {
  std::string id;
  std::string stem_label;
  std::string first_name, second_name;
  double t = 0;
  Point2 midpoint;
  double u = 0, v = 0;
};

MidpointProbe midpoint_amplitude(const Scenario& scenario, std::string_view id, double t,
                                 const GeometryOptions& options = {});

// Closed-form per-scenario curves from the reference formulas.
enum class CurveKind { Cross, Amplitude };
enum class CurveParam { X, Y, T };

struct ReferenceCurve {
  std::string id;   // cross31 ... amplocaladd4
  std::string sub;  // "a" or "b"
  Case kase;
  CurveKind kind;
  Component component;  // as labelled
  std::string target;   // line label (cross) or probe id (amplitude)
  CurveParam param;     // printed free variable
  double (*eval)(double s, double t);
};

const std::vector<ReferenceCurve>& reference_curves();
std::vector<std::string> reference_equation_ids();  // the 16 equation ids in order

struct SamplePoint {
  double s = 0, t = 0;
};

struct RegressionSample {
  double s = 0, t = 0;
  double reference = 0, direct = 0;
};

struct CandidateMatch {
  std::string description;
  double max_abs_diff = 0;
};

struct CurveVerdict {
  std::string id, sub;
  std::string stated;  // e.g. "v on l1-2 (parameter y)"
  bool confirmed = false;
  double max_abs_diff = 0;
  double max_abs_direct = 0;
  std::vector<RegressionSample> samples;
  std::vector<RegressionSample> limit_samples;  // amplitude curves only, |t| = 30
  CandidateMatch best_match;                    // best alternative reading of the formula
};

struct EquationVerdict {
  std::string id;
  bool confirmed = false;
  std::vector<CurveVerdict> curves;
};

inline constexpr double kRegressionTolerance = 1e-9;

std::vector<SamplePoint> default_cross_samples();
std::vector<SamplePoint> default_amplitude_samples();

// Direct evaluation of the quantity a curve is labelled with.
double direct_value(const Scenario& scenario, const TauFunction& tau, const ReferenceCurve& curve, double s, double t);

CurveVerdict reference_regression(const Scenario& scenario, const ReferenceCurve& curve,
                                  const std::vector<SamplePoint>& samples);

// All equations whose parameter set matches the scenario.
std::vector<EquationVerdict> regress_scenario(const Scenario& scenario);

// All 16 equations, each against its own built-in scenario.
std::vector<EquationVerdict> regress_all();

}  // namespace annv
