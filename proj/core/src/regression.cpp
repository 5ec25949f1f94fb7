#include <algorithm>
#include <cmath>
#include <limits>

#include "annv/amplitude.hpp"
#include "annv/errors.hpp"

namespace annv {
namespace {

const char* param_name(CurveParam p) { return p == CurveParam::X ? "x" : p == CurveParam::Y ? "y" : "t"; }

bool can_param(const TrajectoryLine& line, CurveParam p) {
  return p == CurveParam::X ? std::abs(line.b) > 1e-14 : std::abs(line.a) > 1e-14;
}

Point2 point_on(const TrajectoryLine& line, CurveParam p, double s) {
  if (p == CurveParam::X) return {s, -(line.a * s + line.c) / line.b};
  return {-(line.b * s + line.c) / line.a, s};
}

// Printed variable when the line allows it, the other coordinate otherwise.
CurveParam usable_param(const TrajectoryLine& line, CurveParam printed) {
  if (can_param(line, printed)) return printed;
  return printed == CurveParam::X ? CurveParam::Y : CurveParam::X;
}

double line_value(const Scenario& scenario, const TauFunction& tau, const std::string& label, CurveParam p,
                  Component which, double s, double t) {
  const TrajectoryLine line = trajectory_line(label, scenario, t);
  const Point2 q = point_on(line, p, s);
  return field_value(tau, which, q.x, q.y, t);
}

double probe_value(const Scenario& scenario, const std::string& id, Component which, double t) {
  GeometryOptions oracle;
  oracle.oracle_mode = true;
  const MidpointProbe m = midpoint_amplitude(scenario, id, t, oracle);
  return which == Component::U ? m.u : m.v;
}

std::string describe_cross(Component c, const std::string& label, CurveParam p) {
  return std::string(to_string(c)) + " on " + label + " (parameter " + param_name(p) + ")";
}

std::string describe_probe(Component c, const std::string& id) {
  return std::string(to_string(c)) + " at " + id;
}

}  // namespace

std::vector<SamplePoint> default_cross_samples() {
  return {{-1.5, -1.2}, {-0.6, -0.4}, {0.0, 0.3}, {0.7, 0.8}, {1.6, 1.5}};
}

std::vector<SamplePoint> default_amplitude_samples() {
  return {{0, -2.5}, {0, -1.2}, {0, 0.4}, {0, 1.3}, {0, 2.6}};
}

double direct_value(const Scenario& scenario, const TauFunction& tau, const ReferenceCurve& curve, double s, double t) {
  if (curve.kind == CurveKind::Amplitude) return probe_value(scenario, curve.target, curve.component, t);
  const TrajectoryLine line = trajectory_line(curve.target, scenario, t);
  return line_value(scenario, tau, curve.target, usable_param(line, curve.param), curve.component, s, t);
}

CurveVerdict reference_regression(const Scenario& scenario, const ReferenceCurve& curve,
                                  const std::vector<SamplePoint>& samples) {
  if (scenario.kase != curve.kase) {
    throw Error(ErrorCode::PreconditionViolated, curve.id + curve.sub + " belongs to case " + to_string(curve.kase));
  }
  const TauFunction tau = scenario.tau();
  CurveVerdict out;
  out.id = curve.id;
  out.sub = curve.sub;
  if (curve.kind == CurveKind::Amplitude) {
    out.stated = describe_probe(curve.component, curve.target);
  } else {
    const TrajectoryLine line = trajectory_line(curve.target, scenario, 0.0);
    const CurveParam used = usable_param(line, curve.param);
    out.stated = describe_cross(curve.component, curve.target, used);
    if (used != curve.param) {
      out.stated += "; printed in " + std::string(param_name(curve.param)) + ", which does not parametrize this line";
    }
  }

  for (const SamplePoint& sp : samples) {
    RegressionSample r{sp.s, sp.t, curve.eval(sp.s, sp.t), direct_value(scenario, tau, curve, sp.s, sp.t)};
    out.max_abs_diff = std::max(out.max_abs_diff, std::abs(r.reference - r.direct));
    out.max_abs_direct = std::max(out.max_abs_direct, std::abs(r.direct));
    out.samples.push_back(r);
  }
  if (std::isnan(out.max_abs_diff)) out.max_abs_diff = std::numeric_limits<double>::infinity();
  out.confirmed = out.max_abs_diff < kRegressionTolerance;

  if (curve.kind == CurveKind::Amplitude) {
    for (double t : {-30.0, 30.0}) {
      out.limit_samples.push_back({0, t, curve.eval(0, t), direct_value(scenario, tau, curve, 0, t)});
    }
  }

  // Best alternative reading: other stem line or parametrization, other component, t -> -t.
  out.best_match.max_abs_diff = std::numeric_limits<double>::infinity();
  auto consider = [&](const std::string& what, auto&& value) {
    double worst = 0;
    for (const SamplePoint& sp : samples) worst = std::max(worst, std::abs(curve.eval(sp.s, sp.t) - value(sp)));
    if (std::isnan(worst)) return;
    if (worst < out.best_match.max_abs_diff) out.best_match = {what, worst};
  };
  for (double sign : {1.0, -1.0}) {
    const std::string flip = sign < 0 ? ", t -> -t" : "";
    for (Component c : {Component::V, Component::U}) {
      if (curve.kind == CurveKind::Amplitude) {
        for (const std::string& id : probes_for(scenario.kase)) {
          consider(describe_probe(c, id) + flip,
                   [&](const SamplePoint& sp) { return probe_value(scenario, id, c, sign * sp.t); });
        }
        continue;
      }
      for (Epoch ep : {Epoch::Before, Epoch::After}) {
        const std::string label = stem_definition(scenario.kase, ep).stem_label;
        const TrajectoryLine line = trajectory_line(label, scenario, 0.0);
        for (CurveParam p : {CurveParam::X, CurveParam::Y}) {
          if (!can_param(line, p)) continue;
          consider(describe_cross(c, label, p) + flip, [&](const SamplePoint& sp) {
            return line_value(scenario, tau, label, p, c, sp.s, sign * sp.t);
          });
        }
      }
    }
  }
  return out;
}

std::vector<EquationVerdict> regress_scenario(const Scenario& scenario) {
  std::vector<EquationVerdict> out;
  for (const std::string& id : reference_equation_ids()) {
    EquationVerdict eq{id, true, {}};
    for (const ReferenceCurve& c : reference_curves()) {
      if (c.id != id || c.kase != scenario.kase) continue;
      const auto samples = c.kind == CurveKind::Amplitude ? default_amplitude_samples() : default_cross_samples();
      eq.curves.push_back(reference_regression(scenario, c, samples));
      eq.confirmed = eq.confirmed && eq.curves.back().confirmed;
    }
    if (!eq.curves.empty()) out.push_back(std::move(eq));
  }
  return out;
}

std::vector<EquationVerdict> regress_all() {
  std::vector<EquationVerdict> out;
  for (const std::string& name : builtin_names()) {
    for (EquationVerdict& v : regress_scenario(builtin(name))) out.push_back(std::move(v));
  }
  const auto ids = reference_equation_ids();
  std::stable_sort(out.begin(), out.end(), [&](const EquationVerdict& a, const EquationVerdict& b) {
    return std::find(ids.begin(), ids.end(), a.id) < std::find(ids.begin(), ids.end(), b.id);
  });
  return out;
}

}  // namespace annv
