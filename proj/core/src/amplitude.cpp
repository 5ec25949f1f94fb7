#include "annv/amplitude.hpp"

#include <algorithm>
#include <cmath>

#include "annv/errors.hpp"

namespace annv {

CrossSection cross_section(const TauFunction& tau, const TrajectoryLine& line, double t, double s0, double s1, int n) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "cross section needs at least 2 samples");
  CrossSection out{line, t, {}};
  out.samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = s0 + (s1 - s0) * i / (n - 1);
    const Point2 p = line.at(s);
    const Fields f = fields(tau, p.x, p.y, t);
    out.samples.push_back({s, f.u, f.v});
  }
  return out;
}

namespace {

double component_at(const TauFunction& tau, const TrajectoryLine& line, double t, double s, Component which) {
  const Point2 p = line.at(s);
  return field_value(tau, which, p.x, p.y, t);
}

double slope_along(const TauFunction& tau, const TrajectoryLine& line, double t, double s, Component which) {
  const Point2 p = line.at(s);
  const Point2 d = line.direction();
  Moments m(tau, p.x, p.y, t, 3);
  return d.x * component_derivative(m, Assignment::XY_XX, which, {1, 0, 0}) +
         d.y * component_derivative(m, Assignment::XY_XX, which, {0, 1, 0});
}

}  // namespace

CrestPoint crest_extremum(const TauFunction& tau, const TrajectoryLine& line, double t, double s0, double s1,
                          Component which, int samples) {
  if (samples < 3) samples = 3;
  if (!(s1 > s0)) throw Error(ErrorCode::NoExtremumInBracket, "empty bracket");
  std::vector<double> s(static_cast<std::size_t>(samples)), w(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = s0 + (s1 - s0) * static_cast<double>(i) / static_cast<double>(samples - 1);
    w[i] = component_at(tau, line, t, s[i], which);
  }
  // a constant sample set (e.g. an underflowed tail) has no extremum to refine
  const auto [lo_w, hi_w] = std::minmax_element(w.begin(), w.end());
  if (*lo_w == *hi_w) throw Error(ErrorCode::NoExtremumInBracket, "component is constant on the bracket");
  std::ptrdiff_t best = -1;
  bool best_is_min = true;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const bool is_min = w[i] <= w[i - 1] && w[i] <= w[i + 1];
    const bool is_max = w[i] >= w[i - 1] && w[i] >= w[i + 1];
    if (!is_min && !is_max) continue;
    if (best < 0 || std::abs(w[i]) > std::abs(w[static_cast<std::size_t>(best)])) {
      best = static_cast<std::ptrdiff_t>(i);
      best_is_min = is_min;
    }
  }
  if (best < 0) throw Error(ErrorCode::NoExtremumInBracket, "no interior extremum in [" + std::to_string(s0) + ", " +
                                                                std::to_string(s1) + "]");

  const auto b = static_cast<std::size_t>(best);
  double lo = s[b - 1], hi = s[b + 1];
  constexpr double tol = 1e-8;
  double d_lo = slope_along(tau, line, t, lo, which);
  const double d_hi = slope_along(tau, line, t, hi, which);
  double at;
  if (d_lo * d_hi < 0) {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double dm = slope_along(tau, line, t, mid, which);
      if ((dm < 0) == (d_lo < 0)) {
        lo = mid;
        d_lo = dm;
      } else {
        hi = mid;
      }
    }
    at = 0.5 * (lo + hi);
  } else {
    // Flat or noisy derivative: golden section on the value itself.
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    const double sign = best_is_min ? 1.0 : -1.0;
    double a = lo, c = hi;
    double x1 = c - g * (c - a), x2 = a + g * (c - a);
    double f1 = sign * component_at(tau, line, t, x1, which);
    double f2 = sign * component_at(tau, line, t, x2, which);
    while (c - a > tol) {
      if (f1 <= f2) {
        c = x2;
        x2 = x1;
        f2 = f1;
        x1 = c - g * (c - a);
        f1 = sign * component_at(tau, line, t, x1, which);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (c - a);
        f2 = sign * component_at(tau, line, t, x2, which);
      }
    }
    at = 0.5 * (a + c);
  }
  CrestPoint out;
  out.s = at;
  out.at = line.at(at);
  const Fields f = fields(tau, out.at.x, out.at.y, t);
  out.u = f.u;
  out.v = f.v;
  return out;
}

StemAmplitude stem_amplitude(const Scenario& scenario, Epoch epoch, double t, const GeometryOptions& options) {
  const StemEndpoints ends = stem_endpoints_closed_form(scenario, epoch, t, options);
  const TrajectoryLine line = trajectory_line(stem_definition(scenario.kase, epoch).stem_label, scenario, t);
  const TauFunction tau = scenario.tau();

  StemAmplitude out;
  out.epoch = epoch;
  out.stem_label = line.label;
  out.t = t;
  out.K = line.a;
  out.P = line.b;
  out.expected_u = -line.a * line.b / 2;
  out.expected_v = -line.a * line.a / 2;
  out.degenerate = std::abs(line.a) < 1e-12;

  const double sa = line.param_of(ends.first), sb = line.param_of(ends.second);
  const double lo = std::min(sa, sb), hi = std::max(sa, sb);
  out.s_begin = lo + 0.25 * (hi - lo);
  out.s_end = hi - 0.25 * (hi - lo);

  const CrossSection cs = cross_section(tau, line, t, out.s_begin, out.s_end, 401);
  for (const CrossSample& c : cs.samples) {
    out.interior_max_abs_u = std::max(out.interior_max_abs_u, std::abs(c.u));
    out.interior_max_abs_v = std::max(out.interior_max_abs_v, std::abs(c.v));
  }
  // Along the stem v sits on a plateau, so the crest is taken across it, through the
  // middle of the searched interval, over |theta| <= 20.
  const Point2 mid = line.at(0.5 * (out.s_begin + out.s_end));
  TrajectoryLine across;
  across.label = line.label + " (transversal)";
  across.a = line.b;
  across.b = -line.a;
  across.c = -(across.a * mid.x + across.b * mid.y);
  across.t = t;
  const double half = 20 / line.norm();
  const double s_mid = across.param_of(mid);
  try {
    out.crest = crest_extremum(tau, across, t, s_mid - half, s_mid + half, Component::V);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoExtremumInBracket) throw;
  }
  return out;
}

const std::vector<ProbeDefinition>& probe_definitions() {
  static const std::vector<ProbeDefinition> probes = {
      {"R1", Case::Weak1, Epoch::Before, 0.0, 0.0},     {"R2", Case::Weak1, Epoch::After, 0.0, -9.0 / 8.0},
      {"R3", Case::Weak2, Epoch::Before, 0.0, 0.0},     {"R4", Case::Weak2, Epoch::After, 0.0, -0.5},
      {"R5", Case::Strong1, Epoch::Before, -2.0, 0.0},  {"R6", Case::Strong1, Epoch::After, 0.0, -1.0 / 8.0},
      {"R7", Case::Strong2, Epoch::After, 0.0, -0.5},   {"R8", Case::Strong2, Epoch::Before, -2.0, 0.0},
  };
  return probes;
}

const ProbeDefinition& probe_definition(std::string_view id) {
  for (const ProbeDefinition& p : probe_definitions()) {
    if (p.id == id) return p;
  }
  throw Error(ErrorCode::UnknownLabel, "unknown probe '" + std::string(id) + "'");
}

std::vector<std::string> probes_for(Case kase) {
  std::vector<std::string> out;
  for (const ProbeDefinition& p : probe_definitions()) {
    if (p.kase == kase) out.push_back(p.id);
  }
  return out;
}

MidpointProbe midpoint_amplitude(const Scenario& scenario, std::string_view id, double t,
                                 const GeometryOptions& options) {
  const ProbeDefinition& def = probe_definition(id);
  if (def.kase != scenario.kase) {
    throw Error(ErrorCode::PreconditionViolated,
                "probe " + def.id + " belongs to case " + to_string(def.kase) + ", not " + to_string(scenario.kase));
  }
  const StemEndpoints ends = stem_endpoints_closed_form(scenario, def.epoch, t, options);
  MidpointProbe out;
  out.id = def.id;
  out.stem_label = stem_definition(scenario.kase, def.epoch).stem_label;
  out.first_name = ends.first_name;
  out.second_name = ends.second_name;
  out.t = t;
  out.midpoint = ends.midpoint();
  const Fields f = fields(scenario.tau(), out.midpoint.x, out.midpoint.y, t);
  out.u = f.u;
  out.v = f.v;
  return out;
}

}  // namespace annv
