#include "annv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "annv/errors.hpp"

namespace annv {

const char* to_string(ArmEpoch e) {
  switch (e) {
    case ArmEpoch::Before: return "before";
    case ArmEpoch::After: return "after";
    case ArmEpoch::Both: return "both";
  }
  return "?";
}

namespace {

struct ArmRow {
  std::uint32_t lower, upper;
  char axis;
  int outward;
};

struct CaseTable {
  ArmRow before[4], after[4];
  ArmRow stem_before, stem_after;
};

// Dominant term pairs, as subset bitmasks (bit 0 = soliton 1).
const CaseTable& case_table(Case kase) {
  static const CaseTable weak1 = {
      {{0, 1, 'y', 1}, {1, 6, 'y', 1}, {0, 2, 'y', -1}, {2, 6, 'y', -1}},
      {{0, 1, 'y', 1}, {1, 6, 'y', 1}, {4, 6, 'y', -1}, {0, 4, 'y', -1}},
      {1, 2, 'y', 0},
      {1, 4, 'y', 0}};
  static const CaseTable weak2 = {
      {{0, 1, 'y', -1}, {1, 6, 'y', -1}, {0, 2, 'y', 1}, {2, 6, 'y', 1}},
      {{0, 1, 'y', -1}, {1, 6, 'y', -1}, {4, 6, 'y', 1}, {0, 4, 'y', 1}},
      {1, 2, 'y', 0},
      {1, 4, 'y', 0}};
  static const CaseTable strong1 = {
      {{5, 7, 'x', 1}, {3, 7, 'x', 1}, {0, 5, 'x', -1}, {0, 3, 'y', -1}},
      {{1, 3, 'x', 1}, {1, 5, 'x', 1}, {0, 5, 'x', -1}, {0, 3, 'y', -1}},
      {0, 7, 'x', 0},
      {0, 1, 'x', 0}};
  static const CaseTable strong2 = {
      {{1, 3, 'y', 1}, {1, 5, 'y', 1}, {0, 5, 'y', -1}, {0, 3, 'x', -1}},
      {{5, 7, 'y', 1}, {3, 7, 'y', 1}, {0, 5, 'y', -1}, {0, 3, 'x', -1}},
      {0, 1, 'x', 0},
      {0, 7, 'x', 0}};
  switch (kase) {
    case Case::Weak1: return weak1;
    case Case::Weak2: return weak2;
    case Case::Strong1: return strong1;
    case Case::Strong2: return strong2;
    case Case::Custom: break;
  }
  throw Error(ErrorCode::UnclassifiedScenario, "arm catalog needs a weak or strong resonant scenario");
}

const Term& term_of(const TauFunction& tau, std::uint32_t subset) {
  for (const Term& term : tau.terms()) {
    if (term.subset == subset) return term;
  }
  throw Error(ErrorCode::PreconditionViolated, "tau has no term for subset " + std::to_string(subset));
}

std::string label_of(const std::vector<int>& eps) {
  std::string s = "S";
  bool first = true;
  for (std::size_t j = 0; j < eps.size(); ++j) {
    if (eps[j] == 0) continue;
    if (!first) s += eps[j] > 0 ? '+' : '-';
    s += std::to_string(j + 1);
    first = false;
  }
  return s;
}

ArmSpec make_arm(const Scenario& scenario, const TauFunction& tau, const ArmRow& row, ArmEpoch epoch, bool stem) {
  const Term& a = term_of(tau, row.lower);
  const Term& b = term_of(tau, row.upper);
  const std::size_t n = scenario.params.n();
  std::vector<int> eps(n);
  for (std::size_t j = 0; j < n; ++j) eps[j] = int((row.upper >> j) & 1u) - int((row.lower >> j) & 1u);
  const int sign = *std::find_if(eps.begin(), eps.end(), [](int e) { return e != 0; }) > 0 ? 1 : -1;
  for (int& e : eps) e *= sign;

  ArmSpec s;
  s.label = label_of(eps);
  s.eps = eps;
  s.phase_shift = sign * (b.log_coeff - a.log_coeff);
  s.theta = {sign * (b.phase.cx - a.phase.cx), sign * (b.phase.cy - a.phase.cy), sign * (b.phase.ct - a.phase.ct),
             sign * (b.phase.c0 - a.phase.c0) + s.phase_shift};
  for (std::size_t j = 0; j < n; ++j) {
    s.K += eps[j] * scenario.params.k[j];
    s.P += eps[j] * scenario.params.p[j];
  }
  s.epoch = epoch;
  s.stem = stem;
  s.lower = row.lower;
  s.upper = row.upper;
  s.axis = row.axis;
  s.outward = row.outward;
  const char* when = epoch == ArmEpoch::Before ? "t->-inf" : epoch == ArmEpoch::After ? "t->+inf" : "t->+-inf";
  if (stem) {
    s.region = std::string(when) + ", bounded segment";
  } else {
    s.region = std::string(when) + ", " + row.axis + "->" + (row.outward > 0 ? "+inf" : "-inf");
  }
  return s;
}

bool same_arm(const ArmSpec& a, const ArmSpec& b) {
  return a.lower == b.lower && a.upper == b.upper && a.theta == b.theta && a.axis == b.axis && a.outward == b.outward;
}

Band band_at(const TauFunction& tau, const ArmSpec& spec, double t, const TrajectoryLine& line, double center,
             const BandOptions& o) {
  Band band;
  band.t = t;
  band.center_s = center;
  const double n = line.norm();
  const Point2 normal{line.a / n, line.b / n};
  const Point2 along = line.direction();
  const Point2 q = line.at(center);
  band.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < o.n_along; ++i) {
    const double ds = o.n_along > 1 ? -o.half_length + 2 * o.half_length * i / (o.n_along - 1) : 0.0;
    for (int j = 0; j < o.n_across; ++j) {
      const double th = o.n_across > 1 ? -o.half_width + 2 * o.half_width * j / (o.n_across - 1) : 0.0;
      const Point2 p = q + ds * along + (th / n) * normal;
      band.points.push_back(p);
      band.margin = std::min(band.margin, ridge_margin(tau, spec, p.x, p.y, t));
    }
  }
  if (band.margin < o.min_margin) {
    throw Error(ErrorCode::BandOutsideRegion, spec.label + " band at t=" + std::to_string(t) + " has margin " +
                                                  std::to_string(band.margin) + " < " +
                                                  std::to_string(o.min_margin));
  }
  return band;
}

}  // namespace

ArmCatalog arm_catalog(const Scenario& scenario) {
  const CaseTable& table = case_table(scenario.kase);
  const TauFunction tau = scenario.tau();
  ArmCatalog cat;
  for (int i = 0; i < 4; ++i) {
    ArmSpec b = make_arm(scenario, tau, table.before[i], ArmEpoch::Before, false);
    ArmSpec a = make_arm(scenario, tau, table.after[i], ArmEpoch::After, false);
    if (same_arm(a, b)) {
      a.epoch = b.epoch = ArmEpoch::Both;
      b.region = a.region = "t->+-inf, " + std::string(1, a.axis) + "->" + (a.outward > 0 ? "+inf" : "-inf");
    }
    cat.before.push_back(b);
    cat.after.push_back(a);
  }
  cat.stem_before = make_arm(scenario, tau, table.stem_before, ArmEpoch::Before, true);
  cat.stem_after = make_arm(scenario, tau, table.stem_after, ArmEpoch::After, true);
  return cat;
}

double arm_value(const ArmSpec& spec, Component which, double x, double y, double t) {
  const double c = std::cosh(0.5 * spec.theta(x, y, t));
  const double sech2 = 1.0 / (c * c);
  return (which == Component::U ? spec.amplitude_u() : spec.amplitude_v()) * sech2;
}

TrajectoryLine crest_line(const ArmSpec& spec, double t) {
  TrajectoryLine line;
  line.label = spec.label;
  line.a = spec.theta.cx;
  line.b = spec.theta.cy;
  line.c = spec.theta.ct * t + spec.theta.c0;
  line.c_rate = spec.theta.ct;
  line.t = t;
  return line;
}

double ridge_margin(const TauFunction& tau, const ArmSpec& spec, double x, double y, double t) {
  double pair = 0, other = -std::numeric_limits<double>::infinity();
  for (const Term& term : tau.terms()) {
    const double lw = term.log_coeff + term.phase(x, y, t);
    if (term.subset == spec.lower || term.subset == spec.upper) {
      pair += 0.5 * lw;
    } else {
      other = std::max(other, lw);
    }
  }
  return pair - other;
}

Band designated_band(const TauFunction& tau, const ArmSpec& spec, double t, const BandOptions& options) {
  if (spec.stem) throw Error(ErrorCode::PreconditionViolated, "stems have no far-field band");
  const TrajectoryLine line = crest_line(spec, t);
  const Point2 d = line.direction();
  const double comp = spec.axis == 'x' ? d.x : d.y;
  const double sgn = comp * spec.outward > 0 ? 1.0 : -1.0;

  // Outward coordinate sigma = sgn * s; scan for the run of margin >= target containing the maximum.
  const double L = 60 * std::abs(t) + 400;
  const double step = 0.25;
  const int n = static_cast<int>(2 * L / step) + 1;
  std::vector<double> m(static_cast<std::size_t>(n));
  int arg = 0;
  for (int i = 0; i < n; ++i) {
    const Point2 p = line.at(sgn * (-L + i * step));
    m[static_cast<std::size_t>(i)] = ridge_margin(tau, spec, p.x, p.y, t);
    if (m[static_cast<std::size_t>(i)] > m[static_cast<std::size_t>(arg)]) arg = i;
  }
  const double target = options.target_factor * std::abs(t);
  double sigma;
  if (m[static_cast<std::size_t>(arg)] < target) {
    sigma = -L + arg * step;
  } else {
    int lo = arg, hi = arg;
    while (lo > 0 && m[static_cast<std::size_t>(lo - 1)] >= target) --lo;
    while (hi + 1 < n && m[static_cast<std::size_t>(hi + 1)] >= target) ++hi;
    const double s_lo = -L + lo * step, s_hi = -L + hi * step;
    sigma = s_hi - s_lo >= 4 ? s_lo + 2 : 0.5 * (s_lo + s_hi);
  }
  return band_at(tau, spec, t, line, sgn * sigma, options);
}

Band band_from_y_range(const TauFunction& tau, const ArmSpec& spec, double t, double y0, double y1,
                       const BandOptions& options) {
  const TrajectoryLine line = crest_line(spec, t);
  if (std::abs(line.a) < 1e-14) throw Error(ErrorCode::PreconditionViolated, "crest line is horizontal");
  const double ya = std::min(y0, y1), yb = std::max(y0, y1);
  auto s_of_y = [&](double y) { return line.param_of({-(line.b * y + line.c) / line.a, y}); };
  const double sa = s_of_y(ya), sb = s_of_y(yb);
  BandOptions o = options;
  o.half_length = 0.5 * std::abs(sb - sa);
  return band_at(tau, spec, t, line, 0.5 * (sa + sb), o);
}

double arm_deviation(const TauFunction& tau, const ArmSpec& spec, const Band& band) {
  double worst = 0;
  for (const Point2& p : band.points) {
    const Fields f = fields(tau, p.x, p.y, band.t);
    worst = std::max({worst, std::abs(f.u - arm_value(spec, Component::U, p.x, p.y, band.t)),
                      std::abs(f.v - arm_value(spec, Component::V, p.x, p.y, band.t))});
  }
  return worst;
}

ArmSpec with_phase_shift(const ArmSpec& spec, double shift) {
  ArmSpec out = spec;
  out.theta.c0 += shift - spec.phase_shift;
  out.phase_shift = shift;
  return out;
}

}  // namespace annv
