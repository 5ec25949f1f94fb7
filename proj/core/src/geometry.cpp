#include "annv/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "annv/errors.hpp"

namespace annv {

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double TrajectoryLine::norm() const { return std::hypot(a, b); }

Point2 TrajectoryLine::foot() const {
  const double n2 = a * a + b * b;
  return {-c * a / n2, -c * b / n2};
}

Point2 TrajectoryLine::direction() const {
  const double n = norm();
  return {-b / n, a / n};
}

double TrajectoryLine::param_of(Point2 p) const {
  const Point2 d = direction();
  const Point2 q = p - foot();
  return q.x * d.x + q.y * d.y;
}

const char* to_string(Epoch e) { return e == Epoch::Before ? "before" : "after"; }

LineLabel parse_line_label(std::string_view label, std::size_t n_solitons) {
  auto fail = [&]() { return Error(ErrorCode::UnknownLabel, "cannot parse line label '" + std::string(label) + "'"); };
  LineLabel out;
  out.eps.assign(n_solitons, 0);
  std::string_view s = label;
  if (!s.empty() && s.front() == '^') {
    out.hat = true;
    s.remove_prefix(1);
  }
  if (s.empty() || s.front() != 'l') throw fail();
  s.remove_prefix(1);
  int sign = 1;
  bool first = true;
  while (!s.empty()) {
    if (!first) {
      if (s.front() == '+') {
        sign = 1;
      } else if (s.front() == '-') {
        sign = -1;
      } else {
        throw fail();
      }
      s.remove_prefix(1);
    }
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) throw fail();
    const int idx = s.front() - '0';
    s.remove_prefix(1);
    if (idx < 1 || static_cast<std::size_t>(idx) > n_solitons || out.eps[static_cast<std::size_t>(idx - 1)] != 0) {
      throw fail();
    }
    out.eps[static_cast<std::size_t>(idx - 1)] = sign;
    first = false;
  }
  if (first) throw fail();
  return out;
}

std::vector<std::string> valid_line_labels(Case kase) {
  if (is_weak(kase)) return {"l1", "l2", "l3", "^l2", "^l3", "l1-2", "l1-3", "^l1-2-3"};
  if (is_strong(kase)) return {"l1", "l2", "l3", "^l2", "^l3", "l1+2", "l1+3", "^l1+2+3"};
  return {};
}

TrajectoryLine line_from_signs(const Scenario& scenario, const std::vector<int>& eps, double shift, double t,
                               std::string label) {
  const SolitonParams& pr = scenario.params;
  TrajectoryLine line;
  line.label = std::move(label);
  line.t = t;
  for (std::size_t j = 0; j < eps.size() && j < pr.n(); ++j) {
    if (eps[j] == 0) continue;
    const double e = eps[j];
    const double k3 = pr.k[j] * pr.k[j] * pr.k[j];
    line.a += e * pr.k[j];
    line.b += e * pr.p[j];
    line.c += e * (-k3 * t + pr.xi0[j]);
    line.c_rate += -e * k3;
  }
  line.c += shift;
  if (line.a == 0 && line.b == 0) {
    throw Error(ErrorCode::UnknownLabel, "line '" + line.label + "' has a zero normal vector");
  }
  return line;
}

TrajectoryLine trajectory_line(std::string_view label, const Scenario& scenario, double t) {
  if (scenario.kase != Case::Custom) {
    const auto valid = valid_line_labels(scenario.kase);
    if (std::find(valid.begin(), valid.end(), label) == valid.end()) {
      throw Error(ErrorCode::UnknownLabel,
                  "label '" + std::string(label) + "' is not used in case " + to_string(scenario.kase));
    }
  }
  const LineLabel parsed = parse_line_label(label, scenario.params.n());
  double shift = 0;
  if (parsed.hat) {
    if (scenario.params.n() < 3 || !scenario.a23 || !scenario.a23->is_finite_positive()) {
      throw Error(ErrorCode::UnknownLabel, "hatted label needs a finite positive a23");
    }
    const int s = parsed.eps[1] != 0 ? parsed.eps[1] : parsed.eps[2];
    if (s == 0) throw Error(ErrorCode::UnknownLabel, "hatted label must involve soliton 2 or 3");
    shift = s * std::log(scenario.a23->value);
  }
  return line_from_signs(scenario, parsed.eps, shift, t, std::string(label));
}

Point2 intersect(const TrajectoryLine& l1, const TrajectoryLine& l2) {
  const double n1 = l1.norm(), n2 = l2.norm();
  const double a1 = l1.a / n1, b1 = l1.b / n1, c1 = l1.c / n1;
  const double a2 = l2.a / n2, b2 = l2.b / n2, c2 = l2.c / n2;
  const double det = a1 * b2 - a2 * b1;
  if (std::abs(det) <= 1e-12) {
    throw Error(ErrorCode::ParallelLines, "lines '" + l1.label + "' and '" + l2.label + "' are parallel");
  }
  return {(b1 * c2 - b2 * c1) / det, (a2 * c1 - a1 * c2) / det};
}

const StemDefinition& stem_definition(Case kase, Epoch epoch) {
  static const StemDefinition w1_before{"l1-2", "E", "F", {"l1", "l2"}, {"^l3", "^l1-2-3"}};
  static const StemDefinition w1_after{"l1-3", "G", "H", {"l1", "l3"}, {"^l2", "^l1-2-3"}};
  static const StemDefinition w2_before{"l1-2", "M", "N", {"l1", "l2"}, {"^l3", "^l1-2-3"}};
  static const StemDefinition w2_after{"l1-3", "P", "Q", {"l1", "l3"}, {"^l2", "^l1-2-3"}};
  static const StemDefinition st{"^l1+2+3", "S", "T", {"l1+2", "^l3"}, {"^l2", "l1+3"}};
  static const StemDefinition xy{"l1", "X", "Y", {"l1", "l2"}, {"l1", "l3"}};
  const bool before = epoch == Epoch::Before;
  switch (kase) {
    case Case::Weak1: return before ? w1_before : w1_after;
    case Case::Weak2: return before ? w2_before : w2_after;
    case Case::Strong1: return before ? st : xy;
    case Case::Strong2: return before ? xy : st;
    case Case::Custom: break;
  }
  throw Error(ErrorCode::UnclassifiedScenario, "stem geometry needs a resonant case");
}

namespace {

struct Vals {
  double k1, k2, k3, p1, p2, p3, x1, x2, x3, la;
};

Vals vals(const Scenario& s) {
  if (s.kase == Case::Custom) throw Error(ErrorCode::UnclassifiedScenario, "stem geometry needs a resonant case");
  const SolitonParams& q = s.params;
  return {q.k[0], q.k[1], q.k[2], q.p[0], q.p[1], q.p[2], q.xi0[0], q.xi0[1], q.xi0[2], std::log(s.a23->value)};
}

// Closed forms, any t.
StemEndpoints closed_form(const Scenario& s, Epoch epoch, double t) {
  const Vals v = vals(s);
  const auto [k1, k2, k3, p1, p2, p3, x1, x2, x3, la] = v;
  const StemDefinition& def = stem_definition(s.kase, epoch);
  StemEndpoints out{def.first_name, def.second_name, {}, {}, t};
  const double h1 = -k1 * k1 * k1 * t + x1, h2 = -k2 * k2 * k2 * t + x2, h3 = -k3 * k3 * k3 * t + x3;

  auto st = [&]() {
    const double d1 = p3 * (k1 + k2) - k3 * (p1 + p2);
    const double d2 = p2 * (k1 + k3) - k2 * (p1 + p3);
    out.first = {((p1 + p2) * (h3 + la) - p3 * (h1 + h2)) / d1, (-(k1 + k2) * (h3 + la) + k3 * (h1 + h2)) / d1};
    out.second = {((p1 + p3) * (h2 + la) - p2 * (h1 + h3)) / d2, (-(k1 + k3) * (h2 + la) + k2 * (h1 + h3)) / d2};
  };
  auto xy = [&]() {
    const double d1 = p2 * k1 - p1 * k2;
    const double d2 = p3 * k1 - p1 * k3;
    out.first = {(p1 * h2 - p2 * h1) / d1, (-k1 * h2 + k2 * h1) / d1};
    out.second = {(p1 * h3 - p3 * h1) / d2, (-k1 * h3 + k3 * h1) / d2};
  };

  switch (s.kase) {
    case Case::Weak1:
      if (epoch == Epoch::Before) {
        const double x = (k1 * k1 + k1 * k2 + k2 * k2) * t - (x1 - x2) / (k1 - k2);
        out.first = {x, -k1 * k2 * (k1 + k2) * t / p1 + (k2 * x1 - k1 * x2) / (p1 * (k1 - k2))};
        out.second = {x, -(k1 * k2 * (k1 + k2) * t + la + x3) / p3 + k1 * (x1 - x2) / (p3 * (k1 - k2))};
      } else {
        const double y = -(x1 - x3) / (p1 - p3);
        out.first = {k1 * k1 * t - (p1 * x3 - p3 * x1) / (k1 * (p1 - p3)), y};
        out.second = {k2 * k2 * t - la / k2 + (p1 * (x1 - x2 - x3) + p3 * x2) / (k2 * (p1 - p3)), y};
      }
      break;
    case Case::Weak2:
      if (epoch == Epoch::Before) {
        const double y = -(x1 - x2) / (p1 - p2);
        out.first = {k1 * k1 * t - (p1 * x2 - p2 * x1) / (k1 * (p1 - p2)), y};
        out.second = {k3 * k3 * t - (la + x3) / k3 + p3 * (x1 - x2) / (k3 * (p1 - p2)), y};
      } else {
        const double x = (k1 * k1 + k1 * k3 + k3 * k3) * t - (x1 - x3) / (k1 - k3);
        out.first = {x, -k1 * k3 * (k1 + k3) * t / p1 + (k3 * x1 - k1 * x3) / (p1 * (k1 - k3))};
        out.second = {x, -(k1 * k3 * (k1 + k3) * t + la + x2) / p2 + k1 * (x1 - x3) / (p2 * (k1 - k3))};
      }
      break;
    case Case::Strong1:
      if (epoch == Epoch::Before) st(); else xy();
      break;
    case Case::Strong2:
      if (epoch == Epoch::Before) xy(); else st();
      break;
    case Case::Custom: break;
  }
  return out;
}

void gate(double t, const GeometryOptions& options) {
  if (!options.oracle_mode && std::abs(t) < options.t_min) {
    throw Error(ErrorCode::TooCloseToReconnection,
                "|t| = " + std::to_string(std::abs(t)) + " < " + std::to_string(options.t_min));
  }
}

}  // namespace

std::pair<StemEndpoints, StemEndpoints> stem_endpoints_closed_form(const Scenario& scenario, double t,
                                                                   const GeometryOptions& options) {
  gate(t, options);
  return {closed_form(scenario, Epoch::Before, t), closed_form(scenario, Epoch::After, t)};
}

StemEndpoints stem_endpoints_closed_form(const Scenario& scenario, Epoch epoch, double t,
                                         const GeometryOptions& options) {
  gate(t, options);
  return closed_form(scenario, epoch, t);
}

StemEndpoints stem_endpoints_oracle(const Scenario& scenario, Epoch epoch, double t) {
  const StemDefinition& def = stem_definition(scenario.kase, epoch);
  auto meet = [&](const std::array<std::string, 2>& pair) {
    return intersect(trajectory_line(pair[0], scenario, t), trajectory_line(pair[1], scenario, t));
  };
  return {def.first_name, def.second_name, meet(def.first_lines), meet(def.second_lines), t};
}

Point2 reference_n_endpoint(const Scenario& s, double t) {
  if (s.kase != Case::Weak2) throw Error(ErrorCode::PreconditionViolated, "N is a weak case 2 endpoint");
  const auto [k1, k2, k3, p1, p2, p3, x1, x2, x3, la] = vals(s);
  (void)k1;
  (void)k2;
  (void)p3;
  return {-k3 * k3 * t + la / k3 - (p1 * (x1 - x2 - x3) + p2 * x3) / (k3 * (p1 - p2)), -(x1 - x3) / (p1 - p2)};
}

double AffineLength::at(double t) const { return std::abs(alpha * t + beta) * scale; }
double AffineLength::slope() const { return std::abs(alpha) * scale; }

AffineLength stem_length_formula(const Scenario& s, Epoch epoch) {
  const auto [k1, k2, k3, p1, p2, p3, x1, x2, x3, la] = vals(s);
  AffineLength out;
  switch (s.kase) {
    case Case::Weak1: {
      out.alpha = k1 * k2 * (p1 - p3) * (k1 * k1 - k2 * k2);
      const double rest = -k1 * p1 * (x1 - x2 - x3) - k1 * p3 * x2 - k2 * p1 * x3 + k2 * p3 * x1;
      if (epoch == Epoch::Before) {
        out.beta = p1 * (k1 - k2) * la + rest;
        out.scale = 1.0 / std::abs(p1 * p3 * (k1 - k2));
      } else {
        out.beta = k1 * (p1 - p3) * la + rest;
        out.scale = 1.0 / std::abs(k1 * k2 * (p1 - p3));
      }
      break;
    }
    case Case::Weak2: {
      out.alpha = k1 * k3 * (p1 - p2) * (k1 * k1 - k3 * k3);
      const double rest = -k1 * p1 * (x1 - x2 - x3) - k1 * p2 * x3 - k3 * p1 * x2 + k3 * p2 * x1;
      if (epoch == Epoch::After) {
        out.beta = p1 * (k1 - k3) * la + rest;
        out.scale = 1.0 / std::abs(p1 * p2 * (k1 - k3));
      } else {
        out.beta = k1 * (p1 - p2) * la + rest;
        out.scale = 1.0 / std::abs(k1 * k3 * (p1 - p2));
      }
      break;
    }
    case Case::Strong1:
    case Case::Strong2: {
      const bool is_st = (s.kase == Case::Strong1) == (epoch == Epoch::Before);
      const double c1 = k2 * p3 - k3 * p2, c2 = k3 * p1 - k1 * p3, c3 = k1 * p2 - k2 * p1;
      // h_j = -k_j^3 t + xi0_j
      out.alpha = -(c1 * k1 * k1 * k1 + c2 * k2 * k2 * k2 + c3 * k3 * k3 * k3);
      if (is_st) {
        out.beta = c1 * (x1 - la) + c2 * (x2 + la) + c3 * (x3 + la);
        const double d1 = p3 * (k1 + k2) - k3 * (p1 + p2);
        const double d2 = p2 * (k1 + k3) - k2 * (p1 + p3);
        out.scale = std::hypot(k1 + k2 + k3, p1 + p2 + p3) / std::abs(d1 * d2);
      } else {
        out.beta = c1 * x1 + c2 * x2 + c3 * x3;
        out.scale = std::hypot(k1, p1) / std::abs((k1 * p2 - k2 * p1) * (k1 * p3 - k3 * p1));
      }
      break;
    }
    case Case::Custom: break;
  }
  return out;
}

StemReport stem_report(const Scenario& scenario, Epoch epoch, double t, const GeometryOptions& options) {
  StemReport r;
  r.epoch = epoch;
  r.stem_label = stem_definition(scenario.kase, epoch).stem_label;
  r.endpoints = stem_endpoints_closed_form(scenario, epoch, t, options);
  const AffineLength len = stem_length_formula(scenario, epoch);
  r.length_formula = len.at(t);
  r.length_distance = distance(r.endpoints.first, r.endpoints.second);
  r.slope = len.slope();
  const double sign = (len.alpha * t + len.beta) >= 0 ? 1.0 : -1.0;
  r.dlength_dt = sign * len.alpha * len.scale;
  r.midpoint = r.endpoints.midpoint();

  const StemEndpoints at0 = closed_form(scenario, epoch, 0.0);
  const StemEndpoints at1 = closed_form(scenario, epoch, 1.0);
  r.first_velocity = at1.first - at0.first;
  r.second_velocity = at1.second - at0.second;

  constexpr double dt = 1e-3;
  const StemEndpoints lo = closed_form(scenario, epoch, t - dt);
  const StemEndpoints hi = closed_form(scenario, epoch, t + dt);
  r.first_velocity_fd = (1.0 / (2 * dt)) * (hi.first - lo.first);
  r.second_velocity_fd = (1.0 / (2 * dt)) * (hi.second - lo.second);
  r.slope_fd = std::abs(distance(hi.first, hi.second) - distance(lo.first, lo.second)) / (2 * dt);
  return r;
}

double concurrency_check(const Scenario& scenario, double t, const std::array<std::string, 3>& labels) {
  const TrajectoryLine a = trajectory_line(labels[0], scenario, t);
  const TrajectoryLine b = trajectory_line(labels[1], scenario, t);
  const TrajectoryLine c = trajectory_line(labels[2], scenario, t);
  const Point2 ab = intersect(a, b), bc = intersect(b, c), ca = intersect(c, a);
  return std::max({distance(ab, bc), distance(bc, ca), distance(ca, ab)});
}

std::vector<std::array<std::string, 3>> concurrent_triples(Case kase, Epoch epoch) {
  const StemDefinition& def = stem_definition(kase, epoch);
  if (def.first_name == "X") {
    // X and Y already sit on the stem line l1; the third concurrent line is the sum line.
    return {{"l1", "l2", "l1+2"}, {"l1", "l3", "l1+3"}};
  }
  return {{def.first_lines[0], def.first_lines[1], def.stem_label},
          {def.second_lines[0], def.second_lines[1], def.stem_label}};
}

}  // namespace annv
