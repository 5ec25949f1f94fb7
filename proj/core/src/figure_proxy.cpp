#include "annv/figure_proxy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "annv/asymptotics.hpp"
#include "annv/errors.hpp"

namespace annv {

std::vector<TrajectoryLine> predicted_lines(const Scenario& scenario, double t) {
  const ArmCatalog cat = arm_catalog(scenario);
  std::vector<TrajectoryLine> lines;
  auto add = [&](const ArmSpec& a, const char* what) {
    lines.push_back(crest_line(a, t));
    lines.back().label = a.label + " (" + what + to_string(a.epoch) + ")";
  };
  for (const ArmSpec& a : cat.before) add(a, "");
  for (const ArmSpec& a : cat.after) {
    if (a.epoch != ArmEpoch::Both) add(a, "");
  }
  add(cat.stem_before, "stem, ");
  add(cat.stem_after, "stem, ");
  return lines;
}

namespace {

struct GridShape {
  std::size_t nx = 0, ny = 0;
  double spacing = 0;
};

GridShape shape_of(const std::vector<FieldRow>& rows) {
  GridShape g;
  if (rows.empty()) throw Error(ErrorCode::PreconditionViolated, "empty grid");
  while (g.nx < rows.size() && rows[g.nx].y == rows[0].y) ++g.nx;
  if (rows.size() % g.nx != 0) throw Error(ErrorCode::PreconditionViolated, "grid is not rectangular");
  g.ny = rows.size() / g.nx;
  if (g.nx < 3 || g.ny < 3) throw Error(ErrorCode::PreconditionViolated, "grid needs at least 3 points per axis");
  g.spacing = std::max(std::abs(rows[1].x - rows[0].x), std::abs(rows[g.nx].y - rows[0].y));
  return g;
}

}  // namespace

std::vector<DetectedCrest> detect_crests(const std::vector<FieldRow>& rows, double threshold) {
  const GridShape g = shape_of(rows);
  auto v = [&](std::size_t i, std::size_t j) { return rows[j * g.nx + i].v; };
  constexpr double strict = 1e-9;
  std::vector<DetectedCrest> out;
  for (std::size_t j = 1; j + 1 < g.ny; ++j) {
    for (std::size_t i = 1; i + 1 < g.nx; ++i) {
      const double c = v(i, j);
      if (!(c < threshold)) continue;
      const bool along_x = c < v(i - 1, j) - strict && c < v(i + 1, j) - strict;
      const bool along_y = c < v(i, j - 1) - strict && c < v(i, j + 1) - strict;
      if (along_x || along_y) out.push_back({{rows[j * g.nx + i].x, rows[j * g.nx + i].y}, c, 0, {}});
    }
  }
  return out;
}

FigureProxyResult figure_proxy_check(const Scenario& scenario, const std::vector<FieldRow>& rows,
                                     const CrestOptions& options) {
  const GridShape g = shape_of(rows);
  FigureProxyResult res;
  res.t = rows.front().t;
  res.spacing = g.spacing;

  const std::vector<TrajectoryLine> lines = predicted_lines(scenario, res.t);
  std::vector<Point2> crossings;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      try {
        crossings.push_back(intersect(lines[a], lines[b]));
      } catch (const Error&) {
        // parallel crest lines never meet
      }
    }
  }

  std::vector<DetectedCrest> found = detect_crests(rows, options.threshold);
  res.detected = found.size();
  for (DetectedCrest& c : found) {
    const bool near_crossing = std::any_of(crossings.begin(), crossings.end(), [&](Point2 q) {
      return distance(q, c.at) < options.exclusion_radius;
    });
    if (near_crossing) continue;
    c.distance = std::numeric_limits<double>::infinity();
    for (const TrajectoryLine& l : lines) {
      const double d = std::abs(l.eval(c.at)) / l.norm();
      if (d < c.distance) {
        c.distance = d;
        c.nearest = l.label;
      }
    }
    ++res.checked;
    res.max_distance = std::max(res.max_distance, c.distance);
    if (c.distance > g.spacing) res.outliers.push_back(c);
  }
  res.pass = res.outliers.empty() && res.checked >= options.min_count;
  return res;
}

}  // namespace annv
