#pragma once

#include <string>
#include <vector>

#include "annv/export.hpp"
#include "annv/geometry.hpp"

namespace annv {

// Crest lines expected at time t: every arm and stem of both epochs.
std::vector<TrajectoryLine> predicted_lines(const Scenario& scenario, double t);

struct CrestOptions {
  double threshold = -0.05;       // only minima of v below this count
  double exclusion_radius = 12;   // ignore crests this close to where predicted lines cross
  std::size_t min_count = 50;     // fewer surviving detections fails the check
};

struct DetectedCrest {
  Point2 at;
  double v = 0;
  double distance = 0;  // to the nearest predicted line
  std::string nearest;
};

struct FigureProxyResult {
  double t = 0;
  double spacing = 0;
  std::size_t detected = 0;  // minima found before exclusion
  std::size_t checked = 0;   // minima outside every exclusion disc
  double max_distance = 0;
  std::vector<DetectedCrest> outliers;  // checked crests farther than one spacing
  bool pass = false;
};

// Grid points that are strict minima of v along x or along y.
std::vector<DetectedCrest> detect_crests(const std::vector<FieldRow>& rows, double threshold);

// rows must be a square row-major grid of a single time slice, as written by field_grid.
FigureProxyResult figure_proxy_check(const Scenario& scenario, const std::vector<FieldRow>& rows,
                                     const CrestOptions& options = {});

}  // namespace annv
