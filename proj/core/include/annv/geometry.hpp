#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annv/scenario.hpp"

namespace annv {

struct Point2 {
  double x = 0, y = 0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
double distance(Point2 a, Point2 b);

// a x + b y + c = 0 at a fixed t; c changes at rate c_rate in t.
struct TrajectoryLine {
  std::string label;
  double a = 0, b = 0, c = 0;
  double c_rate = 0;
  double t = 0;

  double eval(Point2 p) const { return a * p.x + b * p.y + c; }
  double norm() const;
  Point2 foot() const;       // closest point to the origin
  Point2 direction() const;  // unit tangent (-b, a)/|(a,b)|
  Point2 at(double s) const { return foot() + s * direction(); }
  double param_of(Point2 p) const;  // arclength coordinate of the projection of p
};

// Labels: "l1", "l1-2", "l1-2-3", "l1+2+3", with a leading '^' for the hatted
// lines that carry ln a23 (l^2, l^3: +ln a23; l^{1-2-3}: -ln a23; l^{1+2+3}: +ln a23).
struct LineLabel {
  std::vector<int> eps;  // one sign per soliton
  bool hat = false;
};
LineLabel parse_line_label(std::string_view label, std::size_t n_solitons);
std::vector<std::string> valid_line_labels(Case kase);

TrajectoryLine trajectory_line(std::string_view label, const Scenario& scenario, double t);
TrajectoryLine line_from_signs(const Scenario& scenario, const std::vector<int>& eps, double shift, double t,
                               std::string label = {});

// Throws ParallelLines when the normalized determinant is below 1e-12.
Point2 intersect(const TrajectoryLine& l1, const TrajectoryLine& l2);

enum class Epoch { Before, After };
const char* to_string(Epoch e);

struct GeometryOptions {
  double t_min = 5.0;
  bool oracle_mode = false;  // evaluate closed forms at any t
};

struct StemEndpoints {
  std::string first_name, second_name;
  Point2 first, second;
  double t = 0;
  Point2 midpoint() const { return 0.5 * (first + second); }
};

struct StemDefinition {
  std::string stem_label;
  std::string first_name, second_name;
  std::array<std::string, 2> first_lines, second_lines;
};
const StemDefinition& stem_definition(Case kase, Epoch epoch);

// Closed-form endpoints of the (t -> -inf, t -> +inf) stems.
std::pair<StemEndpoints, StemEndpoints> stem_endpoints_closed_form(const Scenario& scenario, double t,
                                                                   const GeometryOptions& options = {});
StemEndpoints stem_endpoints_closed_form(const Scenario& scenario, Epoch epoch, double t,
                                         const GeometryOptions& options = {});

// Same points from intersect() on the defining line pairs.
StemEndpoints stem_endpoints_oracle(const Scenario& scenario, Epoch epoch, double t);

// Weak case 2: the second before-collision endpoint evaluated with the reference closed
// expression, whose t and ln a23 signs disagree with its defining intersection.
Point2 reference_n_endpoint(const Scenario& scenario, double t);

// |alpha t + beta| * scale.
struct AffineLength {
  double alpha = 0, beta = 0, scale = 1;
  double at(double t) const;
  double slope() const;
};
AffineLength stem_length_formula(const Scenario& scenario, Epoch epoch);

struct StemReport {
  Epoch epoch = Epoch::Before;
  std::string stem_label;
  StemEndpoints endpoints;
  double length_formula = 0;
  double length_distance = 0;
  double slope = 0;        // |d length/dt| from the formula's t-coefficient
  double slope_fd = 0;     // |d distance/dt| by central difference
  double dlength_dt = 0;   // signed, at the given t
  Point2 midpoint;
  Point2 first_velocity, second_velocity;        // t-coefficients of the closed forms
  Point2 first_velocity_fd, second_velocity_fd;  // central differences in t
};

StemReport stem_report(const Scenario& scenario, Epoch epoch, double t, const GeometryOptions& options = {});

// Max pairwise distance of the three pairwise intersections.
double concurrency_check(const Scenario& scenario, double t, const std::array<std::string, 3>& labels);
std::vector<std::array<std::string, 3>> concurrent_triples(Case kase, Epoch epoch);

}  // namespace annv
