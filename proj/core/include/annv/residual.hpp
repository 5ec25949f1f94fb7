#pragma once

#include <span>
#include <vector>

#include "annv/tau.hpp"

namespace annv {

// Residuals of u_t + u_xxx = 3(uv)_x and u_x = v_y with u = -2 g_xy, v = -2 g_xx.
struct ResidualSample {
  Point3 point;
  double r1 = 0;  // evolution equation
  double r2 = 0;  // constraint
};

ResidualSample residual_at(const TauFunction& tau, double x, double y, double t);

struct GridBox {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

struct ResidualSummary {
  double max = 0;   // max over points of max(|r1|, |r2|)
  double mean = 0;
  Point3 argmax;    // first point (t, then y, then x order) attaining max
  std::size_t count = 0;
};

// resolution points per axis on each time slice; a degenerate axis collapses to one point.
// Rows are distributed over `threads` workers (0 = hardware concurrency); the result
// does not depend on the thread count.
ResidualSummary residual_sweep(const TauFunction& tau, const GridBox& box, std::span<const double> times, int resolution,
                               unsigned threads = 0);

// Evolution residual with every derivative replaced by central differences of the
// field values at step h (u_t, u_x, v_x second order; u_xxx by the five-point stencil).
double evolution_residual_fd(const TauFunction& tau, double x, double y, double t, double h);

// Observed order log2(e(h1)/e(h2)) for consecutive pairs of steps, where e(h) is the
// distance between the finite-difference and analytic evolution residuals.
std::vector<double> fd_observed_orders(const TauFunction& tau, const Point3& point, std::span<const double> steps);

}  // namespace annv
