#include "annv/residual.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "annv/errors.hpp"
#include "annv/log_derivative.hpp"

namespace annv {

ResidualSample residual_at(const TauFunction& tau, double x, double y, double t) {
  constexpr Assignment as = Assignment::XY_XX;
  Moments m(tau, x, y, t, 5);
  const double u = component_derivative(m, as, Component::U, {});
  const double v = component_derivative(m, as, Component::V, {});
  const double u_t = component_derivative(m, as, Component::U, {0, 0, 1});
  const double u_x = component_derivative(m, as, Component::U, {1, 0, 0});
  const double u_xxx = component_derivative(m, as, Component::U, {3, 0, 0});
  const double v_x = component_derivative(m, as, Component::V, {1, 0, 0});
  const double v_y = component_derivative(m, as, Component::V, {0, 1, 0});
  return {{x, y, t}, u_t + u_xxx - 3.0 * (u_x * v + u * v_x), u_x - v_y};
}

namespace {

std::vector<double> axis(double a, double b, int n) {
  if (a == b) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return out;
}

struct RowResult {
  double max = -1;
  double sum = 0;
  Point3 argmax;
};

}  // namespace

ResidualSummary residual_sweep(const TauFunction& tau, const GridBox& box, std::span<const double> times, int resolution,
                               unsigned threads) {
  if (resolution < 2) throw Error(ErrorCode::PreconditionViolated, "resolution must be at least 2");
  if (times.empty()) throw Error(ErrorCode::PreconditionViolated, "at least one time slice is required");
  const std::vector<double> xs = axis(box.x0, box.x1, resolution);
  const std::vector<double> ys = axis(box.y0, box.y1, resolution);
  const std::size_t rows = times.size() * ys.size();
  std::vector<RowResult> results(rows);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t row = first; row < rows; row += stride) {
      const double t = times[row / ys.size()];
      const double y = ys[row % ys.size()];
      RowResult r;
      for (double x : xs) {
        const ResidualSample s = residual_at(tau, x, y, t);
        const double e = std::max(std::abs(s.r1), std::abs(s.r2));
        r.sum += e;
        if (e > r.max) {
          r.max = e;
          r.argmax = {x, y, t};
        }
      }
      results[row] = r;
    }
  };

  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, rows));
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(work, i, n);
    for (auto& th : pool) th.join();
  }

  ResidualSummary summary;
  summary.max = -1;
  double sum = 0;
  for (const RowResult& r : results) {
    sum += r.sum;
    if (r.max > summary.max) {
      summary.max = r.max;
      summary.argmax = r.argmax;
    }
  }
  summary.count = rows * xs.size();
  summary.mean = sum / static_cast<double>(summary.count);
  return summary;
}

double evolution_residual_fd(const TauFunction& tau, double x, double y, double t, double h) {
  auto u = [&](double xx, double yy, double tt) { return field_value(tau, Component::U, xx, yy, tt); };
  auto v = [&](double xx, double yy, double tt) { return field_value(tau, Component::V, xx, yy, tt); };
  const double u0 = u(x, y, t);
  const double v0 = v(x, y, t);
  const double u_t = (u(x, y, t + h) - u(x, y, t - h)) / (2 * h);
  const double u_x = (u(x + h, y, t) - u(x - h, y, t)) / (2 * h);
  const double v_x = (v(x + h, y, t) - v(x - h, y, t)) / (2 * h);
  const double u_xxx =
      (u(x + 2 * h, y, t) - 2 * u(x + h, y, t) + 2 * u(x - h, y, t) - u(x - 2 * h, y, t)) / (2 * h * h * h);
  return u_t + u_xxx - 3.0 * (u_x * v0 + u0 * v_x);
}

std::vector<double> fd_observed_orders(const TauFunction& tau, const Point3& point, std::span<const double> steps) {
  const double exact = residual_at(tau, point.x, point.y, point.t).r1;
  std::vector<double> errors;
  for (double h : steps) errors.push_back(std::abs(evolution_residual_fd(tau, point.x, point.y, point.t, h) - exact));
  std::vector<double> orders;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    orders.push_back(std::log(errors[i - 1] / errors[i]) / std::log(steps[i - 1] / steps[i]));
  }
  return orders;
}

}  // namespace annv
