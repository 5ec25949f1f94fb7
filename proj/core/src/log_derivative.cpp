#include "annv/log_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "annv/errors.hpp"

namespace annv {
namespace {

MultiIndex plus(MultiIndex a, MultiIndex b) { return {a.ox + b.ox, a.oy + b.oy, a.ot + b.ot}; }

void check_order(MultiIndex alpha) {
  if (alpha.ox < 0 || alpha.oy < 0 || alpha.ot < 0 || alpha.order() > kMaxLogOrder) {
    throw Error(ErrorCode::OrderTooHigh,
                "log derivative order " + std::to_string(alpha.order()) + " > " + std::to_string(kMaxLogOrder));
  }
}

DerivativePolynomial differentiate(const DerivativePolynomial& poly, MultiIndex e) {
  std::map<std::vector<MultiIndex>, double> acc;
  for (const Monomial& mono : poly) {
    for (std::size_t i = 0; i < mono.factors.size(); ++i) {
      std::vector<MultiIndex> rest = mono.factors;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));

      std::vector<MultiIndex> raised = rest;
      raised.push_back(plus(mono.factors[i], e));
      std::sort(raised.begin(), raised.end());
      acc[raised] += mono.coeff;

      std::vector<MultiIndex> product = rest;
      product.push_back(mono.factors[i]);
      product.push_back(e);
      std::sort(product.begin(), product.end());
      acc[product] -= mono.coeff;
    }
  }
  DerivativePolynomial out;
  for (auto& [factors, coeff] : acc) {
    if (coeff != 0) out.push_back(Monomial{coeff, factors});
  }
  return out;
}

constexpr int kSide = kMaxLogOrder + 1;
int slot(MultiIndex a) { return (a.ox * kSide + a.oy) * kSide + a.ot; }

struct PolynomialTable {
  std::vector<DerivativePolynomial> polys;
  PolynomialTable() : polys(kSide * kSide * kSide) {
    for (int ox = 0; ox <= kMaxLogOrder; ++ox) {
      for (int oy = 0; ox + oy <= kMaxLogOrder; ++oy) {
        for (int ot = 0; ox + oy + ot <= kMaxLogOrder; ++ot) {
          MultiIndex a{ox, oy, ot};
          polys[slot(a)] = log_derivative_polynomial(a);
        }
      }
    }
  }
};

}  // namespace

DerivativePolynomial log_derivative_polynomial(MultiIndex alpha) {
  check_order(alpha);
  std::vector<MultiIndex> steps;
  for (int i = 0; i < alpha.ox; ++i) steps.push_back({1, 0, 0});
  for (int i = 0; i < alpha.oy; ++i) steps.push_back({0, 1, 0});
  for (int i = 0; i < alpha.ot; ++i) steps.push_back({0, 0, 1});
  if (steps.empty()) return {};
  DerivativePolynomial poly{Monomial{1.0, {steps.front()}}};
  for (std::size_t i = 1; i < steps.size(); ++i) poly = differentiate(poly, steps[i]);
  return poly;
}

const DerivativePolynomial& cached_log_derivative_polynomial(MultiIndex alpha) {
  check_order(alpha);
  static const PolynomialTable table;  // thread-safe one-time init
  return table.polys[slot(alpha)];
}

double evaluate(const DerivativePolynomial& poly, const Moments& moments) {
  double sum = 0;
  for (const Monomial& mono : poly) {
    double term = mono.coeff;
    for (const MultiIndex& f : mono.factors) term *= moments[f];
    sum += term;
  }
  return sum;
}

double log_partial(const Moments& moments, MultiIndex alpha) {
  check_order(alpha);
  if (alpha.order() == 0) return moments.log_tau();
  if (alpha.order() > moments.max_order()) {
    throw Error(ErrorCode::OrderTooHigh, "moments computed to a lower order than requested");
  }
  return evaluate(cached_log_derivative_polynomial(alpha), moments);
}

double log_partial(const TauFunction& tau, MultiIndex alpha, double x, double y, double t) {
  check_order(alpha);
  return log_partial(Moments(tau, x, y, t, alpha.order()), alpha);
}

double log_partial_uncached(const TauFunction& tau, MultiIndex alpha, double x, double y, double t) {
  check_order(alpha);
  Moments moments(tau, x, y, t, alpha.order());
  if (alpha.order() == 0) return moments.log_tau();
  return evaluate(log_derivative_polynomial(alpha), moments);
}

const char* to_string(Assignment a) { return a == Assignment::XY_XX ? "XY_XX" : "XX_XY"; }
const char* to_string(Component c) { return c == Component::U ? "u" : "v"; }
const char* to_string(PdeVariant v) { return v == PdeVariant::A ? "A" : "B"; }

MultiIndex base_index(Assignment assignment, Component which) {
  const bool xy = (assignment == Assignment::XY_XX) == (which == Component::U);
  return xy ? MultiIndex{1, 1, 0} : MultiIndex{2, 0, 0};
}

double component_derivative(const Moments& moments, Assignment assignment, Component which, MultiIndex extra) {
  return -2.0 * log_partial(moments, plus(base_index(assignment, which), extra));
}

double field_value(const FieldComponent& fc, double x, double y, double t) {
  return field_value(*fc.tau, fc.which, x, y, t, fc.assignment);
}

double field_value(const TauFunction& tau, Component which, double x, double y, double t, Assignment assignment) {
  Moments moments(tau, x, y, t, 2);
  return component_derivative(moments, assignment, which, {});
}

Fields fields(const TauFunction& tau, double x, double y, double t, Assignment assignment) {
  Moments moments(tau, x, y, t, 2);
  return {component_derivative(moments, assignment, Component::U, {}),
          component_derivative(moments, assignment, Component::V, {})};
}

AuditReport audit_conventions(const TauFunction& tau, std::span<const Point3> samples, double tolerance) {
  if (samples.size() < 10) throw Error(ErrorCode::PreconditionViolated, "audit needs at least 10 sample points");
  AuditReport report;
  report.tolerance = tolerance;
  report.samples = samples.size();
  for (Assignment as : {Assignment::XY_XX, Assignment::XX_XY}) {
    for (PdeVariant var : {PdeVariant::A, PdeVariant::B}) report.rows.push_back(AuditRow{as, var});
  }
  for (const Point3& pt : samples) {
    Moments m(tau, pt.x, pt.y, pt.t, 5);
    for (AuditRow& row : report.rows) {
      const Assignment as = row.assignment;
      const double u = component_derivative(m, as, Component::U, {});
      const double v = component_derivative(m, as, Component::V, {});
      const double u_t = component_derivative(m, as, Component::U, {0, 0, 1});
      const double u_x = component_derivative(m, as, Component::U, {1, 0, 0});
      const double v_x = component_derivative(m, as, Component::V, {1, 0, 0});
      const double v_y = component_derivative(m, as, Component::V, {0, 1, 0});
      const Component dispersive = row.variant == PdeVariant::A ? Component::U : Component::V;
      const double w_xxx = component_derivative(m, as, dispersive, {3, 0, 0});
      const double r1 = u_t + w_xxx - 3.0 * (u_x * v + u * v_x);
      const double r2 = u_x - v_y;
      row.max_evolution = std::max(row.max_evolution, std::abs(r1));
      row.max_constraint = std::max(row.max_constraint, std::abs(r2));
    }
  }
  for (AuditRow& row : report.rows) row.vanishes = row.max_evolution < tolerance && row.max_constraint < tolerance;
  return report;
}

}  // namespace annv
