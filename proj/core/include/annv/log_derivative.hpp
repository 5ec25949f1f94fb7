#pragma once

#include <span>
#include <string>
#include <vector>

#include "annv/tau.hpp"

namespace annv {

inline constexpr int kMaxLogOrder = 5;

// A monomial coeff * prod r_beta over its factors (r_0 = 1 never stored).
struct Monomial {
  double coeff = 0;
  std::vector<MultiIndex> factors;
};
using DerivativePolynomial = std::vector<Monomial>;

// Expansion of d^alpha ln f in the normalized partials r_beta, generated from
// g_e = r_e with the rule d_e r_beta = r_{beta+e} - r_beta r_e.
DerivativePolynomial log_derivative_polynomial(MultiIndex alpha);

// Cached expansion; built once for every |alpha| <= kMaxLogOrder and immutable afterwards.
const DerivativePolynomial& cached_log_derivative_polynomial(MultiIndex alpha);

double evaluate(const DerivativePolynomial& poly, const Moments& moments);

// d^alpha ln f. Order 0 returns log_tau.
double log_partial(const TauFunction& tau, MultiIndex alpha, double x, double y, double t);
double log_partial(const Moments& moments, MultiIndex alpha);
double log_partial_uncached(const TauFunction& tau, MultiIndex alpha, double x, double y, double t);

enum class Assignment { XY_XX, XX_XY };
enum class Component { U, V };

const char* to_string(Assignment a);
const char* to_string(Component c);

// Multi-index whose g-derivative, times -2, gives the component.
MultiIndex base_index(Assignment assignment, Component which);

struct FieldComponent {
  const TauFunction* tau = nullptr;
  Component which = Component::V;
  Assignment assignment = Assignment::XY_XX;
};

double field_value(const FieldComponent& fc, double x, double y, double t);
double field_value(const TauFunction& tau, Component which, double x, double y, double t,
                   Assignment assignment = Assignment::XY_XX);

struct Fields {
  double u = 0, v = 0;
};
Fields fields(const TauFunction& tau, double x, double y, double t, Assignment assignment = Assignment::XY_XX);

// d^extra of the component, from precomputed moments.
double component_derivative(const Moments& moments, Assignment assignment, Component which, MultiIndex extra);

// A: u_t + u_xxx = 3(uv)_x.  B: u_t + v_xxx = 3(uv)_x.
enum class PdeVariant { A, B };
const char* to_string(PdeVariant v);

struct AuditRow {
  Assignment assignment;
  PdeVariant variant;
  double max_evolution = 0;   // max |evolution residual|
  double max_constraint = 0;  // max |u_x - v_y|
  bool vanishes = false;      // both below tolerance
};

struct AuditReport {
  double tolerance = 1e-8;
  std::size_t samples = 0;
  std::vector<AuditRow> rows;  // XY_XX/A, XY_XX/B, XX_XY/A, XX_XY/B
};

AuditReport audit_conventions(const TauFunction& tau, std::span<const Point3> samples, double tolerance = 1e-8);

}  // namespace annv
