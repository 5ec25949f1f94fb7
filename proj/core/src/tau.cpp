#include "annv/tau.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "annv/errors.hpp"

namespace annv {

void SolitonParams::validate() const {
  if (k.empty()) throw Error(ErrorCode::PreconditionViolated, "at least one soliton is required");
  if (p.size() != k.size() || xi0.size() != k.size()) {
    throw Error(ErrorCode::PreconditionViolated, "k, p and xi0 must have the same length");
  }
  if (k.size() > 16) throw Error(ErrorCode::PreconditionViolated, "at most 16 solitons are supported");
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) throw Error(ErrorCode::PreconditionViolated, "k" + std::to_string(j + 1) + " must be nonzero");
    if (!std::isfinite(k[j]) || !std::isfinite(p[j]) || !std::isfinite(xi0[j])) {
      throw Error(ErrorCode::PreconditionViolated, "parameters must be finite");
    }
  }
}

PhaseForm& PhaseForm::operator+=(const PhaseForm& o) {
  cx += o.cx;
  cy += o.cy;
  ct += o.ct;
  c0 += o.c0;
  return *this;
}

PhaseForm PhaseForm::elementary(const SolitonParams& params, std::size_t j) {
  const double kj = params.k.at(j);
  return PhaseForm{kj, params.p.at(j), -kj * kj * kj, params.xi0.at(j)};
}

PairCoefficient pair_coefficient(const SolitonParams& params, std::size_t i, std::size_t j) {
  const std::size_t n = params.n();
  if (i == j || i >= n || j >= n || params.p.size() != n) {
    throw Error(ErrorCode::IndexError, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for n=" +
                                           std::to_string(n));
  }
  const double num = (params.k[i] - params.k[j]) * (params.p[i] - params.p[j]);
  const double den = (params.k[i] + params.k[j]) * (params.p[i] + params.p[j]);
  PairCoefficient a{std::min(i, j), std::max(i, j), false, 0};
  if (den == 0) {
    if (num == 0) throw Error(ErrorCode::IndeterminateCoefficient, "0/0 pair coefficient");
    a.infinite = true;
    return a;
  }
  a.value = num / den;
  if (a.value < 0) {
    throw Error(ErrorCode::NegativeCoefficient,
                "a_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + std::to_string(a.value) + " < 0");
  }
  if (a.value == 0) a.value = 0;  // drop a negative zero
  return a;
}

namespace {

Term make_term(const SolitonParams& params, std::uint32_t subset, double coeff) {
  Term term;
  term.coeff = coeff;
  term.subset = subset;
  for (std::size_t j = 0; j < params.n(); ++j) {
    if (subset & (1u << j)) term.phase += PhaseForm::elementary(params, j);
  }
  term.log_coeff = std::log(coeff);
  return term;
}

}  // namespace

TauFunction::TauFunction(std::size_t n_solitons, std::vector<Term> terms) : n_(n_solitons), terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.subset < b.subset; });
}

bool TauFunction::same_terms(const TauFunction& other) const {
  if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t m = 0; m < terms_.size(); ++m) {
    const Term& a = terms_[m];
    const Term& b = other.terms_[m];
    if (a.subset != b.subset || a.coeff != b.coeff || !(a.phase == b.phase)) return false;
  }
  return true;
}

TauFunction TauFunction::shifted(double c) const {
  TauFunction out = *this;
  for (Term& term : out.terms_) term.phase.c0 += c;
  return out;
}

TauFunction build_nsoliton(const SolitonParams& params) {
  params.validate();
  const std::size_t n = params.n();
  std::vector<std::vector<PairCoefficient>> a(n, std::vector<PairCoefficient>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i][j] = pair_coefficient(params, i, j);
      if (a[i][j].infinite) {
        throw Error(ErrorCode::PreconditionViolated,
                    "a_" + std::to_string(i + 1) + std::to_string(j + 1) + " is infinite; use the strong-resonance form");
      }
    }
  }
  std::vector<Term> terms;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    double coeff = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(subset & (1u << i))) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (subset & (1u << j)) coeff *= a[i][j].value;
      }
    }
    if (coeff == 0) continue;
    terms.push_back(make_term(params, subset, coeff));
  }
  return TauFunction(n, std::move(terms));
}

namespace {

// Pair coefficient for a resonance check; an invalid pair just means the condition fails.
std::optional<PairCoefficient> pair_if_valid(const SolitonParams& params, std::size_t i, std::size_t j) {
  try {
    return pair_coefficient(params, i, j);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TauFunction build_weak3(const SolitonParams& params) {
  params.validate();
  if (params.n() != 3) throw Error(ErrorCode::PreconditionViolated, "weak form needs three solitons");
  const auto a12 = pair_if_valid(params, 0, 1), a13 = pair_if_valid(params, 0, 2), a23 = pair_if_valid(params, 1, 2);
  if (!a12 || !a13 || !a23 || !a12->is_zero() || !a13->is_zero() || !a23->is_finite_positive()) {
    throw Error(ErrorCode::PreconditionViolated, "weak 2-resonance needs a12 = a13 = 0 and 0 < a23 < inf");
  }
  return TauFunction(3, {make_term(params, 0b000, 1), make_term(params, 0b001, 1), make_term(params, 0b010, 1),
                         make_term(params, 0b100, 1), make_term(params, 0b110, a23->value)});
}

TauFunction build_strong3(const SolitonParams& params) {
  params.validate();
  if (params.n() != 3) throw Error(ErrorCode::PreconditionViolated, "strong form needs three solitons");
  const auto a12 = pair_if_valid(params, 0, 1), a13 = pair_if_valid(params, 0, 2), a23 = pair_if_valid(params, 1, 2);
  if (!a12 || !a13 || !a23 || !a12->infinite || !a13->infinite || !a23->is_finite_positive()) {
    throw Error(ErrorCode::PreconditionViolated, "strong 2-resonance needs a12 = a13 = inf and 0 < a23 < inf");
  }
  return TauFunction(3, {make_term(params, 0b000, 1), make_term(params, 0b001, 1), make_term(params, 0b011, 1),
                         make_term(params, 0b101, 1), make_term(params, 0b111, a23->value)});
}

double log_tau(const TauFunction& tau, double x, double y, double t) {
  double top = -std::numeric_limits<double>::infinity();
  for (const Term& term : tau.terms()) top = std::max(top, term.phase(x, y, t) + term.log_coeff);
  double sum = 0;
  for (const Term& term : tau.terms()) sum += std::exp(term.phase(x, y, t) + term.log_coeff - top);
  return top + std::log(sum);
}

double normalized_partial(const TauFunction& tau, MultiIndex alpha, double x, double y, double t) {
  if (alpha.ox < 0 || alpha.oy < 0 || alpha.ot < 0 || alpha.order() > kMaxNormalizedOrder) {
    throw Error(ErrorCode::OrderTooHigh, "normalized partial order " + std::to_string(alpha.order()) + " > " +
                                             std::to_string(kMaxNormalizedOrder));
  }
  return Moments(tau, x, y, t, alpha.order())[alpha];
}

Moments::Moments(const TauFunction& tau, double x, double y, double t, int max_order) : max_order_(max_order) {
  if (max_order < 0 || max_order > kMaxNormalizedOrder) {
    throw Error(ErrorCode::OrderTooHigh, "moment order " + std::to_string(max_order));
  }
  const auto& terms = tau.terms();
  constexpr int kMaxTerms = 64;
  double h_stack[kMaxTerms];
  std::vector<double> h_heap;
  double* h = h_stack;
  if (terms.size() > kMaxTerms) {
    h_heap.resize(terms.size());
    h = h_heap.data();
  }
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < terms.size(); ++m) {
    h[m] = terms[m].phase(x, y, t) + terms[m].log_coeff;
    top = std::max(top, h[m]);
  }
  double total = 0;
  for (std::size_t m = 0; m < terms.size(); ++m) {
    h[m] = std::exp(h[m] - top);
    total += h[m];
  }
  log_tau_ = top + std::log(total);

  constexpr int S = kMaxNormalizedOrder + 1;
  for (int ox = 0; ox <= max_order; ++ox) {
    for (int oy = 0; ox + oy <= max_order; ++oy) {
      for (int ot = 0; ox + oy + ot <= max_order; ++ot) {
        double acc = 0;
        for (std::size_t m = 0; m < terms.size(); ++m) {
          const PhaseForm& ph = terms[m].phase;
          double w = h[m];
          for (int i = 0; i < ox; ++i) w *= ph.cx;
          for (int i = 0; i < oy; ++i) w *= ph.cy;
          for (int i = 0; i < ot; ++i) w *= ph.ct;
          acc += w;
        }
        r_[(ox * S + oy) * S + ot] = acc / total;
      }
    }
  }
}

}  // namespace annv
