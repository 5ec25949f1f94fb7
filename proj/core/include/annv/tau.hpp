#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace annv {

struct Point3 {
  double x = 0, y = 0, t = 0;
};

// Wavenumbers and phase constants of n line solitons. Indices are 0-based.
struct SolitonParams {
  std::vector<double> k;
  std::vector<double> p;
  std::vector<double> xi0;

  std::size_t n() const { return k.size(); }
  // Throws PreconditionViolated on size mismatch, n == 0 or a zero k.
  void validate() const;
};

// cx*x + cy*y + ct*t + c0.
struct PhaseForm {
  double cx = 0, cy = 0, ct = 0, c0 = 0;

  double operator()(double x, double y, double t) const { return cx * x + cy * y + ct * t + c0; }
  PhaseForm& operator+=(const PhaseForm& o);
  friend bool operator==(const PhaseForm&, const PhaseForm&) = default;

  // xi_j = k_j x + p_j y - k_j^3 t + xi0_j
  static PhaseForm elementary(const SolitonParams& params, std::size_t j);
};

struct PairCoefficient {
  std::size_t i = 0, j = 0;
  bool infinite = false;
  double value = 0;  // meaningless when infinite

  bool is_zero() const { return !infinite && value == 0; }
  bool is_finite_positive() const { return !infinite && value > 0; }
};

// a_ij = (k_i-k_j)(p_i-p_j) / ((k_i+k_j)(p_i+p_j)); 0/x -> 0, x/0 -> infinite.
PairCoefficient pair_coefficient(const SolitonParams& params, std::size_t i, std::size_t j);

struct Term {
  double coeff = 1;          // > 0
  std::uint32_t subset = 0;  // bit j set <=> soliton j participates
  PhaseForm phase;           // sum of the subset's elementary phases
  double log_coeff = 0;      // ln coeff
};

class TauFunction {
 public:
  TauFunction() = default;
  TauFunction(std::size_t n_solitons, std::vector<Term> terms);

  std::size_t n_solitons() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Term multiset equality: same subsets with bit-identical coefficients and phases.
  bool same_terms(const TauFunction& other) const;

  // Adds c to every term's phase constant.
  TauFunction shifted(double c) const;

 private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

TauFunction build_nsoliton(const SolitonParams& params);
TauFunction build_weak3(const SolitonParams& params);
TauFunction build_strong3(const SolitonParams& params);

struct MultiIndex {
  int ox = 0, oy = 0, ot = 0;
  int order() const { return ox + oy + ot; }
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

inline constexpr int kMaxNormalizedOrder = 6;

double log_tau(const TauFunction& tau, double x, double y, double t);

// r_alpha = f_alpha / f.
double normalized_partial(const TauFunction& tau, MultiIndex alpha, double x, double y, double t);

// All r_beta with |beta| <= max_order at one point, sharing one shifted weight pass.
class Moments {
 public:
  Moments(const TauFunction& tau, double x, double y, double t, int max_order);

  int max_order() const { return max_order_; }
  double log_tau() const { return log_tau_; }
  double operator[](MultiIndex beta) const {
    return r_[(beta.ox * (kMaxNormalizedOrder + 1) + beta.oy) * (kMaxNormalizedOrder + 1) + beta.ot];
  }

 private:
  int max_order_;
  double log_tau_ = 0;
  std::array<double, (kMaxNormalizedOrder + 1) * (kMaxNormalizedOrder + 1) * (kMaxNormalizedOrder + 1)> r_{};
};

}  // namespace annv
