#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "annv/rational.hpp"
#include "annv/tau.hpp"

namespace annv {

enum class Case { Weak1, Weak2, Strong1, Strong2, Custom };

const char* to_string(Case c);
inline bool is_weak(Case c) { return c == Case::Weak1 || c == Case::Weak2; }
inline bool is_strong(Case c) { return c == Case::Strong1 || c == Case::Strong2; }

// Exact values when every parameter was given as an integer, fraction or short decimal.
struct ExactParams {
  std::vector<Rational> k, p, xi0;
  friend bool operator==(const ExactParams&, const ExactParams&) = default;
};

struct Classification {
  Case kase = Case::Custom;
  std::string failure;  // why no resonant case matched; empty when classified
};

// Equalities are exact for rational input and to 1e-12 otherwise. Weak cases also
// require k2 p3 - k3 p2 > 0.
Classification classify(const SolitonParams& params, const ExactParams* exact = nullptr);

struct Scenario {
  std::string name;
  Case kase = Case::Custom;
  SolitonParams params;
  std::optional<ExactParams> exact;
  std::optional<PairCoefficient> a23;  // absent for n < 3
  std::optional<Rational> a23_exact;

  TauFunction tau() const;
};

bool same_config(const Scenario& a, const Scenario& b);

// Exact a_ij from rational wavenumbers; nullopt when infinite. 0-based indices.
std::optional<Rational> pair_coefficient_exact(const ExactParams& params, std::size_t i, std::size_t j);

std::vector<std::string> builtin_names();
Scenario builtin(std::string_view name);  // weak1, weak2, strong1, strong2 (case-insensitive)

// Built-in name or config path. Custom parameters are rejected with
// UnclassifiedScenario unless allow_custom is set.
Scenario load_scenario(std::string_view name_or_path, bool allow_custom = false);

// Flat "key = value" text with keys k1.., p1.., xi01..; values are numbers or
// quoted fractions ("2/3"). '#' starts a comment.
Scenario parse_config(std::string_view text, std::string name, bool allow_custom = false);
std::string write_config(const Scenario& scenario);

Scenario make_scenario(std::string name, SolitonParams params, std::optional<ExactParams> exact, bool allow_custom);

}  // namespace annv
