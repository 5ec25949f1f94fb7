#pragma once

#include <gtest/gtest.h>

#include "annv/errors.hpp"
#include "annv/scenario.hpp"
#include "oracles.hpp"

#define EXPECT_ANNV_ERROR(stmt, expected)                                      \
  do {                                                                         \
    try {                                                                      \
      (void)(stmt);                                                            \
      ADD_FAILURE() << "expected " << annv::to_string(expected);              \
    } catch (const annv::Error& e) {                                           \
      EXPECT_EQ(e.code(), expected) << e.what();                               \
    }                                                                          \
  } while (0)

namespace testing_support {

inline oracle::Params oracle_params(const annv::Scenario& s) {
  oracle::Params q;
  for (std::size_t j = 0; j < s.params.n(); ++j) {
    q.k.push_back(s.params.k[j]);
    q.p.push_back(s.params.p[j]);
    q.xi0.push_back(s.params.xi0[j]);
  }
  return q;
}

inline std::vector<oracle::Term> oracle_terms(const annv::Scenario& s) {
  const oracle::Params q = oracle_params(s);
  if (annv::is_weak(s.kase)) return oracle::weak_terms(q);
  if (annv::is_strong(s.kase)) return oracle::strong_terms(q);
  return oracle::nsoliton_terms(q);
}

inline annv::SolitonParams single(double k, double p, double xi0 = 0) { return {{k}, {p}, {xi0}}; }

}  // namespace testing_support
