#include <cmath>
#include <map>

#include "annv/geometry.hpp"
#include "support.hpp"

using namespace annv;

namespace {

// Defining line pair of every named endpoint: signs and the multiple of ln a23 in the offset.
struct OracleLine {
  std::array<int, 3> eps;
  int hat;
};
struct EndpointDef {
  OracleLine l1, l2;
};

const std::map<std::string, EndpointDef>& endpoint_defs() {
  const OracleLine l1{{1, 0, 0}, 0}, l2{{0, 1, 0}, 0}, l3{{0, 0, 1}, 0}, h2{{0, 1, 0}, 1}, h3{{0, 0, 1}, 1},
      h123m{{1, -1, -1}, -1}, l12p{{1, 1, 0}, 0}, l13p{{1, 0, 1}, 0};
  static const std::map<std::string, EndpointDef> defs = {
      {"E", {l1, l2}}, {"F", {h3, h123m}}, {"G", {l1, l3}}, {"H", {h2, h123m}},
      {"M", {l1, l2}}, {"N", {h3, h123m}}, {"P", {l1, l3}}, {"Q", {h2, h123m}},
      {"S", {l12p, h3}}, {"T", {h2, l13p}}, {"X", {l1, l2}}, {"Y", {l1, l3}},
  };
  return defs;
}

std::array<long double, 2> oracle_endpoint(const Scenario& s, const std::string& name, double t) {
  const oracle::Params q = testing_support::oracle_params(s);
  const long double la = std::log(static_cast<long double>(oracle::pair(q, 1, 2)));
  const EndpointDef& d = endpoint_defs().at(name);
  return oracle::meet(oracle::line(q, d.l1.eps, d.l1.hat * la, t), oracle::line(q, d.l2.eps, d.l2.hat * la, t));
}

Scenario with_phases(const std::string& name, double a, double b, double c) {
  Scenario s = builtin(name);
  return make_scenario(name + "_shifted", {s.params.k, s.params.p, {a, b, c}}, std::nullopt, false);
}

}  // namespace

TEST(TrajectoryLine, ElementaryLine) {
  const TrajectoryLine l = trajectory_line("l1", builtin("weak1"), 0);
  EXPECT_EQ(l.a, 0.5);
  EXPECT_EQ(l.b, 1.5);
  EXPECT_EQ(l.c, 0.0);
}

TEST(TrajectoryLine, VerticalWeakStem) {
  const TrajectoryLine l = trajectory_line("l1-2", builtin("weak1"), -8);
  EXPECT_EQ(l.b, 0.0);
  EXPECT_DOUBLE_EQ(-l.c / l.a, -42.0);
}

TEST(TrajectoryLine, HattedOffset) {
  const Scenario s = builtin("strong1");
  const TrajectoryLine hat = trajectory_line("^l1+2+3", s, 0);
  EXPECT_NEAR(hat.c, std::log(13.0 / 3.0), 1e-15);
  EXPECT_NEAR(trajectory_line("^l2", s, 1).c - trajectory_line("l2", s, 1).c, std::log(13.0 / 3.0), 1e-15);
  EXPECT_NEAR(trajectory_line("^l1-2-3", builtin("weak1"), 0).c, -std::log(3.0 / 13.0), 1e-15);
}

TEST(TrajectoryLine, UnknownLabels) {
  EXPECT_ANNV_ERROR(trajectory_line("l4", builtin("weak1"), 0), ErrorCode::UnknownLabel);
  EXPECT_ANNV_ERROR(trajectory_line("l1+2", builtin("weak1"), 0), ErrorCode::UnknownLabel);
  EXPECT_ANNV_ERROR(trajectory_line("m1", builtin("strong1"), 0), ErrorCode::UnknownLabel);
}

TEST(Intersect, Basics) {
  TrajectoryLine xaxis, yaxis;
  xaxis.b = 1;
  yaxis.a = 1;
  const Point2 o = intersect(xaxis, yaxis);
  EXPECT_EQ(o.x, 0.0);
  EXPECT_EQ(o.y, 0.0);
  const Scenario w1 = builtin("weak1");
  const Point2 e = intersect(trajectory_line("l1", w1, -8), trajectory_line("l2", w1, -8));
  EXPECT_NEAR(e.x, -42.0, 1e-12);
  EXPECT_NEAR(e.y, 40.0 / 3.0, 1e-12);
  EXPECT_ANNV_ERROR(intersect(trajectory_line("l1", w1, 0), trajectory_line("l1", w1, 3)), ErrorCode::ParallelLines);
}

TEST(StemEndpoints, ClosedFormExamples) {
  const StemEndpoints ef = stem_endpoints_closed_form(builtin("weak1"), Epoch::Before, -8);
  EXPECT_EQ(ef.first_name, "E");
  EXPECT_NEAR(ef.first.x, -42.0, 1e-12);
  EXPECT_NEAR(ef.first.y, 40.0 / 3.0, 1e-12);

  GeometryOptions oracle_mode;
  oracle_mode.oracle_mode = true;
  const StemEndpoints gh = stem_endpoints_closed_form(builtin("weak1"), Epoch::After, 0, oracle_mode);
  EXPECT_EQ(gh.first_name, "G");
  EXPECT_EQ(gh.first.x, 0.0);
  EXPECT_EQ(gh.first.y, 0.0);
  const StemEndpoints xy = stem_endpoints_closed_form(builtin("strong2"), Epoch::Before, 0, oracle_mode);
  EXPECT_EQ(xy.first_name, "X");
  EXPECT_EQ(xy.second_name, "Y");
  EXPECT_EQ(std::hypot(xy.first.x, xy.first.y), 0.0);
  EXPECT_EQ(std::hypot(xy.second.x, xy.second.y), 0.0);
}

TEST(StemEndpoints, GateNearReconnection) {
  EXPECT_ANNV_ERROR(stem_endpoints_closed_form(builtin("weak1"), Epoch::Before, 3), ErrorCode::TooCloseToReconnection);
  GeometryOptions loose;
  loose.t_min = 2;
  EXPECT_NO_THROW(stem_endpoints_closed_form(builtin("weak1"), Epoch::Before, 3, loose));
}

TEST(StemEndpoints, MatchIndependentIntersections) {
  std::vector<Scenario> scenarios;
  for (const std::string& n : builtin_names()) {
    scenarios.push_back(builtin(n));
    scenarios.push_back(with_phases(n, 0.3, -0.7, 1.1));
  }
  for (const Scenario& s : scenarios) {
    for (double t : {-40.0, -20.0, 20.0, 40.0}) {
      for (Epoch ep : {Epoch::Before, Epoch::After}) {
        const StemEndpoints cf = stem_endpoints_closed_form(s, ep, t);
        const StemEndpoints generic = stem_endpoints_oracle(s, ep, t);
        for (int k = 0; k < 2; ++k) {
          const std::string& name = k ? cf.second_name : cf.first_name;
          const Point2 p = k ? cf.second : cf.first;
          const auto ref = oracle_endpoint(s, name, t);
          EXPECT_NEAR(p.x, double(ref[0]), 1e-9) << s.name << " " << name << " t=" << t;
          EXPECT_NEAR(p.y, double(ref[1]), 1e-9) << s.name << " " << name << " t=" << t;
          const Point2 g = k ? generic.second : generic.first;
          EXPECT_NEAR(g.x, double(ref[0]), 1e-9);
          EXPECT_NEAR(g.y, double(ref[1]), 1e-9);
        }
      }
    }
  }
}

TEST(StemEndpoints, ReferenceNDisagreesWithItsLines) {
  const Scenario w2 = builtin("weak2");
  const Point2 printed = reference_n_endpoint(w2, -20);
  const auto ref = oracle_endpoint(w2, "N", -20);
  EXPECT_GT(std::hypot(printed.x - double(ref[0]), printed.y - double(ref[1])), 1.0);
  EXPECT_ANNV_ERROR(reference_n_endpoint(builtin("weak1"), -20), ErrorCode::PreconditionViolated);
}

TEST(StemEndpoints, Orientation) {
  for (double t : {-30.0, 30.0}) {
    const StemEndpoints ef = stem_endpoints_closed_form(builtin("weak1"), Epoch::Before, t);
    EXPECT_NEAR(ef.first.x, ef.second.x, 1e-12);
    const StemEndpoints gh = stem_endpoints_closed_form(builtin("weak1"), Epoch::After, t);
    EXPECT_NEAR(gh.first.y, gh.second.y, 1e-12);
    const StemEndpoints mn = stem_endpoints_closed_form(builtin("weak2"), Epoch::Before, t);
    EXPECT_NEAR(mn.first.y, mn.second.y, 1e-12);
    const StemEndpoints pq = stem_endpoints_closed_form(builtin("weak2"), Epoch::After, t);
    EXPECT_NEAR(pq.first.x, pq.second.x, 1e-12);
  }
  EXPECT_EQ(trajectory_line("l1-2", builtin("weak1"), 0).b, 0.0);
  EXPECT_EQ(trajectory_line("l1-3", builtin("weak1"), 0).a, 0.0);
  EXPECT_EQ(trajectory_line("l1-2", builtin("weak2"), 0).a, 0.0);
  EXPECT_EQ(trajectory_line("l1-3", builtin("weak2"), 0).b, 0.0);
}

TEST(StemReport, SlopesFromPrintedCoefficients) {
  // |k1 k2 (p1-p3)(k1^2-k2^2) / (p1 p3 (k1-k2))| at the weak case 1 set
  EXPECT_NEAR(stem_report(builtin("weak1"), Epoch::Before, -40).slope, 25.0 / 12.0, 1e-9);
  EXPECT_NEAR(stem_report(builtin("weak2"), Epoch::After, 40).slope, 2.0, 1e-9);
  for (double t : {-40.0, -20.0}) {
    const StemReport r = stem_report(builtin("weak1"), Epoch::Before, t);
    EXPECT_NEAR(r.slope_fd, 25.0 / 12.0, 1e-6);
  }
}

TEST(StemReport, LengthConsistency) {
  for (const std::string& n : builtin_names()) {
    const Scenario s = builtin(n);
    for (double t : {-40.0, -20.0, 20.0, 40.0}) {
      for (Epoch ep : {Epoch::Before, Epoch::After}) {
        const StemReport r = stem_report(s, ep, t);
        EXPECT_NEAR(r.length_formula, r.length_distance, 1e-9) << n << " t=" << t;
        EXPECT_NEAR(r.length_distance, distance(r.endpoints.first, r.endpoints.second), 1e-12);
        EXPECT_GE(r.length_formula, 0.0);
        EXPECT_NEAR(r.slope, r.slope_fd, 1e-6) << n;
        EXPECT_NEAR(r.midpoint.x, 0.5 * (r.endpoints.first.x + r.endpoints.second.x), 1e-12);
        EXPECT_NEAR(r.first_velocity.x, r.first_velocity_fd.x, 1e-6);
        EXPECT_NEAR(r.first_velocity.y, r.first_velocity_fd.y, 1e-6);
        EXPECT_NEAR(r.second_velocity.x, r.second_velocity_fd.x, 1e-6);
        EXPECT_NEAR(r.second_velocity.y, r.second_velocity_fd.y, 1e-6);
      }
    }
  }
}

TEST(StemReport, LengthAffineOnEachSide) {
  for (const std::string& n : builtin_names()) {
    const AffineLength len = stem_length_formula(builtin(n), Epoch::Before);
    for (double t : {-50.0, -30.0}) {
      const double mid = len.at(t + 5), avg = 0.5 * (len.at(t) + len.at(t + 10));
      EXPECT_NEAR(mid, avg, 1e-9) << n;
    }
  }
}

TEST(Concurrency, StatedTriples) {
  EXPECT_LT(concurrency_check(builtin("weak1"), -40, {"l1", "l2", "l1-2"}), 1e-9);
  EXPECT_LT(concurrency_check(builtin("weak1"), 40, {"l1", "l3", "l1-3"}), 1e-9);
  EXPECT_LT(concurrency_check(builtin("strong1"), -40, {"^l2", "l1+3", "^l1+2+3"}), 1e-9);
  for (const std::string& n : builtin_names()) {
    const Scenario s = builtin(n);
    for (Epoch ep : {Epoch::Before, Epoch::After}) {
      const double t = ep == Epoch::Before ? -40 : 40;
      for (const auto& triple : concurrent_triples(s.kase, ep)) {
        EXPECT_LT(concurrency_check(s, t, triple), 1e-9) << n << " " << triple[0] << triple[1] << triple[2];
      }
    }
  }
  EXPECT_GT(concurrency_check(builtin("weak1"), -40, {"l1", "l2", "l3"}), 1.0);
}
