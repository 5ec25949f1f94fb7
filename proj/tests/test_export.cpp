#include <gmock/gmock.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "annv/export.hpp"
#include "annv/figure_proxy.hpp"
#include "annv/report.hpp"
#include "support.hpp"

using namespace annv;
using ::testing::HasSubstr;

TEST(FieldGrid, RowMajorYThenX) {
  const TauFunction tau = builtin("weak1").tau();
  const auto rows = field_grid(tau, {-1, 1, 10, 12}, 0.5, 3);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0].x, -1);
  EXPECT_EQ(rows[0].y, 10);
  EXPECT_EQ(rows[1].x, 0);
  EXPECT_EQ(rows[1].y, 10);
  EXPECT_EQ(rows[3].x, -1);
  EXPECT_EQ(rows[3].y, 11);
  EXPECT_EQ(rows[8].x, 1);
  EXPECT_EQ(rows[8].y, 12);
  for (const FieldRow& r : rows) {
    EXPECT_EQ(r.t, 0.5);
    const Fields f = fields(tau, r.x, r.y, r.t);
    EXPECT_EQ(r.u, f.u);
    EXPECT_EQ(r.v, f.v);
  }
}

TEST(FieldGrid, SinglePointAndResolutionOne) {
  const TauFunction tau = builtin("weak1").tau();
  EXPECT_EQ(field_grid(tau, {3, 3, -2, -2}, 1, 301).size(), 1u);
  EXPECT_ANNV_ERROR(field_grid(tau, {-1, 1, -1, 1}, 0, 1), ErrorCode::PreconditionViolated);
}

TEST(FieldGrid, DeterministicAcrossThreads) {
  const TauFunction tau = builtin("strong2").tau();
  std::ostringstream a, b;
  write_field_csv(a, field_grid(tau, {-30, 30, -30, 30}, -4, 61, 1));
  write_field_csv(b, field_grid(tau, {-30, 30, -30, 30}, -4, 61, 7));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Csv, FormatAndRoundTrip) {
  const TauFunction tau = builtin("weak2").tau();
  const auto rows = field_grid(tau, {-5, 5, -5, 5}, 2, 4);
  std::ostringstream os;
  write_field_csv(os, rows);
  const std::string text = os.str();
  EXPECT_EQ(text.substr(0, 10), "x,y,t,u,v\n");
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  std::istringstream is(text);
  const auto back = read_field_csv(is);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].x, rows[i].x);
    EXPECT_EQ(back[i].u, rows[i].u);
    EXPECT_EQ(back[i].v, rows[i].v);
  }
}

TEST(Csv, MalformedInput) {
  std::istringstream bad_header("a,b\n1,2\n");
  EXPECT_ANNV_ERROR(read_field_csv(bad_header), ErrorCode::ParseError);
  std::istringstream short_row("x,y,t,u,v\n1,2,3,4\n");
  EXPECT_ANNV_ERROR(read_field_csv(short_row), ErrorCode::ParseError);
  std::istringstream junk("x,y,t,u,v\n1,2,3,4,abc\n");
  EXPECT_ANNV_ERROR(read_field_csv(junk), ErrorCode::ParseError);
}

TEST(FormatDouble, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(-1.125), "-1.125");
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  for (double v : {1.0 / 3, -2.0 / 7 * 1e-200, 6.02214076e23}) EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(PathForTime, InsertsBeforeExtension) {
  EXPECT_EQ(path_for_time("out/w1.csv", -40), "out/w1_t-40.csv");
  EXPECT_EQ(path_for_time("w1.csv", 0.5), "w1_t0.5.csv");
  EXPECT_EQ(path_for_time("dir.v2/field", 10), "dir.v2/field_t10");
}

TEST(DumpJson, FloatsAtFullPrecision) {
  nlohmann::ordered_json j;
  j["b"] = 0.1;
  j["a"] = {1, 2.5, NAN};
  j["s"] = "x";
  const std::string text = dump_json(j);
  EXPECT_THAT(text, HasSubstr("0.10000000000000001"));
  EXPECT_THAT(text, HasSubstr("null"));
  EXPECT_LT(text.find("\"b\""), text.find("\"a\""));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(nlohmann::json::parse(text)["b"].get<double>(), 0.1);
}

TEST(Files, WriteErrorsAndSidecar) {
  EXPECT_ANNV_ERROR(write_text_file("/nonexistent-dir/x/y.csv", "a"), ErrorCode::IoError);
  const auto dir = std::filesystem::temp_directory_path() / "annv_export_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "f.csv").string();
  write_text_file(path, "x,y,t,u,v\n");
  write_sidecar(path, {{"command", "field"}});
  std::ifstream meta(path + ".meta.json");
  const auto j = nlohmann::json::parse(meta);
  EXPECT_EQ(j["file"], "f.csv");
  EXPECT_TRUE(j.contains("generated_at"));
  EXPECT_EQ(j["info"]["command"], "field");
  std::filesystem::remove_all(dir);
}

TEST(FigureProxy, PredictedLines) {
  const auto lines = predicted_lines(builtin("weak1"), 5);
  // two shared arms, two arms per epoch, two stems
  EXPECT_EQ(lines.size(), 8u);
}

TEST(FigureProxy, CrestsFollowPredictedLines) {
  for (const std::string& n : builtin_names()) {
    const Scenario s = builtin(n);
    for (double t : {-8.0, -4.0, 0.0, 5.0, 10.0}) {
      const auto rows = field_grid(s.tau(), {-60, 60, -60, 60}, t, 301);
      const FigureProxyResult r = figure_proxy_check(s, rows);
      EXPECT_NEAR(r.spacing, 0.4, 1e-12);
      EXPECT_TRUE(r.pass) << n << " t=" << t << " checked=" << r.checked << " max=" << r.max_distance;
      EXPECT_LE(r.max_distance, r.spacing);
      EXPECT_GE(r.checked, 50u);
    }
  }
}

TEST(FigureProxy, WrongTimeFails) {
  const Scenario s = builtin("strong1");
  auto rows = field_grid(s.tau(), {-60, 60, -60, 60}, 10, 301);
  for (FieldRow& r : rows) r.t = -8;  // lines predicted for another slice
  EXPECT_FALSE(figure_proxy_check(s, rows).pass);
}

TEST(FigureProxy, DetectsSingleSolitonCrest) {
  const Scenario s = make_scenario("one", testing_support::single(1, 1), std::nullopt, true);
  const auto rows = field_grid(s.tau(), {-10, 10, -10, 10}, 0, 101);
  const auto crests = detect_crests(rows, -0.05);
  ASSERT_FALSE(crests.empty());
  for (const DetectedCrest& c : crests) EXPECT_LT(std::abs(c.at.x + c.at.y) / std::sqrt(2.0), 0.2);
}

TEST(Report, StructureAndSlope) {
  ReportOptions o;
  o.times = {-40, -20, 20, 40};
  o.audit_points = 50;
  o.residual_resolution = 5;
  const auto r = build_report(builtin("weak1"), o);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "audit", "residual", "arms", "geometry", "amplitudes",
                                             "regressions", "discrepancies"}));
  EXPECT_EQ(r["scenario"]["a23_exact"], "3/13");
  ASSERT_EQ(r["geometry"].size(), 4u);
  const auto& g = r["geometry"][0];
  EXPECT_EQ(g["stem"], "l1-2");
  EXPECT_NEAR(g["slope"].get<double>(), 25.0 / 12.0, 1e-9);
  EXPECT_NEAR(g["slope_fd"].get<double>(), 25.0 / 12.0, 1e-6);
  EXPECT_EQ(r["regressions"].size(), 4u);
  EXPECT_EQ(r["residual"].size(), 4u);
  EXPECT_LT(r["residual"][0]["max"].get<double>(), 1e-8);
  bool limit = false;
  for (const auto& d : r["discrepancies"])
    if (d["kind"] == "limit" && d["subject"] == "R2 t->+inf") limit = true;
  EXPECT_TRUE(limit);
  int deviations = 0;
  for (const auto& a : r["arms"]) {
    if (a.contains("deviation") && std::abs(a["t"].get<double>()) == 40) {
      ++deviations;
      EXPECT_LT(a["deviation"].get<double>(), 1e-6);
    }
  }
  EXPECT_EQ(deviations, 8);
}

TEST(Report, TimeZeroFlagged) {
  ReportOptions o;
  o.times = {0};
  o.audit_points = 20;
  o.residual_resolution = 3;
  const auto r = build_report(builtin("strong1"), o);
  EXPECT_EQ(r["geometry"][0]["error"], "TooCloseToReconnection");
  EXPECT_EQ(r["amplitudes"][0]["error"], "TooCloseToReconnection");
  EXPECT_EQ(r["residual"][0]["points"], 9);
  EXPECT_TRUE(r["residual"][0].contains("max"));
}

TEST(Report, Preconditions) {
  EXPECT_ANNV_ERROR(build_report(builtin("weak1"), ReportOptions{}), ErrorCode::PreconditionViolated);
}

TEST(Report, DeterministicText) {
  ReportOptions o;
  o.times = {-40, 40};
  o.audit_points = 30;
  o.residual_resolution = 5;
  o.threads = 1;
  const std::string a = dump_json(build_report(builtin("strong2"), o));
  o.threads = 5;
  EXPECT_EQ(a, dump_json(build_report(builtin("strong2"), o)));
}

TEST(Report, WeakTwoEndpointDiscrepancy) {
  const auto d = discrepancies(builtin("weak2"), regress_scenario(builtin("weak2")));
  bool n = false;
  for (const Discrepancy& x : d)
    if (x.kind == "endpoint" && x.subject == "N") n = std::abs(x.reference - x.direct) > 1;
  EXPECT_TRUE(n);
}

TEST(Report, AuditSamplesFixedSeed) {
  const auto a = audit_samples(1000), b = audit_samples(1000);
  ASSERT_EQ(a.size(), 1000u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_LE(std::abs(a[i].t), 20.0);
  }
}
