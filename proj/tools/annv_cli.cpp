#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "annv/errors.hpp"
#include "annv/export.hpp"
#include "annv/report.hpp"

namespace {

using annv::Error;
using annv::ErrorCode;
using ojson = nlohmann::ordered_json;

constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

annv::GridBox parse_bbox(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad bbox component '" + part + "'");
    }
  }
  if (v.size() != 4) throw Error(ErrorCode::ParseError, "bbox must be x0:x1:y0:y1");
  return {v[0], v[1], v[2], v[3]};
}

ojson command_info(const std::string& cmd, const annv::Scenario& s) {
  return {{"command", cmd}, {"scenario", s.name}, {"case", annv::to_string(s.kase)}};
}

void emit(const std::string& out, const std::string& text, const ojson& info) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  annv::write_text_file(out, text);
  annv::write_sidecar(out, info);
}

int run_field(const std::string& scenario, const std::vector<double>& times, const std::string& bbox, int res,
              const std::string& out, unsigned threads, bool allow_custom) {
  const annv::Scenario s = annv::load_scenario(scenario, allow_custom);
  const annv::GridBox box = parse_bbox(bbox);
  const annv::TauFunction tau = s.tau();
  for (double t : times) {
    const auto rows = annv::field_grid(tau, box, t, res, threads);
    std::ostringstream csv;
    annv::write_field_csv(csv, rows);
    const std::string path = times.size() > 1 ? annv::path_for_time(out, t) : out;
    ojson info = command_info("field", s);
    info["t"] = t;
    info["bbox"] = {box.x0, box.x1, box.y0, box.y1};
    info["resolution"] = res;
    info["rows"] = rows.size();
    annv::write_text_file(path, csv.str());
    annv::write_sidecar(path, info);
  }
  return 0;
}

int run_report(const std::string& scenario, const std::vector<double>& times, int res, const std::string& out,
               unsigned threads, bool allow_custom) {
  const annv::Scenario s = annv::load_scenario(scenario, allow_custom);
  annv::ReportOptions opt;
  opt.times = times;
  opt.residual_resolution = res;
  opt.threads = threads;
  ojson info = command_info("report", s);
  info["t"] = times;
  emit(out, annv::dump_json(annv::build_report(s, opt)), info);
  return 0;
}

int run_audit(const std::string& scenario, const std::string& out) {
  const annv::Scenario s = annv::load_scenario(scenario, true);
  const auto pts = annv::audit_samples();
  const annv::AuditReport audit = annv::audit_conventions(s.tau(), pts);
  std::printf("scenario %s (%s), %zu points, tolerance %g\n", s.name.c_str(), annv::to_string(s.kase), audit.samples,
              audit.tolerance);
  std::printf("%-10s %-4s %-24s %-24s %s\n", "fields", "pde", "max evolution", "max constraint", "verdict");
  for (const annv::AuditRow& r : audit.rows) {
    std::printf("%-10s %-4s %-24s %-24s %s\n", annv::to_string(r.assignment), annv::to_string(r.variant),
                annv::format_double(r.max_evolution).c_str(), annv::format_double(r.max_constraint).c_str(),
                r.vanishes ? "vanishes" : "fails");
  }
  if (!out.empty()) {
    ojson j;
    j["scenario"] = annv::scenario_json(s);
    j["audit"] = annv::audit_json(audit);
    annv::write_text_file(out, annv::dump_json(j));
    annv::write_sidecar(out, command_info("audit", s));
  }
  return 0;
}

int run_scenario_list(const std::string& scenario, const std::string& out) {
  if (!scenario.empty()) {
    const annv::Scenario s = annv::load_scenario(scenario, true);
    const std::string text = annv::write_config(s);
    if (out.empty()) {
      std::cout << text;
    } else {
      annv::write_text_file(out, text);
    }
    return 0;
  }
  for (const std::string& name : annv::builtin_names()) {
    const annv::Scenario s = annv::builtin(name);
    const ojson j = annv::scenario_json(s);
    std::printf("%-8s %-8s k=%s p=%s a23=%s\n", name.c_str(), annv::to_string(s.kase), j["k"].dump().c_str(),
                j["p"].dump().c_str(), s.a23_exact ? s.a23_exact->str().c_str() : "-");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resonant three-soliton field evaluation, geometry and verification reports"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for grid evaluation (0 = all cores)");

  std::string scenario, out, bbox = "-60:60:-60:60";
  std::vector<double> times;
  int res = 301, residual_res = 21;
  bool allow_custom = false;

  auto* field = app.add_subcommand("field", "Write u and v on a grid as CSV, one file per time");
  field->add_option("--scenario", scenario, "Built-in name or config file")->required();
  field->add_option("--t", times, "Times")->required();
  field->add_option("--bbox", bbox, "x0:x1:y0:y1");
  field->add_option("--res", res, "Points per axis")->capture_default_str();
  field->add_option("--out", out, "CSV path; _t<value> is inserted for several times")->required();
  field->add_flag("--allow-custom", allow_custom, "Accept parameters outside the four resonant cases");

  auto* report = app.add_subcommand("report", "JSON verification report");
  report->add_option("--scenario", scenario, "Built-in name or config file")->required();
  report->add_option("--t", times, "Times")->required();
  report->add_option("--res", residual_res, "Residual sweep points per axis")->capture_default_str();
  report->add_option("--out", out, "JSON path (default: stdout)");
  report->add_flag("--allow-custom", allow_custom, "Accept parameters outside the four resonant cases");

  auto* audit = app.add_subcommand("audit", "Field-assignment and PDE-form residual table");
  audit->add_option("--scenario", scenario, "Built-in name or config file")->required();
  audit->add_option("--out", out, "Also write the table as JSON");

  auto* list = app.add_subcommand("scenario-list", "List built-ins, or write one as a config file");
  list->add_option("--scenario", scenario, "Scenario to write");
  list->add_option("--out", out, "Config path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (*field) return run_field(scenario, times, bbox, res, out, threads, allow_custom);
    if (*report) return run_report(scenario, times, residual_res, out, threads, allow_custom);
    if (*audit) return run_audit(scenario, out);
    if (*list) return run_scenario_list(scenario, out);
  } catch (const Error& e) {
    std::fprintf(stderr, "annv: %s\n", e.what());
    return e.code() == ErrorCode::IoError ? kExitIo : kExitPrecondition;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "annv: %s\n", e.what());
    return kExitPrecondition;
  }
  return 0;
}
