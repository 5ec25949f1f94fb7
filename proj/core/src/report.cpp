#include "annv/report.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "annv/asymptotics.hpp"
#include "annv/errors.hpp"
#include "annv/export.hpp"

namespace annv {

using ojson = nlohmann::ordered_json;

std::vector<Point3> audit_samples(std::size_t n, double half, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-half, half);
  std::vector<Point3> out(n);
  for (Point3& p : out) {
    p.x = d(rng);
    p.y = d(rng);
    p.t = d(rng);
  }
  return out;
}

namespace {

ojson point(Point2 p) { return ojson::array({p.x, p.y}); }

ojson rational_or_double(const std::optional<ExactParams>& exact, const std::vector<Rational> ExactParams::*field,
                         const std::vector<double>& values) {
  ojson out = ojson::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (exact) {
      out.push_back(((*exact).*field)[i].str());
    } else {
      out.push_back(values[i]);
    }
  }
  return out;
}

// Runs fn; a library error becomes {"error": code, "message": ...} merged into the entry.
ojson guarded(ojson entry, const std::function<void(ojson&)>& fn) {
  try {
    fn(entry);
  } catch (const Error& e) {
    entry["error"] = to_string(e.code());
    entry["message"] = e.what();
  }
  return entry;
}

Epoch epoch_of(double t) { return t > 0 ? Epoch::After : Epoch::Before; }

ojson arm_json(const ArmSpec& a) {
  ojson j;
  j["label"] = a.label;
  j["eps"] = a.eps;
  j["phase_shift"] = a.phase_shift;
  j["K"] = a.K;
  j["P"] = a.P;
  j["amplitude_u"] = a.amplitude_u();
  j["amplitude_v"] = a.amplitude_v();
  j["epoch"] = to_string(a.epoch);
  j["region"] = a.region;
  return j;
}

ojson stem_report_json(const StemReport& r) {
  ojson j;
  j["stem"] = r.stem_label;
  j["endpoints"] = {{r.endpoints.first_name, point(r.endpoints.first)},
                    {r.endpoints.second_name, point(r.endpoints.second)}};
  j["length_formula"] = r.length_formula;
  j["length_distance"] = r.length_distance;
  j["slope"] = r.slope;
  j["slope_fd"] = r.slope_fd;
  j["dlength_dt"] = r.dlength_dt;
  j["midpoint"] = point(r.midpoint);
  j["velocities"] = {{r.endpoints.first_name, point(r.first_velocity)},
                     {r.endpoints.second_name, point(r.second_velocity)}};
  j["velocities_fd"] = {{r.endpoints.first_name, point(r.first_velocity_fd)},
                        {r.endpoints.second_name, point(r.second_velocity_fd)}};
  return j;
}

ojson sample_json(const RegressionSample& s) {
  return {{"s", s.s}, {"t", s.t}, {"reference", s.reference}, {"direct", s.direct}};
}

}  // namespace

ojson scenario_json(const Scenario& s) {
  ojson j;
  j["name"] = s.name;
  j["case"] = to_string(s.kase);
  j["k"] = rational_or_double(s.exact, &ExactParams::k, s.params.k);
  j["p"] = rational_or_double(s.exact, &ExactParams::p, s.params.p);
  j["xi0"] = rational_or_double(s.exact, &ExactParams::xi0, s.params.xi0);
  if (s.a23) {
    if (s.a23->infinite) {
      j["a23"] = "inf";
    } else {
      j["a23"] = s.a23->value;
    }
    if (s.a23_exact) j["a23_exact"] = s.a23_exact->str();
  }
  return j;
}

ojson audit_json(const AuditReport& audit) {
  ojson j;
  j["tolerance"] = audit.tolerance;
  j["samples"] = audit.samples;
  j["rows"] = ojson::array();
  for (const AuditRow& r : audit.rows) {
    j["rows"].push_back({{"assignment", to_string(r.assignment)},
                         {"pde", to_string(r.variant)},
                         {"max_evolution", r.max_evolution},
                         {"max_constraint", r.max_constraint},
                         {"vanishes", r.vanishes}});
  }
  return j;
}

ojson verdict_json(const EquationVerdict& v) {
  ojson j;
  j["id"] = v.id;
  j["confirmed"] = v.confirmed;
  j["curves"] = ojson::array();
  for (const CurveVerdict& c : v.curves) {
    ojson cj;
    cj["curve"] = c.id + c.sub;
    cj["stated"] = c.stated;
    cj["confirmed"] = c.confirmed;
    cj["max_abs_diff"] = c.max_abs_diff;
    cj["max_abs_direct"] = c.max_abs_direct;
    cj["samples"] = ojson::array();
    for (const RegressionSample& s : c.samples) cj["samples"].push_back(sample_json(s));
    if (!c.limit_samples.empty()) {
      cj["limit_samples"] = ojson::array();
      for (const RegressionSample& s : c.limit_samples) cj["limit_samples"].push_back(sample_json(s));
    }
    cj["best_match"] = {{"description", c.best_match.description}, {"max_abs_diff", c.best_match.max_abs_diff}};
    j["curves"].push_back(cj);
  }
  return j;
}

ojson discrepancy_json(const Discrepancy& d) {
  return {{"kind", d.kind},           {"subject", d.subject}, {"detail", d.detail},
          {"reference", d.reference}, {"direct", d.direct},   {"t", d.t}};
}

std::vector<Discrepancy> discrepancies(const Scenario& scenario, const std::vector<EquationVerdict>& verdicts) {
  std::vector<Discrepancy> out;
  for (const EquationVerdict& v : verdicts) {
    for (const CurveVerdict& c : v.curves) {
      if (c.confirmed) continue;
      const RegressionSample* worst = &c.samples.front();
      for (const RegressionSample& s : c.samples) {
        if (!(std::abs(s.reference - s.direct) <= std::abs(worst->reference - worst->direct))) worst = &s;
      }
      std::string detail = "labelled " + c.stated + "; differs by " + format_double(c.max_abs_diff);
      if (c.best_match.max_abs_diff < kRegressionTolerance) {
        detail += "; matches " + c.best_match.description;
      } else {
        detail += "; no alternative reading matches (closest: " + c.best_match.description + ", " +
                  format_double(c.best_match.max_abs_diff) + ")";
      }
      out.push_back({"reference-curve", c.id + c.sub, detail, worst->reference, worst->direct, worst->t});
    }
  }

  if (scenario.kase != Case::Custom) {
    GeometryOptions oracle;
    oracle.oracle_mode = true;
    for (const std::string& id : probes_for(scenario.kase)) {
      const ProbeDefinition& def = probe_definition(id);
      for (double t : {-30.0, 30.0}) {
        const double stated = t < 0 ? def.stated_limit_minus : def.stated_limit_plus;
        const double v = midpoint_amplitude(scenario, id, t, oracle).v;
        if (std::abs(v - stated) > 1e-3) {
          out.push_back({"limit", id + (t < 0 ? " t->-inf" : " t->+inf"),
                         "stated limit of v at the midpoint disagrees with the value at |t| = 30", stated, v, t});
        }
      }
    }
  }

  if (scenario.kase == Case::Weak2) {
    const double t = -20;
    const Point2 printed = reference_n_endpoint(scenario, t);
    const Point2 direct = stem_endpoints_oracle(scenario, Epoch::Before, t).second;
    out.push_back({"endpoint", "N",
                   "reference N = (" + format_double(printed.x) + ", " + format_double(printed.y) +
                       "), intersection of its defining lines = (" + format_double(direct.x) + ", " +
                       format_double(direct.y) + "); x coordinates compared",
                   printed.x, direct.x, t});
  }
  return out;
}

ojson build_report(const Scenario& scenario, const ReportOptions& options) {
  if (options.times.empty()) throw Error(ErrorCode::PreconditionViolated, "report needs at least one time");
  const TauFunction tau = scenario.tau();
  ojson r;
  r["scenario"] = scenario_json(scenario);

  const std::vector<Point3> pts = audit_samples(options.audit_points);
  r["audit"] = audit_json(audit_conventions(tau, pts));

  r["residual"] = ojson::array();
  for (double t : options.times) {
    const double ts[] = {t};
    const ResidualSummary s = residual_sweep(tau, options.residual_box, ts, options.residual_resolution,
                                             options.threads);
    r["residual"].push_back({{"t", t},
                             {"points", s.count},
                             {"max", s.max},
                             {"mean", s.mean},
                             {"argmax", {s.argmax.x, s.argmax.y, s.argmax.t}}});
  }

  const bool resonant = scenario.kase != Case::Custom;
  r["arms"] = ojson::array();
  r["geometry"] = ojson::array();
  r["amplitudes"] = ojson::array();
  if (resonant) {
    const ArmCatalog cat = arm_catalog(scenario);
    for (double t : options.times) {
      const Epoch ep = epoch_of(t);
      const std::vector<ArmSpec>& arms = ep == Epoch::Before ? cat.before : cat.after;
      for (const ArmSpec& a : arms) {
        ojson entry = arm_json(a);
        entry["t"] = t;
        r["arms"].push_back(guarded(entry, [&](ojson& e) {
          if (t == 0) throw Error(ErrorCode::BandOutsideRegion, "t = 0 lies in neither asymptotic epoch");
          const Band band = designated_band(tau, a, t);
          e["band_center"] = point(crest_line(a, t).at(band.center_s));
          e["band_margin"] = band.margin;
          e["deviation"] = arm_deviation(tau, a, band);
        }));
      }
      ojson stem = arm_json(ep == Epoch::Before ? cat.stem_before : cat.stem_after);
      stem["t"] = t;
      stem["stem"] = true;
      r["arms"].push_back(stem);

      ojson g;
      g["t"] = t;
      g["epoch"] = to_string(ep);
      r["geometry"].push_back(guarded(g, [&](ojson& e) {
        e.update(stem_report_json(stem_report(scenario, ep, t)));
        ojson conc = ojson::array();
        for (const auto& triple : concurrent_triples(scenario.kase, ep)) {
          conc.push_back({{"lines", triple}, {"spread", concurrency_check(scenario, t, triple)}});
        }
        e["concurrency"] = conc;
      }));

      ojson amp;
      amp["t"] = t;
      amp["epoch"] = to_string(ep);
      r["amplitudes"].push_back(guarded(amp, [&](ojson& e) {
        const StemAmplitude s = stem_amplitude(scenario, ep, t);
        e["stem"] = s.stem_label;
        e["expected_u"] = s.expected_u;
        e["expected_v"] = s.expected_v;
        e["degenerate"] = s.degenerate;
        if (s.crest) {
          e["crest"] = {{"at", point(s.crest->at)}, {"u", s.crest->u}, {"v", s.crest->v}};
        }
        e["interior_max_abs_u"] = s.interior_max_abs_u;
        e["interior_max_abs_v"] = s.interior_max_abs_v;
        ojson probes = ojson::array();
        for (const std::string& id : probes_for(scenario.kase)) {
          const MidpointProbe m = midpoint_amplitude(scenario, id, t);
          probes.push_back({{"id", m.id},
                            {"between", m.first_name + m.second_name},
                            {"midpoint", point(m.midpoint)},
                            {"u", m.u},
                            {"v", m.v}});
        }
        e["midpoints"] = probes;
      }));
    }
  }

  const std::vector<EquationVerdict> verdicts = resonant ? regress_scenario(scenario) : std::vector<EquationVerdict>{};
  r["regressions"] = ojson::array();
  for (const EquationVerdict& v : verdicts) r["regressions"].push_back(verdict_json(v));
  r["discrepancies"] = ojson::array();
  for (const Discrepancy& d : discrepancies(scenario, verdicts)) r["discrepancies"].push_back(discrepancy_json(d));
  return r;
}

}  // namespace annv
