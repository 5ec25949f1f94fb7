#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "annv/residual.hpp"
#include "annv/tau.hpp"

namespace annv {

struct FieldRow {
  double x = 0, y = 0, t = 0, u = 0, v = 0;
};

// Row-major grid, y outer and x inner. A degenerate bbox axis gives one point;
// resolution < 2 throws PreconditionViolated. Threads fan out over rows.
std::vector<FieldRow> field_grid(const TauFunction& tau, const GridBox& box, double t, int resolution,
                                 unsigned threads = 0);

// %.17g; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double value);

void write_field_csv(std::ostream& out, const std::vector<FieldRow>& rows);
std::vector<FieldRow> read_field_csv(std::istream& in);

// "-40" -> "_t-40", "0.5" -> "_t0.5", inserted before the extension.
std::string path_for_time(const std::string& path, double t);

// Dump with every float printed at 17 significant digits; non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& value, int indent = 2);

// Writes text to path; throws IoError.
void write_text_file(const std::string& path, const std::string& text);

// Sidecar "<path>.meta.json" carrying the wall-clock time and the producing command.
void write_sidecar(const std::string& path, const nlohmann::ordered_json& info);

}  // namespace annv
