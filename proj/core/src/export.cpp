#include "annv/export.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "annv/errors.hpp"
#include "annv/log_derivative.hpp"

namespace annv {

namespace {

std::vector<double> axis(double a, double b, int n) {
  if (a == b) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return out;
}

}  // namespace

std::vector<FieldRow> field_grid(const TauFunction& tau, const GridBox& box, double t, int resolution,
                                 unsigned threads) {
  if (resolution < 2) throw Error(ErrorCode::PreconditionViolated, "resolution must be at least 2");
  const std::vector<double> xs = axis(box.x0, box.x1, resolution);
  const std::vector<double> ys = axis(box.y0, box.y1, resolution);
  std::vector<FieldRow> rows(xs.size() * ys.size());

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t j = first; j < ys.size(); j += stride) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const Fields f = fields(tau, xs[i], ys[j], t);
        rows[j * xs.size() + i] = {xs[i], ys[j], t, f.u, f.v};
      }
    }
  };
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, ys.size()));
  if (n <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < n; ++k) pool.emplace_back(work, k, n);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_field_csv(std::ostream& out, const std::vector<FieldRow>& rows) {
  out << "x,y,t,u,v\n";
  for (const FieldRow& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.t) << ','
        << format_double(r.u) << ',' << format_double(r.v) << '\n';
  }
}

std::vector<FieldRow> read_field_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,y,t,u,v") throw Error(ErrorCode::ParseError, "missing CSV header");
  std::vector<FieldRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 5) throw Error(ErrorCode::ParseError, "expected 5 columns on line " + std::to_string(lineno));
    FieldRow r;
    double* slots[] = {&r.x, &r.y, &r.t, &r.u, &r.v};
    for (std::size_t k = 0; k < 5; ++k) {
      try {
        std::size_t used = 0;
        *slots[k] = std::stod(cells[k], &used);
        if (used != cells[k].size()) throw std::invalid_argument(cells[k]);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad number '" + cells[k] + "' on line " + std::to_string(lineno));
      }
    }
    rows.push_back(r);
  }
  return rows;
}

std::string path_for_time(const std::string& path, double t) {
  const std::filesystem::path p(path);
  std::string stem = p.stem().string() + "_t" + format_double(t);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

namespace {

void dump_value(std::string& out, const nlohmann::ordered_json& v, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case nlohmann::json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::ordered_json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_value(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_value(out, e, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& value, int indent) {
  std::string out;
  dump_value(out, value, indent, 0);
  out += '\n';
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

void write_sidecar(const std::string& path, const nlohmann::ordered_json& info) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  nlohmann::ordered_json meta;
  meta["file"] = std::filesystem::path(path).filename().string();
  meta["generated_at"] = stamp;
  meta["info"] = info;
  write_text_file(path + ".meta.json", dump_json(meta));
}

}  // namespace annv
