#include "annv/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "annv/errors.hpp"

namespace annv {

const char* to_string(Case c) {
  switch (c) {
    case Case::Weak1: return "WEAK1";
    case Case::Weak2: return "WEAK2";
    case Case::Strong1: return "STRONG1";
    case Case::Strong2: return "STRONG2";
    case Case::Custom: return "CUSTOM";
  }
  return "CUSTOM";
}

namespace {

constexpr double kTol = 1e-12;

// A parameter value that compares exactly when a rational is available.
struct Num {
  double d;
  std::optional<Rational> r;
};

Num neg(const Num& a) { return {-a.d, a.r ? std::optional<Rational>(-*a.r) : std::nullopt}; }
bool eq(const Num& a, const Num& b) { return (a.r && b.r) ? *a.r == *b.r : std::abs(a.d - b.d) <= kTol; }
bool lt(const Num& a, const Num& b) { return (a.r && b.r) ? *a.r < *b.r : a.d < b.d - kTol; }
bool pos(const Num& a) { return a.r ? a.r->sign() > 0 : a.d > kTol; }

struct Check {
  std::string what;
  bool ok;
};

std::string first_failure(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    if (!c.ok) return c.what;
  }
  return {};
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

struct ParsedValue {
  double d;
  std::optional<Rational> exact;
};

ParsedValue parse_value(const std::string& raw, const std::string& key) {
  std::string v = raw;
  bool quoted = false;
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    v = v.substr(1, v.size() - 2);
    quoted = true;
  }
  if (auto r = Rational::parse(v)) return {r->to_double(), r};
  if (quoted && v.find('/') != std::string::npos) {
    throw Error(ErrorCode::ParseError, "bad fraction for " + key + ": " + raw);
  }
  const char* begin = v.c_str();
  char* end = nullptr;
  const double d = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(d)) {
    throw Error(ErrorCode::ParseError, "bad number for " + key + ": " + raw);
  }
  return {d, std::nullopt};
}

std::string format_value(double d, const std::optional<Rational>& exact) {
  if (exact) {
    if (exact->den() == 1) return std::to_string(exact->num());
    return "\"" + exact->str() + "\"";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17e", d);  // exponent form is never read back as exact
  return buf;
}

}  // namespace

Classification classify(const SolitonParams& params, const ExactParams* exact) {
  if (params.n() != 3) return {Case::Custom, "resonant cases need exactly three solitons"};
  auto num = [&](const std::vector<double>& v, const std::vector<Rational>* ev, int j) {
    return Num{v[static_cast<std::size_t>(j - 1)],
               ev ? std::optional<Rational>((*ev)[static_cast<std::size_t>(j - 1)]) : std::nullopt};
  };
  const std::vector<Rational>* ek = exact ? &exact->k : nullptr;
  const std::vector<Rational>* ep = exact ? &exact->p : nullptr;
  const Num k1 = num(params.k, ek, 1), k2 = num(params.k, ek, 2), k3 = num(params.k, ek, 3);
  const Num p1 = num(params.p, ep, 1), p2 = num(params.p, ep, 2), p3 = num(params.p, ep, 3);

  Num cross{params.k[1] * params.p[2] - params.k[2] * params.p[1], std::nullopt};
  if (exact) {
    try {
      cross.r = exact->k[1] * exact->p[2] - exact->k[2] * exact->p[1];
    } catch (const std::overflow_error&) {
    }
  }

  const std::vector<std::pair<Case, std::vector<Check>>> cases = {
      {Case::Weak1,
       {{"0 < k1", pos(k1)},
        {"k1 = k3", eq(k1, k3)},
        {"k3 < k2", lt(k3, k2)},
        {"p1 = p2", eq(p1, p2)},
        {"p2 > p3", lt(p3, p2)},
        {"p3 > 0", pos(p3)},
        {"k2 p3 - k3 p2 > 0", pos(cross)}}},
      {Case::Weak2,
       {{"k1 = k2", eq(k1, k2)},
        {"k2 > k3", lt(k3, k2)},
        {"k3 > 0", pos(k3)},
        {"0 < p1", pos(p1)},
        {"p1 = p3", eq(p1, p3)},
        {"p3 < p2", lt(p3, p2)},
        {"k2 p3 - k3 p2 > 0", pos(cross)}}},
      {Case::Strong1,
       {{"0 < k1", pos(k1)},
        {"k1 = -k3", eq(k1, neg(k3))},
        {"-k3 < k2", lt(neg(k3), k2)},
        {"p1 = -p2", eq(p1, neg(p2))},
        {"-p2 > p3", lt(p3, neg(p2))},
        {"p3 > 0", pos(p3)}}},
      {Case::Strong2,
       {{"k1 = -k2", eq(k1, neg(k2))},
        {"-k2 > k3", lt(k3, neg(k2))},
        {"k3 > 0", pos(k3)},
        {"0 < p1", pos(p1)},
        {"p1 = -p3", eq(p1, neg(p3))},
        {"-p3 < p2", lt(neg(p3), p2)}}},
  };
  std::string failures;
  for (const auto& [kase, checks] : cases) {
    const std::string f = first_failure(checks);
    if (f.empty()) return {kase, {}};
    if (!failures.empty()) failures += "; ";
    failures += std::string(to_string(kase)) + " fails " + f;
  }
  return {Case::Custom, failures};
}

std::optional<Rational> pair_coefficient_exact(const ExactParams& e, std::size_t i, std::size_t j) {
  if (i == j || i >= e.k.size() || j >= e.k.size()) throw Error(ErrorCode::IndexError, "pair index out of range");
  const Rational num = (e.k[i] - e.k[j]) * (e.p[i] - e.p[j]);
  const Rational den = (e.k[i] + e.k[j]) * (e.p[i] + e.p[j]);
  if (den.is_zero()) {
    if (num.is_zero()) throw Error(ErrorCode::IndeterminateCoefficient, "0/0 pair coefficient");
    return std::nullopt;
  }
  const Rational a = num / den;
  if (a.sign() < 0) throw Error(ErrorCode::NegativeCoefficient, "negative pair coefficient " + a.str());
  return a;
}

TauFunction Scenario::tau() const {
  if (is_weak(kase)) return build_weak3(params);
  if (is_strong(kase)) return build_strong3(params);
  return build_nsoliton(params);
}

bool same_config(const Scenario& a, const Scenario& b) {
  return a.kase == b.kase && a.params.k == b.params.k && a.params.p == b.params.p && a.params.xi0 == b.params.xi0 &&
         a.exact == b.exact;
}

Scenario make_scenario(std::string name, SolitonParams params, std::optional<ExactParams> exact, bool allow_custom) {
  params.validate();
  Scenario s;
  s.name = std::move(name);
  const Classification c = classify(params, exact ? &*exact : nullptr);
  if (c.kase == Case::Custom && !allow_custom) throw Error(ErrorCode::UnclassifiedScenario, c.failure);
  s.kase = c.kase;
  if (params.n() >= 3) {
    s.a23 = pair_coefficient(params, 1, 2);
    if (exact) {
      try {
        s.a23_exact = pair_coefficient_exact(*exact, 1, 2);
      } catch (const std::overflow_error&) {
      }
    }
  }
  s.params = std::move(params);
  s.exact = std::move(exact);
  return s;
}

std::vector<std::string> builtin_names() { return {"weak1", "weak2", "strong1", "strong2"}; }

Scenario builtin(std::string_view name) {
  const std::string n = lower(name);
  auto r = [](std::int64_t a, std::int64_t b = 1) { return Rational(a, b); };
  ExactParams e;
  if (n == "weak1" || n == "w1") {
    e = {{r(1, 2), r(2), r(1, 2)}, {r(3, 2), r(3, 2), r(2, 3)}, {r(0), r(0), r(0)}};
  } else if (n == "weak2" || n == "w2") {
    e = {{r(2), r(2), r(1)}, {r(1), r(3, 2), r(1)}, {r(0), r(0), r(0)}};
  } else if (n == "strong1" || n == "s1") {
    e = {{r(1, 2), r(2), r(-1, 2)}, {r(3, 2), r(-3, 2), r(2, 3)}, {r(0), r(0), r(0)}};
  } else if (n == "strong2" || n == "s2") {
    e = {{r(2), r(-2), r(1)}, {r(1), r(2), r(-1)}, {r(0), r(0), r(0)}};
  } else {
    throw Error(ErrorCode::UnclassifiedScenario, "unknown built-in scenario '" + std::string(name) + "'");
  }
  SolitonParams params;
  for (const Rational& v : e.k) params.k.push_back(v.to_double());
  for (const Rational& v : e.p) params.p.push_back(v.to_double());
  for (const Rational& v : e.xi0) params.xi0.push_back(v.to_double());
  static const std::map<std::string, std::string> canonical = {{"w1", "weak1"}, {"w2", "weak2"},
                                                                {"s1", "strong1"}, {"s2", "strong2"}};
  auto it = canonical.find(n);
  return make_scenario(it == canonical.end() ? n : it->second, std::move(params), std::move(e), false);
}

Scenario parse_config(std::string_view text, std::string name, bool allow_custom) {
  std::map<std::string, ParsedValue> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eqpos = body.find('=');
    if (eqpos == std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eqpos));
    const std::string raw = trim(body.substr(eqpos + 1));
    if (key == "name") {
      std::string v = raw;
      if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
      name = v;
      continue;
    }
    if (values.count(key)) throw Error(ErrorCode::ParseError, "duplicate key " + key);
    values.emplace(key, parse_value(raw, key));
  }

  std::size_t n = 0;
  while (values.count("k" + std::to_string(n + 1))) ++n;
  if (n == 0) throw Error(ErrorCode::ParseError, "no k1 entry");
  SolitonParams params;
  ExactParams exact;
  bool all_exact = true;
  auto take = [&](const std::string& key, bool required, std::vector<double>& dst, std::vector<Rational>& edst) {
    auto it = values.find(key);
    if (it == values.end()) {
      if (required) throw Error(ErrorCode::ParseError, "missing key " + key);
      dst.push_back(0.0);
      edst.push_back(Rational(0));
      return;
    }
    dst.push_back(it->second.d);
    if (it->second.exact) {
      edst.push_back(*it->second.exact);
    } else {
      all_exact = false;
      edst.push_back(Rational(0));
    }
    values.erase(it);
  };
  for (std::size_t j = 1; j <= n; ++j) {
    take("k" + std::to_string(j), true, params.k, exact.k);
    take("p" + std::to_string(j), true, params.p, exact.p);
    take("xi0" + std::to_string(j), false, params.xi0, exact.xi0);
  }
  if (!values.empty()) throw Error(ErrorCode::ParseError, "unexpected key " + values.begin()->first);
  try {
    return make_scenario(std::move(name), std::move(params),
                         all_exact ? std::optional<ExactParams>(std::move(exact)) : std::nullopt, allow_custom);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PreconditionViolated) throw Error(ErrorCode::ParseError, e.what());
    throw;
  }
}

std::string write_config(const Scenario& s) {
  std::ostringstream out;
  out << "name = \"" << s.name << "\"\n";
  for (std::size_t j = 0; j < s.params.n(); ++j) {
    const std::string idx = std::to_string(j + 1);
    auto ex = [&](const std::vector<Rational>& v) {
      return s.exact ? std::optional<Rational>(v[j]) : std::nullopt;
    };
    out << "k" << idx << " = " << format_value(s.params.k[j], s.exact ? ex(s.exact->k) : std::nullopt) << "\n";
    out << "p" << idx << " = " << format_value(s.params.p[j], s.exact ? ex(s.exact->p) : std::nullopt) << "\n";
    out << "xi0" << idx << " = " << format_value(s.params.xi0[j], s.exact ? ex(s.exact->xi0) : std::nullopt) << "\n";
  }
  return out.str();
}

Scenario load_scenario(std::string_view name_or_path, bool allow_custom) {
  const std::string n = lower(name_or_path);
  for (const std::string& b : builtin_names()) {
    if (n == b) return builtin(n);
  }
  if (n == "w1" || n == "w2" || n == "s1" || n == "s2") return builtin(n);
  std::ifstream in{std::string(name_or_path)};
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open scenario file '" + std::string(name_or_path) + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string stem(name_or_path);
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_config(buf.str(), stem, allow_custom);
}

}  // namespace annv
