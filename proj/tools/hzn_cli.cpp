// hzn: evaluate, verify, tabulate and benchmark the HZN function family.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "hzn/hzn.h"
#include "json_out.hpp"

namespace {

using hzn_cli::Json;
using cplx = std::complex<double>;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// parsing

std::optional<cplx> parse_complex(const std::string& s) {
  static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+))";
  static const std::regex real_only("^[+-]?" + num + "$");
  static const std::regex imag_only("^([+-]?)(" + num + ")?i$");
  static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");
  std::smatch m;
  if (std::regex_match(s, real_only)) return cplx{std::stod(s), 0.0};
  if (std::regex_match(s, m, imag_only)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return cplx{0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (std::regex_match(s, m, both)) {
    const double mag = m[3].matched ? std::stod(m[3].str()) : 1.0;
    return cplx{std::stod(m[1].str()), m[2].str() == "-" ? -mag : mag};
  }
  return std::nullopt;
}

cplx require_complex(const std::string& flag, const std::string& s) {
  const auto c = parse_complex(s);
  if (!c) throw UsageError("cannot parse " + flag + " '" + s + "' as a complex literal (a+bi)");
  return *c;
}

hzn_function parse_function(const std::string& s) {
  static const std::map<std::string, hzn_function> m{
      {"F", HZN_FN_F}, {"Fk", HZN_FN_FK}, {"F3", HZN_FN_F3}, {"J", HZN_FN_J}};
  const auto it = m.find(s);
  if (it == m.end()) throw UsageError("unknown function '" + s + "' (expected F, Fk, F3 or J)");
  return it->second;
}

const char* function_name(hzn_function f) {
  switch (f) {
    case HZN_FN_F: return "F";
    case HZN_FN_FK: return "Fk";
    case HZN_FN_F3: return "F3";
    case HZN_FN_J: return "J";
  }
  return "?";
}

const char* method_name(hzn_method m) {
  switch (m) {
    case HZN_METHOD_QUAD: return "quad";
    case HZN_METHOD_SERIES: return "series";
    case HZN_METHOD_CLOSED: return "closed";
  }
  return "?";
}

std::vector<hzn_method> parse_methods(const std::string& s) {
  if (s == "quad") return {HZN_METHOD_QUAD};
  if (s == "series") return {HZN_METHOD_SERIES};
  if (s == "closed") return {HZN_METHOD_CLOSED};
  if (s == "all") return {HZN_METHOD_QUAD, HZN_METHOD_SERIES, HZN_METHOD_CLOSED};
  throw UsageError("unknown method '" + s + "' (expected quad, series, closed or all)");
}

// ---------------------------------------------------------------------------
// output

enum class Format { json, csv, text };

struct Output {
  Format format = Format::text;
  bool timing = false;
  std::ostream* os = &std::cout;
};

Json complex_json(hzn_complex c) { return Json{{"re", c.re}, {"im", c.im}}; }

std::string complex_text(hzn_complex c) {
  std::ostringstream s;
  s.precision(17);
  s << c.re << (std::signbit(c.im) ? "-" : "+") << std::abs(c.im) << "i";
  return s.str();
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json params_json(const hzn_params& p, hzn_function fn) {
  Json j;
  j["z"] = complex_json(p.z);
  if (fn != HZN_FN_J) {
    j["u"] = complex_json(p.u);
    j["v"] = complex_json(p.v);
  }
  if (p.has_w) j["w"] = complex_json(p.w);
  if (fn == HZN_FN_FK) j["k"] = p.k;
  if (p.p > 0) {
    j["p"] = p.p;
    j["q"] = p.q;
  }
  return j;
}

Json envelope(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::string csv_complex(hzn_complex c) { return num(c.re) + "," + num(c.im); }

// ---------------------------------------------------------------------------
// C API helpers

struct Context {
  hzn_context* ctx = nullptr;
  Context() {
    if (hzn_context_create(&ctx) != HZN_OK) throw std::runtime_error("cannot create context");
  }
  ~Context() { hzn_context_destroy(ctx); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  operator hzn_context*() const { return ctx; }
};

struct Evaluated {
  hzn_method method;
  hzn_status status;
  std::string message;
  hzn_result result;
  std::int64_t wall_ns;
};

Evaluated evaluate(hzn_context* ctx, hzn_function fn, hzn_method m, const hzn_params& p) {
  Evaluated e{m, HZN_OK, {}, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  e.status = hzn_eval(ctx, fn, m, &p, &e.result);
  e.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
  if (e.status != HZN_OK) e.message = hzn_last_error(ctx);
  spdlog::debug("{} {} -> {} ({} ns)", function_name(fn), method_name(m), hzn_status_name(e.status), e.wall_ns);
  return e;
}

// Slack for rounding in the closed forms, which report no error estimate.
double agreement_bound(const hzn_result& a, const hzn_result& b) {
  const double scale = std::max({1.0, std::hypot(a.value.re, a.value.im), std::hypot(b.value.re, b.value.im)});
  return a.abs_err + b.abs_err + 1e-12 * scale;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string function = "F", method = "quad";
  std::string z = "1", u, v, w;
  int k = 1;
  int p = 0, q = 0;
  double tol = 0.0;
};

int run_eval(const EvalArgs& a, const Output& out) {
  const hzn_function fn = parse_function(a.function);
  const auto methods = parse_methods(a.method);
  hzn_params p{};
  p.z = {0, 0};
  const cplx z = require_complex("--z", a.z);
  p.z = {z.real(), z.imag()};
  if (fn == HZN_FN_J) {
    p.u = {-1.0, 0.0};
    p.v = {-1.0, 0.0};
  } else {
    if (a.u.empty() || a.v.empty()) throw UsageError("--u and --v are required for " + a.function);
    const cplx u = require_complex("--u", a.u), v = require_complex("--v", a.v);
    p.u = {u.real(), u.imag()};
    p.v = {v.real(), v.imag()};
  }
  if (fn == HZN_FN_F3) {
    if (a.w.empty()) throw UsageError("--w is required for F3");
    const cplx w = require_complex("--w", a.w);
    p.w = {w.real(), w.imag()};
    p.has_w = 1;
  }
  if (a.k < 1) throw UsageError("--k must be a positive integer");
  p.k = fn == HZN_FN_FK ? a.k : 1;
  if ((a.p > 0) != (a.q > 0)) throw UsageError("--p and --q go together");
  if (a.p > 0 && a.z == "1") p.z = {static_cast<double>(a.p) / a.q, 0.0};
  p.p = a.p;
  p.q = a.q;

  Context ctx;
  if (a.tol > 0.0 && hzn_context_set_tolerance(ctx, a.tol) != HZN_OK) throw UsageError(hzn_last_error(ctx));

  std::vector<Evaluated> done, skipped;
  for (hzn_method m : methods) {
    Evaluated e = evaluate(ctx, fn, m, p);
    (e.status == HZN_OK ? done : skipped).push_back(std::move(e));
  }
  const bool all = methods.size() > 1;
  // A single method must succeed; "all" needs at least one applicable method.
  const bool ok = all ? !done.empty() : skipped.empty();
  for (const auto& e : skipped)
    if (!all || e.status != HZN_ERR_NOT_APPLICABLE)
      spdlog::warn("{} by {}: {} ({})", a.function, method_name(e.method), e.message, hzn_status_name(e.status));

  struct Pair {
    const Evaluated *a, *b;
    double diff, bound;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < done.size(); ++i)
    for (std::size_t j = i + 1; j < done.size(); ++j) {
      const auto& x = done[i].result.value;
      const auto& y = done[j].result.value;
      pairs.push_back({&done[i], &done[j], std::hypot(x.re - y.re, x.im - y.im),
                       agreement_bound(done[i].result, done[j].result)});
    }

  switch (out.format) {
    case Format::json: {
      Json j = envelope("eval");
      Json recs = Json::array();
      for (const auto& e : done) {
        Json r;
        r["function"] = a.function;
        r["method"] = method_name(e.method);
        r["params"] = params_json(p, fn);
        r["value"] = complex_json(e.result.value);
        r["abs_err"] = e.result.abs_err;
        r["evaluations"] = e.result.evaluations;
        r["converged"] = e.result.converged != 0;
        if (out.timing) r["wall_time_ns"] = e.wall_ns;
        recs.push_back(r);
      }
      j["records"] = recs;
      Json sk = Json::array();
      for (const auto& e : skipped)
        sk.push_back({{"method", method_name(e.method)}, {"status", hzn_status_name(e.status)}, {"message", e.message}});
      j["skipped"] = sk;
      if (all) {
        Json d = Json::array();
        for (const auto& pr : pairs)
          d.push_back({{"a", method_name(pr.a->method)},
                       {"b", method_name(pr.b->method)},
                       {"difference", pr.diff},
                       {"bound", pr.bound},
                       {"within_bound", pr.diff <= pr.bound}});
        j["disagreements"] = d;
      }
      *out.os << hzn_cli::dump(j) << "\n";
      break;
    }
    case Format::csv: {
      *out.os << "function,method,z_re,z_im,u_re,u_im,v_re,v_im,w_re,w_im,k,value_re,value_im,abs_err,evaluations,"
                 "converged"
              << (out.timing ? ",wall_time_ns" : "") << "\n";
      for (const auto& e : done) {
        *out.os << a.function << "," << method_name(e.method) << "," << csv_complex(p.z) << "," << csv_complex(p.u)
                << "," << csv_complex(p.v) << "," << (p.has_w ? csv_complex(p.w) : ",") << "," << p.k << ","
                << csv_complex(e.result.value) << "," << num(e.result.abs_err) << "," << e.result.evaluations << ","
                << (e.result.converged ? 1 : 0);
        if (out.timing) *out.os << "," << e.wall_ns;
        *out.os << "\n";
      }
      break;
    }
    case Format::text: {
      for (const auto& e : done) {
        *out.os << a.function << " [" << method_name(e.method) << "] = " << complex_text(e.result.value)
                << "  (abs_err " << num(e.result.abs_err) << ", " << e.result.evaluations << " evaluations"
                << (e.result.converged ? "" : ", not converged") << ")";
        if (out.timing) *out.os << "  " << e.wall_ns << " ns";
        *out.os << "\n";
      }
      for (const auto& e : skipped)
        *out.os << "  " << method_name(e.method) << ": " << hzn_status_name(e.status) << ": " << e.message << "\n";
      for (const auto& pr : pairs)
        *out.os << "  |" << method_name(pr.a->method) << " - " << method_name(pr.b->method) << "| = " << num(pr.diff)
                << (pr.diff <= pr.bound ? "  within " : "  EXCEEDS ") << num(pr.bound) << "\n";
      break;
    }
  }
  return ok ? kExitOk : kExitMath;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string identity = "all";
  int samples = 0;
  std::uint64_t seed = 1;
  double tol = 0.0;
  int threads = 1;
};

std::vector<std::string> registry_names() {
  std::vector<std::string> n;
  for (std::size_t i = 0; i < hzn_identity_count(); ++i) n.emplace_back(hzn_identity_name(i));
  return n;
}

int run_verify(const VerifyArgs& a, const Output& out) {
  const auto names = registry_names();
  std::vector<std::string> todo;
  if (a.identity == "all") {
    todo = names;
  } else {
    if (std::find(names.begin(), names.end(), a.identity) == names.end())
      throw UsageError("unknown identity '" + a.identity + "'");
    todo = {a.identity};
  }
  Context ctx;
  bool pass = true;
  Json reports = Json::array();
  std::vector<std::string> csv_rows;
  for (const auto& name : todo) {
    hzn_report* raw = nullptr;
    const hzn_status st = hzn_verify(ctx, name.c_str(), a.samples, a.seed, a.tol, a.threads, &raw);
    if (st != HZN_OK) {
      spdlog::error("{}: {} ({})", name, hzn_last_error(ctx), hzn_status_name(st));
      pass = false;
      continue;
    }
    std::unique_ptr<hzn_report, decltype(&hzn_report_destroy)> rep(raw, &hzn_report_destroy);
    hzn_report_summary s{};
    hzn_report_get_summary(rep.get(), &s);
    const char* status = s.informational ? "informational" : (s.failure_count == 0 ? "pass" : "fail");
    if (!s.informational && s.failure_count != 0) pass = false;
    spdlog::info("{}: {} ({} samples, max residual {:.3g})", name, status, s.samples, s.max_residual);

    Json r;
    r["name"] = s.name;
    r["status"] = status;
    r["samples"] = s.samples;
    r["seed"] = s.seed;
    r["tol"] = s.tol;
    r["max_residual"] = s.max_residual;
    r["mean_residual"] = s.mean_residual;
    r["max_threshold"] = s.max_threshold;
    r["failure_count"] = s.failure_count;
    Json fails = Json::array();
    for (std::size_t i = 0; i < s.failure_count; ++i) {
      hzn_failure f{};
      hzn_report_get_failure(rep.get(), i, &f);
      Json fj;
      fj["index"] = f.index;
      fj["params"] = params_json(f.params, HZN_FN_FK);
      fj["residual"] = f.residual;
      fj["threshold"] = f.threshold;
      fails.push_back(fj);
    }
    r["failures"] = fails;
    if (out.timing) r["wall_time_ns"] = s.wall_time_ns;
    reports.push_back(r);

    std::ostringstream row;
    row << s.name << "," << status << "," << s.samples << "," << s.seed << "," << num(s.tol) << ","
        << num(s.max_residual) << "," << num(s.mean_residual) << "," << num(s.max_threshold) << ","
        << s.failure_count;
    if (out.timing) row << "," << s.wall_time_ns;
    csv_rows.push_back(row.str());
  }

  switch (out.format) {
    case Format::json: {
      Json j = envelope("verify");
      j["reports"] = reports;
      j["passed"] = pass;
      *out.os << hzn_cli::dump(j) << "\n";
      break;
    }
    case Format::csv:
      *out.os << "name,status,samples,seed,tol,max_residual,mean_residual,max_threshold,failure_count"
              << (out.timing ? ",wall_time_ns" : "") << "\n";
      for (const auto& r : csv_rows) *out.os << r << "\n";
      break;
    case Format::text:
      for (const auto& r : reports) {
        *out.os << r["status"].get<std::string>() << "  " << r["name"].get<std::string>() << "  samples "
                << r["samples"].get<int>() << "  max residual " << num(r["max_residual"].get<double>())
                << "  failures " << r["failure_count"].get<std::size_t>();
        if (out.timing) *out.os << "  " << r["wall_time_ns"].get<std::int64_t>() / 1000000.0 << " ms";
        *out.os << "\n";
      }
      *out.os << (pass ? "PASS" : "FAIL") << "\n";
      break;
  }
  return pass ? kExitOk : kExitMath;
}

// ---------------------------------------------------------------------------
// table

int run_table(const Output& out) {
  Context ctx;
  bool pass = true;
  Json rows = Json::array();
  std::vector<hzn_table_row> all;
  for (std::size_t i = 0; i < hzn_table_row_count(); ++i) {
    hzn_table_row r{};
    if (hzn_table_get_row(ctx, i, &r) != HZN_OK) {
      spdlog::error("table row {}: {}", i, hzn_last_error(ctx));
      return kExitMath;
    }
    const bool ok = r.residual <= r.tolerance;
    pass = pass && ok;
    all.push_back(r);
    Json j;
    j["row"] = r.label;
    j["k"] = r.k;
    j["n"] = r.n;
    j["u"] = complex_json(r.u);
    j["v"] = complex_json(r.v);
    j["expression"] = r.expression;
    j["closed"] = complex_json(r.printed);
    j["general"] = complex_json(r.general);
    j["oracle"] = complex_json(r.oracle.value);
    j["oracle_abs_err"] = r.oracle.abs_err;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["pass"] = ok;
    rows.push_back(j);
  }
  switch (out.format) {
    case Format::json: {
      Json j = envelope("table");
      j["rows"] = rows;
      j["passed"] = pass;
      *out.os << hzn_cli::dump(j) << "\n";
      break;
    }
    case Format::csv:
      *out.os << "row,k,n,closed_re,closed_im,oracle_re,oracle_im,oracle_abs_err,residual,tolerance,pass\n";
      for (const auto& r : all)
        *out.os << '"' << r.label << "\"," << r.k << "," << r.n << "," << csv_complex(r.printed) << ","
                << csv_complex(r.oracle.value) << "," << num(r.oracle.abs_err) << "," << num(r.residual) << ","
                << num(r.tolerance) << "," << (r.residual <= r.tolerance ? 1 : 0) << "\n";
      break;
    case Format::text:
      for (const auto& r : all)
        *out.os << r.label << "  " << r.expression << "\n    closed " << complex_text(r.printed) << "\n    oracle "
                << complex_text(r.oracle.value) << "\n    residual " << num(r.residual)
                << (r.residual <= r.tolerance ? "  ok" : "  FAIL") << "\n";
      break;
  }
  return pass ? kExitOk : kExitMath;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string function = "F3";
  std::string grid = "random";
  std::string z = "1";
  int points = 20;
  int repeat = 3;
  int k = 2;
  std::uint64_t seed = 1;
  double tol = 0.0;
};

double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

// Points of the 0.7 disk, pairwise 0.05 apart, legal for all three methods.
std::vector<hzn_params> random_grid(hzn_function fn, cplx z, int k, int points, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  const auto point = [&g] {
    while (true) {
      const cplx x{1.4 * uniform(g) - 0.7, 1.4 * uniform(g) - 0.7};
      if (std::abs(x) <= 0.7 && std::abs(x) >= 0.05) return x;
    }
  };
  std::vector<hzn_params> grid;
  while (static_cast<int>(grid.size()) < points) {
    const cplx u = point(), v = point(), w = point();
    if (std::min({std::abs(u - v), std::abs(v - w), std::abs(u - w)}) < 0.05) continue;
    hzn_params p{};
    p.z = {z.real(), z.imag()};
    p.u = {u.real(), u.imag()};
    p.v = {v.real(), v.imag()};
    p.w = {w.real(), w.imag()};
    p.has_w = fn == HZN_FN_F3;
    p.k = fn == HZN_FN_FK ? k : 1;
    grid.push_back(p);
  }
  return grid;
}

int run_bench(const BenchArgs& a, const Output& out) {
  hzn_function fn;
  std::vector<hzn_params> grid;
  std::vector<hzn_method> methods{HZN_METHOD_QUAD, HZN_METHOD_SERIES, HZN_METHOD_CLOSED};
  if (a.points < 1 || a.repeat < 1) throw UsageError("--points and --repeat must be positive");
  if (a.grid == "table1") {
    fn = HZN_FN_FK;
    methods = {HZN_METHOD_QUAD, HZN_METHOD_CLOSED};
    Context ctx;
    for (std::size_t i = 0; i < hzn_table_row_count(); ++i) {
      hzn_table_row r{};
      if (hzn_table_get_row(ctx, i, &r) != HZN_OK) return kExitMath;
      hzn_params p{};
      p.z = {1.0 / r.n, 0.0};
      p.u = r.u;
      p.v = r.v;
      p.k = r.k;
      p.p = 1;
      p.q = r.n;
      grid.push_back(p);
    }
  } else if (a.grid == "random") {
    fn = parse_function(a.function);
    if (fn == HZN_FN_J) throw UsageError("bench grids cover F, Fk and F3");
    const cplx z = require_complex("--z", a.z);
    if (!(z.real() > 0.0)) throw UsageError("bench needs Re z > 0 so that every method applies");
    grid = random_grid(fn, z, a.k, a.points, a.seed);
  } else {
    throw UsageError("unknown grid '" + a.grid + "' (expected random or table1)");
  }

  Context ctx;
  if (a.tol > 0.0 && hzn_context_set_tolerance(ctx, a.tol) != HZN_OK) throw UsageError(hzn_last_error(ctx));
  struct Stat {
    hzn_method method;
    std::int64_t evaluations = 0, wall_ns = 0;
    double max_abs_err = 0.0, max_diff = 0.0;
    int failures = 0;
  };
  std::vector<Stat> stats;
  std::vector<hzn_result> reference(grid.size());
  for (hzn_method m : methods) {
    Stat s{m};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Evaluated e{};
      for (int r = 0; r < a.repeat; ++r) {
        e = evaluate(ctx, fn, m, grid[i]);
        s.wall_ns += e.wall_ns;
      }
      if (e.status != HZN_OK) {
        spdlog::error("bench point {} by {}: {}", i, method_name(m), e.message);
        ++s.failures;
        continue;
      }
      s.evaluations += e.result.evaluations;
      s.max_abs_err = std::max(s.max_abs_err, e.result.abs_err);
      if (m == HZN_METHOD_QUAD) reference[i] = e.result;
      const auto& x = e.result.value;
      const auto& y = reference[i].value;
      s.max_diff = std::max(s.max_diff, std::hypot(x.re - y.re, x.im - y.im));
    }
    stats.push_back(s);
  }
  bool ok = true;
  for (const auto& s : stats) ok = ok && s.failures == 0;
  if (!ok) {
    spdlog::error("grid is not legal for every method");
    return kExitUsage;
  }

  switch (out.format) {
    case Format::json: {
      Json j = envelope("bench");
      j["function"] = function_name(fn);
      j["grid"] = a.grid;
      j["points"] = grid.size();
      j["repeat"] = a.repeat;
      j["seed"] = a.seed;
      Json ms = Json::array();
      for (const auto& s : stats)
        ms.push_back({{"method", method_name(s.method)},
                      {"evaluations", s.evaluations},
                      {"wall_time_ns", s.wall_ns},
                      {"max_abs_err", s.max_abs_err},
                      {"max_diff_vs_quad", s.max_diff}});
      j["methods"] = ms;
      *out.os << hzn_cli::dump(j) << "\n";
      break;
    }
    case Format::csv:
      *out.os << "method,points,repeat,evaluations,wall_time_ns,max_abs_err,max_diff_vs_quad\n";
      for (const auto& s : stats)
        *out.os << method_name(s.method) << "," << grid.size() << "," << a.repeat << "," << s.evaluations << ","
                << s.wall_ns << "," << num(s.max_abs_err) << "," << num(s.max_diff) << "\n";
      break;
    case Format::text:
      for (const auto& s : stats)
        *out.os << method_name(s.method) << "  " << s.evaluations << " evaluations  "
                << s.wall_ns / 1e6 / a.repeat << " ms per pass  max |diff vs quad| " << num(s.max_diff) << "\n";
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

int run_list(const Output& out) {
  switch (out.format) {
    case Format::json: {
      Json j = envelope("list");
      Json ids = Json::array();
      for (std::size_t i = 0; i < hzn_identity_count(); ++i)
        ids.push_back({{"name", hzn_identity_name(i)},
                       {"description", hzn_identity_description(i)},
                       {"informational", hzn_identity_informational(i) != 0}});
      j["identities"] = ids;
      *out.os << hzn_cli::dump(j) << "\n";
      break;
    }
    case Format::csv:
      *out.os << "name,informational,description\n";
      for (std::size_t i = 0; i < hzn_identity_count(); ++i)
        *out.os << hzn_identity_name(i) << "," << hzn_identity_informational(i) << ",\""
                << hzn_identity_description(i) << "\"\n";
      break;
    case Format::text:
      for (std::size_t i = 0; i < hzn_identity_count(); ++i)
        *out.os << hzn_identity_name(i) << (hzn_identity_informational(i) ? "  (informational)" : "") << "\n";
      break;
  }
  return kExitOk;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("hzn");
  logger->set_pattern("hzn: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  const char* env = std::getenv("HZN_LOG_LEVEL");
  if (!env) return;
  static const std::map<std::string, spdlog::level::level_enum> levels{{"error", spdlog::level::err},
                                                                       {"warn", spdlog::level::warn},
                                                                       {"info", spdlog::level::info},
                                                                       {"debug", spdlog::level::debug}};
  const auto it = levels.find(env);
  if (it == levels.end()) {
    spdlog::warn("ignoring HZN_LOG_LEVEL='{}' (expected error, warn, info or debug)", env);
    return;
  }
  spdlog::set_level(it->second);
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Evaluate and verify the HZN function family"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", out_file;
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_file, "Write output to FILE");
  app.add_flag("--timing", timing, "Include wall times in the output");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one function by one or all methods");
  eval->add_option("--function", ea.function, "F, Fk, F3 or J")->required();
  eval->add_option("--method", ea.method, "quad, series, closed or all");
  eval->add_option("--z", ea.z, "Argument z (complex literal)");
  eval->add_option("--u", ea.u, "Parameter u");
  eval->add_option("--v", ea.v, "Parameter v");
  eval->add_option("--w", ea.w, "Parameter w (F3)");
  eval->add_option("--k", ea.k, "Log power (Fk)");
  eval->add_option("--p", ea.p, "Numerator of a rational z");
  eval->add_option("--q", ea.q, "Denominator of a rational z");
  eval->add_option("--tol", ea.tol, "Target absolute error for quad and series");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run registered identities");
  verify->add_option("--identity", va.identity, "Identity name or all");
  verify->add_option("--samples", va.samples, "Samples per identity (default per identity)");
  verify->add_option("--seed", va.seed, "Sampler seed");
  verify->add_option("--tol", va.tol, "Residual tolerance (default per identity)");
  verify->add_option("--threads", va.threads, "Worker threads per identity");

  auto* table = app.add_subcommand("table", "Tabulate special values against quadrature");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compare methods over a parameter grid");
  bench->add_option("--function", ba.function, "F, Fk or F3");
  bench->add_option("--grid", ba.grid, "random or table1");
  bench->add_option("--z", ba.z, "Argument z for the random grid");
  bench->add_option("--points", ba.points, "Grid size");
  bench->add_option("--repeat", ba.repeat, "Repetitions per point");
  bench->add_option("--k", ba.k, "Log power (Fk)");
  bench->add_option("--seed", ba.seed, "Grid seed");
  bench->add_option("--tol", ba.tol, "Target absolute error for quad and series");

  auto* list = app.add_subcommand("list", "List registered identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out;
  out.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  out.timing = timing;
  std::ofstream file;
  if (!out_file.empty()) {
    file.open(out_file);
    if (!file) {
      spdlog::error("cannot open '{}' for writing", out_file);
      return kExitUsage;
    }
    out.os = &file;
  }

  try {
    if (*eval) return run_eval(ea, out);
    if (*verify) return run_verify(va, out);
    if (*table) return run_table(out);
    if (*bench) return run_bench(ba, out);
    if (*list) return run_list(out);
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitMath;
  }
  return kExitUsage;
}
