#include "hzn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "hzn/domains.hpp"

namespace hzn::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kStep0 = 0.5;
constexpr double kUnitRange = 4.0;  // |s| <= 4 on the tanh-sinh axis
constexpr double kHalfLineLow = -4.5;
constexpr double kHalfLineHigh = 3.5;
constexpr double kSplitDistance = 1e-2;

cplx cexpm1(cplx a) {
  const double er = std::expm1(a.real());
  const double half_sin = std::sin(0.5 * a.imag());
  const double re = er * std::cos(a.imag()) - 2.0 * half_sin * half_sin;
  const double im = (er + 1.0) * std::sin(a.imag());
  return {re, im};
}

cplx clog1p(cplx z) {
  if (std::abs(z) < 0.5) {
    const double x = z.real(), y = z.imag();
    return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
  }
  return domains::principal_log(1.0 + z);
}

double log_t(double t, double one_minus_t) {
  return t < 0.5 ? std::log(t) : std::log1p(-one_minus_t);
}

// Tanh-sinh on a sub-interval [a, b] of [0, 1]:
//   t = a + (b - a) sigma(s),  sigma(s) = 1 / (1 + exp(-pi sinh s)).
struct Accumulator {
  cplx sum{};
  std::int64_t evaluations = 0;
};

void add_unit_points(const UnitIntegrand& f, double a, double b, double step, bool odd_only, Accumulator& acc) {
  const double width = b - a;
  const long count = static_cast<long>(std::floor(kUnitRange / step));
  for (long j = -count; j <= count; ++j) {
    if (odd_only && (j % 2 == 0)) continue;
    const double s = j * step;
    const double e = std::exp(std::numbers::pi * std::sinh(s));
    const double sigma = e / (1.0 + e);        // 1/(1+exp(-x))
    const double comp = 1.0 / (1.0 + e);       // 1 - sigma
    const double weight = std::numbers::pi * std::cosh(s) * sigma * comp * width;
    if (weight == 0.0 || !std::isfinite(weight)) continue;
    const double t = a + width * sigma;
    const double one_minus_t = (1.0 - b) + width * comp;
    if (t <= 0.0 || one_minus_t <= 0.0) continue;
    const cplx y = f(t, one_minus_t);
    ++acc.evaluations;
    if (is_finite(y)) acc.sum += weight * y;
  }
}

ValueWithError integrate_segment(const UnitIntegrand& f, double a, double b, const QuadConfig& cfg) {
  Accumulator acc;
  double step = kStep0;
  add_unit_points(f, a, b, step, false, acc);
  cplx previous = acc.sum * step;
  ValueWithError out;
  out.method = Method::quadrature;
  out.converged = false;
  out.abs_err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= cfg.max_levels; ++level) {
    step *= 0.5;
    add_unit_points(f, a, b, step, true, acc);
    const cplx current = acc.sum * step;
    const double diff = std::abs(current - previous);
    out.value = current;
    out.abs_err = diff;
    previous = current;
    if (level >= 3 && diff <= cfg.target_abs_err) {
      out.converged = true;
      break;
    }
  }
  out.evaluations = std::max<std::int64_t>(acc.evaluations, 1);
  return out;
}

void check_z(cplx z) {
  require_finite(z, "z");
  if (!(z.real() > 0.0)) fail(Errc::domain, "quadrature requires Re z > 0 (use integrate_j for J at Re z < 0)");
}

void check_u(cplx u, const char* name) {
  require_finite(u, name);
  if (u.imag() == 0.0 && u.real() > 1.0)
    fail(Errc::domain, std::string(name) + " lies on (1, inf), outside L");
}

std::vector<double> pole_breakpoints(cplx v, const QuadConfig& cfg) {
  require_finite(v, "v");
  if (v.imag() == 0.0 && v.real() >= 1.0) fail(Errc::domain, "v lies on [1, inf), outside L'");
  const double d = pole_distance(v);
  if (d < cfg.pole_clearance)
    fail(Errc::near_pole, "1/v is within " + std::to_string(d) + " of the integration path");
  std::vector<double> cuts;
  if (d <= kSplitDistance) {
    const double foot = (1.0 / v).real();
    if (foot > 0.0 && foot < 1.0) cuts.push_back(foot);
  }
  return cuts;
}

// 1 / (1/v - t) = v / (1 - v t), with 1 - v t = (1 - v) + v (1 - t).
cplx pole_factor(cplx v, double one_minus_t) {
  if (v == cplx{}) return {};
  return v / ((1.0 - v) + v * one_minus_t);
}

ValueWithError finish(ValueWithError r) {
  r.method = Method::quadrature;
  return r;
}

}  // namespace

void QuadConfig::validate() const {
  if (!(target_abs_err > 0.0 && target_abs_err < 1.0))
    fail(Errc::invalid_argument, "QuadConfig: target_abs_err must lie in (0, 1)");
  if (max_levels < 3 || max_levels > 20) fail(Errc::invalid_argument, "QuadConfig: max_levels must lie in [3, 20]");
  if (!(pole_clearance > 0.0)) fail(Errc::invalid_argument, "QuadConfig: pole_clearance must be positive");
}

double pole_distance(cplx v) {
  if (v == cplx{}) return std::numeric_limits<double>::infinity();
  const cplx p = 1.0 / v;
  if (p.real() >= 0.0 && p.real() <= 1.0) return std::abs(p.imag());
  return std::min(std::abs(p), std::abs(p - 1.0));
}

cplx log_one_minus_u_tz(cplx u, cplx z, double t, double one_minus_t) {
  const cplx zlt = z * log_t(t, one_minus_t);
  if (zlt.real() < -745.0) return {};
  const cplx x = u * std::exp(zlt);
  if (std::abs(x) < 0.5) return clog1p(-x);
  // 1 - u t^z = (1 - u) - u (t^z - 1), exact cancellation when u == 1.
  return domains::principal_log((1.0 - u) - u * cexpm1(zlt));
}

ValueWithError integrate_unit(const UnitIntegrand& f, const QuadConfig& cfg, std::span<const double> breakpoints) {
  cfg.validate();
  std::vector<double> edges{0.0};
  for (double b : breakpoints)
    if (b > 0.0 && b < 1.0) edges.push_back(b);
  edges.push_back(1.0);
  std::sort(edges.begin(), edges.end());
  ValueWithError total;
  total.evaluations = 0;
  total.abs_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (edges[i + 1] <= edges[i]) continue;
    QuadConfig piece = cfg;
    piece.target_abs_err = cfg.target_abs_err / static_cast<double>(edges.size() - 1);
    const ValueWithError r = integrate_segment(f, edges[i], edges[i + 1], piece);
    total.value += r.value;
    total.abs_err += r.abs_err;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  return finish(total);
}

ValueWithError integrate_half_line(const std::function<cplx(double)>& f, const QuadConfig& cfg) {
  cfg.validate();
  // x = exp(pi/2 sinh s), dx = pi/2 cosh s x ds.
  cplx sum{};
  std::int64_t evals = 0;
  auto add = [&](double step, bool odd_only) {
    const long lo = static_cast<long>(std::ceil(kHalfLineLow / step));
    const long hi = static_cast<long>(std::floor(kHalfLineHigh / step));
    for (long j = lo; j <= hi; ++j) {
      if (odd_only && (j % 2 == 0)) continue;
      const double s = j * step;
      const double x = std::exp(kHalfPi * std::sinh(s));
      const double weight = kHalfPi * std::cosh(s) * x;
      if (!(x > 0.0) || !std::isfinite(weight)) continue;
      const cplx y = f(x);
      ++evals;
      if (is_finite(y)) sum += weight * y;
    }
  };
  double step = kStep0;
  add(step, false);
  cplx previous = sum * step;
  ValueWithError out;
  out.converged = false;
  for (int level = 1; level <= cfg.max_levels; ++level) {
    step *= 0.5;
    add(step, true);
    const cplx current = sum * step;
    out.value = current;
    out.abs_err = std::abs(current - previous);
    previous = current;
    if (level >= 3 && out.abs_err <= cfg.target_abs_err) {
      out.converged = true;
      break;
    }
  }
  out.evaluations = std::max<std::int64_t>(evals, 1);
  return finish(out);
}

ValueWithError integrate_f(cplx z, cplx u, cplx v, const QuadConfig& cfg) {
  return integrate_fk(z, u, v, 1, cfg);
}

ValueWithError integrate_fk(cplx z, cplx u, cplx v, int k, const QuadConfig& cfg) {
  check_z(z);
  check_u(u, "u");
  if (k < 1 || k > 6) fail(Errc::domain, "integrate_fk: k must lie in [1, 6]");
  const auto cuts = pole_breakpoints(v, cfg);
  auto f = [=](double t, double omt) -> cplx {
    const cplx lg = log_one_minus_u_tz(u, z, t, omt);
    cplx p = lg;
    for (int i = 1; i < k; ++i) p *= lg;
    return p * pole_factor(v, omt);
  };
  return integrate_unit(f, cfg, cuts);
}

ValueWithError integrate_f3(cplx z, cplx u, cplx v, cplx w, const QuadConfig& cfg) {
  check_z(z);
  check_u(u, "u");
  check_u(w, "w");
  const auto cuts = pole_breakpoints(v, cfg);
  auto f = [=](double t, double omt) -> cplx {
    return log_one_minus_u_tz(u, z, t, omt) * log_one_minus_u_tz(w, z, t, omt) * pole_factor(v, omt);
  };
  return integrate_unit(f, cfg, cuts);
}

ValueWithError integrate_j(cplx z, const QuadConfig& cfg) {
  require_finite(z, "z");
  if (z.real() == 0.0) fail(Errc::domain, "integrate_j requires Re z != 0");
  const bool reflected = z.real() < 0.0;
  auto f = [=](double t, double omt) -> cplx {
    const double lt = log_t(t, omt);
    cplx num;
    if (reflected) {
      const cplx e = std::exp(-z * lt);
      num = z * lt + clog1p(e);
    } else {
      const cplx zlt = z * lt;
      num = zlt.real() < -745.0 ? cplx{} : clog1p(std::exp(zlt));
    }
    return num / (1.0 + t);
  };
  return integrate_unit(f, cfg);
}

}  // namespace hzn::quad
