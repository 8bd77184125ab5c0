#pragma once

// Direct numerical integration of the defining integrals by the
// double-exponential (tanh-sinh) rule with level doubling. These are the
// ground-truth evaluators every closed form and series is checked against.
//
// Accuracy contract: |Im z| <= 10 Re z. Beyond that t^z oscillates too fast
// near t = 0 for the rule to resolve it; results then come back with
// converged == false rather than silently degraded.

#include <functional>
#include <span>

#include "hzn/types.hpp"

namespace hzn::quad {

struct QuadConfig {
  double target_abs_err = 1e-12;
  int max_levels = 12;
  double pole_clearance = 1e-6;  // minimum distance from 1/v to [0, 1]

  void validate() const;
};

/// Integrand on [0, 1]; receives t and 1 - t, both to full relative accuracy.
using UnitIntegrand = std::function<cplx(double t, double one_minus_t)>;

/// Integrates over [0, 1], splitting at the given interior breakpoints.
ValueWithError integrate_unit(const UnitIntegrand& f, const QuadConfig& cfg = {},
                              std::span<const double> breakpoints = {});

/// Integrates over [0, inf) with the exp-sinh map.
ValueWithError integrate_half_line(const std::function<cplx(double)>& f, const QuadConfig& cfg = {});

/// F(z;u,v) = int_0^1 log(1 - u t^z) / (1/v - t) dt
ValueWithError integrate_f(cplx z, cplx u, cplx v, const QuadConfig& cfg = {});

/// F_k(z;u,v) = int_0^1 log^k(1 - u t^z) / (1/v - t) dt, 1 <= k <= 6
ValueWithError integrate_fk(cplx z, cplx u, cplx v, int k, const QuadConfig& cfg = {});

/// F(z;u,v,w) = int_0^1 log(1 - u t^z) log(1 - w t^z) / (1/v - t) dt
ValueWithError integrate_f3(cplx z, cplx u, cplx v, cplx w, const QuadConfig& cfg = {});

/// J(z) = int_0^1 log(1 + t^z) / (1 + t) dt, for Re z != 0. For Re z < 0 the
/// integrand is continued as z log t + log(1 + t^-z).
ValueWithError integrate_j(cplx z, const QuadConfig& cfg = {});

/// Distance from 1/v to the segment [0, 1]; +inf for v == 0.
double pole_distance(cplx v);

/// log(1 - u t^z), accurate near t = 1 when u is close to 1.
cplx log_one_minus_u_tz(cplx u, cplx z, double t, double one_minus_t);

}  // namespace hzn::quad
