#include "hzn/domains.hpp"

#include <cmath>
#include <numbers>

namespace hzn::domains {

namespace {

bool on_real_ray(cplx x, double from, bool closed) {
  if (x.imag() != 0.0) return false;
  return closed ? x.real() >= from : x.real() > from;
}

}  // namespace

bool membership(cplx x, Set set) {
  if (x == cplx{}) return false;
  switch (set) {
    case Set::D: return std::abs(x) <= 1.0;
    case Set::Dprime: return std::abs(x) <= 1.0 && x != cplx{1.0, 0.0};
    case Set::L: return !on_real_ray(x, 1.0, false);
    case Set::Lprime: return !on_real_ray(x, 1.0, true);
  }
  return false;
}

cplx principal_log(cplx x) {
  if (x.imag() == 0.0) {
    if (x.real() < 0.0) return {std::log(-x.real()), std::numbers::pi};
    return {std::log(x.real()), 0.0};
  }
  return std::log(x);
}

cplx principal_root(cplx x, int n) {
  if (n < 1) fail(Errc::domain, "principal_root: n must be >= 1");
  if (x == cplx{}) fail(Errc::domain, "principal_root: zero has no principal root");
  if (n == 1) return x;
  if (x.imag() == 0.0 && x.real() > 0.0) return {std::pow(x.real(), 1.0 / n), 0.0};
  const cplx lg = principal_log(x);
  return std::polar(std::exp(lg.real() / n), lg.imag() / n);
}

RootsOfUnity roots_of_unity(int n) {
  if (n < 1) fail(Errc::domain, "roots_of_unity: n must be >= 1");
  RootsOfUnity r;
  r.n = n;
  r.roots.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    // Quarter turns are exact so that 1, i, -1, -i carry no rounding noise.
    if ((4 * j) % n == 0) {
      static constexpr cplx quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      r.roots.push_back(quarter[(4 * j / n) % 4]);
      continue;
    }
    const double angle = 2.0 * std::numbers::pi * j / n;
    r.roots.emplace_back(std::cos(angle), std::sin(angle));
  }
  return r;
}

cplx partial_fraction_sum(cplx y, int n) {
  require_finite(y, "partial_fraction_sum: Y");
  const auto ru = roots_of_unity(n);
  cplx sum{};
  for (const cplx b : ru.roots) {
    const cplx d = 1.0 - b * y;
    if (std::abs(d) < 1e-14) fail(Errc::pole, "partial_fraction_sum: Y is an n-th root of unity");
    sum += 1.0 / d;
  }
  return sum;
}

EvalParams make_params(cplx z, cplx u, cplx v, std::optional<cplx> w, int k) {
  require_finite(z, "z");
  require_finite(u, "u");
  require_finite(v, "v");
  if (w) require_finite(*w, "w");
  if (k < 1) fail(Errc::domain, "k must be a positive integer");
  EvalParams p;
  p.z = z;
  p.u = u;
  p.v = v;
  p.w = w;
  p.k = k;
  p.flags.u_in_L = membership(u, Set::L);
  p.flags.u_in_D = membership(u, Set::D);
  p.flags.u_in_Dprime = membership(u, Set::Dprime);
  p.flags.v_in_Lprime = membership(v, Set::Lprime);
  p.flags.v_in_D = membership(v, Set::D);
  p.flags.v_in_Dprime = membership(v, Set::Dprime);
  if (w) {
    p.flags.w_in_L = membership(*w, Set::L);
    p.flags.w_in_D = membership(*w, Set::D);
    p.flags.w_in_Dprime = membership(*w, Set::Dprime);
  }
  return p;
}

}  // namespace hzn::domains
