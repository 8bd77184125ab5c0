#include "hzn/polylog.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hzn/domains.hpp"

namespace hzn::polylog {

using constants::pi;

namespace {

constexpr double kTiny = 1e-17;

// zeta(2..12); larger arguments are summed directly.
constexpr std::array<double, 13> kZetaTable = {
    0.0,
    0.0,
    1.64493406684822643647241516665,
    1.20205690315959428539973816151,
    1.08232323371113819151600369654,
    1.03692775514336992633136548646,
    1.01734306198444913971451792979,
    1.00834927738192282683979754985,
    1.00407735619794433937868523851,
    1.00200839282608221441785276923,
    1.00099457512781808533714595890,
    1.00049418860411946455870228253,
    1.00024608655330804829863799805,
};

// Bernoulli numbers B_0..B_8 (B_1 = -1/2).
constexpr std::array<double, 9> kBernoulli = {
    1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0, 0.0, 1.0 / 42.0, 0.0, -1.0 / 30.0,
};

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

cplx bernoulli_poly(int s, cplx x) {
  cplx r{};
  for (int k = 0; k <= s; ++k) {
    if (kBernoulli[static_cast<std::size_t>(k)] == 0.0) continue;
    r += binomial(s, k) * kBernoulli[static_cast<std::size_t>(k)] * std::pow(x, s - k);
  }
  return r;
}

cplx log1p_c(cplx z) {
  const double x = z.real(), y = z.imag();
  if (std::abs(z) < 0.5) {
    const double m2 = 2.0 * x + x * x + y * y;  // |1+z|^2 - 1
    return {0.5 * std::log1p(m2), std::atan2(y, 1.0 + x)};
  }
  return domains::principal_log(1.0 + z);
}

cplx series_small(int s, cplx z) {
  cplx sum{}, zn = z;
  for (int n = 1; n < 400; ++n) {
    const cplx term = zn / std::pow(static_cast<double>(n), s);
    sum += term;
    if (std::abs(term) <= kTiny * std::abs(sum)) break;
    zn *= z;
  }
  return sum;
}

// Expansion about z = 1 in mu = log z, valid for |mu| < 2*pi:
//   Li_s(z) = sum_{k != s-1} zeta(s-k) mu^k / k!
//           + mu^(s-1)/(s-1)! * (H_{s-1} - log(-mu)).
// log_neg_mu is passed in so that callers on the cut can pick the side.
cplx log_expansion(int s, cplx mu, cplx log_neg_mu) {
  cplx sum{};
  cplx mu_k{1.0, 0.0};
  double k_fact = 1.0;
  for (int k = 0; k < s; ++k) {
    if (k == s - 1) {
      sum += mu_k / k_fact * (harmonic(s - 1) - log_neg_mu);
    } else {
      sum += zeta(s - k) * mu_k / k_fact;
    }
    mu_k *= mu;
    k_fact *= (k + 1);
  }
  // k = s: zeta(0) = -1/2.
  sum += -0.5 * mu_k / k_fact;
  // k = s - 1 + 2m, m >= 1 (zeta vanishes at the even negatives):
  //   zeta(1-2m) mu^k / k! = 2 zeta(2m) r_m / [(2m)(2m+1)...(2m+s-1)],
  //   r_m = (-1)^m mu^(s-1+2m) / (2 pi)^(2m).
  const cplx mu2 = mu * mu;
  cplx r = std::pow(mu, s - 1);
  const double inv_two_pi_sq = 1.0 / (4.0 * pi * pi);
  for (int m = 1; m < 200; ++m) {
    r *= -mu2 * inv_two_pi_sq;
    double denom = 1.0;
    for (int j = 0; j < s; ++j) denom *= (2.0 * m + j);
    const cplx term = 2.0 * zeta(2 * m) * r / denom;
    sum += term;
    if (std::abs(term) <= kTiny * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// Li_s(z) + (-1)^s Li_s(1/z) = -(2 pi i)^s / s! * B_s(1/2 + log(-z)/(2 pi i)).
cplx inversion(int s, cplx log_neg_z, cplx li_inv) {
  const cplx two_pi_i{0.0, 2.0 * pi};
  const cplx rhs = -std::pow(two_pi_i, s) / factorial(s) * bernoulli_poly(s, 0.5 + log_neg_z / two_pi_i);
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  return rhs - sign * li_inv;
}

cplx li_off_cut(int s, cplx z) {
  const double r = std::abs(z);
  if (r <= 0.5) return series_small(s, z);
  if (r >= 2.0) {
    const cplx inv = 1.0 / z;
    return inversion(s, domains::principal_log(-z), series_small(s, inv));
  }
  const cplx mu = domains::principal_log(z);
  return log_expansion(s, mu, domains::principal_log(-mu));
}

// Li_s(x + i0) for real x > 1.
cplx li_cut_above(int s, double x) {
  const double lx = std::log(x);
  if (s == 1) return {-std::log(x - 1.0), pi};
  if (x >= 2.0) {
    // -z = -x - i0 sits just below the negative axis.
    const cplx log_neg_z{lx, -pi};
    return inversion(s, log_neg_z, series_small(s, cplx{1.0 / x, 0.0}));
  }
  // mu = log x + i0, so -mu lies just below the negative axis.
  const cplx log_neg_mu{std::log(lx), -pi};
  return log_expansion(s, cplx{lx, 0.0}, log_neg_mu);
}

}  // namespace

PolyLogOrder::PolyLogOrder(int s) : s_(s) {
  if (s < kMinOrder || s > kMaxOrder)
    fail(Errc::domain, "polylog order must lie in [1, 8], got " + std::to_string(s));
}

double zeta(int n) {
  if (n < 2) fail(Errc::domain, "zeta: argument must be >= 2");
  if (n < static_cast<int>(kZetaTable.size())) return kZetaTable[static_cast<std::size_t>(n)];
  double sum = 1.0;
  for (int k = 2; k < 64; ++k) {
    const double t = std::pow(static_cast<double>(k), -n);
    sum += t;
    if (t < 1e-18) break;
  }
  return sum;
}

cplx li(PolyLogOrder order, cplx z, BranchMode branch) {
  const int s = order.value();
  require_finite(z, "polylog argument");
  if (z == cplx{}) return {};
  const bool on_cut = z.imag() == 0.0 && z.real() > 1.0;
  if (z.imag() == 0.0 && z.real() == 1.0) {
    if (s == 1) fail(Errc::pole, "Li_1 has a pole at z = 1");
    return {zeta(s), 0.0};
  }
  if (on_cut) {
    if (branch == BranchMode::principal)
      fail(Errc::branch, "Li_" + std::to_string(s) + "(" + std::to_string(z.real()) +
                             ") lies on the branch cut [1, inf)");
    const cplx above = li_cut_above(s, z.real());
    return branch == BranchMode::limit_from_above ? above : std::conj(above);
  }
  if (s == 1) return -log1p_c(-z);
  return li_off_cut(s, z);
}

double li_derivative_check(PolyLogOrder s, cplx z, double h) {
  if (z == cplx{}) fail(Errc::domain, "li_derivative_check: z must be nonzero");
  if (h < 1e-6 || h > 1e-4) fail(Errc::domain, "li_derivative_check: h must lie in [1e-6, 1e-4]");
  const int next = s.value() + 1;
  const cplx fd = (li(next, z + h) - li(next, z - h)) / (2.0 * h);
  return std::abs(fd - li(s, z) / z);
}

double rogers_residual(cplx a, cplx b) {
  const cplx ab = a * b;
  if (ab == cplx{1.0, 0.0}) fail(Errc::domain, "rogers_residual: AB must differ from 1");
  const cplx lhs = li(2, a) + li(2, b) - li(2, ab);
  const cplx rhs = li(2, (a - ab) / (1.0 - ab)) + li(2, (b - ab) / (1.0 - ab)) +
                   domains::principal_log((1.0 - a) / (1.0 - ab)) * domains::principal_log((1.0 - b) / (1.0 - ab));
  return std::abs(lhs - rhs);
}

double abel_residual(cplx x, cplx y) {
  const cplx lhs = li(2, x / (1.0 - y)) + li(2, y / (1.0 - x)) - li(2, x * y / ((1.0 - x) * (1.0 - y)));
  const cplx rhs = li(2, x) + li(2, y) + domains::principal_log(1.0 - x) * domains::principal_log(1.0 - y);
  return std::abs(lhs - rhs);
}

AltMzvResult alt_mzv_31(long terms) {
  if (terms < 2) fail(Errc::domain, "alt_mzv_31: terms must be >= 2");
  // sum_m (-1)^m / m^3 * A_{m-1},  A_j = sum_{n<=j} (-1)^n / n.
  double alt_harmonic = 0.0;
  double sum = 0.0;
  for (long m = 2; m <= terms; ++m) {
    const long n = m - 1;
    alt_harmonic += (n % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n);
    const double md = static_cast<double>(m);
    sum += (m % 2 == 0 ? 1.0 : -1.0) * alt_harmonic / (md * md * md);
  }
  // A_{m-1} = -ln 2 + (-1)^(m-1) r with 0 < r <= 1/m: the -ln 2 part is an
  // alternating tail, the remainder is majorised by sum_{m>N} 1/m^4.
  const double nd = static_cast<double>(terms);
  const double tail = constants::ln2 / std::pow(nd + 1.0, 3) + 1.0 / (3.0 * nd * nd * nd);
  return {sum, tail};
}

}  // namespace hzn::polylog
