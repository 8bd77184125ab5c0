#include "hzn/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hzn::series {

namespace {

struct InnerSum {
  cplx value;
  double tail = 0.0;
  std::int64_t terms = 0;
  bool converged = true;
};

// sum_{l>=1} v^l / (zM + l), stopped once the geometric tail bound
//   |v|^(L+1) / ((1 - |v|) * min_{l>L} |zM + l|)
// drops below tol.
InnerSum inner_sum(cplx z, int m, cplx v, double tol, const SeriesConfig& cfg) {
  InnerSum out;
  const double av = std::abs(v);
  const cplx zm = z * static_cast<double>(m);
  const double im_floor = std::abs(zm.imag());
  cplx vl = 1.0;
  double avl = 1.0;
  for (int l = 1; l <= cfg.max_index; ++l) {
    vl *= v;
    avl *= av;
    const cplx denom = zm + static_cast<double>(l);
    const double ad = std::abs(denom);
    if (ad < cfg.denom_floor)
      fail(Errc::near_pole, "series denominator |zM + l| = " + std::to_string(ad) + " at M = " + std::to_string(m) +
                                ", l = " + std::to_string(l) + " is below denom_floor");
    out.value += vl / denom;
    ++out.terms;
    const double shift = zm.real() + l + 1.0;
    const double d_low = std::max(shift, im_floor);
    if (shift > 0.0 && d_low > 0.0) {
      out.tail = avl * av / ((1.0 - av) * d_low);
      if (out.tail <= tol) return out;
    }
  }
  out.converged = false;
  const double d_low = std::max(zm.real() + cfg.max_index + 1.0, im_floor);
  out.tail = d_low > 0.0 ? avl * av / ((1.0 - av) * d_low) : std::numeric_limits<double>::infinity();
  return out;
}

// Lower bound on |zM + l| over M >= m_next, l >= 1.
double outer_denominator_bound(cplx z, int m_next, const SeriesConfig& cfg) {
  if (z.real() >= 0.0) return 1.0 + z.real() * m_next;
  return std::max(std::abs(z.imag()) * m_next, cfg.denom_floor);
}

void check_modulus(cplx x, const char* name) {
  require_finite(x, name);
  if (std::abs(x) >= 1.0)
    fail(Errc::convergence, std::string("series requires |") + name + "| < 1");
}

// sum_{M >= m} k (1 + ln M)^(k-1) / M * r^M, a majorant of sum c_k(M) r^M
// (c_k(M) <= k H_{M-1}^(k-1) / M). Consecutive majorant terms shrink by at
// most q = r (1 + 1/m)^(k-2).
double coeff_tail(int k, int m, double r) {
  const double q = r * std::pow(1.0 + 1.0 / m, std::max(k - 2, 0));
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  const double lead = k * std::pow(1.0 + std::log(static_cast<double>(m)), k - 1) / m * std::pow(r, m);
  return lead / (1.0 - q);
}

// Generic driver: block_coeff(M) multiplies the inner l-sum and
// block_tail(m) majorizes sum_{M >= m} |block_coeff(M)|.
template <class Coeff, class Tail>
ValueWithError run(cplx z, cplx v, int m_start, Coeff&& block_coeff, Tail&& block_tail, const SeriesConfig& cfg) {
  ValueWithError out;
  out.method = Method::series;
  out.evaluations = 0;
  if (v == cplx{}) {
    out.evaluations = 1;
    return out;
  }
  const double av = std::abs(v);
  const double inner_budget = 0.5 * cfg.tol / cfg.max_index;
  double outer_tail = std::numeric_limits<double>::infinity();
  for (int m = m_start; m <= cfg.max_index; ++m) {
    const cplx a = block_coeff(m);
    const double aa = std::abs(a);
    if (aa > 0.0) {
      const InnerSum s = inner_sum(z, m, v, inner_budget / aa, cfg);
      out.value += a * s.value;
      out.abs_err += aa * s.tail;
      out.evaluations += s.terms;
      out.converged = out.converged && s.converged;
    }
    // sum_{M > m} |a(M)| * sum_l |v|^l / |zM + l|
    outer_tail = block_tail(m + 1) * av / ((1.0 - av) * outer_denominator_bound(z, m + 1, cfg));
    if (outer_tail <= 0.5 * cfg.tol) break;
  }
  if (!(outer_tail <= 0.5 * cfg.tol)) out.converged = false;
  out.abs_err += outer_tail;
  out.evaluations = std::max<std::int64_t>(out.evaluations, 1);
  return out;
}

}  // namespace

void SeriesConfig::validate() const {
  if (!(tol > 0.0)) fail(Errc::invalid_argument, "SeriesConfig: tol must be positive");
  if (max_index < 8) fail(Errc::invalid_argument, "SeriesConfig: max_index must be at least 8");
  if (max_index > kMaxCoeffIndex) fail(Errc::resource, "SeriesConfig: max_index exceeds 1e5");
  if (!(denom_floor > 0.0)) fail(Errc::invalid_argument, "SeriesConfig: denom_floor must be positive");
}

LogPowerCoeffs logpower_coeffs(int k, int m_max) {
  if (k < 1 || k > kMaxLogPower) fail(Errc::domain, "logpower_coeffs: k must lie in [1, 6]");
  if (m_max < k) fail(Errc::domain, "logpower_coeffs: M_max must be at least k");
  if (m_max > kMaxCoeffIndex) fail(Errc::resource, "logpower_coeffs: M_max exceeds 1e5");
  // (1 - x) f_k' = k f_{k-1} gives (M+1) c_k(M+1) = M c_k(M) + k c_{k-1}(M).
  const std::size_t n = static_cast<std::size_t>(m_max) + 1;
  std::vector<double> prev(n, 0.0), cur(n, 0.0);
  prev[0] = 1.0;
  for (int j = 1; j <= k; ++j) {
    std::fill(cur.begin(), cur.end(), 0.0);
    for (std::size_t m = 0; m + 1 < n; ++m)
      cur[m + 1] = (static_cast<double>(m) * cur[m] + j * prev[m]) / static_cast<double>(m + 1);
    std::swap(prev, cur);
  }
  return LogPowerCoeffs{k, std::move(prev)};
}

ValueWithError series_fk(cplx z, cplx u, cplx v, int k, const SeriesConfig& cfg) {
  cfg.validate();
  require_finite(z, "z");
  check_modulus(u, "u");
  check_modulus(v, "v");
  if (k < 1 || k > kMaxLogPower) fail(Errc::domain, "series_fk: k must lie in [1, 6]");
  const double au = std::abs(u);
  const auto c = logpower_coeffs(k, cfg.max_index + 1);
  const double sign = (k % 2) ? -1.0 : 1.0;
  // Running powers so u^M is formed once per block.
  cplx um = std::pow(u, k);
  int next_m = k;
  auto coeff = [&](int m) {
    for (; next_m < m; ++next_m) um *= u;
    return sign * c[m] * um;
  };
  if (u == cplx{}) return run(z, cplx{}, k, coeff, [](int) { return 0.0; }, cfg);
  return run(z, v, k, coeff, [&](int m) { return coeff_tail(k, m, au); }, cfg);
}

ValueWithError series_f3(cplx z, cplx u, cplx v, cplx w, const SeriesConfig& cfg) {
  cfg.validate();
  require_finite(z, "z");
  check_modulus(u, "u");
  check_modulus(v, "v");
  check_modulus(w, "w");
  const double r = std::max(std::abs(u), std::abs(w));
  if (u == cplx{} || w == cplx{}) {
    ValueWithError zero;
    zero.method = Method::series;
    return zero;
  }
  std::vector<cplx> up{1.0}, wp{1.0};
  auto coeff = [&](int m) {
    while (static_cast<int>(up.size()) <= m) {
      up.push_back(up.back() * u);
      wp.push_back(wp.back() * w);
    }
    cplx d = 0.0;
    for (int i = 1; i < m; ++i) d += up[i] * wp[m - i] / (static_cast<double>(i) * (m - i));
    return d;
  };
  // |d(M)| <= r^M c_2(M)
  return run(z, v, 2, coeff, [&](int m) { return coeff_tail(2, m, r); }, cfg);
}

}  // namespace hzn::series
