#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hzn/quadrature.hpp"
#include "hzn/series.hpp"

using hzn::cplx;
using hzn::Errc;
using namespace hzn::series;

namespace {

double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

cplx draw_disk(std::mt19937_64& g, double radius) {
  return std::polar(radius * std::sqrt(uniform(g)), 2.0 * std::numbers::pi * uniform(g));
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const hzn::Error& e) {
    return e.code();
  }
  FAIL("expected hzn::Error");
  return Errc::invalid_argument;
}

// Coefficient of x^M in (sum_{m>=1} x^m/m)^k by enumerating all ordered
// k-tuples (m_1..m_k) with m_i >= 1 summing to M.
double composition_sum(int k, int m) {
  if (k == 0) return m == 0 ? 1.0 : 0.0;
  double s = 0.0;
  for (int first = 1; first <= m - (k - 1); ++first) s += composition_sum(k - 1, m - first) / first;
  return s;
}

double stirling1_unsigned(int n, int k) {
  std::vector<std::vector<double>> s(n + 1, std::vector<double>(n + 1, 0.0));
  s[0][0] = 1.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + (i - 1) * s[i - 1][j];
  return s[n][k];
}

}  // namespace

TEST_CASE("log-power coefficients") {
  const auto c1 = logpower_coeffs(1, 50);
  for (int m = 1; m <= 50; ++m) CHECK(c1[m] == doctest::Approx(1.0 / m).epsilon(1e-15));
  const auto c2 = logpower_coeffs(2, 10);
  CHECK(c2[2] == 1.0);
  CHECK(c2[3] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(c2[1] == 0.0);
  for (int k = 1; k <= 6; ++k) {
    const auto c = logpower_coeffs(k, 12);
    CHECK(c[k] == doctest::Approx(1.0).epsilon(1e-15));
    for (int m = k; m <= 12; ++m) {
      CAPTURE(k);
      CAPTURE(m);
      CHECK(c[m] > 0.0);
      CHECK(c[m] == doctest::Approx(composition_sum(k, m)).epsilon(1e-14));
      CHECK(c[m] == doctest::Approx(std::tgamma(k + 1) * stirling1_unsigned(m, k) / std::tgamma(m + 1)).epsilon(1e-13));
    }
  }
  CHECK(code_of([] { logpower_coeffs(0, 10); }) == Errc::domain);
  CHECK(code_of([] { logpower_coeffs(7, 10); }) == Errc::domain);
  CHECK(code_of([] { logpower_coeffs(3, 2); }) == Errc::domain);
  CHECK(code_of([] { logpower_coeffs(2, 100001); }) == Errc::resource);
  CHECK(logpower_coeffs(2, 100000).max_index() == 100000);
}

TEST_CASE("collapsed sum equals the k-fold nested sum on small instances") {
  const cplx z{0.8, 0.3}, u{0.4, -0.2}, v{-0.5, 0.1};
  constexpr int kIdx = 12;
  auto inner = [&](int m) {
    cplx s = 0.0;
    for (int l = 1; l <= kIdx; ++l) s += std::pow(v, l) / (z * double(m) + double(l));
    return s;
  };
  for (int k = 1; k <= 3; ++k) {
    const auto c = logpower_coeffs(k, kIdx);
    cplx collapsed = 0.0;
    for (int m = k; m <= kIdx; ++m) collapsed += c[m] * std::pow(u, m) * inner(m);
    // Direct sum over m_1..m_k >= 1 with m_1 + ... + m_k <= kIdx.
    cplx nested = 0.0;
    std::function<void(int, int, double)> rec = [&](int depth, int msum, double weight) {
      if (depth == k) {
        nested += weight * std::pow(u, msum) * inner(msum);
        return;
      }
      for (int m = 1; msum + m <= kIdx; ++m) rec(depth + 1, msum + m, weight / m);
    };
    rec(0, 0, 1.0);
    CHECK(std::abs(collapsed - nested) <= 1e-13);
  }
}

TEST_CASE("trivial and closed values") {
  CHECK(series_fk(1.0, 0.0, 0.5, 3).value == cplx{});
  CHECK(series_f3(1.0, 0.0, 0.5, 0.3).value == cplx{});
  CHECK(series_fk(1.0, 0.5, 0.0, 1).value == cplx{});
  const double target = -std::pow(std::log(0.5), 3) / 3.0;
  const auto r = series_fk(1.0, 0.5, 0.5, 2);
  CHECK(std::abs(r.value - target) <= 1e-10);
  CHECK(r.method == hzn::Method::series);
  CHECK(r.converged);
  CHECK(r.abs_err <= 1e-12);
}

TEST_CASE("agreement with quadrature") {
  CHECK(std::abs(series_fk(1.0, 0.5, -0.9, 1).value - hzn::quad::integrate_f(1.0, 0.5, -0.9).value) <= 1e-10);
  CHECK(std::abs(series_f3(1.0, 0.4, 0.2, -0.5).value - hzn::quad::integrate_f3(1.0, 0.4, 0.2, -0.5).value) <= 1e-10);
  std::mt19937_64 g(50);
  for (int i = 0; i < 50; ++i) {
    const cplx z{0.2 + 2.0 * uniform(g), 2.0 * uniform(g) - 1.0};
    const cplx u = draw_disk(g, 0.7), v = draw_disk(g, 0.7), w = draw_disk(g, 0.7);
    const int k = 1 + static_cast<int>(g() % 4);
    const auto s = series_fk(z, u, v, k), q = hzn::quad::integrate_fk(z, u, v, k);
    CHECK(std::abs(s.value - q.value) <= std::max(1e-11, s.abs_err + q.abs_err));
    const auto s3 = series_f3(z, u, v, w), q3 = hzn::quad::integrate_f3(z, u, v, w);
    CHECK(std::abs(s3.value - q3.value) <= std::max(1e-11, s3.abs_err + q3.abs_err));
  }
}

TEST_CASE("continuation to Re z < 0 is stable under tolerance halving") {
  const cplx z{-0.5, 0.5};
  SeriesConfig tight;
  tight.tol = 0.5e-12;
  const auto a = series_f3(z, 0.3, 0.3, 0.3), b = series_f3(z, 0.3, 0.3, 0.3, tight);
  CHECK(hzn::is_finite(a.value));
  CHECK(std::abs(a.value - b.value) <= a.abs_err + b.abs_err);
  const auto c = series_fk(cplx{-1.3, 0.4}, cplx{0.2, 0.5}, -0.6, 3), d = series_fk(cplx{-1.3, 0.4}, cplx{0.2, 0.5}, -0.6, 3, tight);
  CHECK(std::abs(c.value - d.value) <= c.abs_err + d.abs_err);
}

TEST_CASE("truncation bound is sound") {
  std::mt19937_64 g(8);
  for (int i = 0; i < 20; ++i) {
    const cplx z{0.3 + uniform(g), uniform(g) - 0.5};
    const cplx u = draw_disk(g, 0.7), v = draw_disk(g, 0.7), w = draw_disk(g, 0.7);
    SeriesConfig small, doubled;
    small.max_index = 24;
    doubled.max_index = 48;
    const auto a = series_fk(z, u, v, 2, small), b = series_fk(z, u, v, 2, doubled);
    CHECK(std::abs(a.value - b.value) <= a.abs_err);
    const auto a3 = series_f3(z, u, v, w, small), b3 = series_f3(z, u, v, w, doubled);
    CHECK(std::abs(a3.value - b3.value) <= a3.abs_err);
  }
}

TEST_CASE("evaluation count grows as the tolerance shrinks") {
  std::int64_t last = 0;
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    SeriesConfig c;
    c.tol = tol;
    const auto r = series_fk(cplx{1.0, 0.2}, 0.6, -0.6, 2, c);
    CHECK(r.evaluations > last);
    last = r.evaluations;
  }
}

TEST_CASE("errors") {
  CHECK(code_of([] { series_fk(1.0, 1.0, 0.5, 1); }) == Errc::convergence);
  CHECK(code_of([] { series_fk(1.0, 0.5, cplx{0.0, 1.0}, 1); }) == Errc::convergence);
  CHECK(code_of([] { series_f3(1.0, 0.5, 0.5, -1.2); }) == Errc::convergence);
  CHECK(code_of([] { series_fk(-0.5, 0.5, 0.5, 1); }) == Errc::near_pole);
  CHECK(code_of([] { series_fk(cplx{-1.0 / 3.0, 1e-12}, 0.5, 0.5, 1); }) == Errc::near_pole);
  CHECK(code_of([] { series_fk(1.0, 0.5, 0.5, 7); }) == Errc::domain);
  SeriesConfig bad;
  bad.max_index = 4;
  CHECK(code_of([&] { series_fk(1.0, 0.5, 0.5, 1, bad); }) == Errc::invalid_argument);
}
