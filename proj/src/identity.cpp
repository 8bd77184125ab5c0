#include "hzn/identity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "hzn/closedform.hpp"
#include "hzn/polylog.hpp"
#include "hzn/quadrature.hpp"
#include "hzn/series.hpp"
#include "hzn/table.hpp"

namespace hzn::identity {

namespace {

using domains::make_params;
using domains::principal_log;

constexpr double kRadius = 0.8;
constexpr double kSeparation = 0.05;
constexpr double kFromOne = 0.1;
constexpr double kFromZero = 0.05;
constexpr int kRationals[4][2] = {{1, 2}, {2, 1}, {1, 3}, {2, 3}};

ValueWithError closed_value(cplx v) { return {v, 0.0, Method::closed_form, 1, true}; }

ValueWithError operator+(const ValueWithError& a, const ValueWithError& b) {
  return {a.value + b.value, a.abs_err + b.abs_err, a.method, a.evaluations + b.evaluations,
          a.converged && b.converged};
}

double in_range(std::mt19937_64& g, double lo, double hi) { return lo + (hi - lo) * uniform(g); }

cplx disk_point(std::mt19937_64& g, double radius) {
  while (true) {
    const cplx x{in_range(g, -radius, radius), in_range(g, -radius, radius)};
    if (std::abs(x) <= radius && std::abs(x) >= kFromZero && std::abs(1.0 - x) >= kFromOne) return x;
  }
}

template <std::size_t N>
std::array<cplx, N> distinct_points(std::mt19937_64& g, double radius = kRadius) {
  while (true) {
    std::array<cplx, N> p;
    for (cplx& x : p) x = disk_point(g, radius);
    bool ok = true;
    for (std::size_t i = 0; i < N && ok; ++i)
      for (std::size_t j = i + 1; j < N && ok; ++j) ok = std::abs(p[i] - p[j]) >= kSeparation;
    if (ok) return p;
  }
}

// Re z in [lo, hi], |Im z| <= im.
cplx right_z(std::mt19937_64& g, double lo, double hi, double im) {
  return {in_range(g, lo, hi), in_range(g, -im, im)};
}

// Re z in [-2, -0.2], 0.3 <= |Im z| <= 1, away from the negative rationals.
cplx left_z(std::mt19937_64& g) {
  const double re = in_range(g, -2.0, -0.2);
  const double im = in_range(g, 0.3, 1.0);
  return {re, uniform(g) < 0.5 ? im : -im};
}

Params uv(cplx z, cplx u, cplx v, int k = 1) { return make_params(z, u, v, std::nullopt, k); }
Params uvw(cplx z, cplx u, cplx v, cplx w, int k = 1) { return make_params(z, u, v, w, k); }

Params with_n(Params p, int n) {
  p.n = n;
  return p;
}

Params with_pq(Params p, int pp, int q) {
  p.p = pp;
  p.q = q;
  return p;
}

ValueWithError j_sum(cplx z) { return quad::integrate_j(z) + quad::integrate_j(1.0 / z); }

Params j_sample(std::mt19937_64& g, int index) {
  if (index == 0) return uv(1.0, -1.0, -1.0);
  return uv(right_z(g, 0.2, 5.0, 1.0), -1.0, -1.0);
}

ValueWithError lemma_I_integral(cplx u, cplx v, cplx w) {
  return quad::integrate_unit([=](double t, double) {
    const cplx l = principal_log((v - u) * (w * t - 1.0) / ((v - w) * (u * t - 1.0)));
    return l * l * v / (v * t - 1.0);
  });
}

ValueWithError lemma_J_integral(cplx u, cplx v, cplx w) {
  return quad::integrate_unit(
      [=](double t, double) { return u / (u * t - 1.0) * polylog::li(2, v * (1.0 - w * t) / (v - w)); });
}

series::SeriesConfig series_tol(double tol) {
  series::SeriesConfig c;
  c.tol = tol;
  return c;
}

std::vector<IdentitySpec> build() {
  std::vector<IdentitySpec> r;
  const Method Q = Method::quadrature, C = Method::closed_form, S = Method::series;
  const double pi = polylog::constants::pi;
  const double ln2 = polylog::constants::ln2;

  r.push_back({"j-two-term-log2z", "J(z) + J(1/z) = log^2 z, the right side as printed",
               [](const Params& p) { return j_sum(p.z); },
               [](const Params& p) {
                 const cplx l = principal_log(p.z);
                 return closed_value(l * l);
               },
               j_sample, 1e-8, 20, Q, C, true});
  r.push_back({"j-two-term-log2const", "J(z) + J(1/z) = log^2 2", [](const Params& p) { return j_sum(p.z); },
               [ln2](const Params&) { return closed_value(ln2 * ln2); }, j_sample, 1e-10, 50, Q, C});
  r.push_back({"j-reflection", "J(-z) = J(z) + z pi^2/12 for Re z > 0",
               [](const Params& p) { return quad::integrate_j(-p.z); },
               [](const Params& p) { return closed::j_reflection(p.z); },
               [](std::mt19937_64& g, int) { return uv(right_z(g, 0.2, 3.0, 1.0), -1.0, -1.0); }, 1e-10, 20, Q,
               Q});

  r.push_back({"mult-f-arg", "sum_a F(z;ua,v) = F(nz;u^n,v)",
               [](const Params& p) {
                 ValueWithError s = closed_value(0.0);
                 for (cplx a : domains::roots_of_unity(p.n).roots) s = s + quad::integrate_f(p.z, p.u * a, p.v);
                 s.method = Method::quadrature;
                 return s;
               },
               [](const Params& p) { return quad::integrate_f(p.z * static_cast<double>(p.n), std::pow(p.u, p.n), p.v); },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g);
                 return with_n(uv(right_z(g, 0.3, 2.0, 0.5), u, v), std::array{2, 3, 5}[i % 3]);
               },
               1e-9, 20, Q, Q});
  r.push_back({"mult-f-param", "sum_a F(z;u,va) = F(z/n;u,v^n)",
               [](const Params& p) {
                 ValueWithError s = closed_value(0.0);
                 for (cplx a : domains::roots_of_unity(p.n).roots) s = s + quad::integrate_f(p.z, p.u, p.v * a);
                 s.method = Method::quadrature;
                 return s;
               },
               [](const Params& p) { return quad::integrate_f(p.z / static_cast<double>(p.n), p.u, std::pow(p.v, p.n)); },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g);
                 return with_n(uv(right_z(g, 0.3, 2.0, 0.5), u, v), std::array{2, 3, 5}[i % 3]);
               },
               1e-9, 20, Q, Q});
  r.push_back({"mult-f3-arg", "sum_a sum_b F(z;ua,v,wb) = F(nz;u^n,v,w^n)",
               [](const Params& p) {
                 ValueWithError s = closed_value(0.0);
                 const auto roots = domains::roots_of_unity(p.n).roots;
                 for (cplx a : roots)
                   for (cplx b : roots) s = s + quad::integrate_f3(p.z, p.u * a, p.v, *p.w * b);
                 s.method = Method::quadrature;
                 return s;
               },
               [](const Params& p) {
                 return quad::integrate_f3(p.z * static_cast<double>(p.n), std::pow(p.u, p.n), p.v, std::pow(*p.w, p.n));
               },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v, w] = distinct_points<3>(g);
                 return with_n(uvw(right_z(g, 0.3, 2.0, 0.5), u, v, w), 2 + i % 2);
               },
               1e-9, 20, Q, Q});
  r.push_back({"mult-f3-param", "sum_a F(z;u,va,w) = F(z/n;u,v^n,w)",
               [](const Params& p) {
                 ValueWithError s = closed_value(0.0);
                 for (cplx a : domains::roots_of_unity(p.n).roots) s = s + quad::integrate_f3(p.z, p.u, p.v * a, *p.w);
                 s.method = Method::quadrature;
                 return s;
               },
               [](const Params& p) {
                 return quad::integrate_f3(p.z / static_cast<double>(p.n), p.u, std::pow(p.v, p.n), *p.w);
               },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v, w] = distinct_points<3>(g);
                 return with_n(uvw(right_z(g, 0.3, 2.0, 0.5), u, v, w), 2 + i % 2);
               },
               1e-9, 20, Q, Q});
  r.push_back({"mult-fk-param", "sum_b F_k(z;u,bv) = F_k(z/n;u,v^n)",
               [](const Params& p) {
                 ValueWithError s = closed_value(0.0);
                 for (cplx b : domains::roots_of_unity(p.n).roots)
                   s = s + quad::integrate_fk(p.z, p.u, p.v * b, p.k);
                 s.method = Method::quadrature;
                 return s;
               },
               [](const Params& p) {
                 return quad::integrate_fk(p.z / static_cast<double>(p.n), p.u, std::pow(p.v, p.n), p.k);
               },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g);
                 return with_n(uv(right_z(g, 0.3, 2.0, 0.5), u, v, 1 + i % 3), 2 + (i / 3) % 2);
               },
               1e-9, 20, Q, Q});

  const auto triple_at_1 = [](std::mt19937_64& g, int) {
    const auto [u, v, w] = distinct_points<3>(g);
    return uvw(1.0, u, v, w);
  };
  r.push_back({"closed-f3-at-1", "F(1;u,v,w) closed form against quadrature",
               [](const Params& p) { return closed_value(closed::f3_at_1(p.u, p.v, *p.w)); },
               [](const Params& p) { return quad::integrate_f3(1.0, p.u, p.v, *p.w); }, triple_at_1, 1e-9, 100, C,
               Q});
  r.push_back({"closed-f3-at-1-principal", "F(1;u,v,w) closed form on principal branches against quadrature",
               [](const Params& p) { return closed_value(closed::f3_at_1(p.u, p.v, *p.w, closed::Sheet::principal)); },
               [](const Params& p) { return quad::integrate_f3(1.0, p.u, p.v, *p.w); }, triple_at_1, 1e-9, 100, C, Q,
               true});
  r.push_back({"closed-f3-at-1-symmetry", "F(1;u,v,w) = F(1;w,v,u) for the closed form",
               [](const Params& p) { return closed_value(closed::f3_at_1(p.u, p.v, *p.w)); },
               [](const Params& p) { return closed_value(closed::f3_at_1(*p.w, p.v, p.u)); }, triple_at_1, 1e-10, 100,
               C, C});
  r.push_back({"closed-fk-at-1", "F_k(1;u,v) closed form against quadrature",
               [](const Params& p) { return closed_value(closed::fk_at_1(p.u, p.v, p.k)); },
               [](const Params& p) { return quad::integrate_fk(1.0, p.u, p.v, p.k); },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g);
                 return uv(1.0, u, v, 1 + i % 4);
               },
               1e-9, 40, C, Q});
  r.push_back({"closed-fk-at-1-vs-f-m-over-n", "F_1(1;u,v) from the F_k form and from the m/n form",
               [](const Params& p) { return closed_value(closed::fk_at_1(p.u, p.v, 1)); },
               [](const Params& p) { return closed_value(closed::f_at_m_over_n(p.u, p.v, 1, 1)); },
               [](std::mt19937_64& g, int) {
                 const auto [u, v] = distinct_points<2>(g);
                 return uv(1.0, u, v);
               },
               1e-11, 50, C, C});
  r.push_back({"closed-fk-1overn", "F_k(1/n;u,v) closed form against quadrature",
               [](const Params& p) { return closed_value(closed::fk_at_1_over_n(p.u, p.v, p.k, p.n)); },
               [](const Params& p) { return quad::integrate_fk(1.0 / p.n, p.u, p.v, p.k); },
               [](std::mt19937_64& g, int i) {
                 while (true) {
                   const auto [u, v] = distinct_points<2>(g);
                   const int n = 2 + (i / 3) % 2;
                   // u must stay away from every n-th root of v.
                   const cplx r = domains::principal_root(v, n);
                   bool ok = true;
                   for (cplx b : domains::roots_of_unity(n).roots) ok = ok && std::abs(u - b * r) >= kSeparation;
                   if (ok) return with_n(uv(1.0 / n, u, v, 1 + i % 3), n);
                 }
               },
               1e-9, 20, C, Q});
  r.push_back({"closed-fk-u1-1overn", "F_k(1/n;1,v) limit form against quadrature",
               [](const Params& p) { return closed_value(closed::fk_u1_at_1_over_n(p.v, p.k, p.n)); },
               [](const Params& p) { return quad::integrate_fk(1.0 / p.n, 1.0, p.v, p.k); },
               [](std::mt19937_64& g, int i) {
                 const int n = 1 + (i / 3) % 3;
                 return with_n(uv(1.0 / n, 1.0, disk_point(g, kRadius), 1 + i % 3), n);
               },
               1e-9, 18, C, Q});
  r.push_back({"closed-f-m-over-n", "F(m/n;u,v) closed form against quadrature",
               [](const Params& p) { return closed_value(closed::f_at_m_over_n(p.u, p.v, p.p, p.q)); },
               [](const Params& p) { return quad::integrate_f(static_cast<double>(p.p) / p.q, p.u, p.v); },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g);
                 const auto& pq = kRationals[i % 4];
                 return with_pq(uv(static_cast<double>(pq[0]) / pq[1], u, v), pq[0], pq[1]);
               },
               1e-9, 20, C, Q});
  r.push_back({"closed-f3-p-over-q", "F(p/q;u,v,w) closed form against quadrature",
               [](const Params& p) {
                 return closed_value(closed::f3_at_p_over_q(p.u, p.v, *p.w, closed::RationalArg(p.p, p.q)));
               },
               [](const Params& p) { return quad::integrate_f3(static_cast<double>(p.p) / p.q, p.u, p.v, *p.w); },
               [](std::mt19937_64& g, int i) {
                 const auto& pq = kRationals[i % 4];
                 while (true) {
                   const auto [u, v, w] = distinct_points<3>(g);
                   // The p-th roots of u and w must stay apart.
                   const cplx ru = domains::principal_root(u, pq[0]), rw = domains::principal_root(w, pq[0]);
                   bool ok = true;
                   for (cplx b : domains::roots_of_unity(pq[0]).roots) ok = ok && std::abs(ru - b * rw) >= kSeparation;
                   if (ok) return with_pq(uvw(static_cast<double>(pq[0]) / pq[1], u, v, w), pq[0], pq[1]);
                 }
               },
               1e-9, 20, C, Q});
  r.push_back({"closed-f3-uvu-1overn", "F(1/n;u,v^n,u) closed form against quadrature",
               [](const Params& p) { return closed_value(closed::f3_at_1_over_n_uvu(p.u, p.v, p.n)); },
               [](const Params& p) { return quad::integrate_f3(1.0 / p.n, p.u, std::pow(p.v, p.n), p.u); },
               [](std::mt19937_64& g, int i) {
                 const int n = 1 + i % 3;
                 while (true) {
                   const auto [u, v] = distinct_points<2>(g);
                   bool ok = true;
                   for (cplx a : domains::roots_of_unity(n).roots) ok = ok && std::abs(u - a * v) >= kSeparation;
                   if (ok) return with_n(uvw(1.0 / n, u, v, u), n);
                 }
               },
               1e-9, 18, C, Q});
  r.push_back({"closed-f3-u1-1overn", "F(1/n;1,v^n,1) limit form against quadrature",
               [](const Params& p) { return closed_value(closed::f3_u1_at_1_over_n(p.v, p.n)); },
               [](const Params& p) { return quad::integrate_f3(1.0 / p.n, 1.0, std::pow(p.v, p.n), 1.0); },
               [](std::mt19937_64& g, int i) {
                 const int n = 1 + i % 3;
                 return with_n(uvw(1.0 / n, 1.0, disk_point(g, kRadius), 1.0), n);
               },
               1e-9, 18, C, Q});

  r.push_back({"lemma-I", "log-squared integral closed form against quadrature of its integrand",
               [](const Params& p) { return closed_value(closed::lemma_I(p.u, p.v, *p.w)); },
               [](const Params& p) { return lemma_I_integral(p.u, p.v, *p.w); },
               [](std::mt19937_64& g, int) {
                 while (true) {
                   const auto [u, v, w] = distinct_points<3>(g);
                   if (closed::lemma_I_integrand_continuous(u, v, w)) return uvw(1.0, u, v, w);
                 }
               },
               1e-9, 50, C, Q});
  r.push_back({"lemma-J-pair", "paired dilogarithm integral closed form against quadrature of its integrands",
               [](const Params& p) { return closed_value(closed::lemma_J_pair(p.u, p.v, *p.w)); },
               [](const Params& p) { return lemma_J_integral(p.u, p.v, *p.w) + lemma_J_integral(*p.w, p.v, p.u); },
               [](std::mt19937_64& g, int) {
                 while (true) {
                   const auto [u, v, w] = distinct_points<3>(g);
                   if (closed::lemma_J_integrand_continuous(u, v, w)) return uvw(1.0, u, v, w);
                 }
               },
               1e-9, 50, C, Q});

  r.push_back({"series-vs-quad-f3", "triple series against quadrature for Re z > 0",
               [](const Params& p) { return series::series_f3(p.z, p.u, p.v, *p.w); },
               [](const Params& p) { return quad::integrate_f3(p.z, p.u, p.v, *p.w); },
               [](std::mt19937_64& g, int) {
                 const auto [u, v, w] = distinct_points<3>(g, 0.7);
                 return uvw(right_z(g, 0.3, 2.0, 1.0), u, v, w);
               },
               1e-9, 50, S, Q});
  r.push_back({"series-vs-quad-fk", "F_k series against quadrature for Re z > 0",
               [](const Params& p) { return series::series_fk(p.z, p.u, p.v, p.k); },
               [](const Params& p) { return quad::integrate_fk(p.z, p.u, p.v, p.k); },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g, 0.7);
                 return uv(right_z(g, 0.3, 2.0, 1.0), u, v, 1 + i % 3);
               },
               1e-9, 50, S, Q});
  r.push_back({"series-continuation-f3", "triple series for Re z < 0 under tolerance halving",
               [](const Params& p) { return series::series_f3(p.z, p.u, p.v, *p.w, series_tol(1e-10)); },
               [](const Params& p) { return series::series_f3(p.z, p.u, p.v, *p.w, series_tol(5e-11)); },
               [](std::mt19937_64& g, int) {
                 const auto [u, v, w] = distinct_points<3>(g, 0.7);
                 return uvw(left_z(g), u, v, w);
               },
               1e-9, 10, S, S});
  r.push_back({"series-continuation-fk", "F_k series for Re z < 0 under tolerance halving",
               [](const Params& p) { return series::series_fk(p.z, p.u, p.v, p.k, series_tol(1e-10)); },
               [](const Params& p) { return series::series_fk(p.z, p.u, p.v, p.k, series_tol(5e-11)); },
               [](std::mt19937_64& g, int i) {
                 const auto [u, v] = distinct_points<2>(g, 0.7);
                 return uv(left_z(g), u, v, 1 + i % 3);
               },
               1e-9, 10, S, S});

  // For the polylog relations the left side is the residual itself.
  r.push_back({"rogers", "Rogers five-term dilogarithm relation",
               [](const Params& p) { return closed_value(polylog::rogers_residual(p.u, p.v)); },
               [](const Params&) { return closed_value(0.0); },
               [](std::mt19937_64& g, int) {
                 const auto [a, b] = distinct_points<2>(g);
                 return uv(1.0, a, b);
               },
               1e-12, 100, C, C});
  r.push_back({"abel", "Abel five-term dilogarithm relation",
               [](const Params& p) { return closed_value(polylog::abel_residual(p.u, p.v)); },
               [](const Params&) { return closed_value(0.0); },
               [](std::mt19937_64& g, int) {
                 const auto [x, y] = distinct_points<2>(g, 0.45);
                 return uv(1.0, x, y);
               },
               1e-12, 100, C, C});
  r.push_back({"li-derivative", "d/dz Li_{s+1}(z) = Li_s(z)/z by centred differences",
               [](const Params& p) { return closed_value(polylog::li_derivative_check(polylog::PolyLogOrder(p.k), p.u, 1e-5)); },
               [](const Params&) { return closed_value(0.0); },
               [](std::mt19937_64& g, int i) {
                 while (true) {
                   const cplx z = disk_point(g, 3.0);
                   if (std::abs(z.imag()) >= 0.05) return uv(1.0, z, 0.0, 1 + i % 7);
                 }
               },
               1e-8, 100, C, C});
  r.push_back({"li-cut-monodromy", "Li_s(x+i0) - Li_s(x-i0) = 2 pi i log^(s-1)(x)/(s-1)! on (1, inf)",
               [](const Params& p) {
                 const double x = p.u.real();
                 return closed_value(polylog::li(p.k, x, polylog::BranchMode::limit_from_above) -
                                     polylog::li(p.k, x, polylog::BranchMode::limit_from_below));
               },
               [pi](const Params& p) {
                 const double x = p.u.real();
                 return closed_value(cplx{0.0, 2.0 * pi} * std::pow(std::log(x), p.k - 1) / std::tgamma(p.k));
               },
               [](std::mt19937_64& g, int i) { return uv(1.0, in_range(g, 1.05, 10.0), 0.0, 1 + i % 6); }, 1e-11, 60,
               C, C});

  r.push_back({"table1", "tabulated special values of F_k(1/n;u,v) against quadrature",
               [](const Params& p) { return closed_value(table::row(static_cast<std::size_t>(p.p)).printed); },
               [](const Params& p) { return quad::integrate_fk(1.0 / p.n, p.u, p.v, p.k); },
               [](std::mt19937_64&, int i) {
                 const std::size_t idx = static_cast<std::size_t>(i) % table::kRowCount;
                 const table::Row row = table::row(idx);
                 Params p = with_n(uv(1.0 / row.n, row.u, row.v, row.k), row.n);
                 p.p = static_cast<int>(idx);
                 return p;
               },
               1e-9, 8, C, Q});
  return r;
}

}  // namespace

double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> r = build();
  return r;
}

std::vector<std::string> list_identities() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.name);
  return out;
}

const IdentitySpec& find(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  fail(Errc::lookup, "unknown identity '" + name + "'");
}

IdentityReport run_identity(const std::string& name, const RunOptions& opts) {
  const IdentitySpec& spec = find(name);
  const int n = opts.samples.value_or(spec.default_samples);
  if (n < 1) fail(Errc::invalid_argument, "samples must be at least 1");
  const double tol = opts.tol.value_or(spec.default_tol);
  if (!(tol > 0.0)) fail(Errc::invalid_argument, "tol must be positive");
  const auto start = std::chrono::steady_clock::now();

  std::mt19937_64 g(opts.seed);
  std::vector<Params> params;
  params.reserve(n);
  for (int i = 0; i < n; ++i) params.push_back(spec.sampler(g, i));

  struct Outcome {
    double residual = 0.0, threshold = 0.0;
  };
  std::vector<Outcome> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto work = [&](int first, int stride) {
    for (int i = first; i < n; i += stride) {
      try {
        const ValueWithError a = spec.lhs(params[i]), b = spec.rhs(params[i]);
        out[i] = {std::abs(a.value - b.value), std::max(tol, 10.0 * (a.abs_err + b.abs_err))};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(opts.threads, 1, n);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  IdentityReport rep;
  rep.name = spec.name;
  rep.informational = spec.informational;
  rep.samples = n;
  rep.seed = opts.seed;
  rep.tol = tol;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Outcome& o = out[i];
    sum += o.residual;
    rep.max_residual = std::max(rep.max_residual, o.residual);
    rep.max_threshold = std::max(rep.max_threshold, o.threshold);
    if (!(o.residual <= o.threshold)) rep.failures.push_back({i, params[i], o.residual, o.threshold});
  }
  rep.mean_residual = sum / n;
  rep.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace hzn::identity
