#include "hzn/closedform.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "continuation.hpp"
#include "formulas.hpp"
#include "hzn/domains.hpp"

namespace hzn::closed {

namespace {

using domains::principal_log;
using domains::Set;
using polylog::BranchMode;
using polylog::li;

constexpr double kCoincide = 1e-12;

// Points where the printed formulas are right on principal branches.
constexpr detail::Point kTwoParamBase[] = {{cplx{0.3, 0.0}, cplx{-0.4, 0.0}, cplx{}}};
constexpr detail::Point kF3Base[] = {{cplx{0.2, 0.0}, cplx{-0.5, 0.0}, cplx{0.4, 0.0}}};
// Points where the principal lemma formulas match their integrals. Several
// are needed because the analyticity regions are not star-shaped.
constexpr detail::Point kLemmaBases[] = {
    {cplx{0.3, 0.0}, cplx{-0.4, 0.0}, cplx{0.6, 0.0}},
    {cplx{-0.475, 0.017}, cplx{0.056, -0.051}, cplx{-0.603, -0.163}},
    {cplx{-0.364, -0.706}, cplx{0.321, -0.134}, cplx{-0.338, 0.102}},
    {cplx{-0.535, 0.437}, cplx{-0.195, 0.318}, cplx{-0.706, -0.346}},
    {cplx{-0.24, -0.407}, cplx{-0.422, 0.565}, cplx{-0.03, -0.254}},
};

void require_in(cplx x, Set set, const char* name) {
  require_finite(x, name);
  if (!domains::membership(x, set)) {
    const char* set_name = set == Set::D ? "D" : set == Set::Dprime ? "D'" : set == Set::L ? "L" : "L'";
    fail(Errc::domain, std::string(name) + " must lie in " + set_name);
  }
}

// Zero is accepted wherever the function vanishes identically.
void require_in_or_zero(cplx x, Set set, const char* name) {
  if (x != cplx{}) require_in(x, set, name);
}

void require_distinct(cplx a, cplx b, const char* what) {
  if (std::abs(a - b) <= kCoincide * std::max(1.0, std::abs(a)))
    fail(Errc::degenerate, std::string("coincident parameters ") + what);
}

void require_order(int k) {
  if (k < 1 || k > polylog::kMaxOrder - 1) fail(Errc::domain, "k must lie in [1, 7]");
}

void require_n(int n, const char* name) {
  if (n < 1) fail(Errc::domain, std::string(name) + " must be a positive integer");
}

double factorial(int n) { return std::tgamma(n + 1.0); }

std::vector<detail::Term> record_f3(const detail::Point& p) {
  detail::Recorder r;
  formulas::f3_at_1(r, p[0], p[1], p[2]);
  return std::move(r.terms);
}

std::vector<detail::Term> record_f3_uvu(const detail::Point& p) {
  detail::Recorder r;
  formulas::f3_at_1_uvu(r, p[0], p[1]);
  return std::move(r.terms);
}

std::vector<detail::Term> record_lemma_I(const detail::Point& p) {
  detail::Recorder r;
  formulas::lemma_I(r, p[0], p[1], p[2]);
  return std::move(r.terms);
}

bool inside_lemma_I(const detail::Point& p) { return lemma_I_integrand_continuous(p[0], p[1], p[2]); }
bool inside_jpair(const detail::Point& p) { return lemma_J_integrand_continuous(p[0], p[1], p[2]); }

// Endpoints of the integrand arcs; one of them meeting its cut means the path
// left the region.
std::vector<detail::Wall> walls_lemma_I(const detail::Point& p) {
  const cplx u = p[0], v = p[1], w = p[2];
  return {{(v - u) / (v - w), true}, {(v - u) * (w - 1.0) / ((v - w) * (u - 1.0)), true}};
}

std::vector<detail::Wall> walls_jpair(const detail::Point& p) {
  const cplx u = p[0], v = p[1], w = p[2];
  return {{v / (v - w), false}, {v * (1.0 - w) / (v - w), false}, {v / (v - u), false}, {v * (1.0 - u) / (v - u), false}};
}

const detail::Region kRegionLemmaI{&inside_lemma_I, &walls_lemma_I};
const detail::Region kRegionJPair{&inside_jpair, &walls_jpair};

std::vector<detail::Term> record_jpair(const detail::Point& p) {
  detail::Recorder r;
  formulas::lemma_J_pair(r, p[0], p[1], p[2]);
  return std::move(r.terms);
}

}  // namespace

RationalArg::RationalArg(int p_, int q_) : p(p_), q(q_) {
  if (p < 1 || q < 1) fail(Errc::domain, "rational argument needs p, q >= 1");
  if (std::gcd(p, q) != 1) fail(Errc::domain, "rational argument must be in lowest terms");
  if (p * q > 64) fail(Errc::domain, "rational argument needs p*q <= 64");
}

cplx f_at_1_uuu(cplx u) { return fk_at_1_uu(u, 2); }

cplx fk_at_1_uu(cplx u, int k) {
  require_order(k);
  require_in_or_zero(u, Set::Dprime, "u");
  if (u == cplx{}) return {};
  return -std::pow(principal_log(1.0 - u), k + 1) / static_cast<double>(k + 1);
}

cplx fk_at_1(cplx u, cplx v, int k, Sheet sheet, BranchMode mode) {
  require_order(k);
  if (u == 1.0) fail(Errc::domain, "u = 1 is the limit case; use fk_u1_at_1_over_n");
  require_in_or_zero(u, Set::Lprime, "u");
  require_in_or_zero(v, Set::Lprime, "v");
  if (u == cplx{} || v == cplx{}) return {};
  require_distinct(u, v, "u = v; use fk_at_1_uu");
  if (sheet == Sheet::principal) {
    detail::OneSided p(mode);
    return formulas::fk_at_1(p, u, v, k);
  }
  const auto record = [k](const detail::Point& p) {
    detail::Recorder r;
    formulas::fk_at_1(r, p[0], p[1], k);
    return std::move(r.terms);
  };
  const auto corr = detail::track(record, kTwoParamBase, {u, v, cplx{}});
  detail::Corrected c(corr);
  return formulas::fk_at_1(c, u, v, k);
}

cplx f3_at_1(cplx u, cplx v, cplx w, Sheet sheet) {
  require_in_or_zero(u, Set::Dprime, "u");
  require_in_or_zero(v, Set::Dprime, "v");
  require_in_or_zero(w, Set::Dprime, "w");
  if (u == cplx{} || v == cplx{} || w == cplx{}) return {};
  require_distinct(u, v, "u = v");
  require_distinct(v, w, "v = w");
  require_distinct(u, w, "u = w; use f3_at_1_uvu");
  if (sheet == Sheet::principal) {
    detail::Principal p;
    return formulas::f3_at_1(p, u, v, w);
  }
  const detail::Point target{u, v, w};
  const auto corr = detail::track(&record_f3, kF3Base, target);
  detail::Corrected c(corr);
  return formulas::f3_at_1(c, u, v, w);
}

cplx f3_at_1_uvu(cplx u, cplx v) {
  require_in_or_zero(u, Set::Dprime, "u");
  require_in_or_zero(v, Set::Dprime, "v");
  if (u == cplx{} || v == cplx{}) return {};
  require_distinct(u, v, "u = v; use f_at_1_uuu");
  const auto corr = detail::track(&record_f3_uvu, kTwoParamBase, {u, v, cplx{}});
  detail::Corrected c(corr);
  return formulas::f3_at_1_uvu(c, u, v);
}

cplx fk_at_1_over_n(cplx u, cplx v, int k, int n) {
  require_order(k);
  require_n(n, "n");
  require_in_or_zero(u, Set::Dprime, "u");
  require_in_or_zero(v, Set::Dprime, "v");
  if (u == cplx{} || v == cplx{}) return {};
  const cplx r = domains::principal_root(v, n);
  cplx sum = 0.0;
  for (cplx b : domains::roots_of_unity(n).roots) {
    require_distinct(u, b * r, "u = b v^(1/n)");
    sum += fk_at_1(u, b * r, k);
  }
  return sum;
}

cplx fk_u1_at_1_over_n(cplx v, int k, int n) {
  require_order(k);
  require_n(n, "n");
  require_in_or_zero(v, Set::Dprime, "v");
  if (v == cplx{}) return {};
  const cplx r = domains::principal_root(v, n);
  cplx sum = 0.0;
  for (cplx b : domains::roots_of_unity(n).roots) {
    const cplx y = b * r;
    if (std::abs(y - 1.0) <= kCoincide) fail(Errc::pole, "b v^(1/n) = 1 for some n-th root b");
    sum += li(k + 1, y / (y - 1.0));
  }
  const double sign = (k % 2) ? 1.0 : -1.0;
  return sign * factorial(k) * sum;
}

cplx f3_u1_at_1_over_n(cplx v, int n) {
  require_n(n, "n");
  require_finite(v, "v");
  if (v == cplx{}) return {};
  require_in(std::pow(v, n), Set::Dprime, "v^n");
  cplx sum = 0.0;
  for (cplx a : domains::roots_of_unity(n).roots) {
    const cplx y = a * v;
    if (std::abs(y - 1.0) <= kCoincide) fail(Errc::pole, "a v = 1 for some n-th root a");
    sum += li(3, y / (y - 1.0));
  }
  return -2.0 * sum;
}

cplx f3_at_1_over_n_uvu(cplx u, cplx v, int n) {
  require_n(n, "n");
  require_in_or_zero(u, Set::Dprime, "u");
  require_finite(v, "v");
  if (u == cplx{} || v == cplx{}) return {};
  require_in(std::pow(v, n), Set::Dprime, "v^n");
  cplx sum = 0.0;
  for (cplx a : domains::roots_of_unity(n).roots) {
    require_distinct(u, a * v, "u = a v");
    sum += f3_at_1_uvu(u, a * v);
  }
  return sum;
}

cplx f_at_m_over_n(cplx u, cplx v, int m, int n) {
  require_n(m, "m");
  require_n(n, "n");
  require_in_or_zero(u, Set::D, "u");
  require_in_or_zero(v, Set::Dprime, "v");
  if (u == cplx{} || v == cplx{}) return {};
  const cplx ru = domains::principal_root(u, m);
  const cplx rv = domains::principal_root(v, n);
  const auto alphas = domains::roots_of_unity(m).roots;
  const auto betas = domains::roots_of_unity(n).roots;
  cplx sum = static_cast<double>(n) / m * li(2, u);
  for (cplx a : alphas) {
    for (cplx b : betas) {
      const cplx y = b * rv;
      sum += li(2, y / (y - 1.0)) - li(2, (a * ru - y) / (1.0 - y));
    }
  }
  return sum;
}

cplx f3_at_p_over_q(cplx u, cplx v, cplx w, RationalArg r, Sheet sheet) {
  require_in_or_zero(u, Set::Dprime, "u");
  require_in_or_zero(v, Set::Dprime, "v");
  require_in_or_zero(w, Set::Dprime, "w");
  if (u == cplx{} || v == cplx{} || w == cplx{}) return {};
  const cplx ru = domains::principal_root(u, r.p);
  const cplx rv = domains::principal_root(v, r.q);
  const cplx rw = domains::principal_root(w, r.p);
  const auto aq = domains::roots_of_unity(r.q).roots;
  const auto bp = domains::roots_of_unity(r.p).roots;
  cplx sum = 0.0;
  for (std::size_t ia = 0; ia < aq.size(); ++ia) {
    for (std::size_t ib = 0; ib < bp.size(); ++ib) {
      for (std::size_t ic = 0; ic < bp.size(); ++ic) {
        try {
          sum += f3_at_1(ru * bp[ib], rv * aq[ia], rw * bp[ic], sheet);
        } catch (const Error& e) {
          if (e.code() != Errc::degenerate) throw;
          fail(Errc::degenerate, std::string(e.what()) + " at root triple (a" + std::to_string(ia) + ", b" +
                                     std::to_string(ib) + ", c" + std::to_string(ic) + ")");
        }
      }
    }
  }
  return sum;
}

bool lemma_I_integrand_continuous(cplx u, cplx v, cplx w) {
  return !detail::mobius_arc_meets_negative_axis((v - u) * w, -(v - u), (v - w) * u, -(v - w));
}

bool lemma_J_integrand_continuous(cplx u, cplx v, cplx w) {
  return !detail::segment_meets_cut(v / (v - w), v * (1.0 - w) / (v - w), false) &&
         !detail::segment_meets_cut(v / (v - u), v * (1.0 - u) / (v - u), false);
}

cplx lemma_I(cplx u, cplx v, cplx w, Sheet sheet) {
  require_in(u, Set::Dprime, "u");
  require_in(v, Set::Dprime, "v");
  require_in(w, Set::Dprime, "w");
  require_distinct(u, v, "u = v");
  require_distinct(v, w, "v = w");
  // The log^2 argument is identically 1 when u = w.
  if (u == w) return {};
  if (sheet == Sheet::principal) {
    detail::Principal p;
    return formulas::lemma_I(p, u, v, w);
  }
  const detail::Point target{u, v, w};
  const auto corr = detail::track(&record_lemma_I, kLemmaBases, target, kRegionLemmaI);
  detail::Corrected c(corr);
  return formulas::lemma_I(c, u, v, w);
}

cplx lemma_J_pair(cplx u, cplx v, cplx w, Sheet sheet) {
  require_in(u, Set::Dprime, "u");
  require_in(v, Set::Dprime, "v");
  require_in(w, Set::Dprime, "w");
  require_distinct(u, v, "u = v");
  require_distinct(v, w, "v = w");
  require_distinct(u, w, "u = w");
  if (sheet == Sheet::principal) {
    detail::Principal p;
    return formulas::lemma_J_pair(p, u, v, w);
  }
  const detail::Point target{u, v, w};
  const auto corr = detail::track(&record_jpair, kLemmaBases, target, kRegionJPair);
  detail::Corrected c(corr);
  return formulas::lemma_J_pair(c, u, v, w);
}

ValueWithError j_reflection(cplx z, const quad::QuadConfig& cfg) {
  require_finite(z, "z");
  if (!(z.real() > 0.0)) fail(Errc::domain, "j_reflection requires Re z > 0");
  ValueWithError r = quad::integrate_j(z, cfg);
  r.value += z * (polylog::constants::pi * polylog::constants::pi / 12.0);
  r.method = Method::closed_form;
  return r;
}

}  // namespace hzn::closed
