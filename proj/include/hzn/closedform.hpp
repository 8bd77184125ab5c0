#pragma once

// Closed-form evaluations of F, F_k and F(z;u,v,w) at rational z in terms
// of logarithms and polylogarithms.
//
// The evaluations at z = 1 and the two lemma integrals need more than
// principal branches: their printed forms are correct near a base point but
// individual arguments cross the cuts as the parameters move through the
// disk. Sheet::continued tracks each term along a
// path from the base point and adds the monodromy it picked up, which is the
// analytic continuation of the integral. Sheet::principal evaluates the
// formula literally.

#include "hzn/polylog.hpp"
#include "hzn/quadrature.hpp"
#include "hzn/types.hpp"

namespace hzn::closed {

enum class Sheet { continued, principal };

/// z = p/q in lowest terms with p*q <= 64.
struct RationalArg {
  int p = 1;
  int q = 1;

  RationalArg(int p_, int q_);
  double value() const { return static_cast<double>(p) / q; }
};

/// F(1;u,u,u) = -log^3(1-u)/3, u in D'.
cplx f_at_1_uuu(cplx u);

/// F_k(1;u,u) = -log^(k+1)(1-u)/(k+1), u in D'.
cplx fk_at_1_uu(cplx u, int k);

/// F_k(1;u,v) for u, v in L', u != v. On the principal sheet, polylog
/// arguments on (1, inf) are evaluated with the given one-sided limit, and
/// BranchMode::principal rejects them.
cplx fk_at_1(cplx u, cplx v, int k, Sheet sheet = Sheet::continued,
             polylog::BranchMode mode = polylog::BranchMode::principal);

/// F(1;u,v,w) for pairwise distinct u, v, w in D'.
cplx f3_at_1(cplx u, cplx v, cplx w, Sheet sheet = Sheet::continued);

/// F(1;u,v,u) for u, v in D', u != v.
cplx f3_at_1_uvu(cplx u, cplx v);

/// F_k(1/n;u,v): sum over n-th roots b of F_k(1;u,b v^(1/n)).
cplx fk_at_1_over_n(cplx u, cplx v, int k, int n);

/// F_k(1/n;1,v) = (-1)^(k+1) k! sum_b Li_{k+1}(b v^(1/n) / (b v^(1/n) - 1)).
cplx fk_u1_at_1_over_n(cplx v, int k, int n);

/// F(1/n;1,v^n,1) = -2 sum_a Li_3(a v / (a v - 1)).
cplx f3_u1_at_1_over_n(cplx v, int n);

/// F(1/n;u,v^n,u) = sum_a F(1;u,a v,u).
cplx f3_at_1_over_n_uvu(cplx u, cplx v, int n);

/// F(m/n;u,v) for (u, v) in D x D'.
cplx f_at_m_over_n(cplx u, cplx v, int m, int n);

/// F(p/q;u,v,w): sum over a^q = 1, b^p = 1, c^p = 1 of
/// F(1; u^(1/p) b, v^(1/q) a, w^(1/p) c).
cplx f3_at_p_over_q(cplx u, cplx v, cplx w, RationalArg r, Sheet sheet = Sheet::continued);

/// I(u,v,w) = int_0^1 log^2((v-u)(wt-1) / ((v-w)(ut-1))) v / (vt-1) dt.
/// The integral is analytic in (u, v, w) only while the log argument stays
/// off (-inf, 0] for t in [0, 1]; the continued sheet follows it through
/// that region.
cplx lemma_I(cplx u, cplx v, cplx w, Sheet sheet = Sheet::continued);

/// True if the log argument of I(u,v,w) avoids (-inf, 0] on [0, 1].
bool lemma_I_integrand_continuous(cplx u, cplx v, cplx w);

/// J(u,v,w) + J(w,v,u), with J(u,v,w) = int_0^1 u/(ut-1) Li_2(v(1-wt)/(v-w)) dt.
cplx lemma_J_pair(cplx u, cplx v, cplx w, Sheet sheet = Sheet::continued);

/// True if the Li_2 arguments of J(u,v,w) and J(w,v,u) avoid [1, inf).
bool lemma_J_integrand_continuous(cplx u, cplx v, cplx w);

/// J(-z) = J(z) + z pi^2 / 12 for Re z > 0, with J(z) from quadrature.
ValueWithError j_reflection(cplx z, const quad::QuadConfig& cfg = {});

}  // namespace hzn::closed
