#include "hzn/hzn.h"

#include <cmath>
#include <new>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hzn/closedform.hpp"
#include "hzn/identity.hpp"
#include "hzn/quadrature.hpp"
#include "hzn/series.hpp"
#include "hzn/table.hpp"

struct hzn_context {
  hzn::quad::QuadConfig quad;
  hzn::series::SeriesConfig series;
  std::string last_error;
};

struct hzn_report {
  hzn::identity::IdentityReport rep;
};

namespace {

using hzn::cplx;
using hzn::Errc;

struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hzn_status to_status(Errc e) {
  switch (e) {
    case Errc::domain: return HZN_ERR_DOMAIN;
    case Errc::pole: return HZN_ERR_POLE;
    case Errc::branch: return HZN_ERR_BRANCH;
    case Errc::degenerate: return HZN_ERR_DEGENERATE;
    case Errc::convergence: return HZN_ERR_CONVERGENCE;
    case Errc::near_pole: return HZN_ERR_NEAR_POLE;
    case Errc::resource: return HZN_ERR_RESOURCE;
    case Errc::lookup: return HZN_ERR_LOOKUP;
    case Errc::invalid_argument: return HZN_ERR_INVALID_ARGUMENT;
  }
  return HZN_ERR_INTERNAL;
}

template <class F>
hzn_status guarded(hzn_context* ctx, F&& f) {
  try {
    f();
    return HZN_OK;
  } catch (const hzn::Error& e) {
    if (ctx) ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const NotApplicable& e) {
    if (ctx) ctx->last_error = e.what();
    return HZN_ERR_NOT_APPLICABLE;
  } catch (const std::bad_alloc&) {
    if (ctx) ctx->last_error = "out of memory";
    return HZN_ERR_RESOURCE;
  } catch (const std::exception& e) {
    if (ctx) ctx->last_error = e.what();
    return HZN_ERR_INTERNAL;
  }
}

cplx in(hzn_complex c) { return {c.re, c.im}; }
hzn_complex out(cplx c) { return {c.real(), c.imag()}; }

hzn_method to_c(hzn::Method m) {
  switch (m) {
    case hzn::Method::series: return HZN_METHOD_SERIES;
    case hzn::Method::closed_form: return HZN_METHOD_CLOSED;
    default: return HZN_METHOD_QUAD;
  }
}

hzn_result to_c(const hzn::ValueWithError& r) {
  return {out(r.value), r.abs_err, to_c(r.method), static_cast<int64_t>(r.evaluations), r.converged ? 1 : 0};
}

hzn_params to_c(const hzn::domains::EvalParams& p) {
  hzn_params c{};
  c.z = out(p.z);
  c.u = out(p.u);
  c.v = out(p.v);
  c.has_w = p.w.has_value() ? 1 : 0;
  c.w = out(p.w.value_or(cplx{}));
  c.k = p.k;
  c.p = p.p;
  c.q = p.q;
  return c;
}

struct Rational {
  int p, q;
};

std::optional<Rational> rational_of(const hzn_params& c, cplx z) {
  if (c.p > 0 && c.q > 0) {
    if (std::abs(z - static_cast<double>(c.p) / c.q) > 1e-14 * std::max(1.0, std::abs(z)))
      throw hzn::Error(Errc::invalid_argument, "z does not equal p/q");
    const int g = std::gcd(c.p, c.q);
    return Rational{c.p / g, c.q / g};
  }
  if (z.imag() != 0.0 || !(z.real() > 0.0)) return std::nullopt;
  for (int q = 1; q <= 64; ++q) {
    const double pr = std::round(z.real() * q);
    if (pr < 1.0 || pr > 64.0 * 64.0) continue;
    if (std::abs(pr / q - z.real()) <= 1e-14 * z.real()) {
      const int p = static_cast<int>(pr);
      if (std::gcd(p, q) == 1) return Rational{p, q};
    }
  }
  return std::nullopt;
}

hzn::ValueWithError closed(cplx v) { return {v, 0.0, hzn::Method::closed_form, 1, true}; }

[[noreturn]] void not_applicable(const std::string& what) { throw NotApplicable("no closed form for " + what); }

hzn::ValueWithError eval_closed(hzn_function fn, const hzn_params& c, cplx z, cplx u, cplx v, cplx w, int k) {
  namespace cf = hzn::closed;
  if (fn == HZN_FN_J) {
    if (z.real() < 0.0) return cf::j_reflection(-z);
    const auto r = rational_of(c, z);
    if (!r) not_applicable("J at irrational or complex z with Re z > 0");
    return closed(-cf::f_at_m_over_n(-1.0, -1.0, r->p, r->q));
  }
  const auto r = rational_of(c, z);
  if (!r) not_applicable("irrational or complex z");
  if (fn == HZN_FN_F || fn == HZN_FN_FK) {
    const int kk = fn == HZN_FN_F ? 1 : k;
    if (r->p == 1 && u == 1.0) return closed(cf::fk_u1_at_1_over_n(v, kk, r->q));
    if (r->p == 1 && r->q == 1) return closed(u == v ? cf::fk_at_1_uu(u, kk) : cf::fk_at_1(u, v, kk));
    if (r->p == 1) return closed(cf::fk_at_1_over_n(u, v, kk, r->q));
    if (kk == 1) return closed(cf::f_at_m_over_n(u, v, r->p, r->q));
    not_applicable("F_k at z = p/q with p > 1");
  }
  // F3
  if (r->p == 1 && r->q == 1) {
    if (u == v && v == w) return closed(cf::f_at_1_uuu(u));
    if (u == w) return closed(cf::f3_at_1_uvu(u, v));
    return closed(cf::f3_at_1(u, v, w));
  }
  if (r->p == 1 && u == w) {
    const cplx root = hzn::domains::principal_root(v, r->q);
    if (u == 1.0) return closed(cf::f3_u1_at_1_over_n(root, r->q));
    return closed(cf::f3_at_1_over_n_uvu(u, root, r->q));
  }
  return closed(cf::f3_at_p_over_q(u, v, w, cf::RationalArg(r->p, r->q)));
}

hzn::ValueWithError eval(const hzn_context& ctx, hzn_function fn, hzn_method method, const hzn_params& c) {
  const cplx z = in(c.z), u = in(c.u), v = in(c.v), w = in(c.w);
  const int k = c.k;
  if (fn == HZN_FN_F3 && !c.has_w) throw hzn::Error(Errc::invalid_argument, "F3 needs w");
  if (fn == HZN_FN_FK && k < 1) throw hzn::Error(Errc::domain, "k must be a positive integer");
  switch (method) {
    case HZN_METHOD_QUAD:
      switch (fn) {
        case HZN_FN_F: return hzn::quad::integrate_f(z, u, v, ctx.quad);
        case HZN_FN_FK: return hzn::quad::integrate_fk(z, u, v, k, ctx.quad);
        case HZN_FN_F3: return hzn::quad::integrate_f3(z, u, v, w, ctx.quad);
        case HZN_FN_J: return hzn::quad::integrate_j(z, ctx.quad);
      }
      break;
    case HZN_METHOD_SERIES:
      switch (fn) {
        case HZN_FN_F: return hzn::series::series_fk(z, u, v, 1, ctx.series);
        case HZN_FN_FK: return hzn::series::series_fk(z, u, v, k, ctx.series);
        case HZN_FN_F3: return hzn::series::series_f3(z, u, v, w, ctx.series);
        case HZN_FN_J: {
          auto r = hzn::series::series_fk(z, -1.0, -1.0, 1, ctx.series);
          r.value = -r.value;
          return r;
        }
      }
      break;
    case HZN_METHOD_CLOSED: return eval_closed(fn, c, z, u, v, w, k);
  }
  throw hzn::Error(Errc::invalid_argument, "unknown function or method");
}

const std::vector<hzn::table::Row>& table_strings() {
  static const std::vector<hzn::table::Row> rows = [] {
    std::vector<hzn::table::Row> r;
    for (std::size_t i = 0; i < hzn::table::kRowCount; ++i) {
      hzn::table::Row row;
      const auto full = hzn::table::row(i);
      row.label = full.label;
      row.expression = full.expression;
      r.push_back(std::move(row));
    }
    return r;
  }();
  return rows;
}

}  // namespace

extern "C" {

const char* hzn_version(void) { return "1.0.0"; }

const char* hzn_status_name(hzn_status s) {
  switch (s) {
    case HZN_OK: return "ok";
    case HZN_ERR_DOMAIN: return "domain";
    case HZN_ERR_POLE: return "pole";
    case HZN_ERR_BRANCH: return "branch";
    case HZN_ERR_DEGENERATE: return "degenerate";
    case HZN_ERR_CONVERGENCE: return "convergence";
    case HZN_ERR_NEAR_POLE: return "near_pole";
    case HZN_ERR_RESOURCE: return "resource";
    case HZN_ERR_LOOKUP: return "lookup";
    case HZN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case HZN_ERR_NOT_APPLICABLE: return "not_applicable";
    case HZN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

hzn_status hzn_context_create(hzn_context** out_ctx) {
  if (!out_ctx) return HZN_ERR_INVALID_ARGUMENT;
  *out_ctx = new (std::nothrow) hzn_context{};
  return *out_ctx ? HZN_OK : HZN_ERR_RESOURCE;
}

void hzn_context_destroy(hzn_context* ctx) { delete ctx; }

hzn_status hzn_context_set_tolerance(hzn_context* ctx, double tol) {
  if (!ctx) return HZN_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    hzn::quad::QuadConfig q = ctx->quad;
    hzn::series::SeriesConfig s = ctx->series;
    q.target_abs_err = tol;
    s.tol = tol;
    q.validate();
    s.validate();
    ctx->quad = q;
    ctx->series = s;
  });
}

const char* hzn_last_error(const hzn_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

hzn_status hzn_eval(hzn_context* ctx, hzn_function fn, hzn_method method, const hzn_params* params,
                    hzn_result* result) {
  if (!ctx || !params || !result) return HZN_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] { *result = to_c(eval(*ctx, fn, method, *params)); });
}

size_t hzn_identity_count(void) { return hzn::identity::registry().size(); }

const char* hzn_identity_name(size_t i) {
  const auto& r = hzn::identity::registry();
  return i < r.size() ? r[i].name.c_str() : nullptr;
}

const char* hzn_identity_description(size_t i) {
  const auto& r = hzn::identity::registry();
  return i < r.size() ? r[i].description.c_str() : nullptr;
}

int hzn_identity_informational(size_t i) {
  const auto& r = hzn::identity::registry();
  return i < r.size() && r[i].informational ? 1 : 0;
}

hzn_status hzn_verify(hzn_context* ctx, const char* name, int samples, uint64_t seed, double tol, int threads,
                      hzn_report** rep) {
  if (!ctx || !name || !rep) return HZN_ERR_INVALID_ARGUMENT;
  *rep = nullptr;
  return guarded(ctx, [&] {
    hzn::identity::RunOptions o;
    if (samples > 0) o.samples = samples;
    if (tol > 0.0) o.tol = tol;
    o.seed = seed;
    o.threads = threads < 1 ? 1 : threads;
    *rep = new hzn_report{hzn::identity::run_identity(name, o)};
  });
}

void hzn_report_destroy(hzn_report* rep) { delete rep; }

hzn_status hzn_report_get_summary(const hzn_report* rep, hzn_report_summary* s) {
  if (!rep || !s) return HZN_ERR_INVALID_ARGUMENT;
  const auto& r = rep->rep;
  *s = {r.name.c_str(), r.informational ? 1 : 0, r.samples, r.seed, r.tol, r.max_residual, r.mean_residual,
        r.max_threshold, r.failures.size(), static_cast<int64_t>(r.wall_time.count())};
  return HZN_OK;
}

hzn_status hzn_report_get_failure(const hzn_report* rep, size_t i, hzn_failure* f) {
  if (!rep || !f) return HZN_ERR_INVALID_ARGUMENT;
  if (i >= rep->rep.failures.size()) return HZN_ERR_INVALID_ARGUMENT;
  const auto& x = rep->rep.failures[i];
  *f = {x.index, to_c(x.params), x.residual, x.threshold};
  return HZN_OK;
}

size_t hzn_table_row_count(void) { return hzn::table::kRowCount; }

hzn_status hzn_table_get_row(hzn_context* ctx, size_t i, hzn_table_row* row) {
  if (!ctx || !row) return HZN_ERR_INVALID_ARGUMENT;
  return guarded(ctx, [&] {
    const auto r = hzn::table::row(i, ctx->quad);
    const auto& names = table_strings()[i];
    *row = {r.k,           r.n,       out(r.u),      out(r.v),   names.label.c_str(), names.expression.c_str(),
            out(r.printed), out(r.general), to_c(r.oracle), r.residual, r.tolerance};
  });
}

}  // extern "C"
