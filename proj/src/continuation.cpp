#include "continuation.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace hzn::closed::detail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStepMax = 0.05;
constexpr double kStepMin = 1e-9;
constexpr double kRatio = 0.2;
constexpr double kFar = 1e6;
constexpr int kMaxSteps = 20000;
// Scale of the detour route. Scaling (u, v, w) by the same factor maps the
// integrand paths of the lemmas onto sub-paths of themselves, so the radial
// legs stay admissible whenever their endpoints are.
constexpr double kDetourScale = 0.1;
constexpr int kWaypoints = 64;

const cplx kTwoPiI{0.0, kTwoPi};

struct Bump {
  double eta;
  Point dir;
};

const Bump kBumps[] = {
    {0.3, {cplx{0.11, 0.05}, cplx{-0.07, 0.09}, cplx{0.08, -0.1}}},
    {0.3, {cplx{-0.11, -0.05}, cplx{0.07, -0.09}, cplx{-0.08, 0.1}}},
    {0.6, {cplx{0.09, -0.08}, cplx{0.1, 0.04}, cplx{-0.06, -0.11}}},
    {0.15, {cplx{-0.05, 0.12}, cplx{-0.1, -0.06}, cplx{0.12, 0.03}}},
};

const Bump kRadial{0.0, {cplx{}, cplx{}, cplx{}}};

cplx on_upper(cplx x) { return x.imag() == 0.0 ? cplx{x.real(), 0.0} : x; }

bool upper(cplx x) { return x.imag() >= 0.0; }

enum class Cut { negative, above_one };

// +1 for a crossing from the upper to the lower side, -1 for the reverse.
int crossing(cplx a, cplx b, Cut cut) {
  if (upper(a) == upper(b)) return 0;
  const double s = a.imag() / (a.imag() - b.imag());
  const double xr = a.real() + s * (b.real() - a.real());
  const bool hit = cut == Cut::negative ? xr < 0.0 : xr > 1.0;
  if (!hit) return 0;
  return upper(a) ? 1 : -1;
}

bool small_move(cplx x, cplx y) {
  if (std::abs(x) > kFar && std::abs(y) > kFar) return true;
  const double scale = std::min({std::abs(x), std::abs(x - 1.0), std::abs(y), std::abs(y - 1.0)});
  return std::abs(y - x) <= kRatio * scale;
}

Point path_point(const Point& base, const Point& target, const Bump& b, double s) {
  Point p;
  for (int i = 0; i < 3; ++i)
    p[i] = base[i] + s * (target[i] - base[i]) + cplx{0.0, b.eta * s * (1.0 - s)} * b.dir[i];
  return p;
}

// Shift the correction polynomial when L_old = L_new + c 2 pi i.
void reexpand(Correction& a, int s, int c) {
  Correction out{};
  const cplx shift = static_cast<double>(c) * kTwoPiI;
  for (int j = 0; j < s; ++j) {
    if (a[j] == cplx{}) continue;
    double binom = 1.0;
    cplx pw = 1.0;
    // a_j (L + shift)^j = sum_m C(j,m) L^m shift^(j-m)
    for (int m = j; m >= 0; --m) {
      out[m] += a[j] * binom * pw;
      pw *= shift;
      binom = binom * m / (j - m + 1);
    }
  }
  a = out;
}

struct Leg {
  Point from, to;
  Bump bump;
};

// Follows one leg, updating the corrections and the recorded terms in place.
bool follow(const RecordFn& record, const Region& region, const Leg& leg, std::vector<Term>& cur,
            std::vector<Correction>& corr) {
  Point pcur = leg.from;
  double s = 0.0, ds = kStepMax;
  int steps = 0;
  while (s < 1.0) {
    if (++steps > kMaxSteps) return false;
    ds = std::min(ds, 1.0 - s);
    std::vector<Term> nxt;
    Point pnxt;
    while (true) {
      pnxt = s + ds >= 1.0 ? leg.to : path_point(leg.from, leg.to, leg.bump, s + ds);
      nxt = record(pnxt);
      bool ok = true;
      for (std::size_t i = 0; i < cur.size() && ok; ++i) ok = small_move(cur[i].x, nxt[i].x);
      if (ok) break;
      ds *= 0.5;
      if (ds < kStepMin) return false;
    }
    // The parameters themselves must stay off [1, inf).
    for (int i = 0; i < 3; ++i)
      if (crossing(pcur[i], pnxt[i], Cut::above_one) != 0) return false;
    if (region.inside != nullptr && !region.inside(pnxt)) return false;
    if (region.walls != nullptr) {
      const std::vector<Wall> wa = region.walls(pcur), wb = region.walls(pnxt);
      for (std::size_t i = 0; i < wa.size(); ++i)
        if (crossing(wa[i].x, wb[i].x, wa[i].negative ? Cut::negative : Cut::above_one) != 0) return false;
    }
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const cplx a = cur[i].x, b = nxt[i].x;
      if (cur[i].is_log) {
        corr[i][0] += static_cast<double>(crossing(a, b, Cut::negative)) * kTwoPiI;
        continue;
      }
      const int sidx = cur[i].s;
      if (int c = crossing(a, b, Cut::above_one))
        corr[i][sidx - 1] += static_cast<double>(c) * kTwoPiI / std::tgamma(sidx);
      if (int c = crossing(a, b, Cut::negative)) reexpand(corr[i], sidx, c);
    }
    cur = std::move(nxt);
    pcur = pnxt;
    s += ds;
    ds = std::min(kStepMax, 2.0 * ds);
  }
  return true;
}

bool follow_route(const RecordFn& record, const Region& region, const std::vector<Leg>& route,
                  std::vector<Correction>& corr) {
  std::vector<Term> cur = record(route.front().from);
  corr.assign(cur.size(), Correction{});
  for (const Leg& leg : route)
    if (!follow(record, region, leg, cur, corr)) return false;
  return true;
}

const std::vector<Point>& waypoints() {
  static const std::vector<Point> w = [] {
    std::mt19937_64 g(0x5eed);
    const auto coord = [&g] {
      while (true) {
        const cplx x{1.6 * static_cast<double>(g() >> 11) * 0x1.0p-53 - 0.8,
                     1.6 * static_cast<double>(g() >> 11) * 0x1.0p-53 - 0.8};
        if (std::abs(x) <= 0.8) return x;
      }
    };
    std::vector<Point> out(kWaypoints);
    for (Point& p : out) p = {coord(), coord(), coord()};
    return out;
  }();
  return w;
}

Point scaled(const Point& p, double lambda) { return {lambda * p[0], lambda * p[1], lambda * p[2]}; }

}  // namespace

cplx Principal::log(const char* label, cplx x) {
  if (x == cplx{}) fail(Errc::branch, std::string("logarithm of zero in term ") + label);
  return domains::principal_log(x);
}

cplx Principal::li(const char* label, int s, cplx x) {
  try {
    return polylog::li(s, x);
  } catch (const Error& e) {
    fail(e.code(), std::string(e.what()) + " in term " + label);
  }
}

cplx OneSided::log(const char* label, cplx x) {
  if (x == cplx{}) fail(Errc::branch, std::string("logarithm of zero in term ") + label);
  return domains::principal_log(on_upper(x));
}

cplx OneSided::li(const char* label, int s, cplx x) {
  try {
    return polylog::li(s, on_upper(x), mode_);
  } catch (const Error& e) {
    fail(e.code(), std::string(e.what()) + " in term " + label);
  }
}

cplx Corrected::log(const char* label, cplx x) {
  if (x == cplx{}) fail(Errc::branch, std::string("logarithm of zero in term ") + label);
  return domains::principal_log(on_upper(x)) + corr_.at(next_++)[0];
}

cplx Corrected::li(const char* label, int s, cplx x) {
  x = on_upper(x);
  const Correction& a = corr_.at(next_++);
  cplx value;
  try {
    const bool on_cut = x.imag() == 0.0 && x.real() > 1.0;
    value = polylog::li(s, x, on_cut ? polylog::BranchMode::limit_from_above : polylog::BranchMode::principal);
  } catch (const Error& e) {
    fail(e.code(), std::string(e.what()) + " in term " + label);
  }
  bool any = false;
  for (int j = 0; j < s; ++j) any = any || a[j] != cplx{};
  if (!any) return value;
  const cplx lg = domains::principal_log(x);
  cplx poly = 0.0;
  for (int j = s - 1; j >= 0; --j) poly = poly * lg + a[j];
  return value + poly;
}

bool segment_meets_cut(cplx a, cplx b, bool toward_negative) {
  auto on_cut = [&](cplx x) {
    return x.imag() == 0.0 && (toward_negative ? x.real() <= 0.0 : x.real() >= 1.0);
  };
  if (on_cut(a) || on_cut(b)) return true;
  if ((a.imag() > 0.0) == (b.imag() > 0.0)) return false;
  const double s = a.imag() / (a.imag() - b.imag());
  const double xr = a.real() + s * (b.real() - a.real());
  return toward_negative ? xr <= 0.0 : xr >= 1.0;
}

bool mobius_arc_meets_negative_axis(cplx a, cplx b, cplx c, cplx d) {
  // Im((a t + b) conj(c t + d)) = p t^2 + q t + r
  const double p = (a * std::conj(c)).imag();
  const double q = (a * std::conj(d) + b * std::conj(c)).imag();
  const double r = (b * std::conj(d)).imag();
  auto negative_at = [&](double t) {
    if (t < 0.0 || t > 1.0) return false;
    const cplx den = c * t + d;
    if (den == cplx{}) return true;
    return ((a * t + b) / den).real() <= 0.0;
  };
  if (p == 0.0 && q == 0.0) return r == 0.0 && (negative_at(0.0) || negative_at(1.0));
  if (p == 0.0) return negative_at(-r / q);
  const double disc = q * q - 4.0 * p * r;
  if (disc < 0.0) return false;
  const double sq = std::sqrt(disc);
  const double t1 = (-q - std::copysign(sq, q)) / (2.0 * p);
  const double t2 = t1 != 0.0 ? r / (p * t1) : -q / p;
  return negative_at(t1) || negative_at(t2);
}

std::vector<Correction> track(const RecordFn& record, std::span<const Point> bases, const Point& target,
                              const Region& region) {
  std::vector<Correction> corr;
  for (const Point& base : bases)
    for (const Bump& b : kBumps)
      if (follow_route(record, region, {{base, target, b}}, corr)) return corr;
  for (const Point& base : bases) {
    const Point small_base = scaled(base, kDetourScale), small_target = scaled(target, kDetourScale);
    for (const Bump& b : kBumps) {
      const Bump small_bump{b.eta * kDetourScale, b.dir};
      const std::vector<Leg> route{{base, small_base, kRadial}, {small_base, small_target, small_bump},
                                   {small_target, target, kRadial}};
      if (follow_route(record, region, route, corr)) return corr;
    }
  }
  // Last resort: two-leg routes through fixed waypoints in the 0.8 polydisk.
  for (const Point& base : bases)
    for (const Point& wp : waypoints())
      if (follow_route(record, region, {{base, wp, kBumps[0]}, {wp, target, kBumps[0]}}, corr)) return corr;
  fail(Errc::branch, "no admissible continuation path from a base point");
}

}  // namespace hzn::closed::detail
