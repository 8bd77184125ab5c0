#pragma once

// Complex polylogarithm Li_s(z) for integer orders 1..8 on the principal
// branch (cut along [1, inf)), with explicit one-sided limits on the cut.

#include "hzn/types.hpp"

namespace hzn::polylog {

inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 8;

/// Validated order of Li_s.
class PolyLogOrder {
 public:
  explicit PolyLogOrder(int s);
  int value() const noexcept { return s_; }

 private:
  int s_;
};

enum class BranchMode { principal, limit_from_above, limit_from_below };

namespace constants {
inline constexpr double pi = 3.14159265358979323846264338328;
inline constexpr double zeta2 = 1.64493406684822643647241516665;
inline constexpr double zeta3 = 1.20205690315959428539973816151;
inline constexpr double ln2 = 0.693147180559945309417232121458;
}  // namespace constants

/// Riemann zeta at integers n >= 2.
double zeta(int n);

/// Li_s(z). Principal mode rejects z on the open cut (1, inf) with
/// Errc::branch; the limit modes return Li_s(x +- i0) there and behave like
/// principal mode elsewhere. Li_1(1) raises Errc::pole.
cplx li(PolyLogOrder s, cplx z, BranchMode branch = BranchMode::principal);
inline cplx li(int s, cplx z, BranchMode branch = BranchMode::principal) {
  return li(PolyLogOrder(s), z, branch);
}

/// |(Li_{s+1}(z+h) - Li_{s+1}(z-h)) / 2h - Li_s(z)/z|
double li_derivative_check(PolyLogOrder s, cplx z, double h);

/// Residual of Rogers' five-term dilogarithm relation at (A, B).
double rogers_residual(cplx a, cplx b);

/// Residual of Abel's five-term dilogarithm relation at (x, y).
double abel_residual(cplx x, cplx y);

struct AltMzvResult {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Partial sum of zeta(-3,-1) = sum_{m>n>=1} (-1)^(m+n) / (m^3 n) over m <= terms.
AltMzvResult alt_mzv_31(long terms);

}  // namespace hzn::polylog
