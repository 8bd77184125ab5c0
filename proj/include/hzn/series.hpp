#pragma once

// Series continuations of F_k(z;u,v) and F(z;u,v,w) in z, valid off the
// negative rationals for |u|, |v|, |w| < 1:
//
//   F_k(z;u,v)   = (-1)^k sum_{M>=k} c_k(M) u^M sum_{l>=1} v^l / (zM + l)
//   F(z;u,v,w)   = sum_{M>=2} d(M) sum_{l>=1} v^l / (zM + l),
//                  d(M) = sum_{m=1}^{M-1} u^m w^(M-m) / (m (M-m))
//
// with c_k(M) the coefficient of x^M in (-log(1-x))^k. The inner l-sums and
// the outer M-sum are truncated by geometric majorants; the bounds are added
// into abs_err.

#include <vector>

#include "hzn/types.hpp"

namespace hzn::series {

struct SeriesConfig {
  double tol = 1e-12;
  int max_index = 4000;      // cap on M and on l
  double denom_floor = 1e-8; // minimum |zM + l| over every term touched

  void validate() const;
};

inline constexpr int kMaxLogPower = 6;
inline constexpr int kMaxCoeffIndex = 100000;

struct LogPowerCoeffs {
  int k = 1;
  std::vector<double> coeffs;  // coeffs[M] for M = 0..M_max, zero below k

  double operator[](std::size_t m) const { return coeffs[m]; }
  int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Coefficients of (-log(1-x))^k up to x^M_max. Throws Errc::domain for k
/// outside [1, 6] or M_max < k, Errc::resource for M_max > 1e5.
LogPowerCoeffs logpower_coeffs(int k, int m_max);

ValueWithError series_fk(cplx z, cplx u, cplx v, int k, const SeriesConfig& cfg = {});

ValueWithError series_f3(cplx z, cplx u, cplx v, cplx w, const SeriesConfig& cfg = {});

}  // namespace hzn::series
