#pragma once

// Parameter sets and branch conventions shared by every evaluator.
//
//   D  = { z != 0 : |z| <= 1 }      D' = D \ {1}
//   L  = C \ ((1, inf) u {0})       L' = C \ ([1, inf) u {0})
//
// Membership is exact; there is no boundary epsilon.

#include <optional>
#include <vector>

#include "hzn/types.hpp"

namespace hzn::domains {

enum class Set { D, Dprime, L, Lprime };

bool membership(cplx x, Set set);

/// Principal logarithm, imaginary part in (-pi, pi]. A negative real input
/// maps to +i*pi regardless of the sign of its zero imaginary part.
cplx principal_log(cplx x);

/// exp(principal_log(x) / n). Throws Errc::domain for x == 0 or n < 1.
cplx principal_root(cplx x, int n);

struct RootsOfUnity {
  int n = 1;
  std::vector<cplx> roots;  // roots[j] = exp(2*pi*i*j/n), roots[0] == 1 exactly
};

RootsOfUnity roots_of_unity(int n);

/// Sum over n-th roots b of 1/(1 - b*y); equals n/(1 - y^n).
cplx partial_fraction_sum(cplx y, int n);

struct RegionFlags {
  bool u_in_L = false, u_in_D = false, u_in_Dprime = false;
  bool v_in_Lprime = false, v_in_D = false, v_in_Dprime = false;
  bool w_in_L = false, w_in_D = false, w_in_Dprime = false;
};

struct EvalParams {
  cplx z{1.0, 0.0};
  cplx u{};
  cplx v{};
  std::optional<cplx> w;
  int k = 1;
  int n = 1;  // root-of-unity order for multiplication formulas
  int p = 1;  // rational argument p/q
  int q = 1;
  RegionFlags flags;
};

/// Builds a bundle with region flags filled in. Throws Errc::domain on
/// non-finite components or k < 1.
EvalParams make_params(cplx z, cplx u, cplx v, std::optional<cplx> w = std::nullopt, int k = 1);

}  // namespace hzn::domains
