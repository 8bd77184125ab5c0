#pragma once

// Branch tracking for the printed closed forms. A formula template is first
// run through a Recorder to list its log / Li arguments as functions of the
// parameters. Along a path from a base point, where the principal values
// are known to be right, every crossing of a cut is turned into a
// correction:
//
//   log x  crossing (-inf, 0) downward:   + 2 pi i
//   Li_s x crossing (1, inf)  downward:   + 2 pi i log^(s-1)(x) / (s-1)!
//   Li_s x crossing (-inf, 0):            re-expand the correction
//                                          polynomial in the shifted log
//
// (reverse crossings subtract). "Upper" means Im >= 0, so real arguments on
// a cut sit on its upper side, matching principal_log and the
// limit_from_above polylog.

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hzn/domains.hpp"
#include "hzn/polylog.hpp"

namespace hzn::closed::detail {

struct Term {
  bool is_log = true;
  int s = 0;
  cplx x;
};

class Recorder {
 public:
  std::vector<Term> terms;
  cplx log(const char*, cplx x) {
    terms.push_back({true, 0, x});
    return {};
  }
  cplx li(const char*, int s, cplx x) {
    terms.push_back({false, s, x});
    return {};
  }
};

/// Literal evaluation; an argument on a cut raises Errc::branch naming the term.
class Principal {
 public:
  cplx log(const char* label, cplx x);
  cplx li(const char* label, int s, cplx x);
};

/// Literal evaluation with polylog arguments on (1, inf) taken as the given
/// one-sided limit.
class OneSided {
 public:
  explicit OneSided(polylog::BranchMode mode) : mode_(mode) {}
  cplx log(const char* label, cplx x);
  cplx li(const char* label, int s, cplx x);

 private:
  polylog::BranchMode mode_;
};

/// Coefficients a_j of sum_j a_j L^j, L = principal log of the argument.
/// For a log term only a_0 is used.
using Correction = std::array<cplx, polylog::kMaxOrder>;

class Corrected {
 public:
  explicit Corrected(const std::vector<Correction>& c) : corr_(c) {}
  cplx log(const char* label, cplx x);
  cplx li(const char* label, int s, cplx x);

 private:
  const std::vector<Correction>& corr_;
  std::size_t next_ = 0;
};

using Point = std::array<cplx, 3>;
using RecordFn = std::function<std::vector<Term>(const Point&)>;

/// A value that must not cross a cut along the path: (-inf, 0] when
/// negative is set, [1, inf) otherwise.
struct Wall {
  cplx x;
  bool negative = true;
};

/// Region where the represented function is analytic. Every path point must
/// satisfy inside, and no wall value may cross its cut between two points.
/// The walls catch thin excursions that a pointwise check steps over.
struct Region {
  bool (*inside)(const Point&) = nullptr;
  std::vector<Wall> (*walls)(const Point&) = nullptr;
};

/// Corrections that continue the recorded terms to target inside region,
/// starting from the first base that reaches it. The principal values must
/// be right at every base. Throws Errc::branch if no admissible path is found.
std::vector<Correction> track(const RecordFn& record, std::span<const Point> bases, const Point& target,
                              const Region& region = {});

/// True if the segment from a to b meets (-inf, 0] (toward_negative) or
/// [1, inf).
bool segment_meets_cut(cplx a, cplx b, bool toward_negative);

/// True if t -> (a t + b) / (c t + d), t in [0, 1], meets (-inf, 0].
bool mobius_arc_meets_negative_axis(cplx a, cplx b, cplx c, cplx d);

}  // namespace hzn::closed::detail
