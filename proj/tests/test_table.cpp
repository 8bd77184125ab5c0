#include <cmath>

#include "doctest.h"
#include "hzn/polylog.hpp"
#include "hzn/table.hpp"

using hzn::cplx;

TEST_CASE("all eight rows match the oracle") {
  const auto rows = hzn::table::rows();
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    INFO(r.label);
    CHECK(r.oracle.converged);
    CHECK(r.residual <= r.tolerance);
    CHECK(std::abs(r.general - r.oracle.value) <= r.tolerance);
  }
}

TEST_CASE("row values") {
  const auto rows = hzn::table::rows();
  CHECK(rows[0].label == "(1,1),(1/2,-1)");
  CHECK(std::abs(rows[2].printed - hzn::polylog::li(2, -1.0 / 3.0)) == 0.0);
  // mpmath, 30 digits
  CHECK(std::abs(rows[5].oracle.value - cplx{-0.5207969005642310, 0.0}) <= 1e-13);
  CHECK(std::abs(rows[7].oracle.value - cplx{-1.0744263872160804, 0.0}) <= 1e-13);
}

TEST_CASE("the cut row needs the limit from below") {
  using hzn::polylog::BranchMode;
  using hzn::polylog::li;
  const double l3 = std::log(3.0), pi = hzn::polylog::constants::pi;
  const auto above = BranchMode::limit_from_above;
  const cplx printed_above = -l3 * l3 * std::log(8.0) - cplx{0.0, pi} * l3 * l3 - 2.0 * l3 * li(2, 9.0, above) +
                             2.0 * li(3, 9.0, above) - 2.0 * li(3, 3.0, above);
  const auto rows = hzn::table::rows();
  CHECK(std::abs(printed_above.imag() + 2.0 * pi * l3 * l3) <= 1e-12);
  CHECK(std::abs(rows[5].printed.imag()) <= 1e-12);
}
