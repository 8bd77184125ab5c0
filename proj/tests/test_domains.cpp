#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hzn/domains.hpp"

using hzn::cplx;
using hzn::Errc;
using namespace hzn::domains;

namespace {

double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

cplx draw_disk(std::mt19937_64& g, double radius) {
  const double r = radius * std::sqrt(uniform(g));
  const double th = 2.0 * std::numbers::pi * uniform(g);
  return std::polar(r, th);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const hzn::Error& e) {
    return e.code();
  }
  FAIL("expected hzn::Error");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("membership follows the set definitions") {
  CHECK(membership(0.5, Set::D));
  CHECK_FALSE(membership(1.0, Set::Dprime));
  CHECK(membership(1.0, Set::D));
  CHECK(membership(-4.0, Set::L));
  CHECK(membership(-2.0, Set::Lprime));
  CHECK_FALSE(membership(0.0, Set::D));
  CHECK_FALSE(membership(0.0, Set::L));
  CHECK(membership(1.0, Set::L));
  CHECK_FALSE(membership(1.0, Set::Lprime));
  CHECK_FALSE(membership(2.0, Set::L));
  CHECK(membership(cplx{2.0, 1e-300}, Set::L));
  CHECK(membership(cplx{0.0, 1.0}, Set::Dprime));
  CHECK_FALSE(membership(cplx{0.8, 0.8}, Set::D));
}

TEST_CASE("membership implications hold on random points") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 2000; ++i) {
    const cplx x = draw_disk(g, 2.0);
    if (membership(x, Set::Dprime)) CHECK(membership(x, Set::D));
    if (membership(x, Set::D) && !(x.imag() == 0.0 && x.real() > 1.0)) CHECK(membership(x, Set::L));
    if (membership(x, Set::Lprime)) CHECK(membership(x, Set::L));
  }
}

TEST_CASE("principal log and root") {
  CHECK(principal_log(-1.0).imag() == doctest::Approx(std::numbers::pi));
  CHECK(principal_log(cplx{-1.0, -0.0}).imag() == doctest::Approx(std::numbers::pi));
  const cplx r = principal_root(-1.0, 2);
  CHECK(std::abs(r - cplx{0.0, 1.0}) < 1e-15);
  for (int n = 1; n <= 7; ++n) CHECK(principal_root(1.0, n) == cplx{1.0, 0.0});
  CHECK(std::abs(principal_root(1.0 / 9.0, 2) - 1.0 / 3.0) < 1e-16);
  CHECK(code_of([] { principal_root(0.0, 3); }) == Errc::domain);
  CHECK(code_of([] { principal_root(2.0, 0); }) == Errc::domain);
}

TEST_CASE("principal root powers reproduce the input") {
  std::mt19937_64 g(5);
  for (int i = 0; i < 500; ++i) {
    const cplx x = draw_disk(g, 3.0);
    const int n = 1 + static_cast<int>(g() % 9);
    const cplx r = principal_root(x, n);
    CHECK(std::abs(std::pow(r, n) - x) <= 1e-13 * std::abs(x));
    const double arg = std::arg(r);
    CHECK(arg > -std::numbers::pi / n - 1e-15);
    CHECK(arg <= std::numbers::pi / n + 1e-15);
  }
  for (int n = 2; n <= 6; ++n) {
    const cplx r = principal_root(-3.0, n);
    CHECK(std::abs(std::pow(r, n) + 3.0) < 1e-13 * 3.0);
    CHECK(r.imag() > 0.0);
  }
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity(1).roots == std::vector<cplx>{1.0});
  const auto r2 = roots_of_unity(2).roots;
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == cplx{1.0, 0.0});
  CHECK(r2[1] == cplx{-1.0, 0.0});
  const auto r4 = roots_of_unity(4).roots;
  REQUIRE(r4.size() == 4);
  CHECK(r4[1] == cplx{0.0, 1.0});
  CHECK(r4[2] == cplx{-1.0, 0.0});
  CHECK(r4[3] == cplx{0.0, -1.0});
  CHECK(code_of([] { roots_of_unity(0); }) == Errc::domain);

  std::mt19937_64 g(3);
  for (int n = 1; n <= 12; ++n) {
    const auto roots = roots_of_unity(n).roots;
    REQUIRE(roots.size() == static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < roots.size(); ++j) {
      CHECK(std::abs(std::abs(roots[j]) - 1.0) <= 1e-14);
      if (j > 0) CHECK(std::arg(roots[j] * std::conj(roots[j - 1])) > 0.0);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const cplx x = draw_disk(g, 1.0);
      cplx prod = 1.0;
      for (cplx a : roots) prod *= 1.0 - a * x;
      CHECK(std::abs(prod - (1.0 - std::pow(x, n))) <= 1e-12);
    }
  }
}

TEST_CASE("partial fraction sum") {
  CHECK(partial_fraction_sum(0.0, 1) == cplx{1.0, 0.0});
  CHECK(std::abs(partial_fraction_sum(0.0, 7) - 7.0) < 1e-15);
  CHECK(std::abs(partial_fraction_sum(0.5, 2) - 8.0 / 3.0) < 1e-15);
  const cplx y{0.3, 0.4};
  const cplx explicit_sum = [&] {
    cplx s = 0.0;
    for (int j = 0; j < 5; ++j) s += 1.0 / (1.0 - std::polar(1.0, 2.0 * std::numbers::pi * j / 5.0) * y);
    return s;
  }();
  const cplx rhs = 5.0 / (1.0 - std::pow(y, 5));
  CHECK(std::abs(partial_fraction_sum(y, 5) - rhs) <= 1e-12 * std::abs(rhs));
  CHECK(std::abs(explicit_sum - rhs) <= 1e-12 * std::abs(rhs));
  CHECK(code_of([] { partial_fraction_sum(cplx{0.0, 1.0}, 4); }) == Errc::pole);
  CHECK(code_of([] { partial_fraction_sum(1.0, 3); }) == Errc::pole);
}

TEST_CASE("make_params fills region flags") {
  const auto p = make_params(1.0, -4.0, -2.0, cplx{0.5, 0.0}, 2);
  CHECK(p.flags.u_in_L);
  CHECK_FALSE(p.flags.u_in_D);
  CHECK(p.flags.v_in_Lprime);
  CHECK(p.flags.w_in_Dprime);
  CHECK(p.k == 2);
  const auto q = make_params(1.0, 1.0, 1.0);
  CHECK(q.flags.u_in_D);
  CHECK_FALSE(q.flags.u_in_Dprime);
  CHECK_FALSE(q.flags.v_in_Lprime);
  CHECK(code_of([] { make_params(cplx{NAN, 0.0}, 0.1, 0.1); }) == Errc::domain);
  CHECK(code_of([] { make_params(1.0, 0.1, 0.1, std::nullopt, 0); }) == Errc::domain);
}
