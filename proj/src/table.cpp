#include "hzn/table.hpp"

#include <cmath>
#include <functional>

#include "hzn/closedform.hpp"
#include "hzn/polylog.hpp"

namespace hzn::table {

namespace {

using polylog::BranchMode;
using polylog::li;

struct Entry {
  int k, n;
  cplx u, v;
  const char* label;
  const char* expression;
  std::function<cplx()> printed;
  double tolerance;
};

cplx lg(double x) { return std::log(x); }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = [] {
    const double pi = polylog::constants::pi;
    const BranchMode below = BranchMode::limit_from_below;
    return std::vector<Entry>{
        {1, 1, 0.5, -1.0, "(1,1),(1/2,-1)", "log(2) log(2/3) - Li2(1/3) + Li2(2/3)",
         [] { return lg(2.0) * lg(2.0 / 3.0) - li(2, 1.0 / 3.0) + li(2, 2.0 / 3.0); }, 1e-9},
        {1, 1, 1.0 / 3.0, -1.0, "(1,1),(1/3,-1)", "log(2) log(2/3) - Li2(1/2) + Li2(3/4)",
         [] { return lg(2.0) * lg(2.0 / 3.0) - li(2, 0.5) + li(2, 0.75); }, 1e-9},
        {1, 1, 1.0, 0.25, "(1,1),(1,1/4)", "Li2(-1/3)", [] { return li(2, -1.0 / 3.0); }, 1e-9},
        {1, 1, -4.0, -2.0, "(1,1),(-4,-2)", "-log(5) log(6) - Li2(-5) - pi^2/12",
         [pi] { return -lg(5.0) * lg(6.0) - li(2, -5.0) - pi * pi / 12.0; }, 1e-9},
        {2, 2, 1.0, 1.0 / 9.0, "(2,2),(1,1/9)", "-2 [Li3(-1/2) + Li3(1/4)]",
         [] { return -2.0 * (li(3, -0.5) + li(3, 0.25)); }, 1e-9},
        // Li(9) and Li(3) are taken as limits from below the cut.
        {2, 1, -2.0, -3.0, "(2,1),(-2,-3)",
         "-log^2(3) log(8) - i pi log^2(3) - 2 log(3) Li2(9) + 2 Li3(9) - 2 Li3(3)",
         [pi, below] {
           const cplx l3 = lg(3.0);
           return -l3 * l3 * lg(8.0) - cplx{0.0, pi} * l3 * l3 - 2.0 * l3 * li(2, 9.0, below) +
                  2.0 * li(3, 9.0, below) - 2.0 * li(3, 3.0, below);
         },
         1e-8},
        {1, 2, 1.0, -1.0, "(1,2),(1,-1)", "Li2(i/(i-1)) + Li2(i/(i+1))",
         [] {
           const cplx i{0.0, 1.0};
           return li(2, i / (i - 1.0)) + li(2, i / (i + 1.0));
         },
         1e-9},
        {2, 1, 1.0, -1.0, "(2,1),(1,-1)", "-2 Li3(1/2)", [] { return -2.0 * li(3, 0.5); }, 1e-9},
    };
  }();
  return e;
}

cplx general_value(const Entry& e) {
  if (e.u == 1.0) return closed::fk_u1_at_1_over_n(e.v, e.k, e.n);
  if (e.n == 1) return closed::fk_at_1(e.u, e.v, e.k);
  return closed::fk_at_1_over_n(e.u, e.v, e.k, e.n);
}

}  // namespace

Row row(std::size_t i, const quad::QuadConfig& cfg) {
  if (i >= entries().size()) fail(Errc::invalid_argument, "table row index out of range");
  const Entry& e = entries()[i];
  Row r;
  r.k = e.k;
  r.n = e.n;
  r.u = e.u;
  r.v = e.v;
  r.label = e.label;
  r.expression = e.expression;
  r.printed = e.printed();
  r.general = general_value(e);
  r.oracle = quad::integrate_fk(1.0 / e.n, e.u, e.v, e.k, cfg);
  r.residual = std::abs(r.printed - r.oracle.value);
  r.tolerance = e.tolerance;
  return r;
}

std::vector<Row> rows(const quad::QuadConfig& cfg) {
  std::vector<Row> out;
  for (std::size_t i = 0; i < kRowCount; ++i) out.push_back(row(i, cfg));
  return out;
}

}  // namespace hzn::table
