#pragma once

// The eight tabulated special values of F_k(1/n;u,v). Each row carries the
// printed expression evaluated literally, the general closed-form
// evaluator, and the quadrature oracle.

#include <string>
#include <vector>

#include "hzn/quadrature.hpp"
#include "hzn/types.hpp"

namespace hzn::table {

struct Row {
  int k = 1;
  int n = 1;
  cplx u;
  cplx v;
  std::string label;       // "(k,n),(u,v)"
  std::string expression;  // printed closed form
  cplx printed;            // printed expression, evaluated
  cplx general;            // fk_at_1_over_n / fk_u1_at_1_over_n / fk_at_1
  ValueWithError oracle;
  double residual = 0.0;   // |printed - oracle|
  double tolerance = 0.0;
};

inline constexpr std::size_t kRowCount = 8;

/// Row i in table order, i < kRowCount.
Row row(std::size_t i, const quad::QuadConfig& cfg = {});

/// All rows, in table order.
std::vector<Row> rows(const quad::QuadConfig& cfg = {});

}  // namespace hzn::table
