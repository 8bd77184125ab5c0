#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hzn {

using cplx = std::complex<double>;

enum class Errc {
  domain,
  pole,
  branch,
  degenerate,
  convergence,
  near_pole,
  resource,
  lookup,
  invalid_argument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc categories;
/// the C API maps them one-to-one onto hzn_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

enum class Method { quadrature, series, closed_form };

std::string_view to_string(Method m) noexcept;

struct ValueWithError {
  cplx value{};
  double abs_err = 0.0;
  Method method = Method::quadrature;
  std::int64_t evaluations = 1;
  // false when the evaluator hit its level/index cap before reaching the
  // requested accuracy; abs_err then holds the achieved estimate.
  bool converged = true;
};

inline bool is_finite(cplx x) noexcept {
  return std::isfinite(x.real()) && std::isfinite(x.imag());
}

void require_finite(cplx x, std::string_view what);

}  // namespace hzn
