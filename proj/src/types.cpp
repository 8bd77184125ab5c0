#include "hzn/types.hpp"

namespace hzn {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::pole: return "pole";
    case Errc::branch: return "branch";
    case Errc::degenerate: return "degenerate";
    case Errc::convergence: return "convergence";
    case Errc::near_pole: return "near_pole";
    case Errc::resource: return "resource";
    case Errc::lookup: return "lookup";
    case Errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::series: return "series";
    case Method::closed_form: return "closed_form";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

void require_finite(cplx x, std::string_view what) {
  if (!is_finite(x)) fail(Errc::domain, std::string(what) + " must be finite");
}

}  // namespace hzn
