#pragma once

// Registry of functional equations and special values, each with a seeded
// parameter sampler and two evaluators. run_identity draws the samples,
// evaluates both sides and reports residual statistics.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hzn/domains.hpp"
#include "hzn/types.hpp"

namespace hzn::identity {

using Params = domains::EvalParams;
using Side = std::function<ValueWithError(const Params&)>;
using Sampler = std::function<Params(std::mt19937_64&, int index)>;

struct IdentitySpec {
  std::string name;
  std::string description;
  Side lhs;
  Side rhs;
  Sampler sampler;
  double default_tol = 1e-9;
  int default_samples = 20;
  Method lhs_method = Method::quadrature;
  Method rhs_method = Method::quadrature;
  // Reported but never counted as a failure of the suite.
  bool informational = false;
};

struct Failure {
  int index = 0;
  Params params;
  double residual = 0.0;
  double threshold = 0.0;
};

struct IdentityReport {
  std::string name;
  bool informational = false;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  // Largest max(tol, 10 * (lhs.abs_err + rhs.abs_err)) over the samples.
  double max_threshold = 0.0;
  std::vector<Failure> failures;
  std::chrono::nanoseconds wall_time{0};

  bool passed() const { return failures.empty(); }
};

/// The registry, in a fixed order. Immutable after first use.
const std::vector<IdentitySpec>& registry();

std::vector<std::string> list_identities();

/// Throws Errc::lookup for an unknown name.
const IdentitySpec& find(const std::string& name);

struct RunOptions {
  std::optional<int> samples;  // default_samples when unset
  std::uint64_t seed = 1;
  std::optional<double> tol;  // default_tol when unset
  int threads = 1;
};

/// A sample fails when |lhs - rhs| > max(tol, 10 * (lhs.abs_err + rhs.abs_err)).
/// Parameters are drawn sequentially from one mt19937_64 stream, so the
/// report does not depend on the thread count. Throws Errc::lookup for an
/// unknown name and Errc::invalid_argument for samples < 1.
IdentityReport run_identity(const std::string& name, const RunOptions& opts);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform(std::mt19937_64& g);

}  // namespace hzn::identity
