#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fresnel::cli {

struct Check {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteOptions {
  std::size_t n = 1'000'000;  // Monte Carlo sample size (cf-mc)
  std::uint64_t seed = 7;
};

std::span<const std::string_view> suite_names();

/// Throws std::invalid_argument for an unknown suite. Numerical failures
/// inside a check propagate.
std::vector<Check> run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace fresnel::cli
