#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gpi {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyOptions {
  std::optional<int> m;            // restrict dimension-parameterized checks
  std::optional<std::uint64_t> p;  // restrict characteristic
  std::optional<std::uint32_t> n;  // circle-expansion length
  std::uint64_t seed = 0x5eed2024;
};

/// Registered suites in run order (without "all").
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);

/// Runs one suite, or every suite for "all". Throws PreconditionError on an
/// unknown name.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& options = {});

}  // namespace gpi
