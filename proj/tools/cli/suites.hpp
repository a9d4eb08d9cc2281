#pragma once

// Property suites behind `hyperk verify`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperk::cli {

enum class Scale { Small, Full };

struct SuiteOptions {
  std::uint64_t seed = 1;
  Scale scale = Scale::Small;
  /// Deepest dyadic level checked by the dyadic suite.
  int depth = 6;
  std::size_t grid = 65;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  /// First counterexample, or the error that stopped the property.
  std::string detail;
  std::vector<std::string> notes;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// Throws std::invalid_argument for an unknown name; "all" runs every suite.
std::vector<PropertyResult> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace hyperk::cli
