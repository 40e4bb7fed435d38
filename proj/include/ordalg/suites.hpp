#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Named invariant suites: exhaustive and seeded property checks over
// families of small instances.

namespace ordalg {

  struct SuiteOptions {
    std::size_t   size         = 0;  // main carrier bound
    std::size_t   algebra_size = 0;  // carrier bound for algebra families
    std::size_t   samples      = 0;  // seeded instances, where applicable
    std::size_t   oracle_size  = 0;  // bound on oracle targets
    std::uint64_t seed         = 0;
  };

  struct SuiteReport {
    std::string                                      name;
    SuiteOptions                                     options;
    std::size_t                                      checked = 0;
    std::size_t                                      failed  = 0;
    std::vector<std::pair<std::string, std::size_t>> parts;  // checks per part
    std::string                                      first_failure;
    std::vector<std::string>                         witness;
    std::string                                      scope;

    [[nodiscard]] bool passed() const noexcept {
      return failed == 0 && checked > 0;
    }
  };

  struct SuiteInfo {
    std::string  name;
    std::string  summary;
    SuiteOptions defaults;
    SuiteReport (*run)(SuiteOptions const&);
  };

  std::vector<SuiteInfo> const& suites();
  std::optional<SuiteInfo>      find_suite(std::string_view name);

  // Throws InputError for an unknown suite.
  SuiteReport run_suite(std::string_view name, SuiteOptions const& options);
  SuiteReport run_suite(std::string_view name);

}  // namespace ordalg
