#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ordalg::cli {

  // Exit status: 0 success or property holds, 1 property fails, 2 input or
  // validation error. JSON goes to `out`, messages to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  std::vector<std::string> verb_names();

  // (module, operation) -> verb that reaches it.
  struct RegistryEntry {
    std::string module;
    std::string operation;
    std::string verb;
  };
  std::vector<RegistryEntry> const& operation_registry();

}  // namespace ordalg::cli
