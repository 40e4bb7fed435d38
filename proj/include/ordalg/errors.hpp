#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ordalg {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed or inconsistent input: unknown labels, non-monotone tables,
  // mismatched carriers.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called outside its precondition (e.g. quotienting by a
  // relation that is not a subcongruence).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A configured size cap was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // Outcome of a decidable property check. When `holds` is false, `witness`
  // carries the lexicographically least counterexample found.
  struct Check {
    bool                     holds = true;
    std::string              reason;
    std::vector<std::string> witness;

    static Check pass() {
      return {};
    }
    static Check fail(std::string reason, std::vector<std::string> witness = {}) {
      return Check{false, std::move(reason), std::move(witness)};
    }
    explicit operator bool() const noexcept {
      return holds;
    }
  };

}  // namespace ordalg
