#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

  // A term over a signature: either a variable or an operation symbol
  // applied to argument terms.
  class Term {
   public:
    static Term variable(std::string name);
    static Term apply(std::string op, std::vector<Term> args);

    [[nodiscard]] bool is_variable() const noexcept {
      return variable_;
    }
    [[nodiscard]] std::string const& symbol() const noexcept {
      return symbol_;
    }
    [[nodiscard]] std::vector<Term> const& args() const noexcept {
      return args_;
    }

    // Variables have depth 0, a constant has depth 1.
    [[nodiscard]] std::size_t depth() const noexcept;
    // Prefix notation: m(x,u(y)); constants print without parentheses.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    bool              variable_ = true;
    std::string       symbol_;
    std::vector<Term> args_;
  };

  // Recursive-descent reader for prefix notation. An identifier is a
  // variable if it is declared in `variables`, otherwise an operation symbol
  // whose arity must match. Constants may be written "c" or "c()".
  Term parse_term(std::string_view                text,
                  Signature const&                signature,
                  std::vector<std::string> const& variables);

  // Every term of depth <= `depth` in the given variables, shallower terms
  // first; within a depth level by operation index then argument tuples in
  // the order of the previous level. This is a truncation of the free
  // algebra, not an algebra itself. Throws ResourceError above `cap` terms.
  std::vector<Term> free_terms(Signature const&                signature,
                               std::vector<std::string> const& variables,
                               std::size_t                     depth,
                               std::size_t                     cap = 100000);

  using Valuation = std::map<std::string, std::size_t, std::less<>>;

  std::size_t evaluate(Term const& t, OrderedAlgebra const& a, Valuation const& valuation);

  struct Inequation {
    std::vector<std::string> variables;
    Term                     lhs;
    Term                     rhs;
  };

  struct VarietyPresentation {
    Signature               signature;
    std::vector<Inequation> inequations;
  };

  // Checks lhs <= rhs under every valuation. The witness lists "x=label"
  // for the least failing valuation (variables in declared order).
  Check satisfies(OrderedAlgebra const& a, Inequation const& ineq);
  Check satisfies(OrderedAlgebra const& a, VarietyPresentation const& v);

  struct BirkhoffReport {
    std::size_t              members             = 0;
    std::size_t              satisfying          = 0;
    std::size_t              products_checked    = 0;
    std::size_t              subalgebras_checked = 0;
    std::size_t              images_checked      = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool closed() const noexcept {
      return violations.empty();
    }
  };

  // Within `family`: products of satisfying pairs, subalgebras of
  // satisfying members, and codomains of surjective homomorphisms out of
  // satisfying members (codomains drawn from the family) must satisfy `v`.
  BirkhoffReport birkhoff_closure_check(VarietyPresentation const&       v,
                                        std::span<OrderedAlgebra const> family);

}  // namespace ordalg
