#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/poset.hpp"

// Exhaustive and seeded instance families for the property suites.

namespace ordalg {

  using Rng = std::mt19937_64;

  // Base seed for algebra sampling; the user-facing seed is XORed in.
  inline constexpr std::uint64_t kAlgebraSeed = 0xB1EEB0FFULL;

  // Every partial order on {0, ..., n-1}, labels "0", "1", ...
  std::vector<FinitePoset> posets_of_size(std::size_t n);
  // Sizes 0 through max_size, in increasing size.
  std::vector<FinitePoset> all_posets(std::size_t max_size);

  std::vector<FinitePreorder> preorders_of_size(std::size_t n);
  std::vector<FinitePreorder> all_preorders(std::size_t max_size);

  // Each off-diagonal pair is included with a probability drawn uniformly
  // from [0.05, 0.4], then the relation is closed.
  FinitePreorder random_preorder(std::size_t n, Rng& rng);
  // Random pairs oriented along a random permutation of the carrier, then
  // closed.
  FinitePoset random_poset(std::size_t n, Rng& rng);
  // Uniform over all monotone maps dom -> cod (cod nonempty unless dom is).
  MonotoneMap random_monotone_map(FinitePoset const& dom, FinitePoset const& cod, Rng& rng);

  // Draws algebras over `signature`: a carrier uniformly from `carriers`,
  // then each operation uniformly among the monotone tables of its arity.
  class AlgebraSampler {
   public:
    AlgebraSampler(Signature signature, std::vector<FinitePoset> carriers);

    OrderedAlgebra draw(Rng& rng);
    std::vector<OrderedAlgebra> draw(std::size_t count, Rng& rng);

   private:
    std::vector<OperationTable> const& operations(std::size_t carrier, std::size_t arity);

    Signature                signature_;
    std::vector<FinitePoset> carriers_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<OperationTable>> cache_;
  };

  // One unary operation "u" and one binary operation "m".
  Signature unary_binary_signature();
  // One binary operation "m".
  Signature binary_signature();

  // Every algebra with one binary operation on a carrier of at most
  // max_size elements, over the labelled posets of all_posets(max_size).
  std::vector<OrderedAlgebra> all_binary_algebras(std::size_t max_size);

  // Least relabelled encoding of carrier order and operation tables over all
  // permutations of the carrier; equal codes mean isomorphic algebras over
  // the same signature.
  std::vector<std::size_t> canonical_code(OrderedAlgebra const& a);

  // The first member of each isomorphism class, in family order.
  std::vector<OrderedAlgebra> isomorphism_class_representatives(std::vector<OrderedAlgebra> const& family);

}  // namespace ordalg
