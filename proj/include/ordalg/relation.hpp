#pragma once

#include <map>
#include <string>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/poset.hpp"

// Relations as parallel pairs r0, r1: R -> A. Every relation is normalized
// to its tabulation {(r0 z, r1 z)} inside A x A with the componentwise
// order; joint order-reflection makes this lossless, and the factorization
// conditions on parallel pairs become element-level set conditions.

namespace ordalg {

  // A parallel pair of monotone maps. Not necessarily jointly
  // order-reflecting; classify() reports that.
  class RelationPair {
   public:
    // Throws InputError if r0 and r1 are not parallel.
    RelationPair(MonotoneMap r0, MonotoneMap r1);

    [[nodiscard]] MonotoneMap const& r0() const noexcept {
      return r0_;
    }
    [[nodiscard]] MonotoneMap const& r1() const noexcept {
      return r1_;
    }
    [[nodiscard]] FinitePoset const& carrier() const noexcept {
      return r0_.dom();
    }
    [[nodiscard]] FinitePoset const& target() const noexcept {
      return r0_.cod();
    }

   private:
    MonotoneMap r0_;
    MonotoneMap r1_;
  };

  class AlgebraRelationPair {
   public:
    AlgebraRelationPair(Homomorphism r0, Homomorphism r1);

    [[nodiscard]] Homomorphism const& r0() const noexcept {
      return r0_;
    }
    [[nodiscard]] Homomorphism const& r1() const noexcept {
      return r1_;
    }
    [[nodiscard]] OrderedAlgebra const& carrier() const noexcept {
      return r0_.dom();
    }
    [[nodiscard]] OrderedAlgebra const& target() const noexcept {
      return r0_.cod();
    }
    [[nodiscard]] RelationPair underlying() const {
      return RelationPair(r0_.map(), r1_.map());
    }

   private:
    Homomorphism r0_;
    Homomorphism r1_;
  };

  struct Tabulation {
    FinitePoset target;
    Relation    pairs;
  };

  // Throws PreconditionError if the legs are not jointly order-reflecting.
  Tabulation tabulate(RelationPair const& p);
  Tabulation tabulate(AlgebraRelationPair const& p);

  // The subposet of A x A on `pairs` (lexicographic order, labels "(a,b)")
  // with the two projections as legs.
  RelationPair relation_from_pairs(FinitePoset const& a, Relation const& pairs);
  // Same, as a subalgebra of A x A. Throws InputError if `pairs` is not
  // closed under the operations.
  AlgebraRelationPair relation_from_pairs(OrderedAlgebra const& a, Relation const& pairs);

  struct RelationClassification {
    bool is_relation       = true;
    bool is_reflexive      = true;
    bool is_symmetric      = true;
    bool is_transitive     = true;
    bool is_order_reflexive = true;
    bool is_congruence     = true;
    bool is_subcongruence  = true;
    // Keyed by flag name ("relation", "reflexive", ...); present only for
    // false flags. Each holds the lexicographically least counterexample.
    std::map<std::string, std::vector<std::string>> witnesses;

    friend bool operator==(RelationClassification const&, RelationClassification const&) = default;
  };

  // Element-level checks on a pair set T inside A x A:
  //   reflexive        Delta in T
  //   symmetric        T == T^-1
  //   transitive       T.T in T
  //   order-reflexive  <=_A in T (also called hyper-reflexive)
  // For algebras `relation` additionally requires T to be closed under every
  // operation componentwise.
  RelationClassification classify(FinitePoset const& a, Relation const& pairs);
  RelationClassification classify(OrderedAlgebra const& a, Relation const& pairs);
  RelationClassification classify(RelationPair const& p);
  RelationClassification classify(AlgebraRelationPair const& p);

}  // namespace ordalg
