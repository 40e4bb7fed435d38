#pragma once

#include <span>

#include "ordalg/algebra.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/relation.hpp"
#include "ordalg/results.hpp"

namespace ordalg {

  using PosetCoinserter      = Coinserter<FinitePoset, MonotoneMap>;
  using AlgebraCoinserter    = Coinserter<OrderedAlgebra, Homomorphism>;
  using PosetFactorization   = Factorization<FinitePoset, MonotoneMap>;
  using PosetPullback        = Pullback<FinitePoset, MonotoneMap>;
  using AlgebraPullback      = Pullback<OrderedAlgebra, Homomorphism>;

  // Coinserter of f0, f1: X -> Y in Pos: the posetal reflection of the least
  // preorder on Y containing <=_Y and every (f0 x, f1 x).
  PosetCoinserter coinserter_pos(MonotoneMap const& f0, MonotoneMap const& f1);

  // Tabulation {(a, a') : h(a) <= h(a')} with the componentwise order. For
  // homomorphisms the carrier is the corresponding subalgebra of A x A.
  RelationPair        subkernel_pair(MonotoneMap const& h);
  AlgebraRelationPair subkernel_pair(Homomorphism const& h);

  // For a subcongruence the tabulation is already a preorder containing the
  // order of A, so no closure is taken. Throws PreconditionError naming the
  // failed flag otherwise.
  PosetCoinserter coinserter_subcongruence_pos(RelationPair const& r);
  PosetCoinserter coinserter_subcongruence_pos(FinitePoset const& a, Relation const& pairs);

  // Quotient of an algebra by a subcongruence; the operations are induced
  // by sigma_C(c a_1, ..., c a_n) = c(sigma_A(a_1, ..., a_n)).
  AlgebraCoinserter quotient_algebra(AlgebraRelationPair const& r);
  AlgebraCoinserter quotient_algebra(OrderedAlgebra const& a, Relation const& pairs);

  // General coinserter in Sigma-Pos: least relation on Y containing <=_Y and
  // the generating pairs that is a preorder and compatible with every
  // operation, then its posetal reflection with induced operations.
  AlgebraCoinserter coinserter_alg(Homomorphism const& f0, Homomorphism const& f1);

  // Brute-force universal property against a family of targets:
  //  (0) c . f0 <= c . f1;
  //  (1) every c': Y -> Z with c' . f0 <= c' . f1 has exactly one
  //      factorization through c (counted, not assumed);
  //  (2) u0 . c <= u1 . c implies u0 <= u1 for all u0, u1: C -> Z.
  Check verify_coinserter_universal(PosetCoinserter const&        candidate,
                                    MonotoneMap const&            f0,
                                    MonotoneMap const&            f1,
                                    std::span<FinitePoset const> targets);
  Check verify_coinserter_universal(AlgebraCoinserter const&        candidate,
                                    Homomorphism const&             f0,
                                    Homomorphism const&             f1,
                                    std::span<OrderedAlgebra const> targets);

  // f == mono . epi with epi the coinserter of the subkernel pair of f. The
  // three invariants are checked on every call (std::logic_error if broken).
  PosetFactorization   subregular_factorization(MonotoneMap const& f);
  AlgebraFactorization subregular_factorization(Homomorphism const& f);

  // Pullback of f: B -> Q along e: A -> Q.
  PosetPullback   pullback(MonotoneMap const& f, MonotoneMap const& e);
  AlgebraPullback pullback(Homomorphism const& f, Homomorphism const& e);

  // When e is surjective the leg e' of the pullback must be surjective;
  // vacuously true otherwise.
  Check pullback_stability(MonotoneMap const& f, MonotoneMap const& e);
  Check pullback_stability(Homomorphism const& f, Homomorphism const& e);

}  // namespace ordalg
