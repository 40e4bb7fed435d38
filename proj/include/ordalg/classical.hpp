#pragma once

#include <string>
#include <vector>

#include "ordalg/colimit.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/relation.hpp"

// Finite sets are discrete posets and functions are monotone maps between
// them. Everything here rejects non-discrete carriers with InputError.

namespace ordalg {

  FinitePoset finite_set(std::vector<std::string> labels);
  MonotoneMap finite_map(FinitePoset const& dom, FinitePoset const& cod, Table table);

  // {(a, a') : f(a) = f(a')} with the two projections.
  RelationPair kernel_pair_set(MonotoneMap const& f);

  struct SetCoequalizer {
    FinitePoset quotient;    // classes labelled "[rep]", rep the least member
    MonotoneMap projection;
    Partition   classes;
  };

  SetCoequalizer coequalizer_set(MonotoneMap const& r0, MonotoneMap const& r1);

  // Every g: Y -> Z with g.r0 == g.r1, for |Z| <= |Y| + 1, factors exactly
  // once through the projection.
  Check verify_coequalizer_universal(SetCoequalizer const& q,
                                     MonotoneMap const&    r0,
                                     MonotoneMap const&    r1);

  // f == m . c with c the coequalizer of the kernel pair and m injective.
  PosetFactorization regular_factorization_set(MonotoneMap const& f);

  // The kernel pair of the coequalizer of E tabulates back to E. Throws
  // PreconditionError if E is not an equivalence relation.
  bool effectivity_roundtrip_set(RelationPair const& e);
  bool effectivity_roundtrip_set(FinitePoset const& a, Relation const& pairs);

  // Computed on hom(1, R) -> hom(1, A) x hom(1, A): the pair must be jointly
  // injective there and its image an equivalence relation.
  Check congruence_wrt_point(RelationPair const& r);

  PosetPullback pullback_set(MonotoneMap const& f, MonotoneMap const& e);
  // When e is surjective the leg of pullback_set(f, e) over B is surjective.
  Check surjection_stability(MonotoneMap const& f, MonotoneMap const& e);

  // For a surjection f: A -> B, the coequalizer of its kernel pair is
  // isomorphic to B under A by a unique bijection.
  Check kernel_coequalizer_recovers(MonotoneMap const& f);

  // All partitions of {0, ..., n-1}, generated from restricted growth
  // strings; blocks ordered by least element.
  std::vector<Partition> set_partitions(std::size_t n);
  Relation               equivalence_of(std::size_t n, Partition const& blocks);

}  // namespace ordalg
