#pragma once

// Result shapes shared by the Pos and Sigma-Pos constructions.

namespace ordalg {

  // A constructed coinserter C with its arrow c: Y -> C. The flag records
  // that c . f0 <= c . f1 was confirmed pointwise during construction.
  template <typename Object, typename Arrow>
  struct Coinserter {
    Object object;
    Arrow  arrow;
    bool   comparability_witness = false;
  };

  // f == mono . epi with epi surjective and mono an embedding.
  template <typename Object, typename Arrow>
  struct Factorization {
    Object mid;
    Arrow  epi;
    Arrow  mono;
  };

  // Pullback of f: B -> Q along e: A -> Q. The carrier is the set of pairs
  // (a, b) with e(a) == f(b) in lexicographic order; `to_a` is the leg f'
  // and `to_b` the leg e' (the pullback of e).
  template <typename Object, typename Arrow>
  struct Pullback {
    Object object;
    Arrow  to_a;
    Arrow  to_b;
  };

}  // namespace ordalg
