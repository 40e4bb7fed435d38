#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/colimit.hpp"
#include "ordalg/poset.hpp"

// Instance-level checks of generator properties, tensors P (x) G and the
// hom-algebra construction. Copowers of algebras are never materialized;
// canonical morphisms are handled through their component families.

namespace ordalg {

  // hom(G, X) with the pointwise order. Element i of `poset` is `maps[i]`,
  // labelled by its image list "[x0,x1,...]".
  struct HomPoset {
    FinitePoset              poset;
    std::vector<Table>       maps;
    std::map<Table, std::size_t> index;

    [[nodiscard]] std::optional<std::size_t> find(Table const& t) const {
      auto it = index.find(t);
      if (it == index.end()) {
        return std::nullopt;
      }
      return it->second;
    }
  };

  HomPoset hom_poset(FinitePoset const& g, FinitePoset const& x);
  HomPoset hom_poset(OrderedAlgebra const& g, OrderedAlgebra const& x);

  struct SupportResult {
    MonotoneMap              map;
    std::vector<std::size_t> support;
    std::size_t              component_bound = 0;

    [[nodiscard]] bool within_bound() const noexcept {
      return support.size() <= component_bound;
    }
  };

  // `copower` must be a coproduct whose every summand is f.dom(); throws
  // InputError otherwise.
  SupportResult support_analysis(MonotoneMap const& f, CoproductResult const& copower);

  // Every element of X lies in the image of some morphism G -> X; the
  // witness is the least unreached element.
  Check canonical_cover_check(FinitePoset const& g, FinitePoset const& x);
  Check canonical_cover_check(OrderedAlgebra const& g, OrderedAlgebra const& x);

  // Every morphism G -> B lifts along the surjection e: A -> B. Throws
  // PreconditionError if e is not surjective.
  Check is_subregular_projective_instance(FinitePoset const& g, MonotoneMap const& e);
  Check is_subregular_projective_instance(OrderedAlgebra const& g, Homomorphism const& e);

  struct ReflectsIsoResult {
    bool antecedent = false;  // h . (-): hom(G,A) -> hom(G,B) is an order isomorphism
    bool consequent = false;  // h is an isomorphism
    [[nodiscard]] bool holds() const noexcept {
      return !antecedent || consequent;
    }
  };

  ReflectsIsoResult reflects_iso_instance(FinitePoset const& g, MonotoneMap const& h);
  ReflectsIsoResult reflects_iso_instance(OrderedAlgebra const& g, Homomorphism const& h);

  // P (x) G as the coinserter of R.G => |P|.G, where R lists the order
  // pairs of P and the legs are induced by the two projections.
  struct TensorResult {
    FinitePoset              p;
    FinitePoset              g;
    CoproductResult          copower;  // |P| . G, summand x for element x
    FinitePoset              object;   // C
    MonotoneMap              arrow;    // |P| . G -> C
    std::vector<MonotoneMap> components;  // c_x : G -> C
    HomPoset                 hom_g_c;
    MonotoneMap              unit_witness;  // P -> hom(G, C), x |-> c_x
  };

  TensorResult tensor_pos(FinitePoset const& p, FinitePoset const& g);

  // hom(C, X) ~ Pos(P, hom(G, X)) via f |-> (x |-> f . c_x), with the
  // inverse built from the coinserter's universal property; both directions
  // are checked to be mutually inverse and monotone.
  Check verify_tensor_adjunction(TensorResult const& t, FinitePoset const& x);

  // The canonical comparison C -> P x G is an order isomorphism.
  Check tensor_matches_product(TensorResult const& t);

  struct HomAlgebra {
    FinitePoset base;       // K
    FinitePoset generator;  // G
    std::size_t arity_bound = 0;
    // sigma[n] lists the n-ary operations, i.e. the monotone maps G -> n.G.
    std::vector<std::vector<Table>> sigma;
    std::vector<CoproductResult>    copowers;  // n . G
    HomPoset                        carrier;   // hom(G, K)
    OrderedAlgebra                  algebra;
  };

  inline constexpr std::size_t kDefaultSizeCap = 5000;

  // Operation s<n>_<k> is the k-th monotone map G -> n.G and acts by
  // (f_1, ..., f_n) |-> [f_1, ..., f_n] . sigma. Throws ResourceError when
  // some |hom(G, n.G)| or operation table exceeds `size_cap`.
  HomAlgebra hom_algebra(FinitePoset const& k,
                         FinitePoset const& g,
                         std::size_t        arity_bound,
                         std::size_t        size_cap = kDefaultSizeCap);

  // E h = h . (-) : EK -> EL.
  Homomorphism hom_algebra_map(HomAlgebra const& ek, HomAlgebra const& el, MonotoneMap const& h);

}  // namespace ordalg
