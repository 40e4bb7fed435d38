#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordalg/errors.hpp"

// Finite posets, preorders and monotone maps. Elements are addressed by
// their index in the carrier; labels only matter at the I/O boundary.

namespace ordalg {

  using Table     = std::vector<std::size_t>;
  using LabelPair = std::pair<std::string, std::string>;
  using Partition = std::vector<std::vector<std::size_t>>;

  // Square boolean matrix over {0, ..., n-1}.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return n_;
    }
    [[nodiscard]] bool test(std::size_t i, std::size_t j) const noexcept {
      return bits_[i * n_ + j] != 0;
    }
    void set(std::size_t i, std::size_t j, bool value = true) noexcept {
      bits_[i * n_ + j] = value ? 1 : 0;
    }

    static Relation identity(std::size_t n);
    static Relation full(std::size_t n);

    // Warshall closure; adds the diagonal.
    void close_reflexive_transitive();

    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool        is_reflexive() const noexcept;
    [[nodiscard]] bool        is_transitive() const noexcept;
    [[nodiscard]] bool        is_antisymmetric() const noexcept;
    [[nodiscard]] bool        contains(Relation const& other) const noexcept;

    // Pairs (i, j) in lexicographic order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    std::size_t               n_ = 0;
    std::vector<std::uint8_t> bits_;
  };

  namespace detail {
    struct OrderedCarrier;
  }

  class FinitePreorder;

  // A finite partially ordered set. Cheap to copy: the representation is
  // shared and immutable.
  class FinitePoset {
   public:
    FinitePoset();

    // Closes `le` reflexively and transitively, then checks antisymmetry.
    static FinitePoset from_relation(std::vector<std::string> labels, Relation le);
    static FinitePoset from_pairs(std::vector<std::string>     labels,
                                  std::vector<LabelPair> const& le);

    // Carriers labelled "0", "1", ...
    static FinitePoset chain(std::size_t n);
    static FinitePoset antichain(std::size_t n);
    static FinitePoset discrete(std::vector<std::string> labels);

    [[nodiscard]] std::size_t size() const noexcept;
    [[nodiscard]] bool        empty() const noexcept {
      return size() == 0;
    }
    [[nodiscard]] std::string const&              label(std::size_t i) const;
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept;
    [[nodiscard]] std::optional<std::size_t>      find(std::string_view label) const;
    // Throws InputError for unknown labels.
    [[nodiscard]] std::size_t index_of(std::string_view label) const;

    [[nodiscard]] bool le(std::size_t i, std::size_t j) const noexcept;
    [[nodiscard]] bool comparable(std::size_t i, std::size_t j) const noexcept {
      return le(i, j) || le(j, i);
    }
    [[nodiscard]] Relation const& order() const noexcept;
    [[nodiscard]] bool            is_discrete() const noexcept;

    [[nodiscard]] FinitePreorder as_preorder() const;

    friend bool operator==(FinitePoset const& a, FinitePoset const& b);

   private:
    explicit FinitePoset(std::shared_ptr<detail::OrderedCarrier const> rep);
    std::shared_ptr<detail::OrderedCarrier const> rep_;
    friend class FinitePreorder;
  };

  // Reflexive and transitive, not necessarily antisymmetric.
  class FinitePreorder {
   public:
    FinitePreorder();
    static FinitePreorder from_relation(std::vector<std::string> labels, Relation leq);

    [[nodiscard]] std::size_t                     size() const noexcept;
    [[nodiscard]] std::string const&              label(std::size_t i) const;
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept;
    [[nodiscard]] std::size_t                     index_of(std::string_view label) const;
    [[nodiscard]] bool            leq(std::size_t i, std::size_t j) const noexcept;
    [[nodiscard]] Relation const& order() const noexcept;

    friend bool operator==(FinitePreorder const& a, FinitePreorder const& b);

   private:
    explicit FinitePreorder(std::shared_ptr<detail::OrderedCarrier const> rep);
    std::shared_ptr<detail::OrderedCarrier const> rep_;
    friend class FinitePoset;
  };

  class MonotoneMap {
   public:
    // Validates totality, range and monotonicity; throws InputError.
    MonotoneMap(FinitePoset dom, FinitePoset cod, Table table);

    static MonotoneMap identity(FinitePoset const& p);
    static MonotoneMap constant(FinitePoset const& dom,
                                FinitePoset const& cod,
                                std::size_t        value);

    [[nodiscard]] FinitePoset const& dom() const noexcept {
      return dom_;
    }
    [[nodiscard]] FinitePoset const& cod() const noexcept {
      return cod_;
    }
    [[nodiscard]] Table const& table() const noexcept {
      return table_;
    }
    [[nodiscard]] std::size_t operator()(std::size_t x) const {
      return table_[x];
    }

    friend bool operator==(MonotoneMap const& a, MonotoneMap const& b);

   private:
    struct Unchecked {};
    MonotoneMap(Unchecked, FinitePoset dom, FinitePoset cod, Table table);

    FinitePoset dom_;
    FinitePoset cod_;
    Table       table_;

    friend MonotoneMap compose(MonotoneMap const&, MonotoneMap const&);
  };

  // g . f
  MonotoneMap compose(MonotoneMap const& g, MonotoneMap const& f);
  // f <= g in the pointwise order of the hom-poset.
  bool pointwise_le(MonotoneMap const& f, MonotoneMap const& g);

  bool is_monotone(FinitePoset const& dom, FinitePoset const& cod, Table const& table);
  bool is_embedding(MonotoneMap const& f);
  bool is_surjective(MonotoneMap const& f);
  bool is_injective(MonotoneMap const& f);
  // Bijective embedding; the inverse is then automatically monotone.
  bool is_isomorphism(MonotoneMap const& f);

  ////////////////////////////////////////////////////////////////////////
  // Preorders and posetal reflection
  ////////////////////////////////////////////////////////////////////////

  // Smallest preorder on `elements` containing base and generators.
  FinitePreorder preorder_closure(std::vector<std::string>      elements,
                                  std::vector<LabelPair> const& base,
                                  std::vector<LabelPair> const& generators);

  struct PosetalReflection {
    FinitePoset quotient;
    // Defined on the preorder's carrier with the discrete order.
    MonotoneMap proj;
    Partition   classes;
  };

  // Classes are ordered by their least member, which is also the class
  // representative; quotient labels are "[label]".
  PosetalReflection posetal_reflection(FinitePreorder const& p);

  // True iff `table` (from the preorder's carrier into `cod`) respects the
  // preorder, i.e. x <= y implies table(x) <= table(y).
  bool respects(FinitePreorder const& p, FinitePoset const& cod, Table const& table);

  ////////////////////////////////////////////////////////////////////////
  // Products, coproducts, components
  ////////////////////////////////////////////////////////////////////////

  struct ProductResult {
    FinitePoset object;
    MonotoneMap left;
    MonotoneMap right;
    // Index of (p, q) in the product carrier.
    [[nodiscard]] std::size_t pair_index(std::size_t p, std::size_t q) const noexcept {
      return p * right.cod().size() + q;
    }
  };

  // Carrier in lexicographic order of pairs, labels "(p,q)".
  ProductResult product(FinitePoset const& p, FinitePoset const& q);

  struct CoproductResult {
    FinitePoset              object;
    std::vector<MonotoneMap> injections;
    // For every element of `object`, the summand it belongs to.
    std::vector<std::size_t> summand_of;
    std::vector<std::size_t> offset;
    [[nodiscard]] std::size_t inject(std::size_t summand, std::size_t x) const noexcept {
      return offset[summand] + x;
    }
  };

  // Disjoint union; labels "i:label" where i is the summand index.
  CoproductResult coproduct(std::vector<FinitePoset> const& summands);
  // M copies of g.
  CoproductResult copower(FinitePoset const& g, std::size_t copies);

  // Blocks ordered by least element, members ascending.
  Partition connected_components(FinitePoset const& p);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration of monotone maps
  ////////////////////////////////////////////////////////////////////////

  // Restriction of admissible images per domain element; an empty outer
  // vector means "no restriction".
  using Candidates = std::vector<std::vector<std::size_t>>;

  // Visits every order-preserving table from (n, dom_order) into `cod`,
  // extending element by element in index order with images in codomain
  // index order. The visitor returns false to stop early.
  void for_each_monotone_table(Relation const&                         dom_order,
                               FinitePoset const&                      cod,
                               std::function<bool(Table const&)> const& visit,
                               Candidates const&                       candidates = {});

  void for_each_monotone_table(FinitePoset const&                      dom,
                               FinitePoset const&                      cod,
                               std::function<bool(Table const&)> const& visit,
                               Candidates const&                       candidates = {});

  std::vector<MonotoneMap> enumerate_monotone_maps(FinitePoset const& p, FinitePoset const& q);
  std::size_t count_monotone_maps(FinitePoset const& p, FinitePoset const& q);

  // Admissible values of h on each element of the middle object so that
  // h . c == g; nullopt when g is not constant on some fibre of c.
  std::optional<Candidates> factorization_candidates(Table const& c,
                                                     std::size_t  mid_size,
                                                     std::size_t  target_size,
                                                     Table const& g);

  // Number of monotone h with h . c == g (c: A -> C, g: A -> Z). Counted by
  // search, so it is correct whether or not c is surjective.
  std::size_t count_factorizations(MonotoneMap const& c, MonotoneMap const& g);
  std::size_t count_factorizations(MonotoneMap const& c,
                                   FinitePoset const& target,
                                   Table const&       g);
  // The first factorization in enumeration order, if any.
  std::optional<MonotoneMap> factor_through(MonotoneMap const& c, MonotoneMap const& g);

  // An order isomorphism p -> q, if one exists.
  std::optional<MonotoneMap> find_isomorphism(FinitePoset const& p, FinitePoset const& q);

}  // namespace ordalg
