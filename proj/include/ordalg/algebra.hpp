#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ordalg/errors.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/results.hpp"

namespace ordalg {

  struct Operation {
    std::string name;
    std::size_t arity = 0;
    friend bool operator==(Operation const&, Operation const&) = default;
  };

  class Signature {
   public:
    Signature() = default;
    // Throws InputError on duplicate names.
    explicit Signature(std::vector<Operation> operations);

    [[nodiscard]] std::size_t size() const noexcept {
      return ops_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return ops_.empty();
    }
    [[nodiscard]] Operation const& operator[](std::size_t k) const {
      return ops_.at(k);
    }
    [[nodiscard]] std::vector<Operation> const& operations() const noexcept {
      return ops_;
    }
    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    [[nodiscard]] bool                       has_constants() const noexcept;
    [[nodiscard]] std::size_t                max_arity() const noexcept;

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<Operation> ops_;
  };

  // base^exp for table sizes.
  std::size_t int_power(std::size_t base, std::size_t exp);

  // Argument tuples are encoded row-major, first argument most significant.
  std::size_t              encode_tuple(std::span<std::size_t const> args, std::size_t base);
  std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t arity, std::size_t base);

  using OperationTable = std::vector<std::size_t>;

  // Totality, range and monotonicity of every table. A failed check names
  // the operation and the lexicographically least pair of argument tuples
  // a <= b with op(a) !<= op(b).
  Check validate_algebra(Signature const&                   signature,
                         FinitePoset const&                 carrier,
                         std::vector<OperationTable> const& tables);

  namespace detail {
    struct AlgebraRep;
  }

  class OrderedAlgebra {
   public:
    // The empty algebra over the empty signature.
    OrderedAlgebra();
    // A poset viewed as an algebra over the empty signature.
    explicit OrderedAlgebra(FinitePoset carrier);
    // Throws InputError (with the validate_algebra witness) on invalid data.
    OrderedAlgebra(Signature signature, FinitePoset carrier, std::vector<OperationTable> tables);

    [[nodiscard]] Signature const&   signature() const noexcept;
    [[nodiscard]] FinitePoset const& carrier() const noexcept;
    [[nodiscard]] std::size_t        size() const noexcept {
      return carrier().size();
    }
    [[nodiscard]] OperationTable const&              table(std::size_t op) const;
    [[nodiscard]] std::vector<OperationTable> const& tables() const noexcept;
    [[nodiscard]] std::size_t apply(std::size_t op, std::span<std::size_t const> args) const;

    friend bool operator==(OrderedAlgebra const& a, OrderedAlgebra const& b);

   private:
    std::shared_ptr<detail::AlgebraRep const> rep_;
  };

  // A monotone map commuting with every operation.
  class Homomorphism {
   public:
    // Throws InputError when the table is not monotone or breaks an
    // operation; the message names the operation and argument tuple.
    Homomorphism(OrderedAlgebra dom, OrderedAlgebra cod, Table table);

    static Homomorphism identity(OrderedAlgebra const& a);

    [[nodiscard]] OrderedAlgebra const& dom() const noexcept {
      return dom_;
    }
    [[nodiscard]] OrderedAlgebra const& cod() const noexcept {
      return cod_;
    }
    [[nodiscard]] MonotoneMap const& map() const noexcept {
      return map_;
    }
    [[nodiscard]] Table const& table() const noexcept {
      return map_.table();
    }
    [[nodiscard]] std::size_t operator()(std::size_t x) const {
      return map_(x);
    }

    friend bool operator==(Homomorphism const& a, Homomorphism const& b) {
      return a.map_ == b.map_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
    }

   private:
    OrderedAlgebra dom_;
    OrderedAlgebra cod_;
    MonotoneMap    map_;
  };

  // True iff the table commutes with all operations (monotonicity not
  // checked).
  bool preserves_operations(OrderedAlgebra const& dom,
                            OrderedAlgebra const& cod,
                            Table const&          table);

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f);
  bool         is_surjective(Homomorphism const& h);
  bool         is_embedding(Homomorphism const& h);
  // A bijective order-embedding homomorphism; its inverse is a homomorphism.
  bool is_isomorphism(Homomorphism const& h);

  std::vector<Homomorphism> enumerate_homomorphisms(OrderedAlgebra const& a,
                                                    OrderedAlgebra const& b);
  // Tables in enumeration order; avoids materializing Homomorphism objects.
  void for_each_homomorphism_table(OrderedAlgebra const&                    a,
                                   OrderedAlgebra const&                    b,
                                   std::function<bool(Table const&)> const& visit,
                                   Candidates const&                        candidates = {});

  ////////////////////////////////////////////////////////////////////////
  // Birkhoff constructions
  ////////////////////////////////////////////////////////////////////////

  struct ProductAlgebra {
    OrderedAlgebra object;
    Homomorphism   left;
    Homomorphism   right;
  };

  // Componentwise order and operations; carrier as in poset product().
  ProductAlgebra product_algebra(OrderedAlgebra const& a, OrderedAlgebra const& b);

  struct Subalgebra {
    OrderedAlgebra object;
    Homomorphism   inclusion;
  };

  // Induced order on `subset` (kept in ascending index order). Throws
  // InputError naming the operation and tuple that leaves the subset.
  Subalgebra subalgebra(OrderedAlgebra const& a, std::vector<std::size_t> subset);

  // The operation-closed subsets of `a`, as ascending index lists.
  std::vector<std::vector<std::size_t>> closed_subsets(OrderedAlgebra const& a);

  using AlgebraFactorization = Factorization<OrderedAlgebra, Homomorphism>;

  // Surjection onto the image subalgebra followed by its inclusion.
  AlgebraFactorization image_factorization(Homomorphism const& h);

  ////////////////////////////////////////////////////////////////////////
  // Instance generation
  ////////////////////////////////////////////////////////////////////////

  // All monotone n-ary operation tables on `carrier`, in lexicographic order.
  std::vector<OperationTable> monotone_operations(FinitePoset const& carrier, std::size_t arity);

  // Every algebra over `signature` on `carrier`. Throws ResourceError if the
  // count would exceed `cap`.
  std::vector<OrderedAlgebra> enumerate_algebras(Signature const&   signature,
                                                 FinitePoset const& carrier,
                                                 std::size_t        cap);

}  // namespace ordalg
