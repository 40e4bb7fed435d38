#include <doctest.h>

#include "ordalg/colimit.hpp"
#include "ordalg/instances.hpp"
#include "ordalg/relation.hpp"

using namespace ordalg;

namespace {
  Relation pairs_of(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& ps) {
    Relation r(n);
    for (auto [a, b] : ps) {
      r.set(a, b);
    }
    return r;
  }

  OrderedAlgebra antichain_with_identity() {
    Signature sig({{"u", 1}});
    return OrderedAlgebra(sig, FinitePoset::antichain(2), {{0, 1}});
  }

  // Direct predicate evaluation on a pair set.
  struct Flags {
    bool reflexive, symmetric, transitive, order_reflexive;
  };
  Flags flags_of(FinitePoset const& a, Relation const& t) {
    Flags      f{true, true, true, true};
    auto const n = a.size();
    for (std::size_t x = 0; x < n; ++x) {
      f.reflexive = f.reflexive && t.test(x, x);
      for (std::size_t y = 0; y < n; ++y) {
        f.symmetric       = f.symmetric && (!t.test(x, y) || t.test(y, x));
        f.order_reflexive = f.order_reflexive && (!a.le(x, y) || t.test(x, y));
        for (std::size_t z = 0; z < n; ++z) {
          f.transitive = f.transitive && (!(t.test(x, y) && t.test(y, z)) || t.test(x, z));
        }
      }
    }
    return f;
  }
}  // namespace

TEST_SUITE("relation-theory") {
  TEST_CASE("tabulate examples") {
    auto a  = FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}});
    auto id = MonotoneMap::identity(a);
    CHECK(tabulate(RelationPair(id, id)).pairs == Relation::identity(3));

    auto full = relation_from_pairs(FinitePoset::antichain(2), Relation::full(2));
    CHECK(tabulate(full).pairs.count() == 4);

    auto h = MonotoneMap(FinitePoset::antichain(2), FinitePoset::chain(2), {0, 1});
    auto t = tabulate(subkernel_pair(h));
    CHECK(t.pairs == pairs_of(2, {{0, 0}, {1, 1}, {0, 1}}));
  }

  TEST_CASE("tabulate rejects pairs that are not jointly order-reflecting") {
    auto c2 = FinitePoset::chain(2);
    auto pt = FinitePoset::chain(1);
    auto k  = MonotoneMap::constant(c2, pt, 0);
    CHECK_THROWS_AS(tabulate(RelationPair(k, k)), PreconditionError);
  }

  TEST_CASE("relation pairs must be parallel") {
    auto c2 = FinitePoset::chain(2);
    auto a2 = FinitePoset::antichain(2);
    CHECK_THROWS_AS(RelationPair(MonotoneMap::identity(c2), MonotoneMap::identity(a2)), InputError);
  }

  TEST_CASE("classify examples") {
    auto anti  = FinitePoset::antichain(2);
    auto delta = classify(anti, Relation::identity(2));
    CHECK(delta.is_congruence);
    CHECK(delta.is_subcongruence);

    auto chain = FinitePoset::chain(2);
    auto diag  = classify(chain, Relation::identity(2));
    CHECK_FALSE(diag.is_order_reflexive);
    CHECK_FALSE(diag.is_subcongruence);
    CHECK(diag.witnesses.at("order_reflexive") == std::vector<std::string>{"0", "1"});

    auto le = classify(chain, chain.order());
    CHECK(le.is_subcongruence);
    CHECK_FALSE(le.is_symmetric);
    CHECK(classify(anti, anti.order()).is_symmetric);

    auto sub = classify(anti, pairs_of(2, {{0, 0}, {1, 1}, {0, 1}}));
    CHECK(sub.is_subcongruence);
    CHECK_FALSE(sub.is_congruence);

    auto u   = antichain_with_identity();
    auto cg  = classify(u, pairs_of(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}));
    CHECK(cg.is_congruence);
    CHECK(cg.is_subcongruence);
  }

  TEST_CASE("algebra relations must be closed under operations") {
    Signature      sig({{"u", 1}});
    OrderedAlgebra swap(sig, FinitePoset::antichain(2), {{1, 0}});
    auto           c = classify(swap, pairs_of(2, {{0, 0}, {1, 1}, {0, 1}}));
    CHECK_FALSE(c.is_relation);
    CHECK_FALSE(c.is_subcongruence);
    CHECK_THROWS_AS(relation_from_pairs(swap, pairs_of(2, {{0, 1}})), InputError);
  }

  TEST_CASE("classify agrees with direct predicates on every relation over posets up to 3") {
    for (auto const& a : all_posets(3)) {
      auto const n     = a.size();
      auto const slots = n * n;
      for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
        Relation t(n);
        for (std::size_t s = 0; s < slots; ++s) {
          if ((mask >> s) & 1U) {
            t.set(s / n, s % n);
          }
        }
        auto c = classify(a, t);
        auto f = flags_of(a, t);
        CHECK(c.is_reflexive == f.reflexive);
        CHECK(c.is_symmetric == f.symmetric);
        CHECK(c.is_transitive == f.transitive);
        CHECK(c.is_order_reflexive == f.order_reflexive);
        CHECK(c.is_subcongruence == (f.order_reflexive && f.transitive));
        CHECK(c.is_congruence == (f.reflexive && f.symmetric && f.transitive));
        // The tabulation round trip is lossless.
        CHECK(tabulate(relation_from_pairs(a, t)).pairs == t);
      }
    }
  }

  TEST_CASE("symmetric subcongruences are congruences") {
    for (auto const& a : all_posets(3)) {
      auto const n = a.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << (n * n)); ++mask) {
        Relation t(n);
        for (std::size_t s = 0; s < n * n; ++s) {
          if ((mask >> s) & 1U) {
            t.set(s / n, s % n);
          }
        }
        auto c = classify(a, t);
        CHECK((!(c.is_subcongruence && c.is_symmetric) || c.is_congruence));
        CHECK((!(c.is_congruence && c.is_order_reflexive) || c.is_subcongruence));
      }
    }
  }
}
