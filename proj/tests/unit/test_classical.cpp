#include <doctest.h>

#include <numeric>

#include "ordalg/classical.hpp"
#include "ordalg/instances.hpp"
#include "oracles.hpp"

using namespace ordalg;

namespace {
  FinitePoset set_of(std::size_t n) {
    return FinitePoset::antichain(n);
  }

  MonotoneMap fn(std::size_t n, std::size_t m, Table t) {
    return finite_map(set_of(n), set_of(m), std::move(t));
  }

  // All functions between two finite sets of the given sizes.
  template <typename F>
  void for_each_function(std::size_t n, std::size_t m, F&& f) {
    oracle::for_each_table(n, m, [&](std::vector<std::size_t> const& t) { f(fn(n, m, t)); });
  }
}  // namespace

TEST_SUITE("classical-core") {
  TEST_CASE("non-discrete carriers are rejected") {
    CHECK_THROWS_AS(finite_map(FinitePoset::chain(2), set_of(2), {0, 1}), InputError);
    CHECK_THROWS_AS(kernel_pair_set(MonotoneMap::identity(FinitePoset::chain(2))), InputError);
  }

  TEST_CASE("kernel pair examples") {
    auto inj = tabulate(kernel_pair_set(fn(3, 4, {0, 2, 3})));
    CHECK(inj.pairs == Relation::identity(3));
    auto cst = tabulate(kernel_pair_set(fn(3, 1, {0, 0, 0})));
    CHECK(cst.pairs == Relation::full(3));
    auto five = tabulate(kernel_pair_set(fn(3, 2, {0, 0, 1})));
    CHECK(five.pairs.count() == 5);
  }

  TEST_CASE("coequalizer examples") {
    auto id = fn(3, 3, {0, 1, 2});
    auto q  = coequalizer_set(id, id);
    CHECK(is_isomorphism(q.projection));

    auto r0 = fn(2, 3, {0, 1});
    auto r1 = fn(2, 3, {1, 2});
    auto c  = coequalizer_set(r0, r1);
    CHECK(c.quotient.size() == 1);
    CHECK(c.quotient.label(0) == "[0]");
    CHECK(verify_coequalizer_universal(c, r0, r1).holds);

    auto e0 = fn(0, 3, {});
    auto e  = coequalizer_set(e0, e0);
    CHECK(e.quotient.size() == 3);
    CHECK(is_isomorphism(e.projection));
  }

  TEST_CASE("coequalizer class count matches union-find") {
    for (std::size_t y = 1; y <= 3; ++y) {
      for_each_function(2, y, [&](MonotoneMap const& r0) {
        for_each_function(2, y, [&](MonotoneMap const& r1) {
          oracle::Pairs links;
          for (std::size_t i = 0; i < 2; ++i) {
            links.insert({r0(i), r1(i)});
          }
          auto q = coequalizer_set(r0, r1);
          CHECK(q.quotient.size() == oracle::components(y, links));
          CHECK(compose(q.projection, r0) == compose(q.projection, r1));
          CHECK(verify_coequalizer_universal(q, r0, r1).holds);
        });
      });
    }
  }

  TEST_CASE("a wrong quotient fails the universal check") {
    auto r0 = fn(1, 2, {0});
    auto r1 = fn(1, 2, {1});
    auto id = fn(2, 2, {0, 1});
    SetCoequalizer fake{set_of(2), id, {{0}, {1}}};
    CHECK_FALSE(verify_coequalizer_universal(fake, r0, r1).holds);
  }

  TEST_CASE("regular factorization") {
    auto inj = regular_factorization_set(fn(2, 3, {2, 0}));
    CHECK(is_isomorphism(inj.epi));
    auto sur = regular_factorization_set(fn(3, 2, {1, 0, 1}));
    CHECK(is_isomorphism(sur.mono));
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t m = 0; m <= 4; ++m) {
        for_each_function(n, m, [&](MonotoneMap const& f) {
          auto r = regular_factorization_set(f);
          CHECK(compose(r.mono, r.epi) == f);
          CHECK(is_surjective(r.epi));
          CHECK(is_injective(r.mono));
          CHECK(r.mid.size() == oracle::image_size(f.table()));
        });
      }
    }
  }

  TEST_CASE("effectivity examples") {
    CHECK(effectivity_roundtrip_set(set_of(3), Relation::identity(3)));
    CHECK(effectivity_roundtrip_set(set_of(3), Relation::full(3)));
    Relation notsym(2);
    notsym.set(0, 0);
    notsym.set(1, 1);
    notsym.set(0, 1);
    CHECK_THROWS_AS(effectivity_roundtrip_set(set_of(2), notsym), PreconditionError);
  }

  TEST_CASE("every partition of a set up to 5 is effective") {
    for (std::size_t n = 0; n <= 5; ++n) {
      auto parts = set_partitions(n);
      CHECK(parts.size() == oracle::bell(n));
      for (auto const& p : parts) {
        CHECK(effectivity_roundtrip_set(set_of(n), equivalence_of(n, p)));
      }
    }
    CHECK(set_partitions(5).size() == 52);
  }

  TEST_CASE("congruence with respect to the point") {
    auto a = set_of(2);
    CHECK(congruence_wrt_point(relation_from_pairs(a, Relation::identity(2))).holds);
    Relation t = Relation::identity(2);
    t.set(0, 1);
    CHECK_FALSE(congruence_wrt_point(relation_from_pairs(a, t)).holds);

    // Not jointly injective: two points of R over the same pair.
    auto r0 = fn(2, 1, {0, 0});
    CHECK_FALSE(congruence_wrt_point(RelationPair(r0, r0)).holds);
  }

  TEST_CASE("congruence with respect to the point agrees with classify") {
    for (std::size_t n = 0; n <= 3; ++n) {
      auto const slots = n * n;
      for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
        Relation t(n);
        for (std::size_t s = 0; s < slots; ++s) {
          if ((mask >> s) & 1U) {
            t.set(s / n, s % n);
          }
        }
        auto r = relation_from_pairs(set_of(n), t);
        CHECK(congruence_wrt_point(r).holds == classify(r).is_congruence);
      }
    }
  }

  TEST_CASE("pullback examples") {
    auto f  = fn(3, 2, {0, 1, 1});
    auto id = fn(2, 2, {0, 1});
    auto pb = pullback_set(f, id);
    CHECK(is_isomorphism(pb.to_b));
    CHECK(surjection_stability(f, id).holds);

    auto notsurj = fn(1, 2, {0});
    CHECK(surjection_stability(f, notsurj).holds);
  }

  TEST_CASE("pullback legs over surjections are surjective up to 3") {
    for (std::size_t q = 1; q <= 3; ++q) {
      for (std::size_t a = 1; a <= 3; ++a) {
        for (std::size_t b = 0; b <= 3; ++b) {
          for_each_function(a, q, [&](MonotoneMap const& e) {
            if (!is_surjective(e)) {
              return;
            }
            for_each_function(b, q, [&](MonotoneMap const& f) {
              auto pb = pullback_set(f, e);
              CHECK(is_surjective(pb.to_b));
              CHECK(surjection_stability(f, e).holds);
            });
          });
        }
      }
    }
  }

  TEST_CASE("coequalizer of the kernel pair recovers a surjection") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for (std::size_t m = 0; m <= n; ++m) {
        for_each_function(n, m, [&](MonotoneMap const& f) {
          if (is_surjective(f)) {
            CHECK(kernel_coequalizer_recovers(f).holds);
          } else {
            CHECK_THROWS_AS(kernel_coequalizer_recovers(f), PreconditionError);
          }
        });
      }
    }
  }
}
