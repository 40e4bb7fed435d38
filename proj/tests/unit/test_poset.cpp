#include <doctest.h>

#include <random>

#include "ordalg/instances.hpp"
#include "ordalg/poset.hpp"
#include "oracles.hpp"

using namespace ordalg;

namespace {
  FinitePoset zigzag() {
    return FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
  }

  std::size_t strict_pairs(FinitePoset const& p) {
    return p.order().count() - p.size();
  }
}  // namespace

TEST_SUITE("poset-core") {
  TEST_CASE("preorder closure") {
    auto single = preorder_closure({"a"}, {}, {});
    CHECK(single.order().count() == 1);
    CHECK(single.leq(0, 0));

    auto two = preorder_closure({"x", "y"}, {}, {{"x", "y"}});
    CHECK(two.order().count() == 3);
    CHECK(two.leq(0, 1));
    CHECK_FALSE(two.leq(1, 0));

    auto three = preorder_closure({"a", "b", "c"}, {{"a", "b"}}, {{"b", "c"}});
    auto ref   = oracle::reflexive_transitive(3, {{0, 1}, {1, 2}});
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(three.leq(i, j) == ref[i][j]);
      }
    }
    CHECK(three.leq(0, 2));
  }

  TEST_CASE("preorder closure rejects unknown labels") {
    CHECK_THROWS_AS(preorder_closure({"a"}, {{"a", "b"}}, {}), InputError);
  }

  TEST_CASE("poset construction rejects cycles") {
    CHECK_THROWS_AS(FinitePoset::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  }

  TEST_CASE("posetal reflection examples") {
    auto chain = FinitePoset::chain(3);
    auto id    = posetal_reflection(chain.as_preorder());
    CHECK(id.quotient.size() == 3);
    CHECK(find_isomorphism(id.quotient, chain).has_value());
    for (auto const& c : id.classes) {
      CHECK(c.size() == 1);
    }

    auto collapse = posetal_reflection(preorder_closure({"0", "1"}, {{"0", "1"}, {"1", "0"}}, {}));
    CHECK(collapse.quotient.size() == 1);

    auto abc = posetal_reflection(preorder_closure({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"b", "c"}}, {}));
    REQUIRE(abc.quotient.size() == 2);
    CHECK(abc.quotient.label(0) == "[a]");
    CHECK(abc.quotient.label(1) == "[c]");
    CHECK(abc.quotient.le(0, 1));
    CHECK_FALSE(abc.quotient.le(1, 0));
  }

  TEST_CASE("posetal reflection agrees with SCC condensation on all preorders up to 4") {
    for (auto const& p : all_preorders(4)) {
      auto          r = posetal_reflection(p);
      oracle::Pairs base;
      for (auto [i, j] : p.order().pairs()) {
        base.insert({i, j});
      }
      auto m   = oracle::reflexive_transitive(p.size(), base);
      auto ids = oracle::scc_ids(m);
      REQUIRE(r.quotient.size() == oracle::class_count(ids));
      CHECK(r.quotient.order().is_antisymmetric());
      CHECK(is_surjective(r.proj));
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
          CHECK((r.proj(i) == r.proj(j)) == (ids[i] == ids[j]));
          CHECK(r.quotient.le(r.proj(i), r.proj(j)) == m[i][j]);
        }
      }
    }
  }

  TEST_CASE("product examples") {
    auto pt   = FinitePoset::chain(1);
    auto zz   = zigzag();
    auto unit = product(pt, zz);
    CHECK(find_isomorphism(unit.object, zz).has_value());

    auto grid = product(FinitePoset::chain(2), FinitePoset::chain(2));
    CHECK(grid.object.size() == 4);
    std::size_t componentwise = 0;
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t c = 0; c < 2; ++c) {
          for (std::size_t d = 0; d < 2; ++d) {
            bool const le = a <= c && b <= d;
            CHECK(grid.object.le(grid.pair_index(a, b), grid.pair_index(c, d)) == le);
            componentwise += (le && (a != c || b != d)) ? 1 : 0;
          }
        }
      }
    }
    CHECK(componentwise == 5);
    CHECK(strict_pairs(grid.object) == componentwise);
    std::size_t covers = 0;
    for (auto [x, y] : grid.object.order().pairs()) {
      bool between = false;
      for (std::size_t z = 0; z < 4; ++z) {
        between = between || (z != x && z != y && grid.object.le(x, z) && grid.object.le(z, y));
      }
      covers += (x != y && !between) ? 1 : 0;
    }
    CHECK(covers == 4);

    auto anti = product(FinitePoset::antichain(2), FinitePoset::antichain(2));
    CHECK(anti.object.size() == 4);
    CHECK(anti.object.is_discrete());
  }

  TEST_CASE("coproduct examples") {
    auto zz   = zigzag();
    auto one  = coproduct({zz});
    CHECK(find_isomorphism(one.object, zz).has_value());

    auto pts = coproduct({FinitePoset::chain(1), FinitePoset::chain(1)});
    CHECK(pts.object.size() == 2);
    CHECK(pts.object.is_discrete());

    auto chains = coproduct({FinitePoset::chain(2), FinitePoset::chain(2)});
    CHECK(chains.object.size() == 4);
    CHECK(strict_pairs(chains.object) == 2);
    CHECK(chains.object.label(2) == "1:0");
    for (auto const& inj : chains.injections) {
      CHECK(is_embedding(inj));
    }
  }

  TEST_CASE("connected components") {
    CHECK(connected_components(FinitePoset::chain(2)).size() == 1);
    for (std::size_t n = 0; n <= 5; ++n) {
      CHECK(connected_components(FinitePoset::antichain(n)).size() == n);
    }
    CHECK(connected_components(zigzag()).size() == 1);
    for (auto const& p : all_posets(4)) {
      oracle::Pairs cmp;
      for (auto [i, j] : p.order().pairs()) {
        cmp.insert({i, j});
      }
      CHECK(connected_components(p).size() == oracle::components(p.size(), cmp));
    }
  }

  TEST_CASE("monotone map enumeration") {
    auto pt = FinitePoset::chain(1);
    CHECK(count_monotone_maps(pt, zigzag()) == 3);
    CHECK(count_monotone_maps(FinitePoset::chain(2), FinitePoset::chain(2)) == 3);
    CHECK(count_monotone_maps(FinitePoset::antichain(2), FinitePoset::chain(2)) == 4);
    CHECK(count_monotone_maps(FinitePoset{}, FinitePoset{}) == 1);
    CHECK(count_monotone_maps(pt, FinitePoset{}) == 0);
  }

  TEST_CASE("monotone enumeration matches brute force on posets up to 3") {
    auto family = all_posets(3);
    for (auto const& p : family) {
      for (auto const& q : family) {
        std::size_t brute = 0;
        oracle::for_each_table(p.size(), q.size(), [&](std::vector<std::size_t> const& t) {
          bool ok = true;
          for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
              if (p.le(i, j) && !q.le(t[i], t[j])) {
                ok = false;
              }
            }
          }
          brute += ok ? 1 : 0;
        });
        auto maps = enumerate_monotone_maps(p, q);
        REQUIRE(maps.size() == brute);
        for (std::size_t k = 1; k < maps.size(); ++k) {
          CHECK(maps[k - 1].table() < maps[k].table());
        }
      }
    }
  }

  TEST_CASE("embedding examples") {
    auto c2 = FinitePoset::chain(2);
    CHECK(is_embedding(MonotoneMap::identity(c2)));
    CHECK(is_embedding(MonotoneMap(FinitePoset::chain(1), c2, {0})));
    CHECK_FALSE(is_embedding(MonotoneMap(FinitePoset::antichain(2), c2, {0, 1})));
    CHECK_FALSE(is_embedding(MonotoneMap::constant(c2, FinitePoset::chain(1), 0)));
  }

  TEST_CASE("surjectivity examples") {
    auto c2 = FinitePoset::chain(2);
    CHECK(is_surjective(MonotoneMap::identity(c2)));
    CHECK_FALSE(is_surjective(MonotoneMap(FinitePoset::chain(1), c2, {0})));
    auto r = posetal_reflection(preorder_closure({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {}));
    CHECK(is_surjective(r.proj));
  }

  TEST_CASE("non-monotone tables are rejected") {
    CHECK_THROWS_AS(MonotoneMap(FinitePoset::chain(2), FinitePoset::chain(2), {1, 0}), InputError);
    CHECK_THROWS_AS(MonotoneMap(FinitePoset::chain(2), FinitePoset::chain(2), {0}), InputError);
    CHECK_THROWS_AS(MonotoneMap(FinitePoset::chain(2), FinitePoset::chain(2), {0, 2}), InputError);
  }

  TEST_CASE("random preorders reflect to posets") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      auto p = random_preorder(5 + static_cast<std::size_t>(i % 3), rng);
      CHECK(p.order().is_reflexive());
      CHECK(p.order().is_transitive());
      auto r = posetal_reflection(p);
      CHECK(r.quotient.order().is_antisymmetric());
      CHECK(respects(p, r.quotient, r.proj.table()));
    }
  }

  TEST_CASE("poset family sizes") {
    CHECK(all_posets(3).size() == 1 + 1 + 3 + 19);
    CHECK(posets_of_size(4).size() == 219);
    CHECK(preorders_of_size(3).size() == 29);
  }
}
