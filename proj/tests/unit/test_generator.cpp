#include <doctest.h>

#include <set>

#include "ordalg/generator.hpp"
#include "ordalg/instances.hpp"
#include "oracles.hpp"

using namespace ordalg;

namespace {
  FinitePoset zigzag() {
    return FinitePoset::from_pairs({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
  }
}  // namespace

TEST_SUITE("generator-theory") {
  TEST_CASE("hom-poset examples") {
    auto pt = FinitePoset::chain(1);
    auto zz = zigzag();
    CHECK(find_isomorphism(hom_poset(pt, zz).poset, zz).has_value());

    auto c2 = FinitePoset::chain(2);
    auto h  = hom_poset(c2, c2);
    CHECK(find_isomorphism(h.poset, FinitePoset::chain(3)).has_value());
    CHECK(h.poset.label(0) == "[0,0]");

    CHECK(hom_poset(zz, pt).poset.size() == 1);
  }

  TEST_CASE("hom-poset order is pointwise") {
    for (auto const& g : all_posets(2)) {
      for (auto const& x : all_posets(3)) {
        auto h = hom_poset(g, x);
        REQUIRE(h.maps.size() == count_monotone_maps(g, x));
        for (std::size_t i = 0; i < h.maps.size(); ++i) {
          CHECK(h.find(h.maps[i]) == i);
          for (std::size_t j = 0; j < h.maps.size(); ++j) {
            bool le = true;
            for (std::size_t e = 0; e < g.size(); ++e) {
              le = le && x.le(h.maps[i][e], h.maps[j][e]);
            }
            CHECK(h.poset.le(i, j) == le);
          }
        }
      }
    }
  }

  TEST_CASE("support examples") {
    auto c2 = FinitePoset::chain(2);
    auto cp = copower(c2, 4);
    for_each_monotone_table(c2, cp.object, [&](Table const& t) {
      CHECK(support_analysis(MonotoneMap(c2, cp.object, t), cp).support.size() == 1);
      return true;
    });

    auto        a2    = FinitePoset::antichain(2);
    auto        three = copower(a2, 3);
    std::size_t maps  = 0;
    for_each_monotone_table(a2, three.object, [&](Table const& t) {
      auto r = support_analysis(MonotoneMap(a2, three.object, t), three);
      CHECK(r.within_bound());
      CHECK(r.support.size() <= 2);
      ++maps;
      return true;
    });
    CHECK(maps == 36);

    auto one = support_analysis(three.injections[1], three);
    CHECK(one.support == std::vector<std::size_t>{1});
  }

  TEST_CASE("support equals the set of summands hit") {
    for (auto const& g : all_posets(3)) {
      auto cp = copower(g, 3);
      for_each_monotone_table(g, cp.object, [&](Table const& t) {
        std::set<std::size_t> hit;
        for (auto y : t) {
          hit.insert(cp.summand_of[y]);
        }
        auto r = support_analysis(MonotoneMap(g, cp.object, t), cp);
        CHECK(r.support == std::vector<std::size_t>(hit.begin(), hit.end()));
        CHECK(r.component_bound == connected_components(g).size());
        return true;
      });
    }
  }

  TEST_CASE("support rejects a mismatched copower") {
    auto c2 = FinitePoset::chain(2);
    auto cp = copower(c2, 2);
    auto wrong = copower(FinitePoset::antichain(2), 2);
    auto f  = cp.injections[0];
    CHECK_THROWS_AS(support_analysis(f, wrong), InputError);
  }

  TEST_CASE("canonical cover examples") {
    auto pt = FinitePoset::chain(1);
    for (auto const& x : all_posets(3)) {
      CHECK(canonical_cover_check(pt, x).holds);
    }
    CHECK(canonical_cover_check(FinitePoset::chain(2), FinitePoset::antichain(2)).holds);

    Signature      sc({{"c", 0}});
    OrderedAlgebra g(sc, FinitePoset::chain(1), {{0}});
    OrderedAlgebra x(sc, FinitePoset::antichain(2), {{0}});
    auto           check = canonical_cover_check(g, x);
    CHECK_FALSE(check.holds);
    CHECK(check.witness == std::vector<std::string>{"1"});
  }

  TEST_CASE("projectivity examples") {
    auto pt = FinitePoset::chain(1);
    auto c2 = FinitePoset::chain(2);
    auto a2 = FinitePoset::antichain(2);
    auto e  = MonotoneMap(a2, c2, {0, 1});
    CHECK(is_subregular_projective_instance(pt, e).holds);
    auto check = is_subregular_projective_instance(c2, e);
    CHECK_FALSE(check.holds);
    CHECK_FALSE(check.witness.empty());
    CHECK(is_subregular_projective_instance(c2, MonotoneMap::identity(zigzag())).holds);
    CHECK_THROWS_AS(is_subregular_projective_instance(pt, MonotoneMap(pt, c2, {0})), PreconditionError);
  }

  TEST_CASE("the point is projective for every surjection up to 3") {
    auto pt = FinitePoset::chain(1);
    for (auto const& a : all_posets(3)) {
      for (auto const& b : all_posets(3)) {
        for (auto const& e : enumerate_monotone_maps(a, b)) {
          if (is_surjective(e)) {
            CHECK(is_subregular_projective_instance(pt, e).holds);
          }
        }
      }
    }
  }

  TEST_CASE("reflects-iso examples") {
    auto zz = zigzag();
    auto iso = reflects_iso_instance(FinitePoset::chain(2), MonotoneMap::identity(zz));
    CHECK(iso.antecedent);
    CHECK(iso.consequent);

    auto pt    = FinitePoset::chain(1);
    auto flat  = reflects_iso_instance(pt, MonotoneMap::constant(zz, pt, 0));
    CHECK_FALSE(flat.antecedent);
    CHECK(flat.holds());

    auto empty = reflects_iso_instance(FinitePoset{}, MonotoneMap::constant(zz, pt, 0));
    CHECK(empty.antecedent);
    CHECK_FALSE(empty.consequent);
    CHECK_FALSE(empty.holds());
  }

  TEST_CASE("the point reflects isomorphisms between posets up to 3") {
    auto pt = FinitePoset::chain(1);
    for (auto const& a : all_posets(3)) {
      for (auto const& b : all_posets(3)) {
        for (auto const& h : enumerate_monotone_maps(a, b)) {
          auto r = reflects_iso_instance(pt, h);
          CHECK(r.holds());
          CHECK(r.antecedent == is_isomorphism(h));
        }
      }
    }
  }

  TEST_CASE("tensor examples") {
    auto pt = FinitePoset::chain(1);
    auto zz = zigzag();
    auto c2 = FinitePoset::chain(2);
    auto a2 = FinitePoset::antichain(2);

    CHECK(find_isomorphism(tensor_pos(pt, zz).object, zz).has_value());
    auto grid = tensor_pos(c2, c2);
    CHECK(find_isomorphism(grid.object, product(c2, c2).object).has_value());
    CHECK(tensor_matches_product(grid).holds);
    auto sum = tensor_pos(a2, zz);
    CHECK(find_isomorphism(sum.object, coproduct({zz, zz}).object).has_value());

    for (auto const& x : all_posets(2)) {
      CHECK(verify_tensor_adjunction(grid, x).holds);
    }
  }

  TEST_CASE("tensor size matches the product") {
    for (auto const& p : all_posets(3)) {
      for (auto const& g : all_posets(2)) {
        auto t = tensor_pos(p, g);
        CHECK(t.object.size() == p.size() * g.size());
        CHECK(t.components.size() == p.size());
        CHECK(is_surjective(t.arrow));
      }
    }
  }

  TEST_CASE("hom-algebra on the point generator") {
    auto pt = FinitePoset::chain(1);
    for (auto const& k : all_posets(3)) {
      auto e = hom_algebra(k, pt, 2);
      CHECK(find_isomorphism(e.algebra.carrier(), k).has_value());
      auto const& sig = e.algebra.signature();
      REQUIRE(sig.size() == 3);
      CHECK(sig[0].name == "s1_0");
      CHECK(sig[1].name == "s2_0");
      CHECK(sig[2].name == "s2_1");
      auto const n = k.size();
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(e.algebra.table(0)[x] == x);
        for (std::size_t y = 0; y < n; ++y) {
          CHECK(e.algebra.table(1)[x * n + y] == x);
          CHECK(e.algebra.table(2)[x * n + y] == y);
        }
      }
    }
    auto one = hom_algebra(pt, pt, 2);
    CHECK(one.algebra.size() == 1);
  }

  TEST_CASE("hom-algebra maps are homomorphisms") {
    auto g = FinitePoset::chain(2);
    for (auto const& k : all_posets(2)) {
      for (auto const& l : all_posets(2)) {
        auto ek = hom_algebra(k, g, 2);
        auto el = hom_algebra(l, g, 2);
        for (auto const& h : enumerate_monotone_maps(k, l)) {
          auto eh = hom_algebra_map(ek, el, h);
          for (std::size_t i = 0; i < ek.carrier.maps.size(); ++i) {
            auto const& f     = ek.carrier.maps[i];
            Table       after = f;
            for (auto& v : after) {
              v = h(v);
            }
            CHECK(el.carrier.maps[eh(i)] == after);
          }
        }
      }
    }
    CHECK_THROWS_AS(hom_algebra(g, FinitePoset::antichain(2), 4, 50), ResourceError);
  }
}
