#include <doctest.h>

#include <set>

#include "ordalg/algebra.hpp"
#include "ordalg/instances.hpp"
#include "ordalg/term.hpp"
#include "oracles.hpp"

using namespace ordalg;

namespace {
  Signature bin() {
    return Signature({{"m", 2}});
  }

  OrderedAlgebra chain_min() {
    return OrderedAlgebra(bin(), FinitePoset::chain(2), {{0, 0, 0, 1}});
  }

  OrderedAlgebra antichain_projection() {
    return OrderedAlgebra(bin(), FinitePoset::antichain(2), {{0, 0, 1, 1}});
  }

  VarietyPresentation meet_like() {
    auto       sig  = bin();
    auto const vars = std::vector<std::string>{"x", "y"};
    return {sig,
            {{vars, parse_term("m(x,y)", sig, vars), parse_term("x", sig, vars)},
             {vars, parse_term("m(x,y)", sig, vars), parse_term("y", sig, vars)}}};
  }
}  // namespace

TEST_SUITE("ordered-algebra") {
  TEST_CASE("validate examples") {
    auto sig = bin();
    CHECK(validate_algebra(sig, FinitePoset::antichain(2), {{1, 0, 1, 0}}).holds);
    CHECK(validate_algebra(sig, FinitePoset::chain(2), {{0, 0, 0, 1}}).holds);

    Signature un({{"u", 1}});
    auto      neg = validate_algebra(un, FinitePoset::chain(2), {{1, 0}});
    CHECK_FALSE(neg.holds);
    CHECK(neg.witness == std::vector<std::string>{"u", "(0)", "(1)"});

    CHECK_FALSE(validate_algebra(sig, FinitePoset::chain(2), {{0, 0, 0}}).holds);
    CHECK_FALSE(validate_algebra(sig, FinitePoset::chain(2), {{0, 0, 0, 2}}).holds);
    CHECK_THROWS_AS(OrderedAlgebra(un, FinitePoset::chain(2), {{1, 0}}), InputError);
  }

  TEST_CASE("duplicate operation names are rejected") {
    CHECK_THROWS_AS(Signature({{"m", 2}, {"m", 1}}), InputError);
  }

  TEST_CASE("free terms") {
    auto sig = bin();
    auto d0  = free_terms(sig, {"x", "y"}, 0);
    CHECK(d0.size() == 2);

    auto d1 = free_terms(sig, {"x", "y"}, 1);
    REQUIRE(d1.size() == 2 + 2 * 2);
    std::vector<std::string> printed;
    for (auto const& t : d1) {
      printed.push_back(t.to_string());
    }
    CHECK(printed == std::vector<std::string>{"x", "y", "m(x,x)", "m(x,y)", "m(y,x)", "m(y,y)"});

    Signature un({{"u", 1}});
    auto      chain = free_terms(un, {"x"}, 3);
    REQUIRE(chain.size() == 4);
    CHECK(chain.back().to_string() == "u(u(u(x)))");

    Signature withc({{"c", 0}, {"m", 2}});
    auto      c0 = free_terms(withc, {"x"}, 0);
    CHECK(c0.size() == 1);
    auto c1 = free_terms(withc, {"x"}, 1);
    CHECK(c1.size() == 3);

    CHECK_THROWS_AS(free_terms(sig, {"x", "y"}, 3, 50), ResourceError);
  }

  TEST_CASE("free term counts follow the recurrence") {
    // t(0) = v, t(d) = v + t(d-1)^2 for one binary symbol.
    auto        sig = bin();
    std::size_t t   = 3;
    for (std::size_t d = 1; d <= 2; ++d) {
      t = 3 + t * t;
      CHECK(free_terms(sig, {"x", "y", "z"}, d).size() == t);
    }
  }

  TEST_CASE("term parsing") {
    auto sig = bin();
    auto t   = parse_term(" m( x , m(y,x) ) ", sig, {"x", "y"});
    CHECK(t.to_string() == "m(x,m(y,x))");
    CHECK(t.depth() == 2);
    CHECK_THROWS_AS(parse_term("m(x)", sig, {"x"}), InputError);
    CHECK_THROWS_AS(parse_term("q(x,x)", sig, {"x"}), InputError);
    CHECK_THROWS_AS(parse_term("m(x,y", sig, {"x", "y"}), InputError);
    CHECK_THROWS_AS(parse_term("m(x,y) z", sig, {"x", "y"}), InputError);
  }

  TEST_CASE("evaluate examples") {
    auto a   = chain_min();
    auto sig = a.signature();
    CHECK(evaluate(Term::variable("x"), a, {{"x", 1}}) == 1);
    CHECK(evaluate(parse_term("m(x,y)", sig, {"x", "y"}), a, {{"x", 1}, {"y", 0}}) == 0);

    Signature      un({{"u", 1}});
    OrderedAlgebra id(un, FinitePoset::chain(3), {{0, 1, 2}});
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(evaluate(parse_term("u(u(x))", un, {"x"}), id, {{"x", v}}) == v);
    }
    CHECK_THROWS_AS(evaluate(Term::variable("z"), a, {{"x", 0}}), InputError);
  }

  TEST_CASE("satisfies examples") {
    auto sig  = bin();
    auto vars = std::vector<std::string>{"x", "y"};
    Inequation refl{{"x"}, Term::variable("x"), Term::variable("x")};
    for (auto const& a : all_binary_algebras(2)) {
      CHECK(satisfies(a, refl).holds);
    }
    CHECK(satisfies(chain_min(), Inequation{vars, parse_term("m(x,y)", sig, vars), Term::variable("x")}).holds);

    auto comm = Inequation{vars, parse_term("m(x,y)", sig, vars), parse_term("m(y,x)", sig, vars)};
    auto fail = satisfies(antichain_projection(), comm);
    CHECK_FALSE(fail.holds);
    CHECK(fail.witness == std::vector<std::string>{"x=0", "y=1"});
  }

  TEST_CASE("satisfaction agrees with a direct table scan") {
    auto sig  = bin();
    auto vars = std::vector<std::string>{"x", "y"};
    auto comm = Inequation{vars, parse_term("m(x,y)", sig, vars), parse_term("m(y,x)", sig, vars)};
    for (auto const& a : all_binary_algebras(3)) {
      auto const n  = a.size();
      bool       ok = true;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          ok = ok && a.carrier().le(a.table(0)[x * n + y], a.table(0)[y * n + x]);
        }
      }
      CHECK(satisfies(a, comm).holds == ok);
    }
  }

  TEST_CASE("homomorphism enumeration") {
    auto a    = chain_min();
    auto homs = enumerate_homomorphisms(a, a);
    std::set<Table> tables;
    for (auto const& h : homs) {
      tables.insert(h.table());
    }
    CHECK(tables == std::set<Table>{{0, 0}, {0, 1}, {1, 1}});

    for (auto const& p : all_posets(2)) {
      for (auto const& q : all_posets(3)) {
        CHECK(enumerate_homomorphisms(OrderedAlgebra(p), OrderedAlgebra(q)).size() ==
              count_monotone_maps(p, q));
      }
    }

    Signature      sc({{"c", 0}});
    OrderedAlgebra b(sc, FinitePoset::chain(3), {{1}});
    OrderedAlgebra c(sc, FinitePoset::antichain(3), {{2}});
    for (auto const& h : enumerate_homomorphisms(b, c)) {
      CHECK(h(1) == 2);
    }
  }

  TEST_CASE("homomorphism enumeration matches a brute-force filter") {
    auto family = all_binary_algebras(2);
    for (auto const& a : family) {
      for (auto const& b : family) {
        std::size_t brute = 0;
        oracle::for_each_table(a.size(), b.size(), [&](std::vector<std::size_t> const& t) {
          bool ok = is_monotone(a.carrier(), b.carrier(), t);
          for (std::size_t x = 0; ok && x < a.size(); ++x) {
            for (std::size_t y = 0; y < a.size(); ++y) {
              ok = ok && t[a.table(0)[x * a.size() + y]] == b.table(0)[t[x] * b.size() + t[y]];
            }
          }
          brute += ok ? 1 : 0;
        });
        CHECK(enumerate_homomorphisms(a, b).size() == brute);
      }
    }
  }

  TEST_CASE("products, subalgebras, images") {
    auto a   = chain_min();
    auto pt  = OrderedAlgebra(bin(), FinitePoset::chain(1), {{0}});
    auto prd = product_algebra(a, pt);
    CHECK(is_isomorphism(prd.left));

    auto sq = product_algebra(a, a);
    CHECK(sq.object.size() == 4);
    CHECK(is_surjective(sq.left));

    auto s = subalgebra(a, {1});
    CHECK(s.object.size() == 1);
    CHECK(is_embedding(s.inclusion));
    CHECK(closed_subsets(a).size() == 4);

    Signature      un({{"u", 1}});
    OrderedAlgebra swap(un, FinitePoset::antichain(2), {{1, 0}});
    CHECK_THROWS_AS(subalgebra(swap, {0}), InputError);

    auto inj = image_factorization(s.inclusion);
    CHECK(is_isomorphism(inj.epi));

    OrderedAlgebra ida(un, FinitePoset::antichain(2), {{0, 1}});
    OrderedAlgebra idc(un, FinitePoset::chain(2), {{0, 1}});
    auto           img = image_factorization(Homomorphism(ida, idc, {0, 1}));
    CHECK(img.mid.size() == 2);
    CHECK(is_isomorphism(img.mono));
    CHECK_FALSE(is_embedding(img.epi));
  }

  TEST_CASE("algebra family sizes") {
    CHECK(enumerate_algebras(bin(), FinitePoset{}, 10).size() == 1);
    CHECK(enumerate_algebras(bin(), FinitePoset::chain(1), 10).size() == 1);
    std::size_t two = 0;
    for (auto const& p : posets_of_size(2)) {
      two += enumerate_algebras(bin(), p, 1000).size();
    }
    CHECK(two == 28);
    CHECK(all_binary_algebras(3).size() == 1 + 1 + 28 + 23931);
    CHECK_THROWS_AS(enumerate_algebras(bin(), FinitePoset::antichain(3), 100), ResourceError);
  }

  TEST_CASE("birkhoff closure") {
    auto family = all_binary_algebras(2);
    auto sig    = bin();
    VarietyPresentation trivial{sig, {{{"x"}, Term::variable("x"), Term::variable("x")}}};
    auto                t = birkhoff_closure_check(trivial, family);
    CHECK(t.closed());
    CHECK(t.satisfying == family.size());

    VarietyPresentation none{sig, {}};
    CHECK(birkhoff_closure_check(none, family).satisfying == family.size());

    auto r = birkhoff_closure_check(meet_like(), family);
    CHECK(r.closed());
    CHECK(r.members == 30);
    CHECK(r.satisfying > 0);
  }

  TEST_CASE("birkhoff closure on carriers up to 3") {
    auto family = all_binary_algebras(3);
    auto r      = birkhoff_closure_check(meet_like(), family);
    CHECK(r.closed());
  }

  TEST_CASE("sampled algebras are valid and reproducible") {
    AlgebraSampler s1(unary_binary_signature(), all_posets(3));
    AlgebraSampler s2(unary_binary_signature(), all_posets(3));
    Rng            r1(kAlgebraSeed);
    Rng            r2(kAlgebraSeed);
    auto           a = s1.draw(50, r1);
    auto           b = s2.draw(50, r2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == b[i]);
      CHECK(validate_algebra(a[i].signature(), a[i].carrier(), a[i].tables()).holds);
    }
  }
}
