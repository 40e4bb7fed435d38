#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ordalg/instances.hpp"
#include "ordalg/json_io.hpp"

using namespace ordalg;

namespace {
  std::filesystem::path const kData = ORDALG_TEST_DATA;

  io::Document doc(io::Json j) {
    return io::Document{std::move(j), kData};
  }
}  // namespace

TEST_SUITE("json-io") {
  TEST_CASE("posets load from files and references") {
    auto p = io::poset_from(io::load(kData / "chain2.json"));
    CHECK(p == FinitePoset::chain(2));
    auto q = io::poset_from(doc("chain2.json"));
    CHECK(q == p);
  }

  TEST_CASE("poset round trip") {
    for (auto const& p : all_posets(3)) {
      CHECK(io::poset_from(doc(io::to_json(p))) == p);
    }
  }

  TEST_CASE("algebra round trip") {
    for (auto const& a : all_binary_algebras(2)) {
      CHECK(io::algebra_from(doc(io::to_json(a))) == a);
    }
  }

  TEST_CASE("algebra files") {
    auto a = io::algebra_from(io::load(kData / "proj_algebra.json"));
    CHECK(a.size() == 2);
    CHECK(a.table(0) == OperationTable{0, 0, 1, 1});
    CHECK(io::is_algebra(io::load(kData / "proj_algebra.json").json));
    CHECK_FALSE(io::is_algebra(io::load(kData / "chain2.json").json));
  }

  TEST_CASE("maps and relations") {
    auto f = io::map_from(io::load(kData / "collapse.json"));
    CHECK(f.table() == Table{0, 0});
    auto r = io::relation_from(io::load(kData / "relation_diag01.json"));
    CHECK(r.carrier().size() == 2);
    CHECK(r.pairs.count() == 3);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::load(kData / "does_not_exist.json"), InputError);
    CHECK_THROWS_AS(io::poset_from(doc(io::Json{{"elements", {"a"}}, {"le", {{"a", "b"}}}})), InputError);
    CHECK_THROWS_AS(io::poset_from(doc(io::Json{{"elements", {"a", "b"}}, {"le", {{"a", "b"}, {"b", "a"}}}})),
                    InputError);
    CHECK_THROWS_AS(io::map_from(doc(io::Json{{"dom", "chain2.json"}, {"cod", "chain2.json"}, {"table", {{"0", "0"}}}})),
                    InputError);
    CHECK_THROWS_AS(
        io::map_from(doc(io::Json{{"dom", "chain2.json"}, {"cod", "chain2.json"}, {"table", {{"0", "1"}, {"1", "0"}}}})),
        InputError);
    auto bad_alg = io::Json::parse(R"({"signature": [{"name": "u", "arity": 1}], "poset": "chain2.json",
                                      "ops": {"u": [[["0"], "1"], [["1"], "0"]]}})");
    CHECK_THROWS_AS(io::algebra_from(doc(bad_alg)), InputError);
    auto parts = io::algebra_parts_from(doc(bad_alg));
    CHECK_FALSE(validate_algebra(parts.signature, parts.carrier, parts.tables).holds);
  }

  TEST_CASE("check serialization") {
    CHECK(io::to_json(Check::pass()).dump() == R"({"holds":true})");
    auto j = io::to_json(Check::fail("no", {"x=0"}));
    CHECK(j["holds"] == false);
    CHECK(j["witness"][0] == "x=0");
  }
}
