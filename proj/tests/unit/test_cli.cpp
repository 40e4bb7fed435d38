#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "ordalg/cli.hpp"
#include "ordalg/json_io.hpp"

using namespace ordalg;

namespace {
  std::string const kData = ORDALG_TEST_DATA;

  struct Outcome {
    int         status;
    std::string out;
    std::string err;
  };

  Outcome call(std::vector<std::string> args) {
    for (auto& a : args) {
      if (a.size() > 5 && a.ends_with(".json")) {
        a = kData + "/" + a;
      }
    }
    std::ostringstream out, err;
    int const          status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  io::Json parsed(Outcome const& o) {
    return io::Json::parse(o.out);
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("posref collapses a two-cycle") {
    auto o = call({"posref", "preorder_ab.json"});
    REQUIRE(o.status == 0);
    CHECK(parsed(o)["object"]["elements"].size() == 1);
  }

  TEST_CASE("classify reports a subcongruence that is not a congruence") {
    auto o = call({"classify", "relation_diag01.json"});
    REQUIRE(o.status == 0);
    auto j = parsed(o);
    CHECK(j["subcongruence"] == true);
    CHECK(j["congruence"] == false);
  }

  TEST_CASE("satisfies fails with a witness valuation") {
    auto o = call({"satisfies", "proj_algebra.json", "commutative.json"});
    CHECK(o.status == 1);
    auto j = parsed(o);
    CHECK(j["holds"] == false);
    CHECK(j["witness"] == io::Json{"x=0", "y=1"});
  }

  TEST_CASE("verify suites") {
    CHECK(call({"verify", "effectivity", "--size", "3"}).status == 0);
    auto c = call({"verify", "coinserter-universal", "--size", "2"});
    CHECK(c.status == 0);
    CHECK(parsed(c)["options"]["size"] == 2);
    CHECK(call({"verify", "nonexistent"}).status == 2);
    auto list = call({"verify", "--list"});
    CHECK(list.status == 0);
    CHECK(parsed(list).size() >= 12);
  }

  TEST_CASE("verify reports the seed") {
    auto o = call({"verify", "factorization", "--samples", "20", "--seed", "5"});
    CHECK(o.status == 0);
    CHECK(parsed(o)["options"]["seed"] == 5);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(call({"posref", "missing.json"}).status == 2);
    CHECK(call({"maps", "chain2.json"}).status == 2);
    CHECK(call({"no-such-verb"}).status == 2);
    CHECK(call({}).status == 2);
    CHECK(call({"classical-kernel", "collapse.json"}).status == 2);
    auto o = call({"posref", "missing.json"});
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
  }

  TEST_CASE("help exits with 0") {
    auto o = call({"--help"});
    CHECK(o.status == 0);
    CHECK(o.out.find("posref") != std::string::npos);
  }

  TEST_CASE("property verbs") {
    CHECK(call({"embedding", "id_chain2.json"}).status == 0);
    CHECK(call({"embedding", "incl_anti.json"}).status == 1);
    CHECK(call({"surjective", "collapse.json"}).status == 0);
    CHECK(call({"cover", "point.json", "chain2.json"}).status == 0);
    CHECK(call({"projective", "point.json", "collapse.json"}).status == 0);
    CHECK(call({"projective", "chain2.json", "incl_anti.json"}).status == 1);
    CHECK(call({"projective", "point.json", "swap_anti.json"}).status == 0);
    CHECK(call({"projective", "point.json", "collapse_point.json"}).status == 2);
    CHECK(call({"reflects-iso", "point.json", "id_chain2.json"}).status == 0);
    CHECK(call({"validate", "proj_algebra.json"}).status == 0);
    CHECK(call({"support", "antichain2.json", "--copies", "3"}).status == 0);
    CHECK(call({"birkhoff", "commutative.json", "--size", "2"}).status == 0);
  }

  TEST_CASE("construction verbs") {
    auto c = call({"coinserter", "incl_anti.json", "swap_anti.json", "--verify"});
    REQUIRE(c.status == 0);
    CHECK(parsed(c)["witnesses"]["universal"]["holds"] == true);

    auto f = call({"factorize", "incl_anti.json"});
    REQUIRE(f.status == 0);
    CHECK(parsed(f)["witnesses"]["mono_embedding"] == true);

    auto t = call({"tensor", "chain2.json", "chain2.json", "--verify", "--oracle-size", "2"});
    REQUIRE(t.status == 0);
    CHECK(parsed(t)["object"]["elements"].size() == 4);

    auto e = call({"evaluate", "proj_algebra.json", "--term", "m(x,y)", "--vars", "x=1,y=0"});
    REQUIRE(e.status == 0);
    CHECK(parsed(e)["value"] == "1");

    auto h = call({"hom-algebra", "chain2.json", "point.json"});
    REQUIRE(h.status == 0);
    CHECK(parsed(h)["operations"].size() == 3);

    for (auto const& args : std::vector<std::vector<std::string>>{
             {"closure", "preorder_ab.json"},
             {"product", "chain2.json", "antichain2.json"},
             {"coproduct", "chain2.json", "point.json", "antichain2.json"},
             {"components", "antichain2.json"},
             {"maps", "chain2.json", "chain2.json"},
             {"subkernel", "incl_anti.json"},
             {"quotient", "relation_diag01.json"},
             {"pullback", "collapse.json", "collapse.json"},
             {"free-terms", "commutative.json", "--vars", "x,y"},
             {"homs", "proj_algebra.json", "proj_algebra.json"},
             {"subalgebra", "proj_algebra.json"},
             {"subalgebra", "proj_algebra.json", "--subset", "1"},
             {"product-algebra", "proj_algebra.json", "proj_algebra.json"},
             {"hom-poset", "chain2.json", "chain2.json"},
         }) {
      CAPTURE(args.front());
      CHECK(call(args).status == 0);
    }
  }

  TEST_CASE("classical verbs") {
    for (auto const& args : std::vector<std::vector<std::string>>{
             {"classical-kernel", "set_fold.json"},
             {"classical-coequalizer", "set_r0.json", "set_r1.json"},
             {"classical-factorize", "set_fold.json"},
             {"classical-effectivity", "set_equivalence.json"},
             {"classical-pullback", "set_fold.json", "set_fold.json"},
         }) {
      CAPTURE(args.front());
      CHECK(call(args).status == 0);
    }
    auto k = parsed(call({"classical-kernel", "set_fold.json"}));
    CHECK(k["pairs"].size() == 5);
    auto c = call({"classical-congruence", "set_r0.json", "set_r1.json"});
    CHECK(c.status == 1);
    CHECK(parsed(c)["classify_congruence"] == false);
  }

  TEST_CASE("output is byte-identical across runs") {
    for (auto const& args : std::vector<std::vector<std::string>>{
             {"verify", "pullback-stability", "--size", "2", "--algebra-size", "2"},
             {"verify", "factorization", "--samples", "50", "--seed", "3"},
             {"coinserter", "incl_anti.json", "swap_anti.json", "--verify"},
             {"tensor", "chain2.json", "antichain2.json"},
         }) {
      auto a = call(args);
      auto b = call(args);
      CHECK(a.status == b.status);
      CHECK(a.out == b.out);
    }
  }

  TEST_CASE("every operation is reachable from a verb") {
    // Listed independently of the registry.
    std::set<std::pair<std::string, std::string>> const expected = {
        {"poset-core", "preorder_closure"},
        {"poset-core", "posetal_reflection"},
        {"poset-core", "product"},
        {"poset-core", "coproduct"},
        {"poset-core", "connected_components"},
        {"poset-core", "enumerate_monotone_maps"},
        {"poset-core", "is_embedding"},
        {"poset-core", "is_surjective"},
        {"relation-theory", "tabulate"},
        {"relation-theory", "classify"},
        {"colimit-engine", "coinserter_pos"},
        {"colimit-engine", "subkernel_pair"},
        {"colimit-engine", "coinserter_subcongruence_pos"},
        {"colimit-engine", "quotient_algebra"},
        {"colimit-engine", "coinserter_alg"},
        {"colimit-engine", "verify_coinserter_universal"},
        {"colimit-engine", "subregular_factorization"},
        {"colimit-engine", "pullback"},
        {"ordered-algebra", "validate_algebra"},
        {"ordered-algebra", "free_terms"},
        {"ordered-algebra", "evaluate"},
        {"ordered-algebra", "satisfies"},
        {"ordered-algebra", "product_algebra"},
        {"ordered-algebra", "subalgebra"},
        {"ordered-algebra", "image_factorization"},
        {"ordered-algebra", "enumerate_homomorphisms"},
        {"ordered-algebra", "birkhoff_closure_check"},
        {"generator-theory", "hom_poset"},
        {"generator-theory", "support_analysis"},
        {"generator-theory", "canonical_cover_check"},
        {"generator-theory", "is_subregular_projective_instance"},
        {"generator-theory", "reflects_iso_instance"},
        {"generator-theory", "tensor_pos"},
        {"generator-theory", "hom_algebra"},
        {"classical-core", "kernel_pair_set"},
        {"classical-core", "coequalizer_set"},
        {"classical-core", "regular_factorization_set"},
        {"classical-core", "effectivity_roundtrip_set"},
        {"classical-core", "congruence_wrt_point"},
        {"classical-core", "pullback_set"},
        {"classical-core", "surjection_stability"},
        {"cli", "verify"},
    };
    auto const verbs = cli::verb_names();
    std::set<std::pair<std::string, std::string>> covered;
    for (auto const& e : cli::operation_registry()) {
      CAPTURE(e.verb);
      CHECK(std::find(verbs.begin(), verbs.end(), e.verb) != verbs.end());
      covered.insert({e.module, e.operation});
    }
    for (auto const& op : expected) {
      CAPTURE(op.second);
      CHECK(covered.count(op) == 1);
    }
    for (auto const& v : {"posref", "coinserter", "subkernel", "classify", "quotient", "factorize", "pullback",
                          "satisfies", "free-terms", "birkhoff", "cover", "support", "tensor", "hom-algebra",
                          "projective", "verify"}) {
      CHECK(std::find(verbs.begin(), verbs.end(), v) != verbs.end());
    }
  }
}
