#include "ordalg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "ordalg/classical.hpp"
#include "ordalg/colimit.hpp"
#include "ordalg/generator.hpp"
#include "ordalg/instances.hpp"
#include "ordalg/json_io.hpp"
#include "ordalg/suites.hpp"
#include "ordalg/term.hpp"

namespace ordalg::cli {

  namespace {
    using io::Document;
    using io::Json;

    enum Opt : unsigned {
      kSize        = 1U << 0,
      kOracleSize  = 1U << 1,
      kSeed        = 1U << 2,
      kArityBound  = 1U << 3,
      kSizeCap     = 1U << 4,
      kSamples     = 1U << 5,
      kAlgebraSize = 1U << 6,
      kCopies      = 1U << 7,
      kVerify      = 1U << 8,
      kTerm        = 1U << 9,
      kVars        = 1U << 10,
      kSubset      = 1U << 11,
      kMap         = 1U << 12,
      kDepth       = 1U << 13,
      kList        = 1U << 14,
    };

    struct Context {
      std::vector<std::string> files;
      std::size_t              size         = 0;
      std::size_t              oracle_size  = 3;
      std::uint64_t            seed         = 0;
      std::size_t              arity_bound  = 2;
      std::size_t              size_cap     = kDefaultSizeCap;
      std::size_t              samples      = 0;
      std::size_t              algebra_size = 0;
      std::size_t              copies       = 2;
      std::size_t              depth        = 1;
      bool                     verify       = false;
      bool                     list         = false;
      std::string              term;
      std::string              vars;
      std::string              subset;
      std::string              map;
      CLI::App*                command = nullptr;
      std::ostream*            out     = nullptr;
      std::ostream*            err     = nullptr;

      [[nodiscard]] bool given(char const* flag) const {
        auto const* o = command->get_option_no_throw(flag);
        return o != nullptr && o->count() > 0;
      }
      [[nodiscard]] Document doc(std::size_t i) const {
        return io::load(files.at(i));
      }
    };

    struct Verb {
      std::string                        name;
      std::string                        help;
      std::size_t                        min_files;
      int                                max_files;  // -1: unbounded
      unsigned                           options;
      std::function<int(Context&)>       action;
    };

    int emit(Context& c, Json const& j, bool holds = true) {
      *c.out << j.dump(2) << '\n';
      return holds ? 0 : 1;
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> out;
      std::string              item;
      std::istringstream       in(s);
      while (std::getline(in, item, sep)) {
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }

    // True when the map document's domain is an algebra.
    bool is_hom_doc(Document const& d0) {
      auto const d = io::resolve(d0);
      return io::is_algebra(io::resolve(io::member(d, "dom")).json);
    }

    bool is_algebra_doc(Document const& d) {
      return io::is_algebra(io::resolve(d).json);
    }

    Json labels_json(FinitePoset const& p, std::vector<std::size_t> const& xs) {
      Json out = Json::array();
      for (auto x : xs) {
        out.push_back(p.label(x));
      }
      return out;
    }

    Json tables_json(FinitePoset const& dom, FinitePoset const& cod, std::vector<Table> const& ts) {
      Json out = Json::array();
      for (auto const& t : ts) {
        out.push_back(io::table_json(MonotoneMap(dom, cod, t)));
      }
      return out;
    }

    std::vector<OrderedAlgebra> algebra_targets(Signature const& sig, std::size_t max_size,
                                                std::size_t cap) {
      std::vector<OrderedAlgebra> out;
      for (auto const& p : all_posets(max_size)) {
        auto part = enumerate_algebras(sig, p, cap);
        out.insert(out.end(), part.begin(), part.end());
        if (out.size() > cap) {
          throw ResourceError("oracle family exceeds the size cap of " + std::to_string(cap));
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // poset-core
    ////////////////////////////////////////////////////////////////////////

    int posref(Context& c) {
      auto p   = io::preorder_from(c.doc(0));
      auto ref = posetal_reflection(p);
      return emit(c, Json{{"object", io::to_json(ref.quotient)},
                          {"arrow", io::table_json(ref.proj)},
                          {"witnesses", {{"classes", io::partition_json(ref.proj.dom(), ref.classes)}}}});
    }

    int closure(Context& c) {
      auto d = c.doc(0);
      auto elements = d.json.at("elements").get<std::vector<std::string>>();
      auto pairs    = [&](char const* key) {
        std::vector<LabelPair> out;
        if (d.json.contains(key)) {
          for (auto const& e : d.json.at(key)) {
            out.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
          }
        }
        return out;
      };
      return emit(c, io::to_json(preorder_closure(elements, pairs("le"), pairs("generators"))));
    }

    int product_verb(Context& c) {
      auto r = product(io::poset_from(c.doc(0)), io::poset_from(c.doc(1)));
      return emit(c, Json{{"object", io::to_json(r.object)},
                          {"left", io::table_json(r.left)},
                          {"right", io::table_json(r.right)}});
    }

    int coproduct_verb(Context& c) {
      std::vector<FinitePoset> summands;
      for (std::size_t i = 0; i < c.files.size(); ++i) {
        summands.push_back(io::poset_from(c.doc(i)));
      }
      auto r   = coproduct(summands);
      Json inj = Json::array();
      for (auto const& f : r.injections) {
        inj.push_back(io::table_json(f));
      }
      return emit(c, Json{{"object", io::to_json(r.object)}, {"injections", inj}});
    }

    int components(Context& c) {
      auto p = io::poset_from(c.doc(0));
      return emit(c, Json{{"components", io::partition_json(p, connected_components(p))}});
    }

    int maps(Context& c) {
      auto               p = io::poset_from(c.doc(0));
      auto               q = io::poset_from(c.doc(1));
      std::vector<Table> ts;
      for_each_monotone_table(p, q, [&](Table const& t) {
        ts.push_back(t);
        return true;
      });
      return emit(c, Json{{"count", ts.size()}, {"maps", tables_json(p, q, ts)}});
    }

    int embedding(Context& c) {
      bool const holds = is_embedding(io::map_from(c.doc(0)));
      return emit(c, Json{{"holds", holds}}, holds);
    }

    int surjective(Context& c) {
      auto const d     = c.doc(0);
      bool const holds = is_hom_doc(d) ? is_surjective(io::homomorphism_from(d))
                                       : is_surjective(io::map_from(d));
      return emit(c, Json{{"holds", holds}}, holds);
    }

    ////////////////////////////////////////////////////////////////////////
    // relation-theory and colimit-engine
    ////////////////////////////////////////////////////////////////////////

    int coinserter(Context& c) {
      auto d0 = c.doc(0);
      auto d1 = c.doc(1);
      if (is_hom_doc(d0)) {
        auto f0 = io::homomorphism_from(d0);
        auto f1 = io::homomorphism_from(d1);
        auto r  = coinserter_alg(f0, f1);
        Json w{{"comparability", r.comparability_witness}};
        bool holds = true;
        if (c.verify) {
          auto targets = algebra_targets(f0.dom().signature(), c.oracle_size, c.size_cap);
          auto check   = verify_coinserter_universal(r, f0, f1, targets);
          holds        = check.holds;
          w["universal"] = io::to_json(check);
        }
        return emit(c, Json{{"object", io::to_json(r.object)}, {"arrow", io::table_json(r.arrow.map())}, {"witnesses", w}},
                    holds);
      }
      auto f0 = io::map_from(d0);
      auto f1 = io::map_from(d1);
      auto r  = coinserter_pos(f0, f1);
      Json w{{"comparability", r.comparability_witness}};
      bool holds = true;
      if (c.verify) {
        auto targets   = all_posets(c.oracle_size);
        auto check     = verify_coinserter_universal(r, f0, f1, targets);
        holds          = check.holds;
        w["universal"] = io::to_json(check);
      }
      return emit(c, Json{{"object", io::to_json(r.object)}, {"arrow", io::table_json(r.arrow)}, {"witnesses", w}},
                  holds);
    }

    int subkernel(Context& c) {
      auto d = c.doc(0);
      if (is_hom_doc(d)) {
        auto r = subkernel_pair(io::homomorphism_from(d));
        auto t = tabulate(r);
        return emit(c, Json{{"object", io::to_json(r.carrier())},
                            {"legs", {{"r0", io::table_json(r.r0().map())}, {"r1", io::table_json(r.r1().map())}}},
                            {"pairs", io::to_json(t.target, t.pairs)}});
      }
      auto r = subkernel_pair(io::map_from(d));
      auto t = tabulate(r);
      return emit(c, Json{{"object", io::to_json(r.carrier())},
                          {"legs", {{"r0", io::table_json(r.r0())}, {"r1", io::table_json(r.r1())}}},
                          {"pairs", io::to_json(t.target, t.pairs)}});
    }

    int classify_verb(Context& c) {
      auto rf = io::relation_from(c.doc(0));
      auto cls = std::visit([&](auto const& target) { return classify(target, rf.pairs); }, rf.target);
      return emit(c, io::to_json(cls));
    }

    int quotient(Context& c) {
      auto rf = io::relation_from(c.doc(0));
      if (auto const* a = std::get_if<OrderedAlgebra>(&rf.target)) {
        auto q = quotient_algebra(*a, rf.pairs);
        return emit(c, Json{{"object", io::to_json(q.object)},
                            {"arrow", io::table_json(q.arrow.map())},
                            {"witnesses", {{"comparability", q.comparability_witness}}}});
      }
      auto q = coinserter_subcongruence_pos(std::get<FinitePoset>(rf.target), rf.pairs);
      return emit(c, Json{{"object", io::to_json(q.object)},
                          {"arrow", io::table_json(q.arrow)},
                          {"witnesses", {{"comparability", q.comparability_witness}}}});
    }

    template <typename Fac>
    int emit_factorization(Context& c, Fac const& f, MonotoneMap const& epi, MonotoneMap const& mono) {
      return emit(c, Json{{"object", io::to_json(f.mid)},
                          {"epi", io::table_json(epi)},
                          {"mono", io::table_json(mono)},
                          {"witnesses",
                           {{"epi_surjective", is_surjective(epi)}, {"mono_embedding", is_embedding(mono)}}}});
    }

    int factorize(Context& c) {
      auto d = c.doc(0);
      if (is_hom_doc(d)) {
        auto f = subregular_factorization(io::homomorphism_from(d));
        return emit_factorization(c, f, f.epi.map(), f.mono.map());
      }
      auto f = subregular_factorization(io::map_from(d));
      return emit_factorization(c, f, f.epi, f.mono);
    }

    int image(Context& c) {
      auto f = image_factorization(io::homomorphism_from(c.doc(0)));
      return emit_factorization(c, f, f.epi.map(), f.mono.map());
    }

    int pullback_verb(Context& c) {
      auto df = c.doc(0);
      auto de = c.doc(1);
      if (is_hom_doc(df)) {
        auto f  = io::homomorphism_from(df);
        auto e  = io::homomorphism_from(de);
        auto pb = pullback(f, e);
        auto s  = pullback_stability(f, e);
        return emit(c, Json{{"object", io::to_json(pb.object)},
                            {"to_a", io::table_json(pb.to_a.map())},
                            {"to_b", io::table_json(pb.to_b.map())},
                            {"witnesses", {{"stability", io::to_json(s)}}}},
                    s.holds);
      }
      auto f  = io::map_from(df);
      auto e  = io::map_from(de);
      auto pb = pullback(f, e);
      auto s  = pullback_stability(f, e);
      return emit(c, Json{{"object", io::to_json(pb.object)},
                          {"to_a", io::table_json(pb.to_a)},
                          {"to_b", io::table_json(pb.to_b)},
                          {"witnesses", {{"stability", io::to_json(s)}}}},
                  s.holds);
    }

    ////////////////////////////////////////////////////////////////////////
    // ordered-algebra
    ////////////////////////////////////////////////////////////////////////

    int satisfies_verb(Context& c) {
      auto a     = io::algebra_from(c.doc(0));
      auto v     = io::presentation_from(c.doc(1));
      auto check = satisfies(a, v);
      return emit(c, io::to_json(check), check.holds);
    }

    int evaluate_verb(Context& c) {
      auto                     a = io::algebra_from(c.doc(0));
      Valuation                val;
      std::vector<std::string> names;
      for (auto const& item : split(c.vars, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw InputError("--vars entries must look like x=label");
        }
        names.push_back(item.substr(0, eq));
        val[item.substr(0, eq)] = a.carrier().index_of(item.substr(eq + 1));
      }
      auto t = parse_term(c.term, a.signature(), names);
      return emit(c, Json{{"term", t.to_string()}, {"value", a.carrier().label(evaluate(t, a, val))}});
    }

    int validate(Context& c) {
      auto parts = io::algebra_parts_from(c.doc(0));
      auto check = validate_algebra(parts.signature, parts.carrier, parts.tables);
      return emit(c, io::to_json(check), check.holds);
    }

    int free_terms_verb(Context& c) {
      auto d   = io::resolve(c.doc(0));
      auto sig = io::signature_from(io::member(d, "signature").json);
      auto ts  = free_terms(sig, split(c.vars, ','), c.depth, c.size_cap);
      Json out = Json::array();
      for (auto const& t : ts) {
        out.push_back(t.to_string());
      }
      return emit(c, Json{{"count", ts.size()}, {"terms", out}});
    }

    int homs(Context& c) {
      auto d0 = c.doc(0);
      auto d1 = c.doc(1);
      if (is_algebra_doc(d0)) {
        auto               a = io::algebra_from(d0);
        auto               b = io::algebra_from(d1);
        std::vector<Table> ts;
        for_each_homomorphism_table(a, b, [&](Table const& t) {
          ts.push_back(t);
          return true;
        });
        return emit(c, Json{{"count", ts.size()}, {"maps", tables_json(a.carrier(), b.carrier(), ts)}});
      }
      return maps(c);
    }

    int subalgebra_verb(Context& c) {
      auto a = io::algebra_from(c.doc(0));
      if (!c.given("--subset")) {
        Json out = Json::array();
        for (auto const& s : closed_subsets(a)) {
          out.push_back(labels_json(a.carrier(), s));
        }
        return emit(c, Json{{"closed_subsets", out}});
      }
      std::vector<std::size_t> subset;
      for (auto const& l : split(c.subset, ',')) {
        subset.push_back(a.carrier().index_of(l));
      }
      auto s = subalgebra(a, subset);
      return emit(c, Json{{"object", io::to_json(s.object)}, {"inclusion", io::table_json(s.inclusion.map())}});
    }

    int product_algebra_verb(Context& c) {
      auto r = product_algebra(io::algebra_from(c.doc(0)), io::algebra_from(c.doc(1)));
      return emit(c, Json{{"object", io::to_json(r.object)},
                          {"left", io::table_json(r.left.map())},
                          {"right", io::table_json(r.right.map())}});
    }

    int birkhoff(Context& c) {
      auto                        v = io::presentation_from(c.doc(0));
      std::vector<OrderedAlgebra> family;
      if (c.files.size() > 1) {
        for (std::size_t i = 1; i < c.files.size(); ++i) {
          family.push_back(io::algebra_from(c.doc(i)));
        }
      } else {
        family = algebra_targets(v.signature, c.size, c.size_cap);
      }
      auto report = birkhoff_closure_check(v, family);
      return emit(c,
                  Json{{"members", report.members},
                       {"satisfying", report.satisfying},
                       {"products_checked", report.products_checked},
                       {"subalgebras_checked", report.subalgebras_checked},
                       {"images_checked", report.images_checked},
                       {"violations", report.violations},
                       {"closed", report.closed()}},
                  report.closed());
    }

    ////////////////////////////////////////////////////////////////////////
    // generator-theory
    ////////////////////////////////////////////////////////////////////////

    int cover(Context& c) {
      auto d0    = c.doc(0);
      auto check = is_algebra_doc(d0) ? canonical_cover_check(io::algebra_from(d0), io::algebra_from(c.doc(1)))
                                      : canonical_cover_check(io::poset_from(d0), io::poset_from(c.doc(1)));
      return emit(c, io::to_json(check), check.holds);
    }

    int support(Context& c) {
      auto g  = io::poset_from(c.doc(0));
      auto cp = copower(g, c.copies);
      if (c.given("--map")) {
        auto r = support_analysis(io::map_from(io::load(c.map)), cp);
        return emit(c,
                    Json{{"support", r.support},
                         {"component_bound", r.component_bound},
                         {"within_bound", r.within_bound()}},
                    r.within_bound());
      }
      std::size_t count = 0, worst = 0;
      std::size_t bound = connected_components(g).size();
      bool        ok    = true;
      for_each_monotone_table(g, cp.object, [&](Table const& t) {
        auto r = support_analysis(MonotoneMap(g, cp.object, t), cp);
        ++count;
        worst = std::max(worst, r.support.size());
        ok    = ok && r.within_bound();
        return true;
      });
      return emit(c,
                  Json{{"copies", c.copies},
                       {"maps", count},
                       {"max_support", worst},
                       {"component_bound", bound},
                       {"within_bound", ok}},
                  ok);
    }

    int hom_poset_verb(Context& c) {
      auto d0 = c.doc(0);
      if (is_algebra_doc(d0)) {
        auto g = io::algebra_from(d0);
        auto x = io::algebra_from(c.doc(1));
        auto h = hom_poset(g, x);
        return emit(c, Json{{"object", io::to_json(h.poset)}, {"maps", tables_json(g.carrier(), x.carrier(), h.maps)}});
      }
      auto g = io::poset_from(d0);
      auto x = io::poset_from(c.doc(1));
      auto h = hom_poset(g, x);
      return emit(c, Json{{"object", io::to_json(h.poset)}, {"maps", tables_json(g, x, h.maps)}});
    }

    int reflects_iso(Context& c) {
      auto              dh = c.doc(1);
      ReflectsIsoResult r;
      if (is_hom_doc(dh)) {
        r = reflects_iso_instance(io::algebra_from(c.doc(0)), io::homomorphism_from(dh));
      } else {
        r = reflects_iso_instance(io::poset_from(c.doc(0)), io::map_from(dh));
      }
      return emit(c, Json{{"antecedent", r.antecedent}, {"consequent", r.consequent}, {"holds", r.holds()}},
                  r.holds());
    }

    int projective(Context& c) {
      auto  de    = c.doc(1);
      Check check = is_hom_doc(de)
                        ? is_subregular_projective_instance(io::algebra_from(c.doc(0)), io::homomorphism_from(de))
                        : is_subregular_projective_instance(io::poset_from(c.doc(0)), io::map_from(de));
      return emit(c, io::to_json(check), check.holds);
    }

    int tensor(Context& c) {
      auto t = tensor_pos(io::poset_from(c.doc(0)), io::poset_from(c.doc(1)));
      Json comps = Json::array();
      for (auto const& m : t.components) {
        comps.push_back(io::table_json(m));
      }
      auto product_check = tensor_matches_product(t);
      Json w{{"product", io::to_json(product_check)}};
      bool holds = product_check.holds;
      if (c.verify) {
        Check adj = Check::pass();
        for (auto const& x : all_posets(c.oracle_size)) {
          adj = verify_tensor_adjunction(t, x);
          if (!adj) {
            adj.witness.insert(adj.witness.begin(), "X=" + io::to_json(x).dump());
            break;
          }
        }
        w["adjunction"] = io::to_json(adj);
        holds           = holds && adj.holds;
      }
      return emit(c,
                  Json{{"object", io::to_json(t.object)},
                       {"arrow", io::table_json(t.arrow)},
                       {"components", comps},
                       {"unit", io::table_json(t.unit_witness)},
                       {"witnesses", w}},
                  holds);
    }

    int hom_algebra_verb(Context& c) {
      auto e   = hom_algebra(io::poset_from(c.doc(0)), io::poset_from(c.doc(1)), c.arity_bound, c.size_cap);
      Json ops = Json::array();
      for (std::size_t n = 0; n < e.sigma.size(); ++n) {
        for (std::size_t s = 0; s < e.sigma[n].size(); ++s) {
          ops.push_back(Json{{"name", "s" + std::to_string(n) + "_" + std::to_string(s)},
                             {"arity", n},
                             {"sigma", io::table_json(MonotoneMap(e.generator, e.copowers[n].object, e.sigma[n][s]))}});
        }
      }
      return emit(c, Json{{"object", io::to_json(e.algebra)}, {"operations", ops}});
    }

    ////////////////////////////////////////////////////////////////////////
    // classical-core
    ////////////////////////////////////////////////////////////////////////

    MonotoneMap set_map(Document const& d) {
      auto f = io::map_from(d);
      return finite_map(f.dom(), f.cod(), f.table());
    }

    int classical_kernel(Context& c) {
      auto r = kernel_pair_set(set_map(c.doc(0)));
      auto t = tabulate(r);
      return emit(c, Json{{"object", io::to_json(r.carrier())},
                          {"legs", {{"r0", io::table_json(r.r0())}, {"r1", io::table_json(r.r1())}}},
                          {"pairs", io::to_json(t.target, t.pairs)}});
    }

    int classical_coequalizer(Context& c) {
      auto r0 = set_map(c.doc(0));
      auto r1 = set_map(c.doc(1));
      auto q  = coequalizer_set(r0, r1);
      auto u  = verify_coequalizer_universal(q, r0, r1);
      return emit(c,
                  Json{{"object", io::to_json(q.quotient)},
                       {"arrow", io::table_json(q.projection)},
                       {"witnesses",
                        {{"classes", io::partition_json(r0.cod(), q.classes)}, {"universal", io::to_json(u)}}}},
                  u.holds);
    }

    int classical_factorize(Context& c) {
      auto f = regular_factorization_set(set_map(c.doc(0)));
      return emit(c, Json{{"object", io::to_json(f.mid)},
                          {"epi", io::table_json(f.epi)},
                          {"mono", io::table_json(f.mono)}});
    }

    int classical_effectivity(Context& c) {
      auto rf = io::relation_from(c.doc(0));
      if (std::holds_alternative<OrderedAlgebra>(rf.target)) {
        throw InputError("classical relations live on sets, not algebras");
      }
      bool const holds = effectivity_roundtrip_set(std::get<FinitePoset>(rf.target), rf.pairs);
      return emit(c, Json{{"holds", holds}}, holds);
    }

    int classical_congruence(Context& c) {
      RelationPair r(set_map(c.doc(0)), set_map(c.doc(1)));
      auto         check = congruence_wrt_point(r);
      Json         out   = io::to_json(check);
      out["classify_congruence"] = classify(r).is_congruence;
      return emit(c, out, check.holds);
    }

    int classical_pullback(Context& c) {
      auto f  = set_map(c.doc(0));
      auto e  = set_map(c.doc(1));
      auto pb = pullback_set(f, e);
      auto s  = surjection_stability(f, e);
      return emit(c, Json{{"object", io::to_json(pb.object)},
                          {"to_a", io::table_json(pb.to_a)},
                          {"to_b", io::table_json(pb.to_b)},
                          {"witnesses", {{"stability", io::to_json(s)}}}},
                  s.holds);
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    int verify(Context& c) {
      if (c.list) {
        Json out = Json::array();
        for (auto const& s : suites()) {
          out.push_back(Json{{"name", s.name}, {"summary", s.summary}});
        }
        return emit(c, out);
      }
      if (c.files.empty()) {
        throw InputError("verify needs a suite name (or --list)");
      }
      auto info = find_suite(c.files[0]);
      if (!info) {
        throw InputError("unknown suite \"" + c.files[0] + "\"");
      }
      auto o = info->defaults;
      if (c.given("--size")) {
        o.size = c.size;
      }
      if (c.given("--oracle-size")) {
        o.oracle_size = c.oracle_size;
      }
      if (c.given("--samples")) {
        o.samples = c.samples;
      }
      if (c.given("--algebra-size")) {
        o.algebra_size = c.algebra_size;
      }
      o.seed      = c.seed;
      auto report = info->run(o);
      *c.err << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checked
             << " checks, " << report.failed << " failed)\n";
      return emit(c, io::to_json(report), report.passed());
    }

    std::vector<Verb> const& verb_table() {
      static std::vector<Verb> const table = {
          {"posref", "posetal reflection of a preorder file", 1, 1, 0, posref},
          {"closure", "least preorder containing \"le\" and \"generators\"", 1, 1, 0, closure},
          {"product", "product of two posets", 2, 2, 0, product_verb},
          {"coproduct", "disjoint union of posets", 1, -1, 0, coproduct_verb},
          {"components", "connected components of a poset", 1, 1, 0, components},
          {"maps", "all monotone maps between two posets", 2, 2, 0, maps},
          {"embedding", "is a map an order embedding", 1, 1, 0, embedding},
          {"surjective", "is a map or homomorphism surjective", 1, 1, 0, surjective},
          {"coinserter", "coinserter of two parallel maps or homomorphisms", 2, 2,
           kVerify | kOracleSize | kSizeCap, coinserter},
          {"subkernel", "subkernel pair and its tabulation", 1, 1, 0, subkernel},
          {"classify", "relation flags for a relation file", 1, 1, 0, classify_verb},
          {"quotient", "quotient by a subcongruence", 1, 1, 0, quotient},
          {"factorize", "subregular factorization", 1, 1, 0, factorize},
          {"image", "image factorization of a homomorphism", 1, 1, 0, image},
          {"pullback", "pullback of f along e, with stability", 2, 2, 0, pullback_verb},
          {"satisfies", "does an algebra satisfy a presentation", 2, 2, 0, satisfies_verb},
          {"evaluate", "evaluate a term in an algebra", 1, 1, kTerm | kVars, evaluate_verb},
          {"validate", "check totality and monotonicity of an algebra file", 1, 1, 0, validate},
          {"free-terms", "terms up to a depth over a signature file", 1, 1, kVars | kDepth | kSizeCap,
           free_terms_verb},
          {"homs", "all homomorphisms (or monotone maps)", 2, 2, 0, homs},
          {"subalgebra", "subalgebra on a subset, or all closed subsets", 1, 1, kSubset, subalgebra_verb},
          {"product-algebra", "product of two algebras", 2, 2, 0, product_algebra_verb},
          {"birkhoff", "HSP closure check of a presentation", 1, -1, kSize | kSizeCap, birkhoff},
          {"cover", "joint surjectivity of all morphisms G -> X", 2, 2, 0, cover},
          {"support", "supports of maps G -> M.G", 1, 1, kCopies | kMap, support},
          {"hom-poset", "hom(G, X) ordered pointwise", 2, 2, 0, hom_poset_verb},
          {"reflects-iso", "does hom(G, -) reflect this isomorphism", 2, 2, 0, reflects_iso},
          {"projective", "does G lift along a surjection", 2, 2, 0, projective},
          {"tensor", "tensor P (x) G", 2, 2, kVerify | kOracleSize, tensor},
          {"hom-algebra", "hom-algebra EK for generator G", 2, 2, kArityBound | kSizeCap, hom_algebra_verb},
          {"classical-kernel", "kernel pair of a function", 1, 1, 0, classical_kernel},
          {"classical-coequalizer", "coequalizer of two functions", 2, 2, 0, classical_coequalizer},
          {"classical-factorize", "regular factorization of a function", 1, 1, 0, classical_factorize},
          {"classical-effectivity", "is an equivalence the kernel pair of its quotient", 1, 1, 0,
           classical_effectivity},
          {"classical-congruence", "congruence with respect to the point", 2, 2, 0, classical_congruence},
          {"classical-pullback", "pullback of functions, with stability", 2, 2, 0, classical_pullback},
          {"verify", "run a named property suite", 0, 1,
           kSize | kOracleSize | kSeed | kSamples | kAlgebraSize | kList, verify},
      };
      return table;
    }

    void add_options(CLI::App& sc, Context& c, unsigned opts) {
      if (opts & kSize) {
        sc.add_option("--size", c.size, "carrier size bound");
      }
      if (opts & kOracleSize) {
        sc.add_option("--oracle-size", c.oracle_size, "size bound of oracle targets")->capture_default_str();
      }
      if (opts & kSeed) {
        sc.add_option("--seed", c.seed, "seed for sampled instances")->capture_default_str();
      }
      if (opts & kArityBound) {
        sc.add_option("--arity-bound", c.arity_bound, "largest operation arity")->capture_default_str();
      }
      if (opts & kSizeCap) {
        sc.add_option("--size-cap", c.size_cap, "enumeration size cap")->capture_default_str();
      }
      if (opts & kSamples) {
        sc.add_option("--samples", c.samples, "number of sampled instances");
      }
      if (opts & kAlgebraSize) {
        sc.add_option("--algebra-size", c.algebra_size, "carrier bound for algebra families");
      }
      if (opts & kCopies) {
        sc.add_option("--copies", c.copies, "number of summands M")->capture_default_str();
      }
      if (opts & kVerify) {
        sc.add_flag("--verify", c.verify, "check the universal property against oracles");
      }
      if (opts & kTerm) {
        sc.add_option("--term", c.term, "term in prefix notation")->required();
      }
      if (opts & kVars) {
        sc.add_option("--vars", c.vars, "comma-separated variables (x=label for evaluate)");
      }
      if (opts & kSubset) {
        sc.add_option("--subset", c.subset, "comma-separated element labels");
      }
      if (opts & kMap) {
        sc.add_option("--map", c.map, "map file G -> M.G");
      }
      if (opts & kDepth) {
        sc.add_option("--depth", c.depth, "term depth")->capture_default_str();
      }
      if (opts & kList) {
        sc.add_flag("--list", c.list, "list the available suites");
      }
    }
  }  // namespace

  std::vector<std::string> verb_names() {
    std::vector<std::string> out;
    for (auto const& v : verb_table()) {
      out.push_back(v.name);
    }
    return out;
  }

  std::vector<RegistryEntry> const& operation_registry() {
    static std::vector<RegistryEntry> const registry = {
        {"poset-core", "preorder_closure", "closure"},
        {"poset-core", "posetal_reflection", "posref"},
        {"poset-core", "product", "product"},
        {"poset-core", "coproduct", "coproduct"},
        {"poset-core", "connected_components", "components"},
        {"poset-core", "enumerate_monotone_maps", "maps"},
        {"poset-core", "is_embedding", "embedding"},
        {"poset-core", "is_surjective", "surjective"},
        {"relation-theory", "tabulate", "subkernel"},
        {"relation-theory", "classify", "classify"},
        {"colimit-engine", "coinserter_pos", "coinserter"},
        {"colimit-engine", "subkernel_pair", "subkernel"},
        {"colimit-engine", "coinserter_subcongruence_pos", "quotient"},
        {"colimit-engine", "quotient_algebra", "quotient"},
        {"colimit-engine", "coinserter_alg", "coinserter"},
        {"colimit-engine", "verify_coinserter_universal", "coinserter"},
        {"colimit-engine", "subregular_factorization", "factorize"},
        {"colimit-engine", "pullback", "pullback"},
        {"ordered-algebra", "validate_algebra", "validate"},
        {"ordered-algebra", "free_terms", "free-terms"},
        {"ordered-algebra", "evaluate", "evaluate"},
        {"ordered-algebra", "satisfies", "satisfies"},
        {"ordered-algebra", "product_algebra", "product-algebra"},
        {"ordered-algebra", "subalgebra", "subalgebra"},
        {"ordered-algebra", "image_factorization", "image"},
        {"ordered-algebra", "enumerate_homomorphisms", "homs"},
        {"ordered-algebra", "birkhoff_closure_check", "birkhoff"},
        {"generator-theory", "hom_poset", "hom-poset"},
        {"generator-theory", "support_analysis", "support"},
        {"generator-theory", "canonical_cover_check", "cover"},
        {"generator-theory", "is_subregular_projective_instance", "projective"},
        {"generator-theory", "reflects_iso_instance", "reflects-iso"},
        {"generator-theory", "tensor_pos", "tensor"},
        {"generator-theory", "hom_algebra", "hom-algebra"},
        {"classical-core", "kernel_pair_set", "classical-kernel"},
        {"classical-core", "coequalizer_set", "classical-coequalizer"},
        {"classical-core", "regular_factorization_set", "classical-factorize"},
        {"classical-core", "effectivity_roundtrip_set", "classical-effectivity"},
        {"classical-core", "congruence_wrt_point", "classical-congruence"},
        {"classical-core", "pullback_set", "classical-pullback"},
        {"classical-core", "surjection_stability", "classical-pullback"},
        {"cli", "verify", "verify"},
    };
    return registry;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite ordered universal algebra workbench", "ordalg"};
    app.require_subcommand(1);
    Context ctx;
    ctx.out = &out;
    ctx.err = &err;
    for (auto const& v : verb_table()) {
      auto* sc  = app.add_subcommand(v.name, v.help);
      auto* pos = sc->add_option("inputs", ctx.files, "input files");
      if (v.max_files < 0) {
        pos->expected(static_cast<int>(v.min_files), CLI::detail::expected_max_vector_size);
      } else {
        pos->expected(static_cast<int>(v.min_files), v.max_files);
      }
      if (v.min_files > 0) {
        pos->required();
      }
      add_options(*sc, ctx, v.options);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }

    for (auto const& v : verb_table()) {
      auto* sc = app.get_subcommand(v.name);
      if (!sc->parsed()) {
        continue;
      }
      ctx.command = sc;
      try {
        return v.action(ctx);
      } catch (InputError const& e) {
        err << "input error: " << e.what() << '\n';
      } catch (PreconditionError const& e) {
        err << "precondition error: " << e.what() << '\n';
      } catch (ResourceError const& e) {
        err << "resource error: " << e.what() << '\n';
      } catch (nlohmann::json::exception const& e) {
        err << "input error: " << e.what() << '\n';
      } catch (std::logic_error const& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
      }
      return 2;
    }
    err << "error: no command\n";
    return 2;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    return run(args, out, err);
  }

}  // namespace ordalg::cli
