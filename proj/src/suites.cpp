#include "ordalg/suites.hpp"

#include <algorithm>
#include <concepts>
#include <functional>
#include <sstream>

#include "ordalg/classical.hpp"
#include "ordalg/colimit.hpp"
#include "ordalg/generator.hpp"
#include "ordalg/instances.hpp"
#include "ordalg/relation.hpp"
#include "ordalg/term.hpp"

namespace ordalg {

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Witness formatting
    ////////////////////////////////////////////////////////////////////////

    std::string describe_order(std::vector<std::string> const& labels,
                               Relation const&                 order,
                               char const*                     symbol) {
      std::ostringstream os;
      os << "{";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        os << (i ? "," : "") << labels[i];
      }
      bool first = true;
      for (auto [i, j] : order.pairs()) {
        if (i != j) {
          os << (first ? " | " : ", ") << labels[i] << symbol << labels[j];
          first = false;
        }
      }
      os << "}";
      return os.str();
    }

    std::string describe(FinitePoset const& p) {
      return describe_order(p.labels(), p.order(), "<");
    }

    std::string describe(FinitePreorder const& p) {
      return describe_order(p.labels(), p.order(), "<=");
    }

    std::string describe(Table const& t) {
      std::ostringstream os;
      os << "[";
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i ? "," : "") << t[i];
      }
      os << "]";
      return os.str();
    }

    std::string describe(MonotoneMap const& f) {
      return describe(f.dom()) + " -> " + describe(f.cod()) + " " + describe(f.table());
    }

    std::string describe(OrderedAlgebra const& a) {
      std::string s = describe(a.carrier());
      for (std::size_t k = 0; k < a.signature().size(); ++k) {
        s += " " + a.signature()[k].name + "=" + describe(a.table(k));
      }
      return s;
    }

    std::string describe(Homomorphism const& h) {
      return describe(h.dom()) + " -> " + describe(h.cod()) + " " + describe(h.table());
    }

    std::string describe(Relation const& r) {
      std::ostringstream os;
      os << "{";
      bool first = true;
      for (auto [i, j] : r.pairs()) {
        os << (first ? "" : ",") << "(" << i << "," << j << ")";
        first = false;
      }
      os << "}";
      return os.str();
    }

    ////////////////////////////////////////////////////////////////////////
    // Bookkeeping
    ////////////////////////////////////////////////////////////////////////

    class Tally {
     public:
      explicit Tally(SuiteReport& r) : r_(r) {}

      template <std::invocable Witness>
      void record(std::string const& part, bool ok, std::string_view reason, Witness const& witness) {
        ++r_.checked;
        if (last_ == r_.parts.size() || r_.parts[last_].first != part) {
          auto it = std::find_if(r_.parts.begin(), r_.parts.end(),
                                 [&](auto const& p) { return p.first == part; });
          if (it == r_.parts.end()) {
            r_.parts.emplace_back(part, 0);
            it = std::prev(r_.parts.end());
          }
          last_ = static_cast<std::size_t>(it - r_.parts.begin());
        }
        ++r_.parts[last_].second;
        if (!ok) {
          if (r_.failed == 0) {
            r_.first_failure = part + ": " + std::string(reason);
            r_.witness       = witness();
          }
          ++r_.failed;
        }
      }

      void record(std::string const& part, Check const& c, std::vector<std::string> context) {
        record(part, c, [&] { return context; });
      }

      // Context is only built when the check fails.
      template <std::invocable Context>
      void record(std::string const& part, Check const& c, Context const& context) {
        record(part, c.holds, c.reason, [&] {
          std::vector<std::string> w = context();
          w.insert(w.end(), c.witness.begin(), c.witness.end());
          return w;
        });
      }

      // Runs `body`, counting any library exception as a failed check.
      template <std::invocable Witness, std::invocable Body>
      void guarded(std::string const& part, Witness const& witness, Body const& body) {
        try {
          body();
        } catch (std::exception const& e) {
          record(part, false, std::string("exception: ") + e.what(), witness);
        }
      }

     private:
      SuiteReport& r_;
      std::size_t  last_ = 0;
    };

    SuiteReport start(std::string name, SuiteOptions const& o) {
      SuiteReport r;
      r.name    = std::move(name);
      r.options = o;
      return r;
    }

    Rng algebra_rng(SuiteOptions const& o) {
      return Rng(kAlgebraSeed ^ o.seed);
    }

    // The shared sampled family: one unary and one binary operation on
    // carriers drawn from all posets of at most `max_size` elements.
    std::vector<OrderedAlgebra> sampled_family(SuiteOptions const& o, std::size_t max_size) {
      auto rng = algebra_rng(o);
      return AlgebraSampler(unary_binary_signature(), all_posets(max_size)).draw(o.samples, rng);
    }

    using HomTables = std::vector<std::vector<std::vector<Table>>>;

    HomTables all_hom_tables(std::vector<OrderedAlgebra> const& family) {
      HomTables out(family.size(), std::vector<std::vector<Table>>(family.size()));
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          for_each_homomorphism_table(family[i], family[j], [&](Table const& t) {
            out[i][j].push_back(t);
            return true;
          });
        }
      }
      return out;
    }

    bool table_surjective(Table const& t, std::size_t cod_size) {
      std::vector<bool> hit(cod_size, false);
      for (auto v : t) {
        hit[v] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    // Every relation on an n-element carrier, by bitmask over the n*n slots.
    template <typename Visit>
    void for_each_relation(std::size_t n, Visit&& visit) {
      std::uint64_t const total = std::uint64_t{1} << (n * n);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        Relation r(n);
        for (std::size_t s = 0; s < n * n; ++s) {
          if ((mask >> s) & 1U) {
            r.set(s / n, s % n);
          }
        }
        visit(r);
      }
    }

    std::string count_scope(std::vector<std::pair<std::string, std::size_t>> const& parts) {
      std::string s;
      for (auto const& [name, n] : parts) {
        s += (s.empty() ? "" : "; ") + name + " " + std::to_string(n);
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // Suites
    ////////////////////////////////////////////////////////////////////////

    SuiteReport posetal_reflection_suite(SuiteOptions const& o) {
      auto  r = start("posetal-reflection", o);
      Tally t(r);
      auto  targets = all_posets(o.oracle_size);

      auto check_one = [&](FinitePreorder const& p, std::string const& part) {
        auto w = [&] { return std::vector<std::string>{describe(p)}; };
        t.guarded(part, w, [&] {
          auto ref = posetal_reflection(p);
          t.record(part, ref.quotient.order().is_antisymmetric(), "quotient not antisymmetric", w);
          t.record(part,
                   is_surjective(ref.proj) && respects(p, ref.quotient, ref.proj.table()),
                   "projection is not a respecting surjection", w);
          for (auto const& z : targets) {
            Check c = Check::pass();
            for_each_monotone_table(p.order(), z, [&](Table const& g) {
              auto const n = count_factorizations(ref.proj, z, g);
              if (n != 1) {
                c = Check::fail(n == 0 ? "respecting map does not factor"
                                       : "respecting map factors more than once",
                                {describe(g)});
                return false;
              }
              return true;
            });
            t.record(part, c, {describe(p), "target " + describe(z)});
          }
        });
      };

      for (auto const& p : all_preorders(o.size)) {
        check_one(p, "exhaustive");
      }
      Rng                                        rng(o.seed);
      std::uniform_int_distribution<std::size_t> pick(o.size + 1, o.size + 3);
      for (std::size_t i = 0; i < o.samples; ++i) {
        check_one(random_preorder(pick(rng), rng), "random");
      }
      r.scope = "preorders on <= " + std::to_string(o.size) + " elements exhaustive, "
                + std::to_string(o.samples) + " random preorders on "
                + std::to_string(o.size + 1) + "-" + std::to_string(o.size + 3)
                + " elements; factorization against all " + std::to_string(targets.size())
                + " posets on <= " + std::to_string(o.oracle_size) + " elements";
      return r;
    }

    SuiteReport coinserter_universal_suite(SuiteOptions const& o) {
      auto  r = start("coinserter-universal", o);
      Tally t(r);
      auto  xs      = all_posets(o.size == 0 ? 0 : o.size - 1);
      auto  ys      = all_posets(o.size);
      auto  targets = all_posets(o.oracle_size);
      for (auto const& x : xs) {
        for (auto const& y : ys) {
          auto maps = enumerate_monotone_maps(x, y);
          for (auto const& f0 : maps) {
            for (auto const& f1 : maps) {
              auto w = [&] { return std::vector<std::string>{describe(f0), describe(f1)}; };
              t.guarded("pos", w, [&] {
                auto c = coinserter_pos(f0, f1);
                t.record("pos", verify_coinserter_universal(c, f0, f1, targets),
                         {describe(f0), describe(f1)});
              });
            }
          }
        }
      }
      r.scope = "all parallel monotone pairs X => Y with |X| <= "
                + std::to_string(o.size == 0 ? 0 : o.size - 1) + ", |Y| <= "
                + std::to_string(o.size) + "; targets all posets on <= "
                + std::to_string(o.oracle_size) + " elements";
      return r;
    }

    SuiteReport coinserter_algebra_suite(SuiteOptions const& o) {
      auto  r = start("coinserter-algebra", o);
      Tally t(r);
      auto  family  = all_binary_algebras(o.size);
      auto  targets = all_binary_algebras(o.oracle_size);
      auto  homs    = all_hom_tables(family);
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          for (auto const& t0 : homs[i][j]) {
            for (auto const& t1 : homs[i][j]) {
              Homomorphism f0(family[i], family[j], t0);
              Homomorphism f1(family[i], family[j], t1);
              auto w = [&] { return std::vector<std::string>{describe(f0), describe(f1)}; };
              t.guarded("algebra", w, [&] {
                auto c = coinserter_alg(f0, f1);
                t.record("algebra", verify_coinserter_universal(c, f0, f1, targets),
                         {describe(f0), describe(f1)});
              });
            }
          }
        }
      }
      r.scope = "all parallel homomorphism pairs between the " + std::to_string(family.size())
                + " one-binary-operation algebras on <= " + std::to_string(o.size)
                + " elements; targets the " + std::to_string(targets.size())
                + " such algebras on <= " + std::to_string(o.oracle_size) + " elements";
      return r;
    }

    SuiteReport subkernel_subcongruence_suite(SuiteOptions const& o) {
      auto  r = start("subkernel-subcongruence", o);
      Tally t(r);
      auto  posets = all_posets(o.size);
      for (auto const& a : posets) {
        for (auto const& b : posets) {
          for_each_monotone_table(a, b, [&](Table const& tab) {
            MonotoneMap f(a, b, tab);
            auto        w = [&] { return std::vector<std::string>{describe(f)}; };
            t.guarded("pos", w, [&] {
              auto cls = classify(subkernel_pair(f));
              t.record("pos", cls.is_subcongruence, "subkernel pair is not a subcongruence", w);
            });
            return true;
          });
        }
      }
      auto family = sampled_family(o, o.algebra_size);
      auto homs   = all_hom_tables(family);
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          for (auto const& tab : homs[i][j]) {
            Homomorphism h(family[i], family[j], tab);
            auto         w = [&] { return std::vector<std::string>{describe(h)}; };
            t.guarded("algebra", w, [&] {
              auto cls = classify(subkernel_pair(h));
              t.record("algebra", cls.is_subcongruence, "subkernel pair is not a subcongruence",
                       w);
            });
          }
        }
      }
      r.scope = "all monotone maps between posets on <= " + std::to_string(o.size)
                + " elements; all homomorphisms among " + std::to_string(o.samples)
                + " sampled algebras (u unary, m binary) on <= "
                + std::to_string(o.algebra_size) + " elements, seed "
                + std::to_string(o.seed) + " (" + count_scope(r.parts) + ")";
      return r;
    }

    SuiteReport effectivity_suite(SuiteOptions const& o) {
      auto  r = start("effectivity", o);
      Tally t(r);
      for (auto const& a : all_posets(o.size)) {
        for_each_relation(a.size(), [&](Relation const& pairs) {
          if (!classify(a, pairs).is_subcongruence) {
            return;
          }
          auto w = [&] { return std::vector<std::string>{describe(a), describe(pairs)}; };
          t.guarded("pos", w, [&] {
            auto c = coinserter_subcongruence_pos(a, pairs);
            t.record("pos", tabulate(subkernel_pair(c.arrow)).pairs == pairs,
                     "subkernel pair of the quotient differs", w);
          });
        });
      }
      for (auto const& a : sampled_family(o, o.size)) {
        for_each_relation(a.size(), [&](Relation const& pairs) {
          if (!classify(a, pairs).is_subcongruence) {
            return;
          }
          auto w = [&] { return std::vector<std::string>{describe(a), describe(pairs)}; };
          t.guarded("algebra", w, [&] {
            auto q = quotient_algebra(a, pairs);
            t.record("algebra", tabulate(subkernel_pair(q.arrow)).pairs == pairs,
                     "subkernel pair of the quotient differs", w);
          });
        });
      }
      r.scope = "every subcongruence on every poset on <= " + std::to_string(o.size)
                + " elements and on each of " + std::to_string(o.samples)
                + " sampled algebras on <= " + std::to_string(o.size) + " elements, seed "
                + std::to_string(o.seed) + " (" + count_scope(r.parts) + ")";
      return r;
    }

    SuiteReport subregular_surjective_suite(SuiteOptions const& o) {
      auto  r = start("subregular-surjective", o);
      Tally t(r);

      // Arrows produced by the constructions are surjective.
      auto xs = all_posets(o.size == 0 ? 0 : o.size - 1);
      auto ys = all_posets(o.size);
      for (auto const& x : xs) {
        for (auto const& y : ys) {
          auto maps = enumerate_monotone_maps(x, y);
          for (auto const& f0 : maps) {
            for (auto const& f1 : maps) {
              auto w = [&] { return std::vector<std::string>{describe(f0), describe(f1)}; };
              t.guarded("coinserter-arrow", w, [&] {
                t.record("coinserter-arrow", is_surjective(coinserter_pos(f0, f1).arrow),
                         "coinserter arrow is not surjective", w);
              });
            }
          }
        }
      }
      auto family = sampled_family(o, o.size);
      auto homs   = all_hom_tables(family);
      for (auto const& a : family) {
        for_each_relation(a.size(), [&](Relation const& pairs) {
          if (!classify(a, pairs).is_subcongruence) {
            return;
          }
          auto w = [&] { return std::vector<std::string>{describe(a), describe(pairs)}; };
          t.guarded("quotient-arrow", w, [&] {
            t.record("quotient-arrow", is_surjective(quotient_algebra(a, pairs).arrow),
                     "quotient arrow is not surjective", w);
          });
        });
      }

      // Every surjection is the coinserter of its subkernel pair.
      for (auto const& a : ys) {
        for (auto const& b : ys) {
          for_each_monotone_table(a, b, [&](Table const& tab) {
            if (!table_surjective(tab, b.size())) {
              return true;
            }
            MonotoneMap f(a, b, tab);
            auto        w = [&] { return std::vector<std::string>{describe(f)}; };
            t.guarded("pos-surjection", w, [&] {
              auto c = coinserter_subcongruence_pos(subkernel_pair(f));
              bool ok = count_factorizations(c.arrow, f) == 1;
              if (ok) {
                auto k = factor_through(c.arrow, f);
                ok     = k && is_isomorphism(*k);
              }
              t.record("pos-surjection", ok, "surjection is not the coinserter of its subkernel pair",
                       w);
            });
            return true;
          });
        }
      }
      for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = 0; j < family.size(); ++j) {
          for (auto const& tab : homs[i][j]) {
            if (!table_surjective(tab, family[j].size())) {
              continue;
            }
            Homomorphism h(family[i], family[j], tab);
            auto         w = [&] { return std::vector<std::string>{describe(h)}; };
            t.guarded("algebra-surjection", w, [&] {
              auto q  = quotient_algebra(subkernel_pair(h));
              bool ok = count_factorizations(q.arrow.map(), h.map()) == 1;
              if (ok) {
                auto k = factor_through(q.arrow.map(), h.map());
                ok     = k && is_isomorphism(Homomorphism(q.object, h.cod(), k->table()));
              }
              t.record("algebra-surjection", ok,
                       "surjection is not the coinserter of its subkernel pair", w);
            });
          }
        }
      }
      r.scope = "coinserter arrows of all pairs X => Y (|X| <= " + std::to_string(o.size - 1)
                + ", |Y| <= " + std::to_string(o.size)
                + "), quotient arrows of all subcongruences and all surjective homomorphisms in "
                + std::to_string(o.samples) + " sampled algebras on <= " + std::to_string(o.size)
                + " elements, all monotone surjections between posets on <= "
                + std::to_string(o.size) + " elements (" + count_scope(r.parts) + ")";
      return r;
    }

    SuiteReport factorization_suite(SuiteOptions const& o) {
      auto  r = start("factorization", o);
      Tally t(r);
      Rng   rng(o.seed);
      std::uniform_int_distribution<std::size_t> dom_size(0, o.size);
      std::uniform_int_distribution<std::size_t> cod_size(1, std::max<std::size_t>(o.size, 1));
      std::size_t const                          maps = o.samples / 2;
      for (std::size_t i = 0; i < maps; ++i) {
        auto        a = random_poset(dom_size(rng), rng);
        auto        b = random_poset(cod_size(rng), rng);
        MonotoneMap f = random_monotone_map(a, b, rng);
        auto        w = [&] { return std::vector<std::string>{describe(f)}; };
        t.guarded("map", w, [&] {
          auto fac = subregular_factorization(f);
          t.record("map",
                   compose(fac.mono, fac.epi) == f && is_surjective(fac.epi)
                       && is_embedding(fac.mono),
                   "factorization invariants fail", w);
        });
      }
      auto family = sampled_family(o, o.algebra_size);
      if (!family.empty()) {
        auto                                       arng = algebra_rng(o);
        std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
        std::size_t const                          homs = o.samples - maps;
        for (std::size_t i = 0; i < homs;) {
          auto const         a = pick(arng);
          auto const         b = pick(arng);
          std::vector<Table> tables;
          for_each_homomorphism_table(family[a], family[b], [&](Table const& tab) {
            tables.push_back(tab);
            return true;
          });
          if (tables.empty()) {
            continue;
          }
          std::uniform_int_distribution<std::size_t> which(0, tables.size() - 1);
          Homomorphism h(family[a], family[b], tables[which(arng)]);
          auto         w = [&] { return std::vector<std::string>{describe(h)}; };
          t.guarded("homomorphism", w, [&] {
            auto fac = subregular_factorization(h);
            t.record("homomorphism",
                     compose(fac.mono, fac.epi) == h && is_surjective(fac.epi)
                         && is_embedding(fac.mono),
                     "factorization invariants fail", w);
          });
          ++i;
        }
      }
      r.scope = std::to_string(maps) + " random monotone maps between posets on <= "
                + std::to_string(o.size) + " elements and " + std::to_string(o.samples - maps)
                + " random homomorphisms within " + std::to_string(o.samples)
                + " sampled algebras on <= " + std::to_string(o.algebra_size)
                + " elements, seed " + std::to_string(o.seed);
      return r;
    }

    template <typename Arrow>
    void stability_check(Tally& t, std::string const& part, Arrow const& f, Arrow const& e) {
      auto w = [&] { return std::vector<std::string>{describe(f), describe(e)}; };
      t.guarded(part, w, [&] {
        t.record(part, pullback_stability(f, e), w);
      });
    }

    SuiteReport pullback_stability_suite(SuiteOptions const& o) {
      auto  r = start("pullback-stability", o);
      Tally t(r);

      auto posets = all_posets(o.size);
      for (auto const& q : posets) {
        for (auto const& a : posets) {
          std::vector<MonotoneMap> surjections;
          for_each_monotone_table(a, q, [&](Table const& tab) {
            if (table_surjective(tab, q.size())) {
              surjections.emplace_back(a, q, tab);
            }
            return true;
          });
          if (surjections.empty()) {
            continue;
          }
          for (auto const& b : posets) {
            for_each_monotone_table(b, q, [&](Table const& tab) {
              MonotoneMap f(b, q, tab);
              for (auto const& e : surjections) {
                stability_check(t, "pos", f, e);
              }
              return true;
            });
          }
        }
      }

      std::vector<FinitePoset> sets;
      for (std::size_t n = 0; n <= o.size; ++n) {
        sets.push_back(finite_set(FinitePoset::antichain(n).labels()));
      }
      for (auto const& q : sets) {
        for (auto const& a : sets) {
          for (auto const& b : sets) {
            for (auto const& e : enumerate_monotone_maps(a, q)) {
              if (!is_surjective(e)) {
                continue;
              }
              for (auto const& f : enumerate_monotone_maps(b, q)) {
                auto w = [&] { return std::vector<std::string>{describe(f), describe(e)}; };
                t.guarded("set", w, [&] {
                  t.record("set", surjection_stability(f, e), w);
                });
              }
            }
          }
        }
      }

      auto classes = isomorphism_class_representatives(all_binary_algebras(o.algebra_size));
      for (auto const& q : classes) {
        std::vector<Homomorphism> surjections;
        for (auto const& a : classes) {
          for_each_homomorphism_table(a, q, [&](Table const& et) {
            if (table_surjective(et, q.size())) {
              surjections.emplace_back(a, q, et);
            }
            return true;
          });
        }
        if (surjections.empty()) {
          continue;
        }
        for (auto const& b : classes) {
          for_each_homomorphism_table(b, q, [&](Table const& ft) {
            Homomorphism f(b, q, ft);
            for (auto const& e : surjections) {
              stability_check(t, "algebra", f, e);
            }
            return true;
          });
        }
      }

      r.scope = "Pos and Set exhaustive on <= " + std::to_string(o.size)
                + " elements; one-binary-operation algebras on <= " + std::to_string(o.algebra_size)
                + " elements exhaustive up to isomorphism (" + std::to_string(classes.size())
                + " classes, every homomorphism between representatives) ("
                + count_scope(r.parts) + ")";
      return r;
    }

    SuiteReport tensor_adjunction_suite(SuiteOptions const& o) {
      auto  r = start("tensor-adjunction", o);
      Tally t(r);
      auto  posets = all_posets(o.size);
      for (auto const& p : posets) {
        for (auto const& g : posets) {
          auto w = [&] { return std::vector<std::string>{describe(p), describe(g)}; };
          t.guarded("tensor", w, [&] {
            auto tensor = tensor_pos(p, g);
            t.record("product", tensor_matches_product(tensor), {describe(p), describe(g)});
            for (auto const& x : posets) {
              t.record("adjunction", verify_tensor_adjunction(tensor, x),
                       {describe(p), describe(g), describe(x)});
            }
          });
        }
      }
      r.scope = "all P, G, X among the " + std::to_string(posets.size()) + " posets on <= "
                + std::to_string(o.size) + " elements";
      return r;
    }

    SuiteReport support_bound_suite(SuiteOptions const& o) {
      auto  r = start("support-bound", o);
      Tally t(r);
      for (auto const& g : all_posets(o.size)) {
        auto const components = connected_components(g).size();
        for (std::size_t m = 0; m <= o.oracle_size; ++m) {
          auto cp = copower(g, m);
          for_each_monotone_table(g, cp.object, [&](Table const& tab) {
            MonotoneMap f(g, cp.object, tab);
            auto        w = [&] { return std::vector<std::string>{describe(f)}; };
            t.guarded("pos", w, [&] {
              auto s = support_analysis(f, cp);
              t.record("pos", s.within_bound() && s.component_bound == components,
                       "support exceeds the number of components", w);
            });
            return true;
          });
        }
      }
      r.scope = "every monotone map G -> M.G for G among all posets on <= "
                + std::to_string(o.size) + " elements and M <= " + std::to_string(o.oracle_size);
      return r;
    }

    SuiteReport hom_algebra_suite(SuiteOptions const& o) {
      auto  r = start("hom-algebra", o);
      Tally t(r);
      auto const               one    = FinitePoset::chain(1);
      auto const               bases  = all_posets(o.size);
      std::size_t const        bound  = o.oracle_size;
      std::vector<HomAlgebra>  algebras;
      for (auto const& k : bases) {
        auto w = [&] { return std::vector<std::string>{describe(k)}; };
        t.guarded("structure", w, [&] {
          auto ek = hom_algebra(k, one, bound);

          // Evaluation at the point is an isomorphism hom(1, K) -> K.
          Table ev(ek.carrier.maps.size());
          for (std::size_t i = 0; i < ev.size(); ++i) {
            ev[i] = ek.carrier.maps[i][0];
          }
          bool iso = false;
          try {
            iso = is_isomorphism(MonotoneMap(ek.carrier.poset, k, ev));
          } catch (InputError const&) {
          }
          t.record("carrier", iso, "evaluation is not an isomorphism", w);

          // Each n-ary operation is a projection, and every projection occurs.
          for (std::size_t n = 0; n <= bound; ++n) {
            std::vector<bool> seen(n, false);
            bool              ok = ek.sigma[n].size() == n;
            for (std::size_t s = 0; s < ek.sigma[n].size() && ok; ++s) {
              auto const  i     = ek.copowers[n].summand_of[ek.sigma[n][s][0]];
              auto const  k_idx = ek.algebra.signature().find("s" + std::to_string(n) + "_"
                                                              + std::to_string(s));
              auto const& table = ek.algebra.table(*k_idx);
              seen[i]           = true;
              for (std::size_t code = 0; code < table.size() && ok; ++code) {
                auto args = decode_tuple(code, n, ek.carrier.maps.size());
                ok        = table[code] == args[i];
              }
            }
            ok = ok && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
            t.record("selections", ok, "operations are not exactly the argument selections",
                     [&] {
                       return std::vector<std::string>{describe(k), "arity " + std::to_string(n)};
                     });
          }
          algebras.push_back(std::move(ek));
        });
      }
      for (std::size_t i = 0; i < algebras.size(); ++i) {
        for (std::size_t j = 0; j < algebras.size(); ++j) {
          for_each_monotone_table(algebras[i].base, algebras[j].base, [&](Table const& tab) {
            MonotoneMap h(algebras[i].base, algebras[j].base, tab);
            auto        w = [&] { return std::vector<std::string>{describe(h)}; };
            bool        ok = true;
            try {
              hom_algebra_map(algebras[i], algebras[j], h);
            } catch (InputError const&) {
              ok = false;
            }
            t.record("post-composition", ok, "post-composition is not a homomorphism", w);
            return true;
          });
        }
      }
      for (auto const& ek : algebras) {
        auto w = [&] { return std::vector<std::string>{describe(ek.base)}; };
        t.guarded("identity", w, [&] {
          t.record("identity",
                   hom_algebra_map(ek, ek, MonotoneMap::identity(ek.base))
                       == Homomorphism::identity(ek.algebra),
                   "E(id) is not the identity", w);
        });
      }
      if (!algebras.empty()) {
        Rng                                        rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, algebras.size() - 1);
        for (std::size_t done = 0; done < o.samples;) {
          auto const& ek = algebras[pick(rng)];
          auto const& el = algebras[pick(rng)];
          auto const& em = algebras[pick(rng)];
          if ((el.base.empty() && !ek.base.empty()) || (em.base.empty() && !el.base.empty())) {
            continue;
          }
          auto h = random_monotone_map(ek.base, el.base, rng);
          auto g = random_monotone_map(el.base, em.base, rng);
          auto w = [&] { return std::vector<std::string>{describe(h), describe(g)}; };
          t.guarded("composition", w, [&] {
            t.record("composition",
                     hom_algebra_map(ek, em, compose(g, h))
                         == compose(hom_algebra_map(el, em, g), hom_algebra_map(ek, el, h)),
                     "E(g . h) differs from Eg . Eh", w);
          });
          ++done;
        }
      }
      r.scope = "G = 1, arity bound " + std::to_string(bound) + ", K and L among all "
                + std::to_string(bases.size()) + " posets on <= " + std::to_string(o.size)
                + " elements, every monotone h: K -> L; identities for every K and "
                + std::to_string(o.samples) + " seeded composable pairs (seed "
                + std::to_string(o.seed) + ")";
      return r;
    }

    SuiteReport classical_suite(SuiteOptions const& o) {
      auto  r = start("classical", o);
      Tally t(r);

      auto set_of = [](std::size_t n) { return finite_set(FinitePoset::antichain(n).labels()); };

      for (std::size_t n = 0; n <= o.oracle_size; ++n) {
        auto a = set_of(n);
        for (auto const& blocks : set_partitions(n)) {
          auto pairs = equivalence_of(n, blocks);
          auto w     = [&] { return std::vector<std::string>{describe(pairs)}; };
          t.guarded("effectivity", w, [&] {
            t.record("effectivity", effectivity_roundtrip_set(a, pairs),
                     "kernel pair of the coequalizer differs", w);
          });
        }
      }

      for (std::size_t n = 0; n <= o.size; ++n) {
        auto a = set_of(n);
        for_each_relation(n, [&](Relation const& pairs) {
          auto rel = relation_from_pairs(a, pairs);
          auto w   = [&] { return std::vector<std::string>{describe(pairs)}; };
          t.guarded("congruence-tabulated", w, [&] {
            t.record("congruence-tabulated",
                     congruence_wrt_point(rel).holds == classify(rel).is_congruence,
                     "point-wise congruence disagrees with classify", w);
          });
        });
      }
      std::size_t const pair_bound = o.size == 0 ? 0 : o.size - 1;
      for (std::size_t m = 0; m <= pair_bound; ++m) {
        for (std::size_t n = 0; n <= pair_bound; ++n) {
          auto rs   = set_of(m);
          auto as   = set_of(n);
          auto maps = enumerate_monotone_maps(rs, as);
          for (auto const& r0 : maps) {
            for (auto const& r1 : maps) {
              RelationPair rel(r0, r1);
              auto w = [&] { return std::vector<std::string>{describe(r0), describe(r1)}; };
              t.guarded("congruence-pairs", w, [&] {
                t.record("congruence-pairs",
                         congruence_wrt_point(rel).holds == classify(rel).is_congruence,
                         "point-wise congruence disagrees with classify", w);
              });
            }
          }
        }
      }

      for (std::size_t m = 0; m <= o.size; ++m) {
        for (std::size_t n = 0; n <= o.size; ++n) {
          for (auto const& f : enumerate_monotone_maps(set_of(m), set_of(n))) {
            auto w = [&] { return std::vector<std::string>{describe(f)}; };
            t.guarded("factorization", w, [&] {
              auto fac = regular_factorization_set(f);
              std::vector<bool> image(n, false);
              for (auto v : f.table()) {
                image[v] = true;
              }
              auto const image_size = static_cast<std::size_t>(
                  std::count(image.begin(), image.end(), true));
              t.record("factorization", fac.mid.size() == image_size,
                       "middle object differs from the image", w);
              auto kp = kernel_pair_set(f);
              auto q  = coequalizer_set(kp.r0(), kp.r1());
              t.record("coequalizer", verify_coequalizer_universal(q, kp.r0(), kp.r1()),
                       {describe(f)});
              if (is_surjective(f)) {
                t.record("surjection-recovery", kernel_coequalizer_recovers(f), {describe(f)});
              }
            });
          }
        }
      }
      r.scope = "all " + std::to_string(o.oracle_size)
                + "-bounded partitions (Bell numbers) through effectivity; every relation on "
                  "sets of <= "
                + std::to_string(o.size) + " elements and every map pair R => A with |R|, |A| <= "
                + std::to_string(pair_bound) + " for the point-wise congruence; every map "
                + "between sets of <= " + std::to_string(o.size) + " elements ("
                + count_scope(r.parts) + ")";
      return r;
    }

    SuiteReport birkhoff_suite(SuiteOptions const& o) {
      auto  r = start("birkhoff", o);
      Tally t(r);
      auto  sig = binary_signature();
      std::vector<std::string> vars{"x", "y"};
      VarietyPresentation      v{sig,
                            {Inequation{vars, parse_term("m(x,y)", sig, vars), parse_term("x", sig, vars)},
                             Inequation{vars, parse_term("m(x,y)", sig, vars), parse_term("y", sig, vars)}}};
      auto family = all_binary_algebras(o.size);
      auto report = birkhoff_closure_check(v, family);
      t.record("members", report.satisfying > 0, "no member satisfies the presentation",
               [] { return std::vector<std::string>{}; });
      t.record("closure", report.closed(), "closure violation",
               [&] { return report.violations; });
      r.scope = "m(x,y) <= x, m(x,y) <= y over all " + std::to_string(report.members)
                + " one-binary-operation algebras on <= " + std::to_string(o.size)
                + " elements: " + std::to_string(report.satisfying) + " satisfy; "
                + std::to_string(report.products_checked) + " products, "
                + std::to_string(report.subalgebras_checked) + " subalgebras, "
                + std::to_string(report.images_checked) + " images checked; "
                + std::to_string(report.violations.size()) + " violations";
      return r;
    }

    std::vector<SuiteInfo> make_registry() {
      return {
          {"posetal-reflection", "posetal reflection of preorders and its universal property",
           {4, 0, 1000, 3, 0}, posetal_reflection_suite},
          {"coinserter-universal", "coinserters in Pos against brute-force targets",
           {3, 0, 0, 3, 0}, coinserter_universal_suite},
          {"subkernel-subcongruence", "subkernel pairs classify as subcongruences",
           {4, 3, 500, 0, 0}, subkernel_subcongruence_suite},
          {"effectivity", "every subcongruence is the subkernel pair of its quotient",
           {3, 3, 500, 0, 0}, effectivity_suite},
          {"subregular-surjective", "subregular epimorphisms are the surjections",
           {3, 3, 500, 0, 0}, subregular_surjective_suite},
          {"factorization", "subregular factorizations of random maps and homomorphisms",
           {5, 3, 1000, 0, 0}, factorization_suite},
          {"pullback-stability", "surjections are stable under pullback",
           {3, 3, 0, 0, 0}, pullback_stability_suite},
          {"tensor-adjunction", "tensors P (x) G in Pos and their adjunction",
           {3, 0, 0, 0, 0}, tensor_adjunction_suite},
          {"support-bound", "supports of maps into copowers are bounded by components",
           {4, 0, 0, 5, 0}, support_bound_suite},
          {"hom-algebra", "hom-algebras over the one-point generator",
           {4, 0, 200, 2, 0}, hom_algebra_suite},
          {"classical", "kernel pairs, coequalizers and congruences in Set",
           {4, 0, 0, 5, 0}, classical_suite},
          {"birkhoff", "HSP closure of a finitely presented variety",
           {2, 0, 0, 0, 0}, birkhoff_suite},
          {"coinserter-algebra", "general coinserters of homomorphisms against targets",
           {2, 0, 0, 2, 0}, coinserter_algebra_suite},
      };
    }

  }  // namespace

  std::vector<SuiteInfo> const& suites() {
    static std::vector<SuiteInfo> const registry = make_registry();
    return registry;
  }

  std::optional<SuiteInfo> find_suite(std::string_view name) {
    for (auto const& s : suites()) {
      if (s.name == name) {
        return s;
      }
    }
    return std::nullopt;
  }

  SuiteReport run_suite(std::string_view name, SuiteOptions const& options) {
    auto s = find_suite(name);
    if (!s) {
      throw InputError("unknown suite \"" + std::string(name) + "\"");
    }
    return s->run(options);
  }

  SuiteReport run_suite(std::string_view name) {
    auto s = find_suite(name);
    if (!s) {
      throw InputError("unknown suite \"" + std::string(name) + "\"");
    }
    return s->run(s->defaults);
  }

}  // namespace ordalg
