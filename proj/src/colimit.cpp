#include "ordalg/colimit.hpp"

#include <stdexcept>

namespace ordalg {

  namespace {
    void require_parallel(FinitePoset const& dom0,
                          FinitePoset const& cod0,
                          FinitePoset const& dom1,
                          FinitePoset const& cod1) {
      if (!(dom0 == dom1) || !(cod0 == cod1)) {
        throw InputError("coinserter of a non-parallel pair");
      }
    }

    std::string table_string(FinitePoset const& cod, Table const& t) {
      std::string s = "[";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + cod.label(t[i]);
      }
      return s + "]";
    }

    // Posetal reflection of a preorder on the carrier of y, viewed as a
    // monotone map out of y.
    MonotoneMap reflect(FinitePoset const& y, Relation preorder) {
      auto refl = posetal_reflection(FinitePreorder::from_relation(y.labels(), std::move(preorder)));
      return MonotoneMap(y, refl.quotient, refl.proj.table());
    }

    bool comparable_after(MonotoneMap const& c, Table const& f0, Table const& f1) {
      for (std::size_t x = 0; x < f0.size(); ++x) {
        if (!c.cod().le(c(f0[x]), c(f1[x]))) {
          return false;
        }
      }
      return true;
    }

    // Operations on c.cod() induced along the surjection c. Throws
    // std::logic_error if they are not well defined.
    OrderedAlgebra induce_operations(OrderedAlgebra const& a, MonotoneMap const& c) {
      std::size_t const           n = a.size(), m = c.cod().size();
      auto const&                 sig = a.signature();
      std::vector<OperationTable> tables;
      for (std::size_t k = 0; k < sig.size(); ++k) {
        auto const               arity = sig[k].arity;
        std::size_t const        N     = int_power(m, arity);
        OperationTable           t(N, m);
        std::vector<std::size_t> image(arity);
        for (std::size_t code = 0; code < int_power(n, arity); ++code) {
          auto args = decode_tuple(code, arity, n);
          for (std::size_t i = 0; i < arity; ++i) {
            image[i] = c(args[i]);
          }
          auto const target = encode_tuple(image, m);
          auto const value  = c(a.table(k)[code]);
          if (t[target] != m && t[target] != value) {
            throw std::logic_error("induced operation \"" + sig[k].name + "\" is not well defined");
          }
          t[target] = value;
        }
        for (auto v : t) {
          if (v == m) {
            throw std::logic_error("quotient arrow is not surjective");
          }
        }
        tables.push_back(std::move(t));
      }
      return OrderedAlgebra(sig, c.cod(), std::move(tables));
    }

    std::string describe_failure(RelationClassification const& c) {
      for (char const* flag : {"relation", "order_reflexive", "transitive"}) {
        auto it = c.witnesses.find(flag);
        if (it == c.witnesses.end()) {
          continue;
        }
        std::string msg = std::string("relation is not a subcongruence: ") + flag + " fails at";
        for (auto const& w : it->second) {
          msg += " " + w;
        }
        return msg;
      }
      return "relation is not a subcongruence";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Coinserters in Pos
  ////////////////////////////////////////////////////////////////////////

  PosetCoinserter coinserter_pos(MonotoneMap const& f0, MonotoneMap const& f1) {
    require_parallel(f0.dom(), f0.cod(), f1.dom(), f1.cod());
    auto const& y   = f0.cod();
    Relation    rel = y.order();
    for (std::size_t x = 0; x < f0.dom().size(); ++x) {
      rel.set(f0(x), f1(x));
    }
    rel.close_reflexive_transitive();
    auto c = reflect(y, std::move(rel));
    if (!comparable_after(c, f0.table(), f1.table())) {
      throw std::logic_error("coinserter arrow does not satisfy c.f0 <= c.f1");
    }
    return PosetCoinserter{c.cod(), c, true};
  }

  ////////////////////////////////////////////////////////////////////////
  // Subkernel pairs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Relation subkernel_pairs(MonotoneMap const& h) {
      std::size_t const n = h.dom().size();
      Relation          t(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t.set(a, b, h.cod().le(h(a), h(b)));
        }
      }
      return t;
    }
  }  // namespace

  RelationPair subkernel_pair(MonotoneMap const& h) {
    return relation_from_pairs(h.dom(), subkernel_pairs(h));
  }

  AlgebraRelationPair subkernel_pair(Homomorphism const& h) {
    return relation_from_pairs(h.dom(), subkernel_pairs(h.map()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Quotients by subcongruences
  ////////////////////////////////////////////////////////////////////////

  PosetCoinserter coinserter_subcongruence_pos(FinitePoset const& a, Relation const& pairs) {
    auto cls = classify(a, pairs);
    if (!cls.is_subcongruence) {
      throw PreconditionError(describe_failure(cls));
    }
    // The tabulation of a subcongruence is itself a preorder containing <=.
    auto c = reflect(a, pairs);
    for (auto const& [x, y] : pairs.pairs()) {
      if (!c.cod().le(c(x), c(y))) {
        throw std::logic_error("subcongruence quotient does not satisfy c.r0 <= c.r1");
      }
    }
    return PosetCoinserter{c.cod(), c, true};
  }

  PosetCoinserter coinserter_subcongruence_pos(RelationPair const& r) {
    auto cls = classify(r);
    if (!cls.is_subcongruence) {
      throw PreconditionError(describe_failure(cls));
    }
    return coinserter_subcongruence_pos(r.target(), tabulate(r).pairs);
  }

  AlgebraCoinserter quotient_algebra(OrderedAlgebra const& a, Relation const& pairs) {
    auto cls = classify(a, pairs);
    if (!cls.is_subcongruence) {
      throw PreconditionError(describe_failure(cls));
    }
    auto pc       = coinserter_subcongruence_pos(a.carrier(), pairs);
    auto quotient = induce_operations(a, pc.arrow);
    return AlgebraCoinserter{quotient, Homomorphism(a, quotient, pc.arrow.table()), true};
  }

  AlgebraCoinserter quotient_algebra(AlgebraRelationPair const& r) {
    auto cls = classify(r);
    if (!cls.is_subcongruence) {
      throw PreconditionError(describe_failure(cls));
    }
    return quotient_algebra(r.target(), tabulate(r).pairs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Coinserters in Sigma-Pos
  ////////////////////////////////////////////////////////////////////////

  AlgebraCoinserter coinserter_alg(Homomorphism const& f0, Homomorphism const& f1) {
    require_parallel(f0.dom().carrier(), f0.cod().carrier(), f1.dom().carrier(),
                     f1.cod().carrier());
    if (!(f0.cod() == f1.cod()) || !(f0.dom() == f1.dom())) {
      throw InputError("coinserter of a non-parallel pair");
    }
    auto const&       y   = f0.cod();
    auto const&       sig = y.signature();
    std::size_t const n   = y.size();
    Relation          rel = y.carrier().order();
    for (std::size_t x = 0; x < f0.dom().size(); ++x) {
      rel.set(f0(x), f1(x));
    }
    // Alternate transitive closure and compatibility until stable. Raising
    // one argument at a time is enough once the relation is transitive.
    bool changed = true;
    while (changed) {
      rel.close_reflexive_transitive();
      changed = false;
      for (std::size_t k = 0; k < sig.size(); ++k) {
        auto const  arity = sig[k].arity;
        auto const& t     = y.table(k);
        for (std::size_t code = 0; code < t.size(); ++code) {
          auto args = decode_tuple(code, arity, n);
          for (std::size_t i = 0; i < arity; ++i) {
            auto const saved = args[i];
            for (std::size_t v = 0; v < n; ++v) {
              if (v == saved || !rel.test(saved, v)) {
                continue;
              }
              args[i]     = v;
              auto raised = y.apply(k, args);
              if (!rel.test(t[code], raised)) {
                rel.set(t[code], raised);
                changed = true;
              }
            }
            args[i] = saved;
          }
        }
      }
    }
    auto c = reflect(y.carrier(), std::move(rel));
    if (!comparable_after(c, f0.table(), f1.table())) {
      throw std::logic_error("coinserter arrow does not satisfy c.f0 <= c.f1");
    }
    auto object = induce_operations(y, c);
    return AlgebraCoinserter{object, Homomorphism(y, object, c.table()), true};
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal property oracles
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool respects_pair(FinitePoset const& z, Table const& c, Table const& f0, Table const& f1) {
      for (std::size_t x = 0; x < f0.size(); ++x) {
        if (!z.le(c[f0[x]], c[f1[x]])) {
          return false;
        }
      }
      return true;
    }

    bool table_le(FinitePoset const& z, Table const& u0, Table const& u1) {
      for (std::size_t i = 0; i < u0.size(); ++i) {
        if (!z.le(u0[i], u1[i])) {
          return false;
        }
      }
      return true;
    }

    Table compose_tables(Table const& g, Table const& f) {
      Table out(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = g[f[i]];
      }
      return out;
    }

    // Shared driver: `for_each_arrow(source, z, visit)` enumerates the
    // morphisms from `source` into target z (monotone maps or homs).
    template <typename Target, typename Source, typename ForEach, typename CarrierOf>
    Check verify_universal(Source const&           y,
                           Source const&           c_obj,
                           Table const&            c,
                           Table const&            f0,
                           Table const&            f1,
                           std::span<Target const> targets,
                           ForEach                 for_each_arrow,
                           CarrierOf               carrier_of) {
      auto const& cposet = carrier_of(c_obj);
      if (!respects_pair(cposet, c, f0, f1)) {
        return Check::fail("candidate arrow violates c.f0 <= c.f1");
      }
      for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        auto const& z      = targets[ti];
        auto const& zposet = carrier_of(z);
        Check       result = Check::pass();
        for_each_arrow(y, z, Candidates{}, [&](Table const& cp) {
          if (!respects_pair(zposet, cp, f0, f1)) {
            return true;
          }
          auto cand = factorization_candidates(c, cposet.size(), zposet.size(), cp);
          std::size_t count = 0;
          if (cand) {
            for_each_arrow(c_obj, z, *cand, [&](Table const&) {
              ++count;
              return count < 2;
            });
          }
          if (count != 1) {
            result = Check::fail(count == 0 ? "comparable map does not factor through candidate"
                                            : "factorization through candidate is not unique",
                                 {"target=" + std::to_string(ti), table_string(zposet, cp)});
            return false;
          }
          return true;
        });
        if (!result) {
          return result;
        }
        std::vector<Table> us;
        for_each_arrow(c_obj, z, Candidates{}, [&](Table const& u) {
          us.push_back(u);
          return true;
        });
        for (auto const& u0 : us) {
          auto u0c = compose_tables(u0, c);
          for (auto const& u1 : us) {
            if (table_le(zposet, u0c, compose_tables(u1, c)) && !table_le(zposet, u0, u1)) {
              return Check::fail("candidate arrow is not order-epi",
                                 {"target=" + std::to_string(ti), table_string(zposet, u0),
                                  table_string(zposet, u1)});
            }
          }
        }
      }
      return Check::pass();
    }
  }  // namespace

  Check verify_coinserter_universal(PosetCoinserter const&       candidate,
                                    MonotoneMap const&           f0,
                                    MonotoneMap const&           f1,
                                    std::span<FinitePoset const> targets) {
    require_parallel(f0.dom(), f0.cod(), f1.dom(), f1.cod());
    if (!(candidate.arrow.dom() == f0.cod()) || !(candidate.arrow.cod() == candidate.object)) {
      throw InputError("candidate arrow does not start at the pair's codomain");
    }
    auto for_each = [](FinitePoset const& src, FinitePoset const& z, Candidates const& cand,
                       std::function<bool(Table const&)> const& visit) {
      for_each_monotone_table(src, z, visit, cand);
    };
    return verify_universal<FinitePoset>(
        f0.cod(), candidate.object, candidate.arrow.table(), f0.table(), f1.table(), targets,
        for_each, [](FinitePoset const& p) -> FinitePoset const& { return p; });
  }

  Check verify_coinserter_universal(AlgebraCoinserter const&        candidate,
                                    Homomorphism const&             f0,
                                    Homomorphism const&             f1,
                                    std::span<OrderedAlgebra const> targets) {
    if (!(f0.dom() == f1.dom()) || !(f0.cod() == f1.cod())) {
      throw InputError("coinserter of a non-parallel pair");
    }
    if (!(candidate.arrow.dom() == f0.cod()) || !(candidate.arrow.cod() == candidate.object)) {
      throw InputError("candidate arrow does not start at the pair's codomain");
    }
    auto for_each = [](OrderedAlgebra const& src, OrderedAlgebra const& z, Candidates const& cand,
                       std::function<bool(Table const&)> const& visit) {
      for_each_homomorphism_table(src, z, visit, cand);
    };
    return verify_universal<OrderedAlgebra>(
        f0.cod(), candidate.object, candidate.arrow.table(), f0.table(), f1.table(), targets,
        for_each, [](OrderedAlgebra const& a) -> FinitePoset const& { return a.carrier(); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorization
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Table mediating_table(Table const& c, std::size_t mid_size, Table const& f) {
      Table m(mid_size, 0);
      for (std::size_t a = 0; a < c.size(); ++a) {
        m[c[a]] = f[a];
      }
      return m;
    }
  }  // namespace

  PosetFactorization subregular_factorization(MonotoneMap const& f) {
    auto coins = coinserter_subcongruence_pos(subkernel_pair(f));
    MonotoneMap mono(coins.object, f.cod(),
                     mediating_table(coins.arrow.table(), coins.object.size(), f.table()));
    if (!(compose(mono, coins.arrow) == f)) {
      throw std::logic_error("factorization does not recompose");
    }
    if (!is_surjective(coins.arrow) || !is_embedding(mono)) {
      throw std::logic_error("factorization is not (surjective, embedding)");
    }
    return PosetFactorization{coins.object, coins.arrow, mono};
  }

  AlgebraFactorization subregular_factorization(Homomorphism const& f) {
    auto         coins = quotient_algebra(subkernel_pair(f));
    Homomorphism mono(coins.object, f.cod(),
                      mediating_table(coins.arrow.table(), coins.object.size(), f.table()));
    if (!(compose(mono, coins.arrow) == f)) {
      throw std::logic_error("factorization does not recompose");
    }
    if (!is_surjective(coins.arrow) || !is_embedding(mono)) {
      throw std::logic_error("factorization is not (surjective, embedding)");
    }
    return AlgebraFactorization{coins.object, coins.arrow, mono};
  }

  ////////////////////////////////////////////////////////////////////////
  // Pullbacks
  ////////////////////////////////////////////////////////////////////////

  PosetPullback pullback(MonotoneMap const& f, MonotoneMap const& e) {
    if (!(f.cod() == e.cod())) {
      throw InputError("pullback of maps with different codomains");
    }
    auto const&              a = e.dom();
    auto const&              b = f.dom();
    std::vector<std::string> labels;
    Table                    to_a, to_b;
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        if (e(x) == f(y)) {
          labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
          to_a.push_back(x);
          to_b.push_back(y);
        }
      }
    }
    std::size_t const m = labels.size();
    Relation          order(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        order.set(i, j, a.le(to_a[i], to_a[j]) && b.le(to_b[i], to_b[j]));
      }
    }
    auto object = FinitePoset::from_relation(std::move(labels), std::move(order));
    return PosetPullback{object, MonotoneMap(object, a, std::move(to_a)),
                         MonotoneMap(object, b, std::move(to_b))};
  }

  AlgebraPullback pullback(Homomorphism const& f, Homomorphism const& e) {
    if (!(f.cod() == e.cod())) {
      throw InputError("pullback of homomorphisms with different codomains");
    }
    auto        pb  = pullback(f.map(), e.map());
    auto const& a   = e.dom();
    auto const& b   = f.dom();
    auto const& sig = a.signature();
    std::size_t const m = pb.object.size();
    std::vector<std::size_t> index(a.size() * b.size(), m);
    for (std::size_t i = 0; i < m; ++i) {
      index[pb.to_a(i) * b.size() + pb.to_b(i)] = i;
    }
    std::vector<OperationTable> tables;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const               arity = sig[k].arity;
      OperationTable           t(int_power(m, arity));
      std::vector<std::size_t> left(arity), right(arity);
      for (std::size_t code = 0; code < t.size(); ++code) {
        auto args = decode_tuple(code, arity, m);
        for (std::size_t i = 0; i < arity; ++i) {
          left[i]  = pb.to_a(args[i]);
          right[i] = pb.to_b(args[i]);
        }
        auto v = index[a.apply(k, left) * b.size() + b.apply(k, right)];
        if (v == m) {
          throw std::logic_error("pullback is not closed under \"" + sig[k].name + "\"");
        }
        t[code] = v;
      }
      tables.push_back(std::move(t));
    }
    OrderedAlgebra object(sig, pb.object, std::move(tables));
    return AlgebraPullback{object, Homomorphism(object, a, pb.to_a.table()),
                           Homomorphism(object, b, pb.to_b.table())};
  }

  namespace {
    Check leg_surjective(MonotoneMap const& leg) {
      std::vector<bool> hit(leg.cod().size(), false);
      for (auto y : leg.table()) {
        hit[y] = true;
      }
      for (std::size_t y = 0; y < hit.size(); ++y) {
        if (!hit[y]) {
          return Check::fail("pulled-back leg misses an element", {leg.cod().label(y)});
        }
      }
      return Check::pass();
    }
  }  // namespace

  Check pullback_stability(MonotoneMap const& f, MonotoneMap const& e) {
    if (!is_surjective(e)) {
      return Check::pass();
    }
    return leg_surjective(pullback(f, e).to_b);
  }

  Check pullback_stability(Homomorphism const& f, Homomorphism const& e) {
    if (!is_surjective(e)) {
      return Check::pass();
    }
    return leg_surjective(pullback(f, e).to_b.map());
  }

}  // namespace ordalg
