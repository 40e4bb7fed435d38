#include "ordalg/generator.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace ordalg {

  namespace {
    std::string image_label(FinitePoset const& x, Table const& t) {
      std::string s = "[";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + x.label(t[i]);
      }
      return s + "]";
    }

    HomPoset make_hom_poset(FinitePoset const& x, std::vector<Table> maps) {
      std::size_t const        n = maps.size();
      std::vector<std::string> labels;
      labels.reserve(n);
      Relation order(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(image_label(x, maps[i]));
        for (std::size_t j = 0; j < n; ++j) {
          bool le = true;
          for (std::size_t a = 0; a < maps[i].size() && le; ++a) {
            le = x.le(maps[i][a], maps[j][a]);
          }
          order.set(i, j, le);
        }
      }
      HomPoset h{FinitePoset::from_relation(std::move(labels), std::move(order)), std::move(maps), {}};
      for (std::size_t i = 0; i < n; ++i) {
        h.index.emplace(h.maps[i], i);
      }
      return h;
    }

    Table compose_tables(Table const& g, Table const& f) {
      Table out(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = g[f[i]];
      }
      return out;
    }

    bool table_le(FinitePoset const& z, Table const& u0, Table const& u1) {
      for (std::size_t i = 0; i < u0.size(); ++i) {
        if (!z.le(u0[i], u1[i])) {
          return false;
        }
      }
      return true;
    }

    Check cover_from_tables(FinitePoset const& x,
                            std::function<void(std::function<bool(Table const&)> const&)> const& each) {
      std::vector<bool> hit(x.size(), false);
      each([&](Table const& t) {
        for (auto v : t) {
          hit[v] = true;
        }
        return true;
      });
      for (std::size_t v = 0; v < hit.size(); ++v) {
        if (!hit[v]) {
          return Check::fail("element is not in the image of any morphism from G", {x.label(v)});
        }
      }
      return Check::pass();
    }

    Candidates preimage_candidates(Table const& e, std::size_t b_size, Table const& g) {
      std::vector<std::vector<std::size_t>> fibres(b_size);
      for (std::size_t a = 0; a < e.size(); ++a) {
        fibres[e[a]].push_back(a);
      }
      Candidates out(g.size());
      for (std::size_t x = 0; x < g.size(); ++x) {
        out[x] = fibres[g[x]];
      }
      return out;
    }

    // Post-composition hom(G,A) -> hom(G,B) is an order isomorphism.
    bool post_composition_iso(HomPoset const& ga, HomPoset const& gb, Table const& h) {
      if (ga.maps.size() != gb.maps.size()) {
        return false;
      }
      Table post(ga.maps.size());
      std::vector<bool> hit(gb.maps.size(), false);
      for (std::size_t i = 0; i < ga.maps.size(); ++i) {
        auto j = gb.find(compose_tables(h, ga.maps[i]));
        if (!j || hit[*j]) {
          return false;
        }
        hit[*j] = true;
        post[i] = *j;
      }
      for (std::size_t i = 0; i < post.size(); ++i) {
        for (std::size_t j = 0; j < post.size(); ++j) {
          if (ga.poset.le(i, j) != gb.poset.le(post[i], post[j])) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  HomPoset hom_poset(FinitePoset const& g, FinitePoset const& x) {
    std::vector<Table> maps;
    for_each_monotone_table(g, x, [&](Table const& t) {
      maps.push_back(t);
      return true;
    });
    return make_hom_poset(x, std::move(maps));
  }

  HomPoset hom_poset(OrderedAlgebra const& g, OrderedAlgebra const& x) {
    std::vector<Table> maps;
    for_each_homomorphism_table(g, x, [&](Table const& t) {
      maps.push_back(t);
      return true;
    });
    return make_hom_poset(x.carrier(), std::move(maps));
  }

  ////////////////////////////////////////////////////////////////////////
  // Abstract finiteness
  ////////////////////////////////////////////////////////////////////////

  SupportResult support_analysis(MonotoneMap const& f, CoproductResult const& copower) {
    if (!(f.cod() == copower.object)) {
      throw InputError("map codomain is not the given copower");
    }
    for (auto const& inj : copower.injections) {
      if (!(inj.dom() == f.dom())) {
        throw InputError("codomain is not a copower of the map's domain");
      }
    }
    std::vector<std::size_t> support;
    for (auto y : f.table()) {
      support.push_back(copower.summand_of[y]);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return SupportResult{f, std::move(support), connected_components(f.dom()).size()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Covers, projectivity, strong generation
  ////////////////////////////////////////////////////////////////////////

  Check canonical_cover_check(FinitePoset const& g, FinitePoset const& x) {
    return cover_from_tables(x, [&](auto const& visit) { for_each_monotone_table(g, x, visit); });
  }

  Check canonical_cover_check(OrderedAlgebra const& g, OrderedAlgebra const& x) {
    return cover_from_tables(x.carrier(),
                             [&](auto const& visit) { for_each_homomorphism_table(g, x, visit); });
  }

  Check is_subregular_projective_instance(FinitePoset const& g, MonotoneMap const& e) {
    if (!is_surjective(e)) {
      throw PreconditionError("projectivity is tested against surjections only");
    }
    Check result = Check::pass();
    for_each_monotone_table(g, e.cod(), [&](Table const& b) {
      bool lifted = false;
      for_each_monotone_table(
          g, e.dom(),
          [&](Table const&) {
            lifted = true;
            return false;
          },
          preimage_candidates(e.table(), e.cod().size(), b));
      if (!lifted) {
        result = Check::fail("morphism does not lift along e", {image_label(e.cod(), b)});
        return false;
      }
      return true;
    });
    return result;
  }

  Check is_subregular_projective_instance(OrderedAlgebra const& g, Homomorphism const& e) {
    if (!is_surjective(e)) {
      throw PreconditionError("projectivity is tested against surjections only");
    }
    Check result = Check::pass();
    for_each_homomorphism_table(g, e.cod(), [&](Table const& b) {
      bool lifted = false;
      for_each_homomorphism_table(
          g, e.dom(),
          [&](Table const&) {
            lifted = true;
            return false;
          },
          preimage_candidates(e.table(), e.cod().size(), b));
      if (!lifted) {
        result = Check::fail("homomorphism does not lift along e",
                             {image_label(e.cod().carrier(), b)});
        return false;
      }
      return true;
    });
    return result;
  }

  ReflectsIsoResult reflects_iso_instance(FinitePoset const& g, MonotoneMap const& h) {
    auto ga = hom_poset(g, h.dom());
    auto gb = hom_poset(g, h.cod());
    return ReflectsIsoResult{post_composition_iso(ga, gb, h.table()), is_isomorphism(h)};
  }

  ReflectsIsoResult reflects_iso_instance(OrderedAlgebra const& g, Homomorphism const& h) {
    auto ga = hom_poset(g, h.dom());
    auto gb = hom_poset(g, h.cod());
    return ReflectsIsoResult{post_composition_iso(ga, gb, h.table()), is_isomorphism(h)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensors
  ////////////////////////////////////////////////////////////////////////

  TensorResult tensor_pos(FinitePoset const& p, FinitePoset const& g) {
    auto const                                       pg = copower(g, p.size());
    std::vector<std::pair<std::size_t, std::size_t>> order_pairs = p.order().pairs();
    auto const rg = copower(g, order_pairs.size());
    Table      leg0(rg.object.size()), leg1(rg.object.size());
    for (std::size_t r = 0; r < order_pairs.size(); ++r) {
      for (std::size_t x = 0; x < g.size(); ++x) {
        leg0[rg.inject(r, x)] = pg.inject(order_pairs[r].first, x);
        leg1[rg.inject(r, x)] = pg.inject(order_pairs[r].second, x);
      }
    }
    auto coins = coinserter_pos(MonotoneMap(rg.object, pg.object, std::move(leg0)),
                                MonotoneMap(rg.object, pg.object, std::move(leg1)));

    std::vector<MonotoneMap> components;
    for (std::size_t x = 0; x < p.size(); ++x) {
      components.push_back(compose(coins.arrow, pg.injections[x]));
    }
    auto  hom = hom_poset(g, coins.object);
    Table unit(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      auto i = hom.find(components[x].table());
      if (!i) {
        throw std::logic_error("tensor component is not a monotone map");
      }
      unit[x] = *i;
    }
    MonotoneMap unit_witness(p, hom.poset, std::move(unit));
    return TensorResult{p,     g,
                        pg,    coins.object,
                        coins.arrow, std::move(components),
                        std::move(hom), std::move(unit_witness)};
  }

  Check verify_tensor_adjunction(TensorResult const& t, FinitePoset const& x) {
    auto const& c = t.object;
    auto const& p = t.p;
    auto const& g = t.g;
    auto const  hgx = hom_poset(g, x);

    std::vector<Table>           hom_cx;
    std::map<Table, std::size_t> hom_cx_index;
    for_each_monotone_table(c, x, [&](Table const& f) {
      hom_cx_index.emplace(f, hom_cx.size());
      hom_cx.push_back(f);
      return true;
    });
    std::vector<Table>           pos_p;
    std::map<Table, std::size_t> pos_p_index;
    for_each_monotone_table(p, hgx.poset, [&](Table const& q) {
      pos_p_index.emplace(q, pos_p.size());
      pos_p.push_back(q);
      return true;
    });

    // i(f)(x) = f . c_x
    std::vector<std::size_t> forward(hom_cx.size());
    std::vector<bool>        hit(pos_p.size(), false);
    for (std::size_t k = 0; k < hom_cx.size(); ++k) {
      Table q(p.size());
      for (std::size_t e = 0; e < p.size(); ++e) {
        auto idx = hgx.find(compose_tables(hom_cx[k], t.components[e].table()));
        if (!idx) {
          return Check::fail("f . c_x is not monotone", {image_label(x, hom_cx[k])});
        }
        q[e] = *idx;
      }
      auto it = pos_p_index.find(q);
      if (it == pos_p_index.end()) {
        return Check::fail("i(f) is not monotone on P", {image_label(x, hom_cx[k])});
      }
      if (hit[it->second]) {
        return Check::fail("i is not injective", {image_label(x, hom_cx[k])});
      }
      hit[it->second] = true;
      forward[k]      = it->second;
    }

    // j(q) is the unique factorization of [q(x)]_x : |P|.G -> X through c.
    std::vector<std::size_t> backward(pos_p.size());
    for (std::size_t k = 0; k < pos_p.size(); ++k) {
      auto const& q = pos_p[k];
      Table       bar(t.copower.object.size());
      for (std::size_t e = 0; e < p.size(); ++e) {
        for (std::size_t y = 0; y < g.size(); ++y) {
          bar[t.copower.inject(e, y)] = hgx.maps[q[e]][y];
        }
      }
      auto cand = factorization_candidates(t.arrow.table(), c.size(), x.size(), bar);
      std::vector<Table> found;
      if (cand) {
        for_each_monotone_table(
            c, x,
            [&](Table const& f) {
              found.push_back(f);
              return found.size() < 2;
            },
            *cand);
      }
      if (found.size() != 1) {
        return Check::fail("[q(x)] does not factor uniquely through the coinserter",
                           {image_label(hgx.poset, q)});
      }
      auto idx = hom_cx_index.at(found.front());
      if (forward[idx] != k) {
        return Check::fail("i(j(q)) differs from q", {image_label(hgx.poset, q)});
      }
      backward[k] = idx;
    }
    for (std::size_t k = 0; k < hom_cx.size(); ++k) {
      if (backward[forward[k]] != k) {
        return Check::fail("j(i(f)) differs from f", {image_label(x, hom_cx[k])});
      }
    }

    // Monotonicity. The pointwise order on monotone maps is generated by
    // raising the value at a single point (raise a maximal point where the
    // maps differ), so it suffices to check those pairs.
    auto raises = [](FinitePoset const& dom, FinitePoset const& cod, Table const& f,
                     auto const& visit) {
      for (std::size_t a = 0; a < dom.size(); ++a) {
        for (std::size_t v = 0; v < cod.size(); ++v) {
          if (v == f[a] || !cod.le(f[a], v)) {
            continue;
          }
          bool ok = true;
          for (std::size_t b = 0; b < dom.size() && ok; ++b) {
            if (b != a && dom.le(a, b) && !cod.le(v, f[b])) {
              ok = false;
            }
          }
          if (ok) {
            Table raised = f;
            raised[a]    = v;
            if (!visit(raised)) {
              return false;
            }
          }
        }
      }
      return true;
    };
    for (std::size_t k = 0; k < hom_cx.size(); ++k) {
      Check result = Check::pass();
      raises(c, x, hom_cx[k], [&](Table const& f2) {
        if (!table_le(hgx.poset, pos_p[forward[k]], pos_p[forward[hom_cx_index.at(f2)]])) {
          result = Check::fail("i is not monotone", {image_label(x, hom_cx[k]), image_label(x, f2)});
          return false;
        }
        return true;
      });
      if (!result) {
        return result;
      }
    }
    for (std::size_t k = 0; k < pos_p.size(); ++k) {
      Check result = Check::pass();
      raises(p, hgx.poset, pos_p[k], [&](Table const& q2) {
        if (!table_le(x, hom_cx[backward[k]], hom_cx[backward[pos_p_index.at(q2)]])) {
          result = Check::fail("j is not monotone",
                               {image_label(hgx.poset, pos_p[k]), image_label(hgx.poset, q2)});
          return false;
        }
        return true;
      });
      if (!result) {
        return result;
      }
    }
    return Check::pass();
  }

  Check tensor_matches_product(TensorResult const& t) {
    auto  prod = product(t.p, t.g);
    Table pairing(t.copower.object.size());
    for (std::size_t e = 0; e < t.p.size(); ++e) {
      for (std::size_t y = 0; y < t.g.size(); ++y) {
        pairing[t.copower.inject(e, y)] = prod.pair_index(e, y);
      }
    }
    MonotoneMap to_product(t.copower.object, prod.object, std::move(pairing));
    if (count_factorizations(t.arrow, to_product) != 1) {
      return Check::fail("pairing map does not factor uniquely through the tensor");
    }
    auto k = factor_through(t.arrow, to_product);
    if (!k || !is_isomorphism(*k)) {
      return Check::fail("comparison P (x) G -> P x G is not an isomorphism");
    }
    return Check::pass();
  }

  ////////////////////////////////////////////////////////////////////////
  // Hom-algebra
  ////////////////////////////////////////////////////////////////////////

  HomAlgebra hom_algebra(FinitePoset const& k,
                         FinitePoset const& g,
                         std::size_t        arity_bound,
                         std::size_t        size_cap) {
    HomAlgebra out{k, g, arity_bound, {}, {}, hom_poset(g, k), OrderedAlgebra()};
    std::size_t const m = out.carrier.maps.size();
    std::vector<Operation>      ops;
    std::vector<OperationTable> tables;
    for (std::size_t n = 0; n <= arity_bound; ++n) {
      out.copowers.push_back(copower(g, n));
      auto const&        ng = out.copowers.back();
      std::vector<Table> sigmas;
      for_each_monotone_table(g, ng.object, [&](Table const& s) {
        sigmas.push_back(s);
        if (sigmas.size() > size_cap) {
          throw ResourceError("hom(G, " + std::to_string(n) + ".G) exceeds the size cap of "
                              + std::to_string(size_cap));
        }
        return true;
      });
      std::size_t const entries = int_power(m, n);
      if (!sigmas.empty() && entries > size_cap * size_cap) {
        throw ResourceError("operation table of arity " + std::to_string(n)
                            + " exceeds the size cap");
      }
      for (std::size_t s = 0; s < sigmas.size(); ++s) {
        ops.push_back({"s" + std::to_string(n) + "_" + std::to_string(s), n});
        OperationTable table(entries);
        Table          composite(g.size());
        for (std::size_t code = 0; code < entries; ++code) {
          auto args = decode_tuple(code, n, m);
          for (std::size_t y = 0; y < g.size(); ++y) {
            auto const target  = sigmas[s][y];
            auto const summand = ng.summand_of[target];
            composite[y]       = out.carrier.maps[args[summand]][target - ng.offset[summand]];
          }
          table[code] = out.carrier.index.at(composite);
        }
        tables.push_back(std::move(table));
      }
      out.sigma.push_back(std::move(sigmas));
    }
    out.algebra = OrderedAlgebra(Signature(std::move(ops)), out.carrier.poset, std::move(tables));
    return out;
  }

  Homomorphism hom_algebra_map(HomAlgebra const& ek, HomAlgebra const& el, MonotoneMap const& h) {
    if (!(ek.generator == el.generator) || ek.arity_bound != el.arity_bound) {
      throw InputError("hom-algebras built from different generators or arity bounds");
    }
    if (!(h.dom() == ek.base) || !(h.cod() == el.base)) {
      throw InputError("map does not go between the hom-algebras' bases");
    }
    Table t(ek.carrier.maps.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = el.carrier.index.at(compose_tables(h.table(), ek.carrier.maps[i]));
    }
    return Homomorphism(ek.algebra, el.algebra, std::move(t));
  }

}  // namespace ordalg
