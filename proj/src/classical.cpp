#include "ordalg/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "union_find.hpp"

namespace ordalg {

  namespace {
    void require_discrete(FinitePoset const& p, char const* what) {
      if (!p.is_discrete()) {
        throw InputError(std::string(what) + " is not a set (its order is not discrete)");
      }
    }

    void require_set_map(MonotoneMap const& f) {
      require_discrete(f.dom(), "domain");
      require_discrete(f.cod(), "codomain");
    }
  }  // namespace

  FinitePoset finite_set(std::vector<std::string> labels) {
    return FinitePoset::discrete(std::move(labels));
  }

  MonotoneMap finite_map(FinitePoset const& dom, FinitePoset const& cod, Table table) {
    require_discrete(dom, "domain");
    require_discrete(cod, "codomain");
    return MonotoneMap(dom, cod, std::move(table));
  }

  RelationPair kernel_pair_set(MonotoneMap const& f) {
    require_set_map(f);
    std::size_t const n = f.dom().size();
    Relation          pairs(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        pairs.set(a, b, f(a) == f(b));
      }
    }
    return relation_from_pairs(f.dom(), pairs);
  }

  SetCoequalizer coequalizer_set(MonotoneMap const& r0, MonotoneMap const& r1) {
    require_set_map(r0);
    require_set_map(r1);
    if (!(r0.dom() == r1.dom()) || !(r0.cod() == r1.cod())) {
      throw InputError("coequalizer of maps that are not parallel");
    }
    auto const&       y = r0.cod();
    detail::UnionFind uf(y.size());
    for (std::size_t x = 0; x < r0.dom().size(); ++x) {
      uf.unite(r0(x), r1(x));
    }
    Partition                classes = uf.blocks();
    std::vector<std::string> labels;
    Table                    proj(y.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
      labels.push_back("[" + y.label(classes[k].front()) + "]");
      for (auto v : classes[k]) {
        proj[v] = k;
      }
    }
    auto quotient = finite_set(std::move(labels));
    return SetCoequalizer{quotient, MonotoneMap(y, quotient, std::move(proj)), std::move(classes)};
  }

  Check verify_coequalizer_universal(SetCoequalizer const& q,
                                     MonotoneMap const&    r0,
                                     MonotoneMap const&    r1) {
    auto const& y = r0.cod();
    for (std::size_t x = 0; x < r0.dom().size(); ++x) {
      if (q.projection(r0(x)) != q.projection(r1(x))) {
        return Check::fail("projection does not coequalize the pair", {r0.dom().label(x)});
      }
    }
    for (std::size_t n = 0; n <= y.size() + 1; ++n) {
      auto  z = FinitePoset::antichain(n);
      Check result = Check::pass();
      for_each_monotone_table(y, z, [&](Table const& g) {
        for (std::size_t x = 0; x < r0.dom().size(); ++x) {
          if (g[r0(x)] != g[r1(x)]) {
            return true;
          }
        }
        auto const count = count_factorizations(q.projection, z, g);
        if (count != 1) {
          std::string t = "[";
          for (std::size_t i = 0; i < g.size(); ++i) {
            t += (i ? "," : "") + z.label(g[i]);
          }
          result = Check::fail(count == 0 ? "coequalizing map does not factor"
                                          : "coequalizing map factors more than once",
                               {"target=" + std::to_string(n), t + "]"});
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

  PosetFactorization regular_factorization_set(MonotoneMap const& f) {
    auto kp = kernel_pair_set(f);
    auto c  = coequalizer_set(kp.r0(), kp.r1());
    Table m(c.quotient.size());
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      m[k] = f(c.classes[k].front());
    }
    MonotoneMap mono(c.quotient, f.cod(), std::move(m));
    if (!(compose(mono, c.projection) == f) || !is_injective(mono)
        || !is_surjective(c.projection)) {
      throw std::logic_error("regular factorization invariants broken");
    }
    return PosetFactorization{c.quotient, c.projection, mono};
  }

  bool effectivity_roundtrip_set(RelationPair const& e) {
    require_discrete(e.carrier(), "relation carrier");
    require_discrete(e.target(), "relation target");
    auto const cls = classify(e);
    if (!cls.is_congruence) {
      throw PreconditionError("relation is not an equivalence relation");
    }
    auto const coeq = coequalizer_set(e.r0(), e.r1());
    return tabulate(kernel_pair_set(coeq.projection)).pairs == tabulate(e).pairs;
  }

  bool effectivity_roundtrip_set(FinitePoset const& a, Relation const& pairs) {
    require_discrete(a, "carrier");
    return effectivity_roundtrip_set(relation_from_pairs(a, pairs));
  }

  Check congruence_wrt_point(RelationPair const& r) {
    require_discrete(r.carrier(), "relation carrier");
    require_discrete(r.target(), "relation target");
    auto const point = finite_set({"*"});
    auto const& a    = r.target();

    // hom(1, X) is listed in enumeration order; h_i picks element i.
    auto points = [&](FinitePoset const& x) {
      std::vector<MonotoneMap> out;
      for_each_monotone_table(point, x, [&](Table const& t) {
        out.emplace_back(point, x, t);
        return true;
      });
      return out;
    };
    auto const hom_r = points(r.carrier());
    auto const hom_a = points(a);
    auto position    = [&](MonotoneMap const& h) {
      for (std::size_t i = 0; i < hom_a.size(); ++i) {
        if (hom_a[i] == h) {
          return i;
        }
      }
      throw std::logic_error("point missing from hom(1, A)");
    };

    Relation rel(hom_a.size());
    for (auto const& h : hom_r) {
      auto const i = position(compose(r.r0(), h));
      auto const j = position(compose(r.r1(), h));
      if (rel.test(i, j)) {
        return Check::fail("pair is not jointly injective on points",
                           {"(" + a.label(i) + "," + a.label(j) + ")"});
      }
      rel.set(i, j);
    }
    std::size_t const n = hom_a.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel.test(i, i)) {
        return Check::fail("not reflexive on points", {a.label(i)});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rel.test(i, j) && !rel.test(j, i)) {
          return Check::fail("not symmetric on points", {a.label(i), a.label(j)});
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n && rel.test(i, j); ++k) {
          if (rel.test(j, k) && !rel.test(i, k)) {
            return Check::fail("not transitive on points", {a.label(i), a.label(j), a.label(k)});
          }
        }
      }
    }
    return Check::pass();
  }

  PosetPullback pullback_set(MonotoneMap const& f, MonotoneMap const& e) {
    require_set_map(f);
    require_set_map(e);
    return pullback(f, e);
  }

  Check surjection_stability(MonotoneMap const& f, MonotoneMap const& e) {
    if (!is_surjective(e)) {
      return Check::pass();
    }
    auto const pb = pullback_set(f, e);
    std::vector<bool> hit(f.dom().size(), false);
    for (std::size_t p = 0; p < pb.object.size(); ++p) {
      hit[pb.to_b(p)] = true;
    }
    for (std::size_t b = 0; b < hit.size(); ++b) {
      if (!hit[b]) {
        return Check::fail("pullback leg misses an element", {f.dom().label(b)});
      }
    }
    return Check::pass();
  }

  Check kernel_coequalizer_recovers(MonotoneMap const& f) {
    require_set_map(f);
    if (!is_surjective(f)) {
      throw PreconditionError("map is not surjective");
    }
    auto const kp   = kernel_pair_set(f);
    auto const coeq = coequalizer_set(kp.r0(), kp.r1());
    if (count_factorizations(coeq.projection, f) != 1) {
      return Check::fail("f does not factor uniquely through the coequalizer");
    }
    auto const m = factor_through(coeq.projection, f);
    if (!m || !is_isomorphism(*m)) {
      return Check::fail("comparison from the coequalizer is not a bijection");
    }
    return Check::pass();
  }

  std::vector<Partition> set_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> rgs(n, 0);
    auto emit = [&] {
      Partition blocks;
      for (std::size_t i = 0; i < n; ++i) {
        if (rgs[i] == blocks.size()) {
          blocks.emplace_back();
        }
        blocks[rgs[i]].push_back(i);
      }
      out.push_back(std::move(blocks));
    };
    // rgs[i] <= 1 + max(rgs[0..i-1]); rgs[0] = 0.
    auto rec = [&](auto const& self, std::size_t i, std::size_t max_so_far) -> void {
      if (i == n) {
        emit();
        return;
      }
      for (std::size_t v = 0; v <= max_so_far + 1; ++v) {
        rgs[i] = v;
        self(self, i + 1, std::max(max_so_far, v));
      }
    };
    if (n == 0) {
      emit();
    } else {
      rec(rec, 1, 0);
    }
    return out;
  }

  Relation equivalence_of(std::size_t n, Partition const& blocks) {
    Relation r(n);
    for (auto const& b : blocks) {
      for (auto x : b) {
        for (auto y : b) {
          r.set(x, y);
        }
      }
    }
    return r;
  }

}  // namespace ordalg
