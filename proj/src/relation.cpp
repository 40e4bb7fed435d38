#include "ordalg/relation.hpp"

namespace ordalg {

  RelationPair::RelationPair(MonotoneMap r0, MonotoneMap r1)
      : r0_(std::move(r0)), r1_(std::move(r1)) {
    if (!(r0_.dom() == r1_.dom()) || !(r0_.cod() == r1_.cod())) {
      throw InputError("relation legs are not parallel");
    }
  }

  AlgebraRelationPair::AlgebraRelationPair(Homomorphism r0, Homomorphism r1)
      : r0_(std::move(r0)), r1_(std::move(r1)) {
    if (!(r0_.dom() == r1_.dom()) || !(r0_.cod() == r1_.cod())) {
      throw InputError("relation legs are not parallel");
    }
  }

  namespace {
    std::string pair_label(FinitePoset const& a, std::size_t x, std::size_t y) {
      return "(" + a.label(x) + "," + a.label(y) + ")";
    }

    // Least (z, z') with r0 z <= r0 z', r1 z <= r1 z' and z !<= z'.
    std::optional<std::pair<std::size_t, std::size_t>> order_reflection_failure(
        RelationPair const& p) {
      auto const& r = p.carrier();
      auto const& a = p.target();
      for (std::size_t z = 0; z < r.size(); ++z) {
        for (std::size_t w = 0; w < r.size(); ++w) {
          if (a.le(p.r0()(z), p.r0()(w)) && a.le(p.r1()(z), p.r1()(w)) && !r.le(z, w)) {
            return std::pair{z, w};
          }
        }
      }
      return std::nullopt;
    }

    Relation image_pairs(RelationPair const& p) {
      Relation t(p.target().size());
      for (std::size_t z = 0; z < p.carrier().size(); ++z) {
        t.set(p.r0()(z), p.r1()(z));
      }
      return t;
    }

    void derive(RelationClassification& c) {
      auto first_false = [&](std::initializer_list<std::pair<bool, char const*>> flags)
          -> std::optional<std::string> {
        for (auto const& [flag, name] : flags) {
          if (!flag) {
            return std::string(name);
          }
        }
        return std::nullopt;
      };
      if (auto f = first_false({{c.is_relation, "relation"},
                                {c.is_reflexive, "reflexive"},
                                {c.is_symmetric, "symmetric"},
                                {c.is_transitive, "transitive"}})) {
        c.is_congruence           = false;
        c.witnesses["congruence"] = {*f};
      }
      if (auto f = first_false({{c.is_relation, "relation"},
                                {c.is_order_reflexive, "order_reflexive"},
                                {c.is_transitive, "transitive"}})) {
        c.is_subcongruence           = false;
        c.witnesses["subcongruence"] = {*f};
      }
    }

    // The set-level flags; leaves is_relation untouched.
    void classify_pairs(FinitePoset const& a, Relation const& t, RelationClassification& c) {
      std::size_t const n = a.size();
      if (t.size() != n) {
        throw InputError("relation and carrier sizes differ");
      }
      for (std::size_t x = 0; x < n && c.is_reflexive; ++x) {
        if (!t.test(x, x)) {
          c.is_reflexive           = false;
          c.witnesses["reflexive"] = {a.label(x)};
        }
      }
      for (std::size_t x = 0; x < n && c.is_symmetric; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (t.test(x, y) && !t.test(y, x)) {
            c.is_symmetric           = false;
            c.witnesses["symmetric"] = {a.label(x), a.label(y)};
            break;
          }
        }
      }
      for (std::size_t x = 0; x < n && c.is_transitive; ++x) {
        for (std::size_t y = 0; y < n && c.is_transitive; ++y) {
          if (!t.test(x, y)) {
            continue;
          }
          for (std::size_t z = 0; z < n; ++z) {
            if (t.test(y, z) && !t.test(x, z)) {
              c.is_transitive           = false;
              c.witnesses["transitive"] = {a.label(x), a.label(y), a.label(z)};
              break;
            }
          }
        }
      }
      for (std::size_t x = 0; x < n && c.is_order_reflexive; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (a.le(x, y) && !t.test(x, y)) {
            c.is_order_reflexive           = false;
            c.witnesses["order_reflexive"] = {a.label(x), a.label(y)};
            break;
          }
        }
      }
    }

    // Least operation and tuple of pairs of T whose componentwise image
    // leaves T.
    std::optional<std::vector<std::string>> closure_failure(OrderedAlgebra const& a,
                                                            Relation const&       t) {
      auto const        pairs = t.pairs();
      std::size_t const m     = pairs.size();
      auto const&       sig   = a.signature();
      for (std::size_t k = 0; k < sig.size(); ++k) {
        auto const               arity = sig[k].arity;
        std::size_t const        count = int_power(m, arity);
        std::vector<std::size_t> left(arity), right(arity);
        for (std::size_t code = 0; code < count; ++code) {
          auto pick = decode_tuple(code, arity, m);
          for (std::size_t i = 0; i < arity; ++i) {
            left[i]  = pairs[pick[i]].first;
            right[i] = pairs[pick[i]].second;
          }
          if (!t.test(a.apply(k, left), a.apply(k, right))) {
            std::vector<std::string> w{sig[k].name};
            for (auto i : pick) {
              w.push_back(pair_label(a.carrier(), pairs[i].first, pairs[i].second));
            }
            return w;
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  Tabulation tabulate(RelationPair const& p) {
    if (auto f = order_reflection_failure(p)) {
      throw PreconditionError("legs are not jointly order-reflecting at ("
                              + p.carrier().label(f->first) + ", "
                              + p.carrier().label(f->second) + ")");
    }
    return Tabulation{p.target(), image_pairs(p)};
  }

  Tabulation tabulate(AlgebraRelationPair const& p) {
    return tabulate(p.underlying());
  }

  RelationPair relation_from_pairs(FinitePoset const& a, Relation const& pairs) {
    if (pairs.size() != a.size()) {
      throw InputError("relation and carrier sizes differ");
    }
    auto const               list = pairs.pairs();
    std::size_t const        m    = list.size();
    std::vector<std::string> labels;
    Relation                 order(m);
    Table                    left(m), right(m);
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(pair_label(a, list[i].first, list[i].second));
      left[i]  = list[i].first;
      right[i] = list[i].second;
      for (std::size_t j = 0; j < m; ++j) {
        order.set(i, j, a.le(list[i].first, list[j].first) && a.le(list[i].second, list[j].second));
      }
    }
    auto carrier = FinitePoset::from_relation(std::move(labels), std::move(order));
    return RelationPair(MonotoneMap(carrier, a, std::move(left)),
                        MonotoneMap(carrier, a, std::move(right)));
  }

  AlgebraRelationPair relation_from_pairs(OrderedAlgebra const& a, Relation const& pairs) {
    if (pairs.size() != a.size()) {
      throw InputError("relation and carrier sizes differ");
    }
    if (auto w = closure_failure(a, pairs)) {
      std::string msg = "relation is not closed under \"" + w->front() + "\" at";
      for (std::size_t i = 1; i < w->size(); ++i) {
        msg += " " + (*w)[i];
      }
      throw InputError(msg);
    }
    auto const        list = pairs.pairs();
    std::size_t const m    = list.size();
    std::vector<std::size_t> index_of(a.size() * a.size(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      index_of[list[i].first * a.size() + list[i].second] = i;
    }
    auto const& sig = a.signature();
    std::vector<OperationTable> tables;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const               arity = sig[k].arity;
      OperationTable           t(int_power(m, arity));
      std::vector<std::size_t> left(arity), right(arity);
      for (std::size_t code = 0; code < t.size(); ++code) {
        auto pick = decode_tuple(code, arity, m);
        for (std::size_t i = 0; i < arity; ++i) {
          left[i]  = list[pick[i]].first;
          right[i] = list[pick[i]].second;
        }
        t[code] = index_of[a.apply(k, left) * a.size() + a.apply(k, right)];
      }
      tables.push_back(std::move(t));
    }
    auto           poset = relation_from_pairs(a.carrier(), pairs);
    OrderedAlgebra carrier(sig, poset.carrier(), std::move(tables));
    return AlgebraRelationPair(Homomorphism(carrier, a, poset.r0().table()),
                               Homomorphism(carrier, a, poset.r1().table()));
  }

  RelationClassification classify(FinitePoset const& a, Relation const& pairs) {
    RelationClassification c;
    classify_pairs(a, pairs, c);
    derive(c);
    return c;
  }

  RelationClassification classify(OrderedAlgebra const& a, Relation const& pairs) {
    RelationClassification c;
    if (pairs.size() != a.size()) {
      throw InputError("relation and carrier sizes differ");
    }
    if (auto w = closure_failure(a, pairs)) {
      c.is_relation           = false;
      c.witnesses["relation"] = std::move(*w);
    }
    classify_pairs(a.carrier(), pairs, c);
    derive(c);
    return c;
  }

  RelationClassification classify(RelationPair const& p) {
    RelationClassification c;
    if (auto f = order_reflection_failure(p)) {
      c.is_relation           = false;
      c.witnesses["relation"] = {p.carrier().label(f->first), p.carrier().label(f->second)};
    }
    classify_pairs(p.target(), image_pairs(p), c);
    derive(c);
    return c;
  }

  RelationClassification classify(AlgebraRelationPair const& p) {
    // The image of a homomorphism into A x A is operation-closed, so only
    // joint order-reflection can fail here.
    return classify(p.underlying());
  }

}  // namespace ordalg
