#include "ordalg/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ordalg {

  namespace {
    std::vector<std::string> index_labels(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

    // Reflexive relations on n points, one per off-diagonal bitmask, that are
    // transitive (and antisymmetric if requested).
    template <typename Visit>
    void for_each_order_relation(std::size_t n, bool antisymmetric, Visit&& visit) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            slots.emplace_back(i, j);
          }
        }
      }
      std::uint64_t const total = std::uint64_t{1} << slots.size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        Relation r = Relation::identity(n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
          if ((mask >> s) & 1U) {
            r.set(slots[s].first, slots[s].second);
          }
        }
        if (r.is_transitive() && (!antisymmetric || r.is_antisymmetric())) {
          visit(std::move(r));
        }
      }
    }
  }  // namespace

  std::vector<FinitePoset> posets_of_size(std::size_t n) {
    std::vector<FinitePoset> out;
    for_each_order_relation(n, true, [&](Relation r) {
      out.push_back(FinitePoset::from_relation(index_labels(n), std::move(r)));
    });
    return out;
  }

  std::vector<FinitePoset> all_posets(std::size_t max_size) {
    std::vector<FinitePoset> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
      auto part = posets_of_size(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  std::vector<FinitePreorder> preorders_of_size(std::size_t n) {
    std::vector<FinitePreorder> out;
    for_each_order_relation(n, false, [&](Relation r) {
      out.push_back(FinitePreorder::from_relation(index_labels(n), std::move(r)));
    });
    return out;
  }

  std::vector<FinitePreorder> all_preorders(std::size_t max_size) {
    std::vector<FinitePreorder> out;
    for (std::size_t n = 0; n <= max_size; ++n) {
      auto part = preorders_of_size(n);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  FinitePreorder random_preorder(std::size_t n, Rng& rng) {
    double const p = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
    std::bernoulli_distribution coin(p);
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && coin(rng)) {
          r.set(i, j);
        }
      }
    }
    r.close_reflexive_transitive();
    return FinitePreorder::from_relation(index_labels(n), std::move(r));
  }

  FinitePoset random_poset(std::size_t n, Rng& rng) {
    double const p = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
    std::bernoulli_distribution coin(p);
    std::vector<std::size_t>    perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng)) {
          r.set(perm[i], perm[j]);
        }
      }
    }
    return FinitePoset::from_relation(index_labels(n), std::move(r));
  }

  MonotoneMap random_monotone_map(FinitePoset const& dom, FinitePoset const& cod, Rng& rng) {
    std::vector<Table> tables;
    for_each_monotone_table(dom, cod, [&](Table const& t) {
      tables.push_back(t);
      return true;
    });
    if (tables.empty()) {
      throw PreconditionError("no monotone map into an empty codomain");
    }
    std::uniform_int_distribution<std::size_t> pick(0, tables.size() - 1);
    return MonotoneMap(dom, cod, tables[pick(rng)]);
  }

  AlgebraSampler::AlgebraSampler(Signature signature, std::vector<FinitePoset> carriers)
      : signature_(std::move(signature)), carriers_(std::move(carriers)) {
    if (carriers_.empty()) {
      throw InputError("algebra sampler needs at least one carrier");
    }
  }

  std::vector<OperationTable> const& AlgebraSampler::operations(std::size_t carrier,
                                                                std::size_t arity) {
    auto key = std::make_pair(carrier, arity);
    auto it  = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, monotone_operations(carriers_[carrier], arity)).first;
    }
    return it->second;
  }

  OrderedAlgebra AlgebraSampler::draw(Rng& rng) {
    for (;;) {
      std::uniform_int_distribution<std::size_t> pick_carrier(0, carriers_.size() - 1);
      auto const                                  c = pick_carrier(rng);
      std::vector<OperationTable>                 tables;
      bool                                        ok = true;
      for (std::size_t k = 0; k < signature_.size() && ok; ++k) {
        auto const& ops = operations(c, signature_[k].arity);
        if (ops.empty()) {
          ok = false;  // constants on the empty carrier
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
        tables.push_back(ops[pick(rng)]);
      }
      if (ok) {
        return OrderedAlgebra(signature_, carriers_[c], std::move(tables));
      }
    }
  }

  std::vector<OrderedAlgebra> AlgebraSampler::draw(std::size_t count, Rng& rng) {
    std::vector<OrderedAlgebra> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(draw(rng));
    }
    return out;
  }

  Signature unary_binary_signature() {
    return Signature({{"u", 1}, {"m", 2}});
  }

  Signature binary_signature() {
    return Signature({{"m", 2}});
  }

  std::vector<OrderedAlgebra> all_binary_algebras(std::size_t max_size) {
    std::vector<OrderedAlgebra> out;
    auto const                  sig = binary_signature();
    for (auto const& p : all_posets(max_size)) {
      for (auto& t : monotone_operations(p, 2)) {
        out.emplace_back(sig, p, std::vector<OperationTable>{std::move(t)});
      }
    }
    return out;
  }

  std::vector<std::size_t> canonical_code(OrderedAlgebra const& a) {
    auto const               n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best;
    std::vector<std::size_t> inv(n);
    std::vector<std::size_t> args;
    do {
      for (std::size_t i = 0; i < n; ++i) {
        inv[perm[i]] = i;
      }
      std::vector<std::size_t> code{n};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          code.push_back(a.carrier().le(inv[i], inv[j]) ? 1 : 0);
        }
      }
      for (std::size_t k = 0; k < a.signature().size(); ++k) {
        auto const arity = a.signature()[k].arity;
        for (std::size_t c = 0; c < int_power(n, arity); ++c) {
          args = decode_tuple(c, arity, n);
          for (auto& x : args) {
            x = inv[x];
          }
          code.push_back(perm[a.apply(k, args)]);
        }
      }
      if (best.empty() || code < best) {
        best = std::move(code);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  std::vector<OrderedAlgebra> isomorphism_class_representatives(std::vector<OrderedAlgebra> const& family) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<OrderedAlgebra>        out;
    for (auto const& a : family) {
      if (seen.insert(canonical_code(a)).second) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace ordalg
