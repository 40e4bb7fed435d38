#include "ordalg/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ordalg {

  ////////////////////////////////////////////////////////////////////////
  // Signature and tuple helpers
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<Operation> operations) : ops_(std::move(operations)) {
    std::unordered_set<std::string> seen;
    for (auto const& op : ops_) {
      if (op.name.empty()) {
        throw InputError("operation with an empty name");
      }
      if (!seen.insert(op.name).second) {
        throw InputError("duplicate operation name \"" + op.name + "\"");
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t k = 0; k < ops_.size(); ++k) {
      if (ops_[k].name == name) {
        return k;
      }
    }
    return std::nullopt;
  }

  bool Signature::has_constants() const noexcept {
    return std::any_of(ops_.begin(), ops_.end(), [](auto const& op) { return op.arity == 0; });
  }

  std::size_t Signature::max_arity() const noexcept {
    std::size_t m = 0;
    for (auto const& op : ops_) {
      m = std::max(m, op.arity);
    }
    return m;
  }

  std::size_t int_power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      r *= base;
    }
    return r;
  }

  std::size_t encode_tuple(std::span<std::size_t const> args, std::size_t base) {
    std::size_t code = 0;
    for (auto a : args) {
      code = code * base + a;
    }
    return code;
  }

  std::vector<std::size_t> decode_tuple(std::size_t code, std::size_t arity, std::size_t base) {
    std::vector<std::size_t> out(arity);
    for (std::size_t i = arity; i-- > 0;) {
      out[i] = code % base;
      code /= base;
    }
    return out;
  }

  namespace {
    bool tuple_le(FinitePoset const& p, std::vector<std::size_t> const& a,
                  std::vector<std::size_t> const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!p.le(a[i], b[i])) {
          return false;
        }
      }
      return true;
    }

    std::string tuple_string(FinitePoset const& p, std::vector<std::size_t> const& t) {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + p.label(t[i]);
      }
      return s + ")";
    }

    // Fast check: one coordinate raised at a time suffices by transitivity.
    bool table_monotone(FinitePoset const& p, std::size_t arity, OperationTable const& t) {
      std::size_t const n = p.size();
      std::size_t const N = t.size();
      for (std::size_t code = 0; code < N; ++code) {
        auto args = decode_tuple(code, arity, n);
        for (std::size_t i = 0; i < arity; ++i) {
          auto const saved = args[i];
          for (std::size_t v = 0; v < n; ++v) {
            if (v == saved || !p.le(saved, v)) {
              continue;
            }
            args[i] = v;
            if (!p.le(t[code], t[encode_tuple(args, n)])) {
              return false;
            }
          }
          args[i] = saved;
        }
      }
      return true;
    }
  }  // namespace

  Check validate_algebra(Signature const&                   signature,
                         FinitePoset const&                 carrier,
                         std::vector<OperationTable> const& tables) {
    std::size_t const n = carrier.size();
    if (tables.size() != signature.size()) {
      return Check::fail("expected " + std::to_string(signature.size()) + " operation tables, got "
                         + std::to_string(tables.size()));
    }
    if (n == 0 && signature.has_constants()) {
      return Check::fail("a signature with constants needs a nonempty carrier");
    }
    for (std::size_t k = 0; k < signature.size(); ++k) {
      auto const& op = signature[k];
      auto const& t  = tables[k];
      if (t.size() != int_power(n, op.arity)) {
        return Check::fail("table of \"" + op.name + "\" is not total", {op.name});
      }
      for (std::size_t code = 0; code < t.size(); ++code) {
        if (t[code] >= n) {
          return Check::fail("table of \"" + op.name + "\" leaves the carrier",
                             {op.name, tuple_string(carrier, decode_tuple(code, op.arity, n))});
        }
      }
    }
    for (std::size_t k = 0; k < signature.size(); ++k) {
      auto const& op = signature[k];
      auto const& t  = tables[k];
      if (table_monotone(carrier, op.arity, t)) {
        continue;
      }
      for (std::size_t a = 0; a < t.size(); ++a) {
        auto ta = decode_tuple(a, op.arity, n);
        for (std::size_t b = 0; b < t.size(); ++b) {
          auto tb = decode_tuple(b, op.arity, n);
          if (tuple_le(carrier, ta, tb) && !carrier.le(t[a], t[b])) {
            return Check::fail("operation \"" + op.name + "\" is not monotone",
                               {op.name, tuple_string(carrier, ta), tuple_string(carrier, tb)});
          }
        }
      }
    }
    return Check::pass();
  }

  ////////////////////////////////////////////////////////////////////////
  // OrderedAlgebra
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct AlgebraRep {
      Signature                   signature;
      FinitePoset                 carrier;
      std::vector<OperationTable> tables;
    };
  }  // namespace detail

  OrderedAlgebra::OrderedAlgebra() : OrderedAlgebra(FinitePoset()) {}

  OrderedAlgebra::OrderedAlgebra(FinitePoset carrier)
      : rep_(std::make_shared<detail::AlgebraRep const>(
          detail::AlgebraRep{Signature(), std::move(carrier), {}})) {}

  OrderedAlgebra::OrderedAlgebra(Signature                   signature,
                                 FinitePoset                 carrier,
                                 std::vector<OperationTable> tables) {
    if (auto check = validate_algebra(signature, carrier, tables); !check) {
      std::string msg = "invalid algebra: " + check.reason;
      for (auto const& w : check.witness) {
        msg += " " + w;
      }
      throw InputError(msg);
    }
    rep_ = std::make_shared<detail::AlgebraRep const>(
        detail::AlgebraRep{std::move(signature), std::move(carrier), std::move(tables)});
  }

  Signature const& OrderedAlgebra::signature() const noexcept {
    return rep_->signature;
  }

  FinitePoset const& OrderedAlgebra::carrier() const noexcept {
    return rep_->carrier;
  }

  OperationTable const& OrderedAlgebra::table(std::size_t op) const {
    return rep_->tables.at(op);
  }

  std::vector<OperationTable> const& OrderedAlgebra::tables() const noexcept {
    return rep_->tables;
  }

  std::size_t OrderedAlgebra::apply(std::size_t op, std::span<std::size_t const> args) const {
    return rep_->tables[op][encode_tuple(args, size())];
  }

  bool operator==(OrderedAlgebra const& a, OrderedAlgebra const& b) {
    return a.rep_ == b.rep_
           || (a.rep_->signature == b.rep_->signature && a.rep_->carrier == b.rep_->carrier
               && a.rep_->tables == b.rep_->tables);
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // First (operation, argument code) at which the table fails to commute.
    std::optional<std::pair<std::size_t, std::size_t>>
    first_operation_violation(OrderedAlgebra const& dom,
                              OrderedAlgebra const& cod,
                              Table const&          table) {
      std::size_t const        n = dom.size();
      std::vector<std::size_t> image;
      for (std::size_t k = 0; k < dom.signature().size(); ++k) {
        auto const  arity = dom.signature()[k].arity;
        auto const& t     = dom.table(k);
        for (std::size_t code = 0; code < t.size(); ++code) {
          auto args = decode_tuple(code, arity, n);
          image.resize(arity);
          for (std::size_t i = 0; i < arity; ++i) {
            image[i] = table[args[i]];
          }
          if (table[t[code]] != cod.apply(k, image)) {
            return std::pair{k, code};
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  bool preserves_operations(OrderedAlgebra const& dom,
                            OrderedAlgebra const& cod,
                            Table const&          table) {
    return !first_operation_violation(dom, cod, table).has_value();
  }

  Homomorphism::Homomorphism(OrderedAlgebra dom, OrderedAlgebra cod, Table table)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        map_(dom_.carrier(), cod_.carrier(), std::move(table)) {
    if (!(dom_.signature() == cod_.signature())) {
      throw InputError("homomorphism between algebras of different signatures");
    }
    if (auto v = first_operation_violation(dom_, cod_, map_.table())) {
      auto const& op = dom_.signature()[v->first];
      throw InputError("map does not preserve operation \"" + op.name + "\" at "
                       + tuple_string(dom_.carrier(), decode_tuple(v->second, op.arity, dom_.size())));
    }
  }

  Homomorphism Homomorphism::identity(OrderedAlgebra const& a) {
    return Homomorphism(a, a, MonotoneMap::identity(a.carrier()).table());
  }

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    return Homomorphism(f.dom(), g.cod(), compose(g.map(), f.map()).table());
  }

  bool is_surjective(Homomorphism const& h) {
    return is_surjective(h.map());
  }

  bool is_embedding(Homomorphism const& h) {
    return is_embedding(h.map());
  }

  bool is_isomorphism(Homomorphism const& h) {
    return is_isomorphism(h.map());
  }

  void for_each_homomorphism_table(OrderedAlgebra const&                    a,
                                   OrderedAlgebra const&                    b,
                                   std::function<bool(Table const&)> const& visit,
                                   Candidates const&                        candidates) {
    if (!(a.signature() == b.signature())) {
      throw InputError("homomorphisms between algebras of different signatures");
    }
    for_each_monotone_table(
        a.carrier(), b.carrier(),
        [&](Table const& t) {
          if (preserves_operations(a, b, t)) {
            return visit(t);
          }
          return true;
        },
        candidates);
  }

  std::vector<Homomorphism> enumerate_homomorphisms(OrderedAlgebra const& a,
                                                    OrderedAlgebra const& b) {
    std::vector<Homomorphism> out;
    for_each_homomorphism_table(a, b, [&](Table const& t) {
      out.emplace_back(a, b, t);
      return true;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Birkhoff constructions
  ////////////////////////////////////////////////////////////////////////

  ProductAlgebra product_algebra(OrderedAlgebra const& a, OrderedAlgebra const& b) {
    if (!(a.signature() == b.signature())) {
      throw InputError("product of algebras with different signatures");
    }
    auto              pr  = product(a.carrier(), b.carrier());
    auto const&       sig = a.signature();
    std::size_t const n = pr.object.size(), nb = b.size();
    std::vector<OperationTable> tables;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const     arity = sig[k].arity;
      OperationTable t(int_power(n, arity));
      std::vector<std::size_t> left(arity), right(arity);
      for (std::size_t code = 0; code < t.size(); ++code) {
        auto args = decode_tuple(code, arity, n);
        for (std::size_t i = 0; i < arity; ++i) {
          left[i]  = args[i] / nb;
          right[i] = args[i] % nb;
        }
        t[code] = pr.pair_index(a.apply(k, left), b.apply(k, right));
      }
      tables.push_back(std::move(t));
    }
    OrderedAlgebra object(sig, pr.object, std::move(tables));
    return ProductAlgebra{object, Homomorphism(object, a, pr.left.table()),
                          Homomorphism(object, b, pr.right.table())};
  }

  Subalgebra subalgebra(OrderedAlgebra const& a, std::vector<std::size_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::size_t const        n = a.size();
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] >= n) {
        throw InputError("subset element outside the carrier");
      }
      position[subset[i]] = i;
    }
    std::size_t const m   = subset.size();
    auto const&       sig = a.signature();
    std::vector<OperationTable> tables;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const               arity = sig[k].arity;
      OperationTable           t(int_power(m, arity));
      std::vector<std::size_t> args(arity);
      for (std::size_t code = 0; code < t.size(); ++code) {
        auto local = decode_tuple(code, arity, m);
        for (std::size_t i = 0; i < arity; ++i) {
          args[i] = subset[local[i]];
        }
        auto v = a.apply(k, args);
        if (position[v] == n) {
          throw InputError("subset is not closed under \"" + sig[k].name + "\": "
                           + tuple_string(a.carrier(), args) + " -> " + a.carrier().label(v));
        }
        t[code] = position[v];
      }
      tables.push_back(std::move(t));
    }
    std::vector<std::string> labels;
    Relation                 order(m);
    for (std::size_t i = 0; i < m; ++i) {
      labels.push_back(a.carrier().label(subset[i]));
      for (std::size_t j = 0; j < m; ++j) {
        order.set(i, j, a.carrier().le(subset[i], subset[j]));
      }
    }
    OrderedAlgebra object(sig, FinitePoset::from_relation(std::move(labels), std::move(order)),
                          std::move(tables));
    return Subalgebra{object, Homomorphism(object, a, subset)};
  }

  std::vector<std::vector<std::size_t>> closed_subsets(OrderedAlgebra const& a) {
    std::size_t const n = a.size();
    if (n >= 8 * sizeof(std::size_t) - 1) {
      throw ResourceError("too many elements to enumerate subsets");
    }
    std::vector<std::vector<std::size_t>> out;
    auto const&                           sig = a.signature();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      bool closed = true;
      for (std::size_t k = 0; k < sig.size() && closed; ++k) {
        auto const  arity = sig[k].arity;
        auto const& t     = a.table(k);
        for (std::size_t code = 0; code < t.size() && closed; ++code) {
          auto args = decode_tuple(code, arity, n);
          bool in   = std::all_of(args.begin(), args.end(),
                                  [&](std::size_t x) { return (mask >> x) & 1U; });
          if (in && !((mask >> t[code]) & 1U)) {
            closed = false;
          }
        }
      }
      if (closed) {
        std::vector<std::size_t> s;
        for (std::size_t x = 0; x < n; ++x) {
          if ((mask >> x) & 1U) {
            s.push_back(x);
          }
        }
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  AlgebraFactorization image_factorization(Homomorphism const& h) {
    std::vector<std::size_t> image(h.table().begin(), h.table().end());
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto sub = subalgebra(h.cod(), image);
    std::vector<std::size_t> position(h.cod().size(), 0);
    for (std::size_t i = 0; i < image.size(); ++i) {
      position[image[i]] = i;
    }
    Table epi(h.dom().size());
    for (std::size_t x = 0; x < epi.size(); ++x) {
      epi[x] = position[h(x)];
    }
    return AlgebraFactorization{sub.object, Homomorphism(h.dom(), sub.object, std::move(epi)),
                                sub.inclusion};
  }

  ////////////////////////////////////////////////////////////////////////
  // Instance generation
  ////////////////////////////////////////////////////////////////////////

  std::vector<OperationTable> monotone_operations(FinitePoset const& carrier, std::size_t arity) {
    // An n-ary monotone operation is a monotone map carrier^n -> carrier.
    std::size_t const n = carrier.size();
    std::size_t const N = int_power(n, arity);
    Relation          order(N);
    for (std::size_t a = 0; a < N; ++a) {
      auto ta = decode_tuple(a, arity, n);
      for (std::size_t b = 0; b < N; ++b) {
        order.set(a, b, tuple_le(carrier, ta, decode_tuple(b, arity, n)));
      }
    }
    std::vector<OperationTable> out;
    for_each_monotone_table(order, carrier, [&](Table const& t) {
      out.push_back(t);
      return true;
    });
    return out;
  }

  std::vector<OrderedAlgebra> enumerate_algebras(Signature const&   signature,
                                                 FinitePoset const& carrier,
                                                 std::size_t        cap) {
    std::vector<std::vector<OperationTable>> choices;
    std::size_t                              total = 1;
    for (auto const& op : signature.operations()) {
      choices.push_back(monotone_operations(carrier, op.arity));
      total *= choices.back().size();
      if (total > cap) {
        throw ResourceError("algebra enumeration exceeds the cap of " + std::to_string(cap));
      }
    }
    std::vector<OrderedAlgebra> out;
    if (total == 0) {
      return out;
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<OperationTable> tables;
      for (std::size_t k = 0; k < choices.size(); ++k) {
        tables.push_back(choices[k][pick[k]]);
      }
      out.emplace_back(signature, carrier, std::move(tables));
      std::size_t k = choices.size();
      while (k > 0) {
        --k;
        if (++pick[k] < choices[k].size()) {
          break;
        }
        pick[k] = 0;
        if (k == 0) {
          return out;
        }
      }
      if (choices.empty()) {
        return out;
      }
    }
  }

}  // namespace ordalg
