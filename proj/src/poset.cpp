#include "ordalg/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "union_find.hpp"

namespace ordalg {

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.set(i, i);
    }
    return r;
  }

  Relation Relation::full(std::size_t n) {
    Relation r(n);
    std::fill(r.bits_.begin(), r.bits_.end(), 1);
    return r;
  }

  void Relation::close_reflexive_transitive() {
    for (std::size_t i = 0; i < n_; ++i) {
      set(i, i);
    }
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (!test(i, k)) {
          continue;
        }
        for (std::size_t j = 0; j < n_; ++j) {
          if (test(k, j)) {
            set(i, j);
          }
        }
      }
    }
  }

  std::size_t Relation::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }

  bool Relation::is_reflexive() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!test(i, i)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_transitive() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!test(i, j)) {
          continue;
        }
        for (std::size_t k = 0; k < n_; ++k) {
          if (test(j, k) && !test(i, k)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool Relation::is_antisymmetric() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (test(i, j) && test(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::contains(Relation const& other) const noexcept {
    if (other.n_ != n_) {
      return false;
    }
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if (other.bits_[k] != 0 && bits_[k] == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (test(i, j)) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Carriers
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    struct OrderedCarrier {
      std::vector<std::string>                     labels;
      std::unordered_map<std::string, std::size_t> index;
      Relation                                     order;
      bool                                         discrete = true;
    };

    namespace {
      std::shared_ptr<OrderedCarrier const> make_carrier(std::vector<std::string> labels,
                                                         Relation                 order) {
        if (order.size() != labels.size()) {
          throw InputError("order relation size does not match the number of elements");
        }
        auto rep    = std::make_shared<OrderedCarrier>();
        rep->labels = std::move(labels);
        for (std::size_t i = 0; i < rep->labels.size(); ++i) {
          if (!rep->index.emplace(rep->labels[i], i).second) {
            throw InputError("duplicate element label \"" + rep->labels[i] + "\"");
          }
        }
        order.close_reflexive_transitive();
        rep->discrete = order.count() == rep->labels.size();
        rep->order    = std::move(order);
        return rep;
      }

      std::shared_ptr<OrderedCarrier const> const& empty_carrier() {
        static auto const rep = make_carrier({}, Relation(0));
        return rep;
      }

      std::vector<std::string> numeric_labels(std::size_t n) {
        std::vector<std::string> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          out.push_back(std::to_string(i));
        }
        return out;
      }
    }  // namespace
  }    // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // FinitePoset
  ////////////////////////////////////////////////////////////////////////

  FinitePoset::FinitePoset() : rep_(detail::empty_carrier()) {}

  FinitePoset::FinitePoset(std::shared_ptr<detail::OrderedCarrier const> rep)
      : rep_(std::move(rep)) {}

  FinitePoset FinitePoset::from_relation(std::vector<std::string> labels, Relation le) {
    auto rep = detail::make_carrier(std::move(labels), std::move(le));
    for (std::size_t i = 0; i < rep->labels.size(); ++i) {
      for (std::size_t j = i + 1; j < rep->labels.size(); ++j) {
        if (rep->order.test(i, j) && rep->order.test(j, i)) {
          throw InputError("order is not antisymmetric: \"" + rep->labels[i] + "\" and \""
                           + rep->labels[j] + "\" are mutually related");
        }
      }
    }
    return FinitePoset(std::move(rep));
  }

  namespace {
    Relation relation_from_label_pairs(std::vector<std::string> const& labels,
                                       std::vector<LabelPair> const&   pairs) {
      std::unordered_map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        index.emplace(labels[i], i);
      }
      auto lookup = [&](std::string const& l) {
        auto it = index.find(l);
        if (it == index.end()) {
          throw InputError("unknown element label \"" + l + "\"");
        }
        return it->second;
      };
      Relation r(labels.size());
      for (auto const& [a, b] : pairs) {
        r.set(lookup(a), lookup(b));
      }
      return r;
    }
  }  // namespace

  FinitePoset FinitePoset::from_pairs(std::vector<std::string>      labels,
                                      std::vector<LabelPair> const& le) {
    Relation r = relation_from_label_pairs(labels, le);
    return from_relation(std::move(labels), std::move(r));
  }

  FinitePoset FinitePoset::chain(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        r.set(i, j);
      }
    }
    return from_relation(detail::numeric_labels(n), std::move(r));
  }

  FinitePoset FinitePoset::antichain(std::size_t n) {
    return from_relation(detail::numeric_labels(n), Relation(n));
  }

  FinitePoset FinitePoset::discrete(std::vector<std::string> labels) {
    auto n = labels.size();
    return from_relation(std::move(labels), Relation(n));
  }

  std::size_t FinitePoset::size() const noexcept {
    return rep_->labels.size();
  }

  std::string const& FinitePoset::label(std::size_t i) const {
    return rep_->labels.at(i);
  }

  std::vector<std::string> const& FinitePoset::labels() const noexcept {
    return rep_->labels;
  }

  std::optional<std::size_t> FinitePoset::find(std::string_view label) const {
    auto it = rep_->index.find(std::string(label));
    if (it == rep_->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t FinitePoset::index_of(std::string_view label) const {
    if (auto i = find(label)) {
      return *i;
    }
    throw InputError("unknown element label \"" + std::string(label) + "\"");
  }

  bool FinitePoset::le(std::size_t i, std::size_t j) const noexcept {
    return rep_->order.test(i, j);
  }

  Relation const& FinitePoset::order() const noexcept {
    return rep_->order;
  }

  bool FinitePoset::is_discrete() const noexcept {
    return rep_->discrete;
  }

  FinitePreorder FinitePoset::as_preorder() const {
    return FinitePreorder(rep_);
  }

  bool operator==(FinitePoset const& a, FinitePoset const& b) {
    return a.rep_ == b.rep_
           || (a.rep_->labels == b.rep_->labels && a.rep_->order == b.rep_->order);
  }

  ////////////////////////////////////////////////////////////////////////
  // FinitePreorder
  ////////////////////////////////////////////////////////////////////////

  FinitePreorder::FinitePreorder() : rep_(detail::empty_carrier()) {}

  FinitePreorder::FinitePreorder(std::shared_ptr<detail::OrderedCarrier const> rep)
      : rep_(std::move(rep)) {}

  FinitePreorder FinitePreorder::from_relation(std::vector<std::string> labels, Relation leq) {
    return FinitePreorder(detail::make_carrier(std::move(labels), std::move(leq)));
  }

  std::size_t FinitePreorder::size() const noexcept {
    return rep_->labels.size();
  }

  std::string const& FinitePreorder::label(std::size_t i) const {
    return rep_->labels.at(i);
  }

  std::vector<std::string> const& FinitePreorder::labels() const noexcept {
    return rep_->labels;
  }

  std::size_t FinitePreorder::index_of(std::string_view label) const {
    auto it = rep_->index.find(std::string(label));
    if (it == rep_->index.end()) {
      throw InputError("unknown element label \"" + std::string(label) + "\"");
    }
    return it->second;
  }

  bool FinitePreorder::leq(std::size_t i, std::size_t j) const noexcept {
    return rep_->order.test(i, j);
  }

  Relation const& FinitePreorder::order() const noexcept {
    return rep_->order;
  }

  bool operator==(FinitePreorder const& a, FinitePreorder const& b) {
    return a.rep_ == b.rep_
           || (a.rep_->labels == b.rep_->labels && a.rep_->order == b.rep_->order);
  }

  ////////////////////////////////////////////////////////////////////////
  // MonotoneMap
  ////////////////////////////////////////////////////////////////////////

  bool is_monotone(FinitePoset const& dom, FinitePoset const& cod, Table const& table) {
    for (std::size_t x = 0; x < dom.size(); ++x) {
      for (std::size_t y = 0; y < dom.size(); ++y) {
        if (dom.le(x, y) && !cod.le(table[x], table[y])) {
          return false;
        }
      }
    }
    return true;
  }

  MonotoneMap::MonotoneMap(FinitePoset dom, FinitePoset cod, Table table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size()) {
      throw InputError("map table is not total: " + std::to_string(table_.size())
                       + " entries for " + std::to_string(dom_.size()) + " elements");
    }
    for (std::size_t x = 0; x < table_.size(); ++x) {
      if (table_[x] >= cod_.size()) {
        throw InputError("map sends \"" + dom_.label(x) + "\" outside the codomain");
      }
    }
    for (std::size_t x = 0; x < dom_.size(); ++x) {
      for (std::size_t y = 0; y < dom_.size(); ++y) {
        if (dom_.le(x, y) && !cod_.le(table_[x], table_[y])) {
          throw InputError("map is not monotone: " + dom_.label(x) + " <= " + dom_.label(y)
                           + " but " + cod_.label(table_[x]) + " !<= " + cod_.label(table_[y]));
        }
      }
    }
  }

  MonotoneMap::MonotoneMap(Unchecked, FinitePoset dom, FinitePoset cod, Table table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}

  MonotoneMap MonotoneMap::identity(FinitePoset const& p) {
    Table t(p.size());
    std::iota(t.begin(), t.end(), 0);
    return MonotoneMap(Unchecked{}, p, p, std::move(t));
  }

  MonotoneMap MonotoneMap::constant(FinitePoset const& dom,
                                    FinitePoset const& cod,
                                    std::size_t        value) {
    if (value >= cod.size()) {
      throw InputError("constant value outside the codomain");
    }
    return MonotoneMap(Unchecked{}, dom, cod, Table(dom.size(), value));
  }

  bool operator==(MonotoneMap const& a, MonotoneMap const& b) {
    return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

  MonotoneMap compose(MonotoneMap const& g, MonotoneMap const& f) {
    if (!(f.cod() == g.dom())) {
      throw InputError("cannot compose: codomain and domain differ");
    }
    Table t(f.dom().size());
    for (std::size_t x = 0; x < t.size(); ++x) {
      t[x] = g(f(x));
    }
    return MonotoneMap(MonotoneMap::Unchecked{}, f.dom(), g.cod(), std::move(t));
  }

  bool pointwise_le(MonotoneMap const& f, MonotoneMap const& g) {
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
      throw InputError("pointwise comparison of non-parallel maps");
    }
    for (std::size_t x = 0; x < f.dom().size(); ++x) {
      if (!f.cod().le(f(x), g(x))) {
        return false;
      }
    }
    return true;
  }

  bool is_embedding(MonotoneMap const& f) {
    auto const& d = f.dom();
    for (std::size_t x = 0; x < d.size(); ++x) {
      for (std::size_t y = 0; y < d.size(); ++y) {
        if (f.cod().le(f(x), f(y)) && !d.le(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_surjective(MonotoneMap const& f) {
    std::vector<bool> hit(f.cod().size(), false);
    for (auto y : f.table()) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool is_injective(MonotoneMap const& f) {
    std::vector<bool> hit(f.cod().size(), false);
    for (auto y : f.table()) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool is_isomorphism(MonotoneMap const& f) {
    return f.dom().size() == f.cod().size() && is_injective(f) && is_embedding(f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Preorders
  ////////////////////////////////////////////////////////////////////////

  FinitePreorder preorder_closure(std::vector<std::string>      elements,
                                  std::vector<LabelPair> const& base,
                                  std::vector<LabelPair> const& generators) {
    std::vector<LabelPair> all(base);
    all.insert(all.end(), generators.begin(), generators.end());
    Relation r = relation_from_label_pairs(elements, all);
    return FinitePreorder::from_relation(std::move(elements), std::move(r));
  }

  PosetalReflection posetal_reflection(FinitePreorder const& p) {
    std::size_t const        n = p.size();
    std::vector<std::size_t> class_of(n, n);
    Partition                classes;
    for (std::size_t x = 0; x < n; ++x) {
      if (class_of[x] != n) {
        continue;
      }
      std::size_t const c = classes.size();
      classes.emplace_back();
      for (std::size_t y = x; y < n; ++y) {
        if (p.leq(x, y) && p.leq(y, x)) {
          class_of[y] = c;
          classes.back().push_back(y);
        }
      }
    }
    std::size_t const        k = classes.size();
    std::vector<std::string> labels;
    labels.reserve(k);
    Relation order(k);
    for (std::size_t i = 0; i < k; ++i) {
      labels.push_back("[" + p.label(classes[i].front()) + "]");
      for (std::size_t j = 0; j < k; ++j) {
        order.set(i, j, p.leq(classes[i].front(), classes[j].front()));
      }
    }
    auto quotient = FinitePoset::from_relation(std::move(labels), std::move(order));
    auto carrier  = FinitePoset::discrete(p.labels());
    return PosetalReflection{
        quotient, MonotoneMap(std::move(carrier), quotient, std::move(class_of)), std::move(classes)};
  }

  bool respects(FinitePreorder const& p, FinitePoset const& cod, Table const& table) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.leq(x, y) && !cod.le(table[x], table[y])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and coproducts
  ////////////////////////////////////////////////////////////////////////

  ProductResult product(FinitePoset const& p, FinitePoset const& q) {
    std::size_t const        m = p.size(), n = q.size();
    std::vector<std::string> labels;
    labels.reserve(m * n);
    Relation order(m * n);
    Table    left(m * n), right(m * n);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
        left[a * n + b]  = a;
        right[a * n + b] = b;
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            order.set(a * n + b, c * n + d, p.le(a, c) && q.le(b, d));
          }
        }
      }
    }
    auto object = FinitePoset::from_relation(std::move(labels), std::move(order));
    return ProductResult{object, MonotoneMap(object, p, std::move(left)),
                         MonotoneMap(object, q, std::move(right))};
  }

  CoproductResult coproduct(std::vector<FinitePoset> const& summands) {
    std::size_t total = 0;
    for (auto const& s : summands) {
      total += s.size();
    }
    std::vector<std::string> labels;
    labels.reserve(total);
    Relation                 order(total);
    std::vector<std::size_t> summand_of, offset;
    std::size_t              base = 0;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      auto const& s = summands[i];
      offset.push_back(base);
      for (std::size_t x = 0; x < s.size(); ++x) {
        labels.push_back(std::to_string(i) + ":" + s.label(x));
        summand_of.push_back(i);
        for (std::size_t y = 0; y < s.size(); ++y) {
          order.set(base + x, base + y, s.le(x, y));
        }
      }
      base += s.size();
    }
    CoproductResult result{FinitePoset::from_relation(std::move(labels), std::move(order)),
                           {},
                           std::move(summand_of),
                           std::move(offset)};
    for (std::size_t i = 0; i < summands.size(); ++i) {
      Table t(summands[i].size());
      std::iota(t.begin(), t.end(), result.offset[i]);
      result.injections.emplace_back(summands[i], result.object, std::move(t));
    }
    return result;
  }

  CoproductResult copower(FinitePoset const& g, std::size_t copies) {
    return coproduct(std::vector<FinitePoset>(copies, g));
  }

  Partition connected_components(FinitePoset const& p) {
    detail::UnionFind uf(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = x + 1; y < p.size(); ++y) {
        if (p.comparable(x, y)) {
          uf.unite(x, y);
        }
      }
    }
    return uf.blocks();
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class MonotoneSearch {
     public:
      MonotoneSearch(Relation const&                          dom,
                     FinitePoset const&                       cod,
                     std::function<bool(Table const&)> const& visit,
                     Candidates const&                        candidates)
          : dom_(dom), cod_(cod), visit_(visit), candidates_(candidates), table_(dom.size()) {}

      void run() {
        extend(0);
      }

     private:
      bool admissible(std::size_t x, std::size_t y) const {
        for (std::size_t z = 0; z < x; ++z) {
          if (dom_.test(z, x) && !cod_.le(table_[z], y)) {
            return false;
          }
          if (dom_.test(x, z) && !cod_.le(y, table_[z])) {
            return false;
          }
        }
        return true;
      }

      // Returns false once the visitor asks to stop.
      bool extend(std::size_t x) {
        if (x == table_.size()) {
          return visit_(table_);
        }
        auto try_value = [&](std::size_t y) {
          if (!admissible(x, y)) {
            return true;
          }
          table_[x] = y;
          return extend(x + 1);
        };
        if (candidates_.empty()) {
          for (std::size_t y = 0; y < cod_.size(); ++y) {
            if (!try_value(y)) {
              return false;
            }
          }
        } else {
          for (auto y : candidates_[x]) {
            if (!try_value(y)) {
              return false;
            }
          }
        }
        return true;
      }

      Relation const&                          dom_;
      FinitePoset const&                       cod_;
      std::function<bool(Table const&)> const& visit_;
      Candidates const&                        candidates_;
      Table                                    table_;
    };
  }  // namespace

  void for_each_monotone_table(Relation const&                          dom_order,
                               FinitePoset const&                       cod,
                               std::function<bool(Table const&)> const& visit,
                               Candidates const&                        candidates) {
    if (!candidates.empty() && candidates.size() != dom_order.size()) {
      throw InputError("candidate list does not match the domain size");
    }
    MonotoneSearch(dom_order, cod, visit, candidates).run();
  }

  void for_each_monotone_table(FinitePoset const&                       dom,
                               FinitePoset const&                       cod,
                               std::function<bool(Table const&)> const& visit,
                               Candidates const&                        candidates) {
    for_each_monotone_table(dom.order(), cod, visit, candidates);
  }

  std::vector<MonotoneMap> enumerate_monotone_maps(FinitePoset const& p, FinitePoset const& q) {
    std::vector<MonotoneMap> out;
    for_each_monotone_table(p, q, [&](Table const& t) {
      out.emplace_back(p, q, t);
      return true;
    });
    return out;
  }

  std::size_t count_monotone_maps(FinitePoset const& p, FinitePoset const& q) {
    std::size_t n = 0;
    for_each_monotone_table(p, q, [&](Table const&) {
      ++n;
      return true;
    });
    return n;
  }

  std::optional<Candidates> factorization_candidates(Table const& c,
                                                     std::size_t  mid_size,
                                                     std::size_t  target_size,
                                                     Table const& g) {
    std::vector<std::optional<std::size_t>> forced(mid_size);
    for (std::size_t a = 0; a < c.size(); ++a) {
      auto& f = forced[c[a]];
      if (f && *f != g[a]) {
        return std::nullopt;
      }
      f = g[a];
    }
    Candidates out(mid_size);
    for (std::size_t m = 0; m < mid_size; ++m) {
      if (forced[m]) {
        out[m] = {*forced[m]};
      } else {
        out[m].resize(target_size);
        std::iota(out[m].begin(), out[m].end(), 0);
      }
    }
    return out;
  }

  std::size_t count_factorizations(MonotoneMap const& c,
                                   FinitePoset const& target,
                                   Table const&       g) {
    auto const& mid  = c.cod();
    auto        cand = factorization_candidates(c.table(), mid.size(), target.size(), g);
    if (!cand) {
      return 0;
    }
    if (mid.size() == 0) {
      return 1;
    }
    std::size_t n = 0;
    for_each_monotone_table(
        mid, target,
        [&](Table const&) {
          ++n;
          return true;
        },
        *cand);
    return n;
  }

  std::size_t count_factorizations(MonotoneMap const& c, MonotoneMap const& g) {
    if (!(c.dom() == g.dom())) {
      throw InputError("factorization of maps with different domains");
    }
    return count_factorizations(c, g.cod(), g.table());
  }

  std::optional<MonotoneMap> factor_through(MonotoneMap const& c, MonotoneMap const& g) {
    if (!(c.dom() == g.dom())) {
      throw InputError("factorization of maps with different domains");
    }
    auto cand = factorization_candidates(c.table(), c.cod().size(), g.cod().size(), g.table());
    if (!cand) {
      return std::nullopt;
    }
    std::optional<MonotoneMap> out;
    if (c.cod().size() == 0) {
      return MonotoneMap(c.cod(), g.cod(), {});
    }
    for_each_monotone_table(
        c.cod(), g.cod(),
        [&](Table const& t) {
          out.emplace(c.cod(), g.cod(), t);
          return false;
        },
        *cand);
    return out;
  }

  std::optional<MonotoneMap> find_isomorphism(FinitePoset const& p, FinitePoset const& q) {
    if (p.size() != q.size() || p.order().count() != q.order().count()) {
      return std::nullopt;
    }
    std::optional<MonotoneMap> out;
    for_each_monotone_table(p, q, [&](Table const& t) {
      MonotoneMap f(p, q, t);
      if (is_isomorphism(f)) {
        out.emplace(std::move(f));
        return false;
      }
      return true;
    });
    return out;
  }

}  // namespace ordalg
