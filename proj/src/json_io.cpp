#include "ordalg/json_io.hpp"

#include <fstream>

namespace ordalg::io {

  namespace {
    std::string as_string(Json const& j, char const* what) {
      if (!j.is_string()) {
        throw InputError(std::string(what) + " must be a string");
      }
      return j.get<std::string>();
    }

    Json const& require(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing \"") + key + "\"");
      }
      return j.at(key);
    }

    Json const& require_array(Json const& j, char const* key) {
      auto const& v = require(j, key);
      if (!v.is_array()) {
        throw InputError(std::string("\"") + key + "\" must be an array");
      }
      return v;
    }

    std::vector<std::string> string_list(Json const& j, char const* what) {
      if (!j.is_array()) {
        throw InputError(std::string(what) + " must be an array of strings");
      }
      std::vector<std::string> out;
      for (auto const& e : j) {
        out.push_back(as_string(e, what));
      }
      return out;
    }

    std::vector<LabelPair> pair_list(Json const& j, char const* what) {
      if (!j.is_array()) {
        throw InputError(std::string(what) + " must be an array of pairs");
      }
      std::vector<LabelPair> out;
      for (auto const& e : j) {
        if (!e.is_array() || e.size() != 2) {
          throw InputError(std::string(what) + " entries must be two-element arrays");
        }
        out.emplace_back(as_string(e[0], what), as_string(e[1], what));
      }
      return out;
    }

  }  // namespace

  Document resolve(Document const& d) {
    if (d.json.is_string()) {
      return load(d.base / d.json.get<std::string>());
    }
    return d;
  }

  Json read_file(fs::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw InputError(path.string() + ": " + e.what());
    }
  }

  Document load(fs::path const& path) {
    return Document{read_file(path), path.parent_path()};
  }

  Document member(Document const& d, char const* key) {
    return Document{require(d.json, key), d.base};
  }

  bool is_algebra(Json const& j) {
    return j.is_object() && j.contains("signature") && j.contains("poset");
  }

  FinitePoset poset_from(Document const& d0) {
    auto const d = resolve(d0);
    if (is_algebra(d.json)) {
      return algebra_from(d).carrier();
    }
    auto labels = string_list(require(d.json, "elements"), "\"elements\"");
    auto le     = d.json.contains("le") ? pair_list(d.json.at("le"), "\"le\"")
                                        : std::vector<LabelPair>{};
    return FinitePoset::from_pairs(std::move(labels), le);
  }

  FinitePreorder preorder_from(Document const& d0) {
    auto const d = resolve(d0);
    auto labels  = string_list(require(d.json, "elements"), "\"elements\"");
    auto le      = d.json.contains("le") ? pair_list(d.json.at("le"), "\"le\"")
                                         : std::vector<LabelPair>{};
    return preorder_closure(std::move(labels), le, {});
  }

  Signature signature_from(Json const& j) {
    if (!j.is_array()) {
      throw InputError("\"signature\" must be an array");
    }
    std::vector<Operation> ops;
    for (auto const& e : j) {
      auto const& arity = require(e, "arity");
      if (!arity.is_number_unsigned()) {
        throw InputError("operation arity must be a non-negative integer");
      }
      ops.push_back({as_string(require(e, "name"), "operation name"), arity.get<std::size_t>()});
    }
    return Signature(std::move(ops));
  }

  AlgebraParts algebra_parts_from(Document const& d0) {
    auto const d       = resolve(d0);
    auto const sig     = signature_from(require(d.json, "signature"));
    auto const carrier = poset_from(member(d, "poset"));
    auto const& ops    = require(d.json, "ops");
    if (!ops.is_object()) {
      throw InputError("\"ops\" must be an object");
    }
    std::vector<OperationTable> tables;
    for (std::size_t k = 0; k < sig.size(); ++k) {
      auto const& op = sig[k];
      if (!ops.contains(op.name)) {
        throw InputError("no table for operation \"" + op.name + "\"");
      }
      auto const& rows = ops.at(op.name);
      if (!rows.is_array()) {
        throw InputError("table of \"" + op.name + "\" must be an array");
      }
      std::size_t const  n = carrier.size();
      std::size_t const  entries = int_power(n, op.arity);
      OperationTable     table(entries, n);  // n marks a missing entry
      std::vector<bool>  set(entries, false);
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != 2 || !row[0].is_array()) {
          throw InputError("rows of \"" + op.name + "\" must be [[args...], value]");
        }
        auto args = string_list(row[0], "operation arguments");
        if (args.size() != op.arity) {
          throw InputError("row of \"" + op.name + "\" has the wrong number of arguments");
        }
        std::vector<std::size_t> idx;
        for (auto const& a : args) {
          idx.push_back(carrier.index_of(a));
        }
        auto const code = encode_tuple(idx, n);
        if (set[code]) {
          throw InputError("duplicate row in the table of \"" + op.name + "\"");
        }
        set[code]   = true;
        table[code] = carrier.index_of(as_string(row[1], "operation value"));
      }
      tables.push_back(std::move(table));
    }
    for (auto const& [name, _] : ops.items()) {
      if (!sig.find(name)) {
        throw InputError("table for undeclared operation \"" + name + "\"");
      }
    }
    return AlgebraParts{sig, carrier, std::move(tables)};
  }

  OrderedAlgebra algebra_from(Document const& d) {
    auto parts = algebra_parts_from(d);
    return OrderedAlgebra(parts.signature, parts.carrier, std::move(parts.tables));
  }

  namespace {
    Table table_from(Json const& j, FinitePoset const& dom, FinitePoset const& cod) {
      if (!j.is_object()) {
        throw InputError("\"table\" must be an object from domain to codomain labels");
      }
      Table             t(dom.size());
      std::vector<bool> set(dom.size(), false);
      for (auto const& [key, value] : j.items()) {
        auto const x = dom.index_of(key);
        set[x]       = true;
        t[x]         = cod.index_of(as_string(value, "table value"));
      }
      for (std::size_t x = 0; x < dom.size(); ++x) {
        if (!set[x]) {
          throw InputError("table is not total: no image for \"" + dom.label(x) + "\"");
        }
      }
      return t;
    }
  }  // namespace

  MonotoneMap map_from(Document const& d0) {
    auto const d   = resolve(d0);
    auto const dom = poset_from(member(d, "dom"));
    auto const cod = poset_from(member(d, "cod"));
    return MonotoneMap(dom, cod, table_from(require(d.json, "table"), dom, cod));
  }

  Homomorphism homomorphism_from(Document const& d0) {
    auto const d   = resolve(d0);
    auto const dom = algebra_from(member(d, "dom"));
    auto const cod = algebra_from(member(d, "cod"));
    return Homomorphism(dom, cod,
                        table_from(require(d.json, "table"), dom.carrier(), cod.carrier()));
  }

  Relation pairs_from(Json const& j, FinitePoset const& target) {
    Relation r(target.size());
    for (auto const& [a, b] : pair_list(j, "\"pairs\"")) {
      r.set(target.index_of(a), target.index_of(b));
    }
    return r;
  }

  FinitePoset const& RelationFile::carrier() const {
    if (auto const* a = std::get_if<OrderedAlgebra>(&target)) {
      return a->carrier();
    }
    return std::get<FinitePoset>(target);
  }

  RelationFile relation_from(Document const& d0) {
    auto const d      = resolve(d0);
    auto const target = resolve(member(d, "target"));
    RelationFile out{FinitePoset(), Relation()};
    if (is_algebra(target.json)) {
      out.target = algebra_from(target);
    } else {
      out.target = poset_from(target);
    }
    out.pairs = pairs_from(require_array(d.json, "pairs"), out.carrier());
    return out;
  }

  VarietyPresentation presentation_from(Document const& d0) {
    auto const d   = resolve(d0);
    auto const sig = signature_from(require(d.json, "signature"));
    std::vector<Inequation> ineqs;
    for (auto const& e : require_array(d.json, "inequations")) {
      auto vars = string_list(require(e, "vars"), "\"vars\"");
      auto const& le = require(e, "le");
      if (!le.is_array() || le.size() != 2) {
        throw InputError("\"le\" must be a pair of terms");
      }
      auto lhs = parse_term(as_string(le[0], "term"), sig, vars);
      auto rhs = parse_term(as_string(le[1], "term"), sig, vars);
      ineqs.push_back(Inequation{std::move(vars), std::move(lhs), std::move(rhs)});
    }
    return VarietyPresentation{sig, std::move(ineqs)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Json order_json(std::vector<std::string> const& labels, Relation const& order) {
      Json le = Json::array();
      for (auto [i, j] : order.pairs()) {
        if (i != j) {
          le.push_back(Json::array({labels[i], labels[j]}));
        }
      }
      return Json{{"elements", labels}, {"le", le}};
    }
  }  // namespace

  Json to_json(FinitePoset const& p) {
    return order_json(p.labels(), p.order());
  }

  Json to_json(FinitePreorder const& p) {
    return order_json(p.labels(), p.order());
  }

  Json to_json(Signature const& s) {
    Json out = Json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
      out.push_back(Json{{"name", s[k].name}, {"arity", s[k].arity}});
    }
    return out;
  }

  Json to_json(OrderedAlgebra const& a) {
    auto const& c   = a.carrier();
    Json        ops = Json::object();
    for (std::size_t k = 0; k < a.signature().size(); ++k) {
      auto const arity = a.signature()[k].arity;
      Json       rows  = Json::array();
      auto const& t    = a.table(k);
      for (std::size_t code = 0; code < t.size(); ++code) {
        Json args = Json::array();
        for (auto x : decode_tuple(code, arity, c.size())) {
          args.push_back(c.label(x));
        }
        rows.push_back(Json::array({args, c.label(t[code])}));
      }
      ops[a.signature()[k].name] = rows;
    }
    return Json{{"signature", to_json(a.signature())}, {"poset", to_json(c)}, {"ops", ops}};
  }

  Json table_json(MonotoneMap const& f) {
    Json t = Json::object();
    for (std::size_t x = 0; x < f.dom().size(); ++x) {
      t[f.dom().label(x)] = f.cod().label(f(x));
    }
    return t;
  }

  Json to_json(MonotoneMap const& f) {
    return Json{{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", table_json(f)}};
  }

  Json to_json(Homomorphism const& h) {
    return Json{{"dom", to_json(h.dom())}, {"cod", to_json(h.cod())}, {"table", table_json(h.map())}};
  }

  Json to_json(Check const& c) {
    Json out{{"holds", c.holds}};
    if (!c.holds) {
      out["reason"]  = c.reason;
      out["witness"] = c.witness;
    }
    return out;
  }

  Json to_json(RelationClassification const& c) {
    Json out{{"relation", c.is_relation},
             {"reflexive", c.is_reflexive},
             {"symmetric", c.is_symmetric},
             {"transitive", c.is_transitive},
             {"order_reflexive", c.is_order_reflexive},
             {"congruence", c.is_congruence},
             {"subcongruence", c.is_subcongruence}};
    Json w = Json::object();
    for (auto const& [k, v] : c.witnesses) {
      w[k] = v;
    }
    out["witnesses"] = w;
    return out;
  }

  Json to_json(FinitePoset const& carrier, Relation const& pairs) {
    Json out = Json::array();
    for (auto [i, j] : pairs.pairs()) {
      out.push_back(Json::array({carrier.label(i), carrier.label(j)}));
    }
    return out;
  }

  Json partition_json(FinitePoset const& carrier, Partition const& blocks) {
    Json out = Json::array();
    for (auto const& b : blocks) {
      Json block = Json::array();
      for (auto x : b) {
        block.push_back(carrier.label(x));
      }
      out.push_back(block);
    }
    return out;
  }

  Json to_json(SuiteReport const& r) {
    Json parts = Json::object();
    for (auto const& [name, n] : r.parts) {
      parts[name] = n;
    }
    Json out{{"suite", r.name},
             {"options",
              {{"size", r.options.size},
               {"algebra_size", r.options.algebra_size},
               {"samples", r.options.samples},
               {"oracle_size", r.options.oracle_size},
               {"seed", r.options.seed}}},
             {"passed", r.passed()},
             {"checked", r.checked},
             {"failed", r.failed},
             {"parts", parts},
             {"scope", r.scope}};
    if (r.failed > 0) {
      out["first_failure"] = r.first_failure;
      out["witness"]       = r.witness;
    }
    return out;
  }

}  // namespace ordalg::io
