#pragma once

#include <filesystem>
#include <variant>

#include <json.hpp>

#include "ordalg/algebra.hpp"
#include "ordalg/classical.hpp"
#include "ordalg/colimit.hpp"
#include "ordalg/generator.hpp"
#include "ordalg/poset.hpp"
#include "ordalg/relation.hpp"
#include "ordalg/suites.hpp"
#include "ordalg/term.hpp"

// JSON file formats. Wherever a poset or algebra is expected, a string is
// read as a path to a file holding it, relative to the referring file.
//
//   poset        {"elements": [...], "le": [[a, b], ...]}
//   map          {"dom": P, "cod": P, "table": {"a": "x", ...}}
//   algebra      {"signature": [{"name", "arity"}], "poset": P,
//                 "ops": {"m": [[["a", "b"], "c"], ...]}}
//   relation     {"target": P or algebra, "pairs": [[a, b], ...]}
//   presentation {"signature": [...], "inequations": [{"vars", "le": [l, r]}]}

namespace ordalg::io {

  using Json = nlohmann::ordered_json;
  namespace fs = std::filesystem;

  // Parses a file; throws InputError on I/O or syntax errors.
  Json read_file(fs::path const& path);

  // A parsed document together with the directory its references resolve
  // against.
  struct Document {
    Json     json;
    fs::path base;
  };

  Document load(fs::path const& path);
  // Follows a string reference to the document it names.
  Document resolve(Document const& d);

  bool is_algebra(Json const& j);

  FinitePoset    poset_from(Document const& d);
  FinitePreorder preorder_from(Document const& d);
  Signature      signature_from(Json const& j);
  OrderedAlgebra algebra_from(Document const& d);

  // Unvalidated tables; missing entries hold the carrier size.
  struct AlgebraParts {
    Signature                   signature;
    FinitePoset                 carrier;
    std::vector<OperationTable> tables;
  };
  AlgebraParts algebra_parts_from(Document const& d);
  MonotoneMap    map_from(Document const& d);
  Homomorphism   homomorphism_from(Document const& d);
  Relation       pairs_from(Json const& j, FinitePoset const& target);

  struct RelationFile {
    std::variant<FinitePoset, OrderedAlgebra> target;
    Relation                                  pairs;

    [[nodiscard]] FinitePoset const& carrier() const;
  };

  RelationFile        relation_from(Document const& d);
  VarietyPresentation presentation_from(Document const& d);

  // The member `key` of a document, as a document with the same base.
  Document member(Document const& d, char const* key);

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  Json to_json(FinitePoset const& p);
  Json to_json(FinitePreorder const& p);
  Json to_json(Signature const& s);
  Json to_json(OrderedAlgebra const& a);
  Json table_json(MonotoneMap const& f);
  Json to_json(MonotoneMap const& f);
  Json to_json(Homomorphism const& h);
  Json to_json(Check const& c);
  Json to_json(RelationClassification const& c);
  Json to_json(FinitePoset const& carrier, Relation const& pairs);
  Json to_json(SuiteReport const& r);
  Json partition_json(FinitePoset const& carrier, Partition const& blocks);

}  // namespace ordalg::io
