#ifndef DOODLE_TABLE_DOCUMENT_HPP
#define DOODLE_TABLE_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "doodle/enumeration.hpp"

namespace doodle {

using Tuple = std::vector<int>;

struct OrientedRecord {
  std::string name;
  Tuple canonical;
  std::vector<Tuple> members;

  friend bool operator==(const OrientedRecord&, const OrientedRecord&) = default;
};

struct UnorientedRecord {
  std::string name;
  Tuple canonical;
  std::string forward;
  std::optional<std::string> backward;

  friend bool operator==(const UnorientedRecord&, const UnorientedRecord&) = default;
};

/// Serializable view of a ClassificationTable. Codes are plain numeric
/// tuples so documents can be read back without re-running the search.
struct TableDocument {
  int n = 0;
  Counts counts;
  std::vector<Tuple> minimal_codes;
  std::vector<OrientedRecord> oriented_classes;
  std::vector<UnorientedRecord> unoriented_classes;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

TableDocument make_document(const ClassificationTable& table);

/// Schema:
///   {n, counts: {lp, minimal, oriented, unoriented},
///    minimal_codes: [[int]],
///    oriented_classes: [{name, canonical: [int], members: [[int]]}],
///    unoriented_classes: [{name, canonical: [int], forward: name, backward: name | null}]}
nlohmann::json to_json(const TableDocument& doc);

/// Throws std::invalid_argument with the first schema violation.
TableDocument from_json(const nlohmann::json& j);

/// Every schema violation found, empty when the document is valid. Also
/// checks that each tuple is a valid Gauss code on n letters and that the
/// counts match the array lengths.
std::vector<std::string> validate_table_json(const nlohmann::json& j);

enum class TableView { Full, Minimal, Oriented, Unoriented };

/// RFC 4180 CSV with a fixed header per view. Tuples are quoted fields.
///   Minimal:          index,code
///   Oriented / Full:  index,name,unoriented,canonical,orbit_size,members
///   Unoriented:       index,name,canonical,forward,backward
std::string to_csv(const TableDocument& doc, TableView view);

/// Human-readable listing in the layout of the reference tables.
std::string to_text(const TableDocument& doc, TableView view);

}  // namespace doodle

#endif  // DOODLE_TABLE_DOCUMENT_HPP
