#include "doodle/table_document.hpp"

#include <sstream>
#include <stdexcept>

namespace doodle {

using nlohmann::json;

namespace {

Tuple tuple_of(const GaussCode& code) { return Tuple(code.begin(), code.end()); }

std::string tuple_text(const Tuple& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out << ", ";
    out << t[i];
  }
  out << ')';
  return out.str();
}

std::string unoriented_name(const std::string& oriented) {
  if (!oriented.empty() && (oriented.back() == '+' || oriented.back() == '-')) {
    return oriented.substr(0, oriented.size() - 1);
  }
  return oriented;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class Checker {
 public:
  explicit Checker(std::vector<std::string>& errors) : errors_(errors) {}

  bool require(bool ok, const std::string& message) {
    if (!ok) errors_.push_back(message);
    return ok;
  }

  bool object_with(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
    if (!require(j.is_object(), where + ": expected an object")) return false;
    bool ok = true;
    for (const char* key : keys) ok &= require(j.contains(key), where + ": missing key '" + key + "'");
    return ok;
  }

  void code(const json& j, int n, const std::string& where) {
    if (!require(j.is_array(), where + ": expected an array of integers")) return;
    std::vector<int> numbers;
    for (const auto& v : j) {
      if (!require(v.is_number_integer(), where + ": expected integers")) return;
      numbers.push_back(v.get<int>());
    }
    if (!require(static_cast<int>(numbers.size()) == 2 * n,
                 where + ": expected " + std::to_string(2 * n) + " symbols")) {
      return;
    }
    try {
      (void)GaussCode(numbers);
    } catch (const CodeError& e) {
      errors_.push_back(where + ": " + e.what());
    }
  }

  void name(const json& j, const std::string& where) { require(j.is_string(), where + ": expected a string"); }

 private:
  std::vector<std::string>& errors_;
};

}  // namespace

TableDocument make_document(const ClassificationTable& table) {
  TableDocument doc;
  doc.n = table.n;
  doc.counts = counts_of(table);
  for (const auto& w : table.minimal_codes) doc.minimal_codes.push_back(tuple_of(w));
  for (const auto& named : table.oriented_classes) {
    OrientedRecord rec{named.name, tuple_of(named.cls.canonical), {}};
    for (const auto& m : named.cls.members) rec.members.push_back(tuple_of(m));
    doc.oriented_classes.push_back(std::move(rec));
  }
  for (const auto& named : table.unoriented_classes) {
    doc.unoriented_classes.push_back(
        UnorientedRecord{named.name, tuple_of(named.cls.canonical), named.forward_name, named.backward_name});
  }
  return doc;
}

json to_json(const TableDocument& doc) {
  json j;
  j["n"] = doc.n;
  j["counts"] = {{"lp", doc.counts.lp},
                 {"minimal", doc.counts.minimal},
                 {"oriented", doc.counts.oriented},
                 {"unoriented", doc.counts.unoriented}};
  j["minimal_codes"] = doc.minimal_codes;
  j["oriented_classes"] = json::array();
  for (const auto& rec : doc.oriented_classes) {
    j["oriented_classes"].push_back({{"name", rec.name}, {"canonical", rec.canonical}, {"members", rec.members}});
  }
  j["unoriented_classes"] = json::array();
  for (const auto& rec : doc.unoriented_classes) {
    json u = {{"name", rec.name}, {"canonical", rec.canonical}, {"forward", rec.forward}};
    u["backward"] = rec.backward ? json(*rec.backward) : json(nullptr);
    j["unoriented_classes"].push_back(std::move(u));
  }
  return j;
}

std::vector<std::string> validate_table_json(const json& j) {
  std::vector<std::string> errors;
  Checker check(errors);
  if (!check.object_with(j, "document", {"n", "counts", "minimal_codes", "oriented_classes", "unoriented_classes"})) {
    return errors;
  }
  if (!check.require(j["n"].is_number_integer() && j["n"].get<int>() >= 1, "n: expected a positive integer")) {
    return errors;
  }
  const int n = j["n"].get<int>();

  const json& counts = j["counts"];
  if (check.object_with(counts, "counts", {"lp", "minimal", "oriented", "unoriented"})) {
    for (const char* key : {"lp", "minimal", "oriented", "unoriented"}) {
      check.require(counts[key].is_number_unsigned(), std::string("counts.") + key + ": expected a non-negative integer");
    }
  }

  auto array_of = [&](const char* key) { return check.require(j[key].is_array(), std::string(key) + ": expected an array"); };

  if (array_of("minimal_codes")) {
    for (std::size_t i = 0; i < j["minimal_codes"].size(); ++i) {
      check.code(j["minimal_codes"][i], n, "minimal_codes[" + std::to_string(i) + "]");
    }
  }
  if (array_of("oriented_classes")) {
    for (std::size_t i = 0; i < j["oriented_classes"].size(); ++i) {
      const std::string where = "oriented_classes[" + std::to_string(i) + "]";
      const json& rec = j["oriented_classes"][i];
      if (!check.object_with(rec, where, {"name", "canonical", "members"})) continue;
      check.name(rec["name"], where + ".name");
      check.code(rec["canonical"], n, where + ".canonical");
      if (check.require(rec["members"].is_array() && !rec["members"].empty(), where + ".members: expected a non-empty array")) {
        for (std::size_t k = 0; k < rec["members"].size(); ++k) {
          check.code(rec["members"][k], n, where + ".members[" + std::to_string(k) + "]");
        }
      }
    }
  }
  if (array_of("unoriented_classes")) {
    for (std::size_t i = 0; i < j["unoriented_classes"].size(); ++i) {
      const std::string where = "unoriented_classes[" + std::to_string(i) + "]";
      const json& rec = j["unoriented_classes"][i];
      if (!check.object_with(rec, where, {"name", "canonical", "forward", "backward"})) continue;
      check.name(rec["name"], where + ".name");
      check.code(rec["canonical"], n, where + ".canonical");
      check.name(rec["forward"], where + ".forward");
      check.require(rec["backward"].is_string() || rec["backward"].is_null(), where + ".backward: expected a string or null");
    }
  }

  if (errors.empty()) {
    check.require(counts["minimal"].get<std::size_t>() == j["minimal_codes"].size(), "counts.minimal disagrees with minimal_codes");
    check.require(counts["oriented"].get<std::size_t>() == j["oriented_classes"].size(),
                  "counts.oriented disagrees with oriented_classes");
    check.require(counts["unoriented"].get<std::size_t>() == j["unoriented_classes"].size(),
                  "counts.unoriented disagrees with unoriented_classes");
  }
  return errors;
}

TableDocument from_json(const json& j) {
  const auto errors = validate_table_json(j);
  if (!errors.empty()) throw std::invalid_argument("invalid table document: " + errors.front());

  TableDocument doc;
  doc.n = j["n"].get<int>();
  const json& c = j["counts"];
  doc.counts = Counts{c["lp"].get<std::uint64_t>(), c["minimal"].get<std::uint64_t>(),
                      c["oriented"].get<std::uint64_t>(), c["unoriented"].get<std::uint64_t>()};
  doc.minimal_codes = j["minimal_codes"].get<std::vector<Tuple>>();
  for (const auto& rec : j["oriented_classes"]) {
    doc.oriented_classes.push_back(OrientedRecord{rec["name"].get<std::string>(), rec["canonical"].get<Tuple>(),
                                                  rec["members"].get<std::vector<Tuple>>()});
  }
  for (const auto& rec : j["unoriented_classes"]) {
    std::optional<std::string> backward;
    if (!rec["backward"].is_null()) backward = rec["backward"].get<std::string>();
    doc.unoriented_classes.push_back(UnorientedRecord{rec["name"].get<std::string>(), rec["canonical"].get<Tuple>(),
                                                      rec["forward"].get<std::string>(), std::move(backward)});
  }
  return doc;
}

std::string to_csv(const TableDocument& doc, TableView view) {
  std::ostringstream out;
  switch (view) {
    case TableView::Minimal:
      out << "index,code\r\n";
      for (std::size_t i = 0; i < doc.minimal_codes.size(); ++i) {
        out << i + 1 << ',' << csv_field(tuple_text(doc.minimal_codes[i])) << "\r\n";
      }
      break;
    case TableView::Full:
    case TableView::Oriented:
      out << "index,name,unoriented,canonical,orbit_size,members\r\n";
      for (std::size_t i = 0; i < doc.oriented_classes.size(); ++i) {
        const auto& rec = doc.oriented_classes[i];
        std::string members;
        for (const auto& m : rec.members) members += (members.empty() ? "" : " ") + tuple_text(m);
        out << i + 1 << ',' << csv_field(rec.name) << ',' << csv_field(unoriented_name(rec.name)) << ','
            << csv_field(tuple_text(rec.canonical)) << ',' << rec.members.size() << ',' << csv_field(members)
            << "\r\n";
      }
      break;
    case TableView::Unoriented:
      out << "index,name,canonical,forward,backward\r\n";
      for (std::size_t i = 0; i < doc.unoriented_classes.size(); ++i) {
        const auto& rec = doc.unoriented_classes[i];
        out << i + 1 << ',' << csv_field(rec.name) << ',' << csv_field(tuple_text(rec.canonical)) << ','
            << csv_field(rec.forward) << ',' << csv_field(rec.backward.value_or("")) << "\r\n";
      }
      break;
  }
  return out.str();
}

std::string to_text(const TableDocument& doc, TableView view) {
  std::ostringstream out;
  const bool full = view == TableView::Full;
  if (full) {
    out << "n = " << doc.n << '\n'
        << "left preferred codes: " << doc.counts.lp << '\n'
        << "minimal codes: " << doc.counts.minimal << '\n'
        << "oriented classes: " << doc.counts.oriented << '\n'
        << "unoriented classes: " << doc.counts.unoriented << '\n';
  }

  if (full || view == TableView::Minimal) {
    if (full) out << '\n';
    out << "minimal left preferred codes (" << doc.minimal_codes.size() << ")\n";
    for (const auto& t : doc.minimal_codes) out << "  " << tuple_text(t) << '\n';
  }

  if (full || view == TableView::Oriented) {
    if (full) out << '\n';
    out << "oriented classes (" << doc.oriented_classes.size() << ")\n";
    for (std::size_t i = 0; i < doc.oriented_classes.size(); ++i) {
      const auto& rec = doc.oriented_classes[i];
      out << '(' << i + 1 << ") " << rec.name << " = {";
      for (std::size_t k = 0; k < rec.members.size(); ++k) out << (k ? ", " : "") << tuple_text(rec.members[k]);
      out << "}\n";
    }
  }

  if (full || view == TableView::Unoriented) {
    if (full) out << '\n';
    out << "unoriented classes (" << doc.unoriented_classes.size() << ")\n";
    auto canonical_of = [&](const std::string& name) -> std::string {
      for (const auto& rec : doc.oriented_classes) {
        if (rec.name == name) return tuple_text(rec.canonical);
      }
      return name;
    };
    for (std::size_t i = 0; i < doc.unoriented_classes.size(); ++i) {
      const auto& rec = doc.unoriented_classes[i];
      out << '(' << i + 1 << ") " << rec.name << " = [" << tuple_text(rec.canonical) << "]_unori = ["
          << canonical_of(rec.forward) << "]_ori";
      if (rec.backward) out << " u [" << canonical_of(*rec.backward) << "]_ori";
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace doodle
