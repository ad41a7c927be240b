#include "condalg/io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace condalg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_document(const std::string& doc) {
  try {
    return ordered_json::parse(doc);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

void require_keys(const ordered_json& j, const std::set<std::string>& keys) {
  if (!j.is_object()) throw InputError("document is not an object");
  for (const auto& item : j.items())
    if (keys.count(item.key()) == 0)
      throw InputError("unexpected key: " + item.key());
  for (const std::string& k : keys)
    if (!j.contains(k)) throw InputError("missing key: " + k);
}

int parse_count(const ordered_json& j, const char* key, int max) {
  const ordered_json& v = j.at(key);
  if (!v.is_number_unsigned())
    throw InputError(std::string(key) + " must be a nonnegative integer");
  const std::uint64_t n = v.get<std::uint64_t>();
  if (n > static_cast<std::uint64_t>(max))
    throw InputError(std::string(key) + " exceeds the supported maximum");
  return static_cast<int>(n);
}

std::uint64_t parse_entry(const ordered_json& v, const char* what,
                          std::uint64_t bound) {
  if (!v.is_number_unsigned())
    throw InputError(std::string(what) + " must be a nonnegative integer");
  const std::uint64_t x = v.get<std::uint64_t>();
  if (x >= bound) throw InputError(std::string(what) + " out of range");
  return x;
}

}  // namespace

std::string serialize_algebra(const CondAlg& A) {
  const Elem N = A.base().size();
  std::ostringstream out;
  out << "{\n";
  out << "  \"type\": \"conditional-algebra\",\n";
  out << "  \"atoms\": " << A.base().atoms() << ",\n";
  out << "  \"cond\": [\n";
  for (Elem a = 0; a < N; ++a) {
    out << "    [";
    for (Elem b = 0; b < N; ++b) {
      if (b) out << ", ";
      out << A.cond(a, b);
    }
    out << (a + 1 < N ? "],\n" : "]\n");
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

std::string serialize_frame(const TFrame& f) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"type\": \"t-frame\",\n";
  out << "  \"points\": " << f.points() << ",\n";
  if (f.triples().empty()) {
    out << "  \"triples\": []\n";
  } else {
    out << "  \"triples\": [\n";
    for (std::size_t i = 0; i < f.triples().size(); ++i) {
      const Triple& t = f.triples()[i];
      out << "    [" << t.x << ", " << t.mid << ", " << t.y << "]"
          << (i + 1 < f.triples().size() ? ",\n" : "\n");
    }
    out << "  ]\n";
  }
  out << "}\n";
  return out.str();
}

CondAlg parse_algebra(const std::string& doc) {
  const ordered_json j = parse_document(doc);
  require_keys(j, {"type", "atoms", "cond"});
  if (j.at("type") != "conditional-algebra")
    throw InputError("wrong document type for an algebra");
  const int atoms = parse_count(j, "atoms", FinBoolAlg::kMaxAtoms);
  const std::uint64_t N = std::uint64_t{1} << atoms;
  const ordered_json& rows = j.at("cond");
  if (!rows.is_array() || rows.size() != N)
    throw InputError("cond must have one row per element");
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(N) * N);
  for (const ordered_json& row : rows) {
    if (!row.is_array() || row.size() != N)
      throw InputError("cond row has the wrong length");
    for (const ordered_json& v : row)
      table.push_back(static_cast<Elem>(parse_entry(v, "cond entry", N)));
  }
  return CondAlg(FinBoolAlg(atoms), std::move(table));
}

TFrame parse_frame(const std::string& doc) {
  const ordered_json j = parse_document(doc);
  require_keys(j, {"type", "points", "triples"});
  if (j.at("type") != "t-frame")
    throw InputError("wrong document type for a frame");
  const int points = parse_count(j, "points", TFrame::kMaxPoints);
  const ordered_json& arr = j.at("triples");
  if (!arr.is_array()) throw InputError("triples must be an array");
  std::vector<Triple> triples;
  std::set<Triple> seen;
  for (const ordered_json& t : arr) {
    if (!t.is_array() || t.size() != 3)
      throw InputError("each triple must be [x, mid, y]");
    Triple tr;
    tr.x = static_cast<int>(
        parse_entry(t[0], "triple point", static_cast<std::uint64_t>(points)));
    tr.mid = static_cast<PointSet>(
        parse_entry(t[1], "triple middle", std::uint64_t{1} << points));
    tr.y = static_cast<int>(
        parse_entry(t[2], "triple point", static_cast<std::uint64_t>(points)));
    if (!seen.insert(tr).second) throw InputError("duplicate triple");
    triples.push_back(tr);
  }
  return TFrame(points, std::move(triples));
}

std::string document_type(const std::string& doc) {
  const ordered_json j = parse_document(doc);
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    throw InputError("document has no type field");
  const std::string t = j.at("type").get<std::string>();
  if (t != "conditional-algebra" && t != "t-frame")
    throw InputError("unknown document type: " + t);
  return t;
}

}  // namespace condalg
