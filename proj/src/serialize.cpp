#include "crossmap/serialize.hpp"

#include <charconv>
#include <sstream>

#include "crossmap/error.hpp"

namespace crossmap {

using nlohmann::json;

void to_json(json& j, const Arc& arc) { j = json::array({arc.left, arc.right}); }

void from_json(const json& j, Arc& arc) {
  if (!j.is_array() || j.size() != 2) fail(ErrorCode::ParseError, "arc must be a [left, right] pair");
  arc = Arc{j[0].get<int>(), j[1].get<int>()};
}

void to_json(json& j, const CrossingWitness& w) {
  j = json{{"kind", to_string(w.kind)}, {"mode", to_string(w.mode)}, {"arcs", w.arcs}};
}

void from_json(const json& j, CrossingWitness& w) {
  w.kind = parse_pattern(j.at("kind").get<std::string>());
  w.mode = parse_arc_mode(j.at("mode").get<std::string>());
  w.arcs = j.at("arcs").get<std::vector<Arc>>();
}

void to_json(json& j, const IdentityReport& r) {
  json terms = json::array();
  for (std::size_t i = 0; i < r.rhs_terms.size(); ++i) {
    terms.push_back({{"i", i},
                     {"binomial", binomial(r.n, static_cast<int>(i))},
                     {"E", i < r.e_values.size() ? r.e_values[i] : 0},
                     {"term", r.rhs_terms[i]}});
  }
  j = json{{"k", r.k},       {"n", r.n},
           {"lhs", r.lhs},   {"rhs", r.rhs},
           {"rhs_direct", r.rhs_direct},
           {"holds", r.holds}, {"terms", terms}};
}

void from_json(const json& j, IdentityReport& r) {
  r.k = j.at("k").get<int>();
  r.n = j.at("n").get<int>();
  r.lhs = j.at("lhs").get<std::uint64_t>();
  r.rhs = j.at("rhs").get<std::uint64_t>();
  r.rhs_direct = j.at("rhs_direct").get<std::uint64_t>();
  r.holds = j.at("holds").get<bool>();
  r.e_values.clear();
  r.rhs_terms.clear();
  for (const auto& term : j.at("terms")) {
    r.e_values.push_back(term.at("E").get<std::uint64_t>());
    r.rhs_terms.push_back(term.at("term").get<std::uint64_t>());
  }
}

void to_json(json& j, const EigenReport& r) {
  j = json{{"n", r.n},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"terms", r.rhs_terms},
           {"enumerated", r.enumerated},
           {"partial_count", r.partial_count},
           {"distinct_images", r.distinct_images},
           {"holds", r.holds()}};
}

void to_json(json& j, const SequenceTable& t) {
  j = json::array();
  for (const auto& row : t.rows) {
    j.push_back({{"family", to_string(row.family)},
                 {"k", row.k ? json(*row.k) : json(nullptr)},
                 {"n", row.n},
                 {"value", row.value}});
  }
}

void from_json(const json& j, SequenceTable& t) {
  t.rows.clear();
  for (const auto& row : j) {
    const auto& k = row.at("k");
    t.add(parse_family(row.at("family").get<std::string>()), k.is_null() ? std::nullopt : std::optional<int>(k.get<int>()),
          row.at("n").get<int>(), row.at("value").get<std::uint64_t>());
  }
}

void to_json(json& j, const DistributionTable& t) {
  j = json{{"n", t.n},
           {"kind", to_string(t.kind)},
           {"k_max", t.k_max},
           {"partial_enhanced", t.partial_enhanced},
           {"full_classical", t.full_classical},
           {"matches", t.matches()}};
}

namespace oeis {

void to_json(json& j, const SequenceDiff& d) {
  json mismatches = json::array();
  for (const auto& m : d.mismatches) {
    mismatches.push_back({{"n", m.n}, {"computed", m.computed}, {"expected", m.expected}});
  }
  j = json{{"id", d.id},
           {"family", crossmap::to_string(d.family)},
           {"k", d.k ? json(*d.k) : json(nullptr)},
           {"compared", d.compared},
           {"mismatches", mismatches},
           {"ok", d.ok()}};
}

}  // namespace oeis

std::string to_csv(const SequenceTable& table) {
  std::ostringstream out;
  out << "family,k,n,value\n";
  for (const auto& row : table.rows) {
    out << to_string(row.family) << ',';
    if (row.k) out << *row.k;
    out << ',' << row.n << ',' << row.value << '\n';
  }
  return out.str();
}

namespace {

template <typename T>
T parse_number(std::string_view field, std::string_view line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    fail(ErrorCode::ParseError, "bad number in CSV line '" + std::string(line) + "'");
  }
  return value;
}

}  // namespace

SequenceTable sequence_table_from_csv(std::string_view csv) {
  SequenceTable table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < csv.size()) {
    auto end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    const auto line = csv.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != "family,k,n,value") fail(ErrorCode::ParseError, "missing CSV header");
      header = false;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (auto comma = line.find(','); comma != std::string_view::npos; comma = line.find(',', start)) {
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    fields.push_back(line.substr(start));
    if (fields.size() != 4) fail(ErrorCode::ParseError, "CSV line '" + std::string(line) + "' needs 4 fields");
    const std::optional<int> k = fields[1].empty() ? std::nullopt : std::optional<int>(parse_number<int>(fields[1], line));
    table.add(parse_family(fields[0]), k, parse_number<int>(fields[2], line),
              parse_number<std::uint64_t>(fields[3], line));
  }
  return table;
}

}  // namespace crossmap
