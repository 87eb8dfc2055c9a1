#include "evenum/output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace evenum {

namespace {

using nlohmann::json;

std::string bracePairs(const std::vector<Pair>& pairs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) os << ", ";
    os << '(' << pairs[i].first << ',' << pairs[i].second << ')';
  }
  os << '}';
  return os.str();
}

json pairArray(const std::vector<Pair>& pairs) {
  json arr = json::array();
  for (auto [x, y] : pairs) arr.push_back({x, y});
  return arr;
}

std::vector<Pair> readPairs(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(std::string("record field '") + key + "' must be an array");
  }
  std::vector<Pair> out;
  for (const json& item : j.at(key)) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned()) {
      throw std::invalid_argument(std::string("record field '") + key + "' must hold [int,int] pairs");
    }
    const auto x = item[0].get<unsigned>();
    const auto y = item[1].get<unsigned>();
    if (x >= n || y >= n) throw std::invalid_argument("event id out of range in '" + std::string(key) + "'");
    out.emplace_back(x, y);
  }
  if (!std::is_sorted(out.begin(), out.end()) || std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument(std::string("record field '") + key + "' is not strictly sorted");
  }
  return out;
}

}  // namespace

OutputRecord makeRecord(std::size_t n, const EventStructure& es) {
  return OutputRecord{n, es.causality.pairs(), es.conflict.pairs()};
}

EventStructure toEventStructure(const OutputRecord& record) {
  return EventStructure{Rel(record.causality), Rel(record.conflict)};
}

bool canonicalLess(const OutputRecord& a, const OutputRecord& b) {
  return std::tie(a.causality, a.conflict) < std::tie(b.causality, b.conflict);
}

std::string formatPairs(const OutputRecord& record) {
  return "(" + bracePairs(record.causality) + ", " + bracePairs(record.conflict) + ")";
}

std::string formatJsonLine(const OutputRecord& record) {
  json j;
  j["n"] = record.n;
  j["causality"] = pairArray(record.causality);
  j["conflict"] = pairArray(record.conflict);
  return j.dump();
}

OutputRecord parseJsonLine(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_unsigned()) {
    throw std::invalid_argument("record must be an object with an unsigned 'n'");
  }
  OutputRecord r;
  r.n = j.at("n").get<std::size_t>();
  if (r.n > kMaxEvents) throw std::invalid_argument("record 'n' exceeds " + std::to_string(kMaxEvents));
  r.causality = readPairs(j, "causality", r.n);
  r.conflict = readPairs(j, "conflict", r.n);
  return r;
}

std::string formatDot(const OutputRecord& record, std::size_t index) {
  const EventStructure es = toEventStructure(record);
  std::ostringstream os;
  os << "digraph es_" << index << " {\n";
  for (std::size_t v = 0; v < record.n; ++v) os << "  " << v << " [label=\"" << v << "\"];\n";
  for (auto [x, y] : coveringRelation(es.causality).pairs()) os << "  " << x << " -> " << y << ";\n";
  for (auto [x, y] : record.conflict) {
    if (x < y) os << "  " << x << " -> " << y << " [dir=none, style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace evenum
