#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evenum/relations.hpp"

namespace evenum {

/// Serialized form of one enumerated structure. Pair lists are sorted by
/// (first, second); a conflict lists both orientations of each pair.
struct OutputRecord {
  std::size_t n = 0;
  std::vector<Pair> causality;
  std::vector<Pair> conflict;

  bool operator==(const OutputRecord&) const = default;
};

OutputRecord makeRecord(std::size_t n, const EventStructure& es);
EventStructure toEventStructure(const OutputRecord& record);

/// Lexicographic on (causality, conflict).
bool canonicalLess(const OutputRecord& a, const OutputRecord& b);

/// ({(0,0), (1,1)}, {(0,1), (1,0)})
std::string formatPairs(const OutputRecord& record);

/// {"n":2,"causality":[[0,0],[1,1]],"conflict":[[0,1],[1,0]]}
std::string formatJsonLine(const OutputRecord& record);

/// Throws std::invalid_argument on malformed input or schema mismatch.
OutputRecord parseJsonLine(const std::string& line);

/// One digraph: solid arcs for the covering relation of the causality,
/// dashed undirected edges for conflicts (each unordered pair once).
std::string formatDot(const OutputRecord& record, std::size_t index);

}  // namespace evenum
