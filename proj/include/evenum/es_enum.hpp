#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "evenum/conflicts.hpp"
#include "evenum/relations.hpp"

namespace evenum {

using EventStructureVisitor = std::function<void(const EventStructure&)>;

/// Streams every event structure over {0..n-1}, one poset at a time: posets
/// in enumeratePosets order, conflicts in allowedConflicts order.
void forEachEventStructure(std::size_t n, const EventStructureVisitor& visit, const ConflictOptions& options = {});

/// Materialized form of forEachEventStructure; meant for small n.
std::vector<EventStructure> enumerateEventStructures(std::size_t n, const ConflictOptions& options = {});

/// Called from worker threads with the running number of posets processed.
using ProgressFn = std::function<void(std::uint64_t done, std::uint64_t total)>;

struct CountOptions {
  ConflictOptions conflicts;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 1;
  ProgressFn progress;
};

/// Sum over all posets p on {0..n-1} of countAllowedConflicts(p).
std::uint64_t countEventStructures(std::size_t n, const CountOptions& options = {});

struct CountRow {
  std::size_t n = 0;
  std::uint64_t preorders = 0;
  std::uint64_t posets = 0;
  std::uint64_t eventStructures = 0;

  bool operator==(const CountRow&) const = default;
};

using CountTable = std::vector<CountRow>;

/// Rows for n = 0..maxN.
CountTable countsUpTo(std::size_t maxN, const CountOptions& options = {});

}  // namespace evenum
