#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "evenum/relations.hpp"

namespace evenum {

/// A minimal element of a poset together with the poset with that element
/// removed. No pivot iff the poset is empty.
struct PivotResult {
  std::optional<unsigned> pivot;
  Rel reduced;

  bool operator==(const PivotResult&) const = default;
};

/// Minimal element with the most immediate successors, smallest id on ties.
PivotResult choosePivot(const Rel& p);
/// Smallest-id minimal element.
PivotResult choosePivotFirst(const Rel& p);

enum class PivotRule { MostSuccessors, FirstMinimal };

/// Which successors of the pivot constrain the new conflicts. Any set between
/// the immediate and the strict successors gives the same result.
enum class SuccessorSet { Immediate, AllStrict };

/// Where duplicate conflicts are removed during the recursion.
enum class DedupePolicy {
  None,         // never; counting falls back to set cardinality
  AfterConcat,  // on the concatenated list of every recursion level
  PerGroup,     // on the extension sets of each (poset, pivot, c) group
};

struct ConflictOptions {
  PivotRule pivot = PivotRule::MostSuccessors;
  DedupePolicy dedupe = DedupePolicy::PerGroup;
  SuccessorSet successors = SuccessorSet::Immediate;
};

PivotResult choosePivot(const Rel& p, PivotRule rule);

/// Extends a conflict c of p - {m} by {m} x Y and Y x {m}, for every Y that is
/// the image under p - {m} of a subset of the admissible base. Only distinct
/// Y are emitted. Requires m minimal in the poset p; throws
/// std::invalid_argument otherwise.
std::vector<Rel> generateConflicts(const Rel& p, unsigned m, const Rel& c,
                                   SuccessorSet successors = SuccessorSet::Immediate);

/// Same as generateConflicts but one entry per subset of the base, so the
/// list may repeat.
std::vector<Rel> generateConflictsWithRepeats(const Rel& p, unsigned m, const Rel& c,
                                              SuccessorSet successors = SuccessorSet::Immediate);

/// Every c such that (p, c) is an event structure. Duplicate-free unless
/// options.dedupe is None. Throws std::invalid_argument if p is not a partial
/// order.
std::vector<Rel> allowedConflicts(const Rel& p, const ConflictOptions& options = {});

/// Number of distinct allowed conflicts of p.
std::uint64_t countAllowedConflicts(const Rel& p, const ConflictOptions& options = {});

}  // namespace evenum
