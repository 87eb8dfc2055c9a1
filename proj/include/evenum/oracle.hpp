#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "evenum/relations.hpp"

// Exhaustive-search generators built straight from the definitions. They are
// the ground truth the recursive enumerators are checked against, and are
// only practical for very small n.
namespace evenum::oracle {

/// Thrown when a request exceeds the configured size guard.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, std::size_t requested, std::size_t limit);
  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

inline constexpr std::size_t kDefaultRelationGuard = 4;
inline constexpr std::size_t kDefaultConflictFieldGuard = 6;
inline constexpr std::size_t kDefaultEventStructureGuard = 3;

using RelSet = std::unordered_set<Rel, RelHash>;
using EventStructureSet = std::unordered_set<EventStructure, EventStructureHash>;

/// Every subset of {0..n-1}^2, each exactly once.
void forEachRelation(std::size_t n, const std::function<void(const Rel&)>& visit,
                     std::size_t guard = kDefaultRelationGuard);

RelSet bruteForceRelations(std::size_t n, std::size_t guard = kDefaultRelationGuard);
RelSet bruteForcePreorders(std::size_t n, std::size_t guard = kDefaultRelationGuard);
RelSet bruteForcePosets(std::size_t n, std::size_t guard = kDefaultRelationGuard);

/// Symmetric irreflexive relations on the field of p that propagate over p.
/// Candidates are subsets of unordered pairs, symmetrized.
RelSet bruteForceConflicts(const Rel& p, std::size_t guard = kDefaultConflictFieldGuard);

EventStructureSet bruteForceEventStructures(std::size_t n, std::size_t guard = kDefaultEventStructureGuard);

}  // namespace evenum::oracle
