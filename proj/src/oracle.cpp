#include "evenum/oracle.hpp"

#include <algorithm>
#include <vector>

namespace evenum::oracle {

namespace {

void enforce(const char* what, std::size_t requested, std::size_t guard) {
  if (requested > guard) throw GuardError(what, requested, guard);
}

}  // namespace

GuardError::GuardError(const std::string& what, std::size_t requested, std::size_t limit)
    : std::runtime_error(what + ": size " + std::to_string(requested) + " exceeds the oracle limit of " +
                         std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

void forEachRelation(std::size_t n, const std::function<void(const Rel&)>& visit, std::size_t guard) {
  enforce("brute-force relations", n, guard);
  checkEventId(n == 0 ? 0 : unsigned(n - 1));

  std::vector<Pair> cells;
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) cells.emplace_back(x, y);
  }
  const std::uint64_t count = std::uint64_t{1} << cells.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Rel r;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if ((mask >> k) & 1u) r.insert(cells[k].first, cells[k].second);
    }
    visit(r);
  }
}

RelSet bruteForceRelations(std::size_t n, std::size_t guard) {
  RelSet out;
  forEachRelation(n, [&](const Rel& r) { out.insert(r); }, guard);
  return out;
}

RelSet bruteForcePreorders(std::size_t n, std::size_t guard) {
  const IdSet carrier = IdSet::firstN(n);
  RelSet out;
  forEachRelation(
      n,
      [&](const Rel& r) {
        if (isReflexiveOn(r, carrier) && isTransitive(r)) out.insert(r);
      },
      guard);
  return out;
}

RelSet bruteForcePosets(std::size_t n, std::size_t guard) {
  const IdSet carrier = IdSet::firstN(n);
  RelSet out;
  forEachRelation(
      n,
      [&](const Rel& r) {
        if (isReflexiveOn(r, carrier) && isTransitive(r) && isAntisymmetric(r)) out.insert(r);
      },
      guard);
  return out;
}

RelSet bruteForceConflicts(const Rel& p, std::size_t guard) {
  const std::vector<unsigned> events = fieldOf(p).elements();
  enforce("brute-force conflicts", events.size(), guard);

  std::vector<Pair> unordered;
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) unordered.emplace_back(events[i], events[j]);
  }
  RelSet out;
  const std::uint64_t count = std::uint64_t{1} << unordered.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Rel c;
    for (std::size_t k = 0; k < unordered.size(); ++k) {
      if ((mask >> k) & 1u) {
        c.insert(unordered[k].first, unordered[k].second);
        c.insert(unordered[k].second, unordered[k].first);
      }
    }
    if (isEventStructure(p, c)) out.insert(c);
  }
  return out;
}

EventStructureSet bruteForceEventStructures(std::size_t n, std::size_t guard) {
  enforce("brute-force event structures", n, guard);
  EventStructureSet out;
  for (const Rel& o : bruteForcePosets(n, guard)) {
    for (const Rel& c : bruteForceConflicts(o, std::max(guard, n))) out.insert(EventStructure{o, c});
  }
  return out;
}

}  // namespace evenum::oracle
