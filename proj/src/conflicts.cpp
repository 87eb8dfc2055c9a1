#include "evenum/conflicts.hpp"

#include <bitset>
#include <stdexcept>
#include <unordered_set>

namespace evenum {

namespace {

PivotResult pivotAt(const Rel& p, unsigned m) { return PivotResult{m, removeElement(p, m)}; }

// Subsets of this set feed the image map; every admissible Y lies inside
// the images of its subsets.
IdSet conflictBase(const Rel& p, unsigned m, const Rel& c, SuccessorSet successors) {
  IdSet strict = p.successors(m);
  strict.erase(m);
  if (strict.empty()) return domainOf(p);
  const IdSet above = successors == SuccessorSet::Immediate ? immediateSuccessors(p, m) : strict;
  IdSet base = IdSet::firstN(kMaxEvents);
  above.forEach([&](unsigned s) { base &= c.successors(s); });
  return base;
}

Rel extend(const Rel& c, unsigned m, IdSet y) {
  std::uint64_t bits = c.bits() | (std::uint64_t{y.bits()} << (m * 8));
  y.forEach([&](unsigned x) { bits |= std::uint64_t{1} << (x * 8 + m); });
  return Rel::fromBits(bits);
}

// Calls f(Y) for each subset of base in increasing mask order, skipping Y
// values already seen when kDistinct.
template <bool kDistinct, typename F>
void forEachImage(const Rel& reduced, IdSet base, F&& f) {
  std::bitset<256> seen;
  const std::uint8_t full = base.bits();
  std::uint8_t sub = 0;
  do {
    const IdSet y = image(reduced, IdSet(sub));
    if constexpr (kDistinct) {
      if (!seen.test(y.bits())) {
        seen.set(y.bits());
        f(y);
      }
    } else {
      f(y);
    }
    sub = static_cast<std::uint8_t>((sub - full) & full);
  } while (sub != 0);
}

std::uint64_t countDistinctImages(const Rel& reduced, IdSet base) {
  std::uint64_t n = 0;
  forEachImage<true>(reduced, base, [&](IdSet) { ++n; });
  return n;
}

template <bool kDistinct>
void appendExtensions(const Rel& p, const PivotResult& pr, const Rel& c, SuccessorSet successors,
                      std::vector<Rel>& out) {
  const unsigned m = *pr.pivot;
  const IdSet base = conflictBase(p, m, c, successors);
  forEachImage<kDistinct>(pr.reduced, base, [&](IdSet y) { out.push_back(extend(c, m, y)); });
}

void requireMinimal(const Rel& p, unsigned m) {
  if (!minimalElements(p).contains(m)) {
    throw std::invalid_argument("event " + std::to_string(m) + " is not a minimal element of " + toString(p));
  }
}

void requirePoset(const Rel& p) {
  if (!isPartialOrder(p)) throw std::invalid_argument("not a partial order: " + toString(p));
}

void removeRepeats(std::vector<Rel>& list) {
  std::unordered_set<Rel, RelHash> seen;
  std::size_t kept = 0;
  for (const Rel& r : list) {
    if (seen.insert(r).second) list[kept++] = r;
  }
  list.resize(kept);
}

std::vector<Rel> conflictsRec(const Rel& p, const ConflictOptions& opt) {
  const PivotResult pr = choosePivot(p, opt.pivot);
  if (!pr.pivot) return {Rel{}};
  const std::vector<Rel> smaller = conflictsRec(pr.reduced, opt);
  std::vector<Rel> out;
  out.reserve(smaller.size() * 2);
  for (const Rel& c : smaller) {
    if (opt.dedupe == DedupePolicy::PerGroup) {
      appendExtensions<true>(p, pr, c, opt.successors, out);
    } else {
      appendExtensions<false>(p, pr, c, opt.successors, out);
    }
  }
  if (opt.dedupe == DedupePolicy::AfterConcat) removeRepeats(out);
  return out;
}

}  // namespace

PivotResult choosePivot(const Rel& p) {
  const IdSet minimal = minimalElements(p);
  if (minimal.empty()) return PivotResult{std::nullopt, p};
  unsigned best = minimal.min();
  int bestCount = -1;
  minimal.forEach([&](unsigned m) {
    const int k = immediateSuccessors(p, m).size();
    if (k > bestCount) {
      bestCount = k;
      best = m;
    }
  });
  return pivotAt(p, best);
}

PivotResult choosePivotFirst(const Rel& p) {
  const IdSet minimal = minimalElements(p);
  if (minimal.empty()) return PivotResult{std::nullopt, p};
  return pivotAt(p, minimal.min());
}

PivotResult choosePivot(const Rel& p, PivotRule rule) {
  return rule == PivotRule::MostSuccessors ? choosePivot(p) : choosePivotFirst(p);
}

std::vector<Rel> generateConflicts(const Rel& p, unsigned m, const Rel& c, SuccessorSet successors) {
  requireMinimal(p, m);
  std::vector<Rel> out;
  appendExtensions<true>(p, pivotAt(p, m), c, successors, out);
  return out;
}

std::vector<Rel> generateConflictsWithRepeats(const Rel& p, unsigned m, const Rel& c, SuccessorSet successors) {
  requireMinimal(p, m);
  std::vector<Rel> out;
  appendExtensions<false>(p, pivotAt(p, m), c, successors, out);
  return out;
}

std::vector<Rel> allowedConflicts(const Rel& p, const ConflictOptions& options) {
  requirePoset(p);
  return conflictsRec(p, options);
}

std::uint64_t countAllowedConflicts(const Rel& p, const ConflictOptions& options) {
  requirePoset(p);
  switch (options.dedupe) {
    case DedupePolicy::None: {
      const auto all = conflictsRec(p, options);
      return std::unordered_set<Rel, RelHash>(all.begin(), all.end()).size();
    }
    case DedupePolicy::AfterConcat:
      return conflictsRec(p, options).size();
    case DedupePolicy::PerGroup:
      break;
  }
  // The last level is only counted, never built.
  const PivotResult pr = choosePivot(p, options.pivot);
  if (!pr.pivot) return 1;
  std::uint64_t total = 0;
  for (const Rel& c : conflictsRec(pr.reduced, options)) {
    total += countDistinctImages(pr.reduced, conflictBase(p, *pr.pivot, c, options.successors));
  }
  return total;
}

}  // namespace evenum
