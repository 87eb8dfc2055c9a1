#include "evenum/order_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace evenum {

namespace {

void checkOrder(std::size_t n) {
  if (n > kMaxEvents) {
    throw OutOfRange("order " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxEvents));
  }
}

// Candidate alpha vectors are the down-closed subsets and candidate beta
// vectors the up-closed ones; the joint condition is checked per pair.
template <typename F>
void forEachExtension(const BoolMatrix& a, F&& f) {
  const std::size_t n = std::min(a.order(), kMaxEvents);
  const unsigned limit = 1u << n;
  IdSet rows[kMaxEvents];
  IdSet cols[kMaxEvents];
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = a.row(i);
    cols[i] = a.column(i);
  }

  std::uint8_t downSets[1u << kMaxEvents];
  std::uint8_t upSets[1u << kMaxEvents];
  unsigned downCount = 0;
  unsigned upCount = 0;
  for (unsigned mask = 0; mask < limit; ++mask) {
    const IdSet s(static_cast<std::uint8_t>(mask));
    bool down = true;
    bool up = true;
    s.forEach([&](unsigned x) {
      down = down && cols[x].isSubsetOf(s);
      up = up && rows[x].isSubsetOf(s);
    });
    if (down) downSets[downCount++] = static_cast<std::uint8_t>(mask);
    if (up) upSets[upCount++] = static_cast<std::uint8_t>(mask);
  }

  for (unsigned d = 0; d < downCount; ++d) {
    const IdSet alpha(downSets[d]);
    // Every beta entry must be reachable from every alpha entry inside A.
    IdSet allowed = IdSet::firstN(n);
    alpha.forEach([&](unsigned i) { allowed &= rows[i]; });
    for (unsigned u = 0; u < upCount; ++u) {
      const IdSet beta(upSets[u]);
      if (beta.isSubsetOf(allowed)) f(ExtensionPair{alpha, beta});
    }
  }
}

Rel border(const Rel& a, std::size_t n, const ExtensionPair& ext) {
  std::uint64_t bits = a.bits();
  ext.alpha.forEach([&](unsigned i) { bits |= std::uint64_t{1} << (i * 8 + n); });
  bits |= std::uint64_t{ext.beta.bits()} << (n * 8);
  bits |= std::uint64_t{1} << (n * 9);
  return Rel::fromBits(bits);
}

template <bool kPosetsOnly>
void extendTo(const BoolMatrix& a, std::size_t n, const MatrixVisitor& visit) {
  if (a.order() == n) {
    visit(a);
    return;
  }
  forEachExtension(a, [&](const ExtensionPair& ext) {
    // A new element both below and above some i would tie it to i.
    if (kPosetsOnly && !(ext.alpha & ext.beta).empty()) return;
    extendTo<kPosetsOnly>(BoolMatrix::fromRel(border(a.asRel(), a.order(), ext), a.order() + 1), n, visit);
  });
}

}  // namespace

BoolMatrix borderedMatrix(const BoolMatrix& a, const ExtensionPair& ext) {
  checkOrder(a.order() + 1);
  return BoolMatrix::fromRel(border(a.asRel(), a.order(), ext), a.order() + 1);
}

std::vector<ExtensionPair> validExtensions(const BoolMatrix& a) {
  checkOrder(a.order() + 1);
  std::vector<ExtensionPair> out;
  forEachExtension(a, [&](const ExtensionPair& ext) { out.push_back(ext); });
  return out;
}

void forEachPreorder(std::size_t n, const MatrixVisitor& visit) {
  checkOrder(n);
  extendTo<false>(BoolMatrix(0), n, visit);
}

void forEachPosetMatrix(std::size_t n, const MatrixVisitor& visit) {
  checkOrder(n);
  extendTo<true>(BoolMatrix(0), n, visit);
}

std::vector<BoolMatrix> enumeratePreorders(std::size_t n) {
  std::vector<BoolMatrix> out;
  forEachPreorder(n, [&](const BoolMatrix& m) { out.push_back(m); });
  return out;
}

std::vector<BoolMatrix> enumerateStrictPreorders(std::size_t n) {
  std::vector<BoolMatrix> out;
  forEachPreorder(n, [&](const BoolMatrix& m) { out.push_back(setDiag(m, false)); });
  return out;
}

bool hasNoSymmetricEntries(const BoolMatrix& a) {
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      if (a(i, j) && a(j, i)) return false;
    }
  }
  return true;
}

std::vector<BoolMatrix> enumerateStrictPosets(std::size_t n) {
  std::vector<BoolMatrix> out;
  for (auto& m : enumerateStrictPreorders(n)) {
    if (hasNoSymmetricEntries(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Rel> enumeratePosets(std::size_t n) {
  std::vector<Rel> out;
  forEachPosetMatrix(n, [&](const BoolMatrix& m) { out.push_back(matrixToRel(m)); });
  return out;
}

std::uint64_t countPreorders(std::size_t n) {
  std::uint64_t count = 0;
  forEachPreorder(n, [&](const BoolMatrix&) { ++count; });
  return count;
}

std::uint64_t countPosets(std::size_t n) {
  std::uint64_t count = 0;
  forEachPosetMatrix(n, [&](const BoolMatrix&) { ++count; });
  return count;
}

}  // namespace evenum
