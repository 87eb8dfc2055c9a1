#include "evenum/relations.hpp"

#include <algorithm>
#include <sstream>

namespace evenum {

namespace {

constexpr std::uint64_t kDiagonal = 0x8040201008040201ull;

constexpr std::uint64_t rowMask(unsigned x) { return std::uint64_t{0xFF} << (x * 8); }

std::uint64_t transpose(std::uint64_t m) {
  // Standard 8x8 bit-matrix transpose by three block swaps.
  std::uint64_t t = (m ^ (m >> 7)) & 0x00AA00AA00AA00AAull;
  m ^= t ^ (t << 7);
  t = (m ^ (m >> 14)) & 0x0000CCCC0000CCCCull;
  m ^= t ^ (t << 14);
  t = (m ^ (m >> 28)) & 0x00000000F0F0F0F0ull;
  m ^= t ^ (t << 28);
  return m;
}

std::uint64_t diagonalOf(IdSet s) {
  std::uint64_t d = 0;
  s.forEach([&](unsigned x) { d |= std::uint64_t{1} << (x * 9); });
  return d;
}

}  // namespace

void checkEventId(unsigned id) {
  if (id >= kMaxEvents) {
    throw OutOfRange("event id " + std::to_string(id) + " exceeds the supported maximum of " +
                     std::to_string(kMaxEvents - 1));
  }
}

// ---------------------------------------------------------------------------
// IdSet

IdSet::IdSet(std::initializer_list<unsigned> ids) {
  for (unsigned id : ids) insert(id);
}

std::vector<unsigned> IdSet::elements() const {
  std::vector<unsigned> out;
  out.reserve(size());
  forEach([&](unsigned x) { out.push_back(x); });
  return out;
}

std::string toString(IdSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.forEach([&](unsigned x) {
    if (!first) os << ", ";
    first = false;
    os << x;
  });
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// Rel

Rel::Rel(std::initializer_list<Pair> pairs) {
  for (auto [x, y] : pairs) insert(x, y);
}

Rel::Rel(const std::vector<Pair>& pairs) {
  for (auto [x, y] : pairs) insert(x, y);
}

Rel Rel::identityOn(IdSet s) { return fromBits(diagonalOf(s)); }

void Rel::insert(unsigned x, unsigned y) {
  checkEventId(x);
  checkEventId(y);
  bits_ |= std::uint64_t{1} << (x * 8 + y);
}

IdSet Rel::predecessors(unsigned y) const {
  if (y >= kMaxEvents) return {};
  return IdSet(static_cast<std::uint8_t>(transpose(bits_) >> (y * 8)));
}

std::vector<Pair> Rel::pairs() const {
  std::vector<Pair> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    auto bit = static_cast<unsigned>(std::countr_zero(rest));
    out.emplace_back(bit / 8, bit % 8);
  }
  return out;
}

bool pairListLess(const Rel& a, const Rel& b) {
  const auto pa = a.pairs();
  const auto pb = b.pairs();
  return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

std::string toString(const Rel& r) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [x, y] : r.pairs()) {
    if (!first) os << ", ";
    first = false;
    os << '(' << x << ',' << y << ')';
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// BoolMatrix

BoolMatrix::BoolMatrix(std::size_t order) : order_(order) {
  if (order > kMaxEvents) {
    throw OutOfRange("matrix order " + std::to_string(order) + " exceeds " + std::to_string(kMaxEvents));
  }
}

BoolMatrix::BoolMatrix(std::initializer_list<std::initializer_list<bool>> rows) : BoolMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("BoolMatrix rows must form a square");
    std::size_t j = 0;
    for (bool v : row) set(i, j++, v);
    ++i;
  }
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= order_ || j >= order_) throw OutOfRange("matrix index out of range");
  if (value) {
    rel_.insert(unsigned(i), unsigned(j));
  } else {
    rel_.erase(unsigned(i), unsigned(j));
  }
}

bool BoolMatrix::isReflexive() const { return isReflexiveOn(rel_, IdSet::firstN(order_)); }

bool BoolMatrix::isTransitive() const { return evenum::isTransitive(rel_); }

BoolMatrix BoolMatrix::fromRel(const Rel& r, std::size_t order) {
  BoolMatrix m(order);
  if (!fieldOf(r).isSubsetOf(IdSet::firstN(order))) {
    throw OutOfRange("relation " + toString(r) + " does not fit in a matrix of order " + std::to_string(order));
  }
  m.rel_ = r;
  return m;
}

// ---------------------------------------------------------------------------
// Set operators

IdSet domainOf(const Rel& r) {
  std::uint8_t d = 0;
  for (unsigned x = 0; x < kMaxEvents; ++x) {
    if (r.bits() & rowMask(x)) d = static_cast<std::uint8_t>(d | (1u << x));
  }
  return IdSet(d);
}

IdSet rangeOf(const Rel& r) { return image(r, IdSet(0xFF)); }

IdSet fieldOf(const Rel& r) { return domainOf(r) | rangeOf(r); }

IdSet image(const Rel& r, IdSet s) {
  IdSet out;
  s.forEach([&](unsigned x) { out |= r.successors(x); });
  return out;
}

Rel inverse(const Rel& r) { return Rel::fromBits(transpose(r.bits())); }

bool isReflexiveOn(const Rel& r, IdSet s) {
  const std::uint64_t d = diagonalOf(s);
  return fieldOf(r).isSubsetOf(s) && (r.bits() & d) == d;
}

bool isTransitive(const Rel& r) {
  for (unsigned x = 0; x < kMaxEvents; ++x) {
    const IdSet succ = r.successors(x);
    bool ok = true;
    succ.forEach([&](unsigned y) { ok = ok && r.successors(y).isSubsetOf(succ); });
    if (!ok) return false;
  }
  return true;
}

bool isAntisymmetric(const Rel& r) { return ((r.bits() & transpose(r.bits())) & ~kDiagonal) == 0; }

bool isSymmetric(const Rel& r) { return r.bits() == transpose(r.bits()); }

bool isIrreflexive(const Rel& r) { return (r.bits() & kDiagonal) == 0; }

bool isPartialOrder(const Rel& r) {
  return isReflexiveOn(r, fieldOf(r)) && isTransitive(r) && isAntisymmetric(r);
}

bool propagatesOver(const Rel& c, const Rel& o) {
  bool ok = true;
  fieldOf(o).forEach([&](unsigned x) {
    const IdSet cx = c.successors(x);
    o.successors(x).forEach([&](unsigned y) { ok = ok && cx.isSubsetOf(c.successors(y)); });
  });
  return ok;
}

bool isEventStructure(const Rel& o, const Rel& c) {
  return isIrreflexive(c) && isSymmetric(c) && fieldOf(c).isSubsetOf(fieldOf(o)) && propagatesOver(c, o) &&
         isPartialOrder(o);
}

Rel removeElement(const Rel& p, unsigned m) {
  if (m >= kMaxEvents) return p;
  const std::uint64_t column = std::uint64_t{0x0101010101010101ull} << m;
  return Rel::fromBits(p.bits() & ~rowMask(m) & ~column);
}

IdSet minimalElements(const Rel& p) {
  IdSet out;
  domainOf(p).forEach([&](unsigned m) {
    IdSet below = p.predecessors(m);
    below.erase(m);
    if (below.empty()) out.insert(m);
  });
  return out;
}

Rel coveringRelation(const Rel& p) {
  std::uint64_t out = 0;
  for (unsigned x = 0; x < kMaxEvents; ++x) {
    IdSet strict = p.successors(x);
    strict.erase(x);
    IdSet covers = strict;
    strict.forEach([&](unsigned y) {
      IdSet above = p.successors(y);
      above.erase(y);
      covers = covers - above;
    });
    out |= std::uint64_t{covers.bits()} << (x * 8);
  }
  return Rel::fromBits(out);
}

IdSet immediateSuccessors(const Rel& p, unsigned m) {
  if (m >= kMaxEvents) return {};
  IdSet strict = p.successors(m);
  strict.erase(m);
  IdSet covers = strict;
  strict.forEach([&](unsigned y) {
    IdSet above = p.successors(y);
    above.erase(y);
    covers = covers - above;
  });
  return covers;
}

// ---------------------------------------------------------------------------
// Matrices

Rel matrixToRel(const BoolMatrix& a) { return a.asRel(); }

BoolMatrix relToMatrix(const Rel& r, std::size_t n) { return BoolMatrix::fromRel(r, n); }

BoolMatrix setDiag(BoolMatrix a, bool value) {
  for (std::size_t i = 0; i < a.order(); ++i) a.set(i, i, value);
  return a;
}

Rel reflexiveTransitiveClosure(const Rel& r, IdSet carrier) {
  std::uint64_t rows[kMaxEvents];
  for (unsigned x = 0; x < kMaxEvents; ++x) {
    rows[x] = r.successors(x).bits();
    if (carrier.contains(x)) rows[x] |= 1u << x;
  }
  // Warshall
  for (unsigned k = 0; k < kMaxEvents; ++k) {
    for (unsigned i = 0; i < kMaxEvents; ++i) {
      if ((rows[i] >> k) & 1u) rows[i] |= rows[k];
    }
  }
  std::uint64_t bits = 0;
  for (unsigned x = 0; x < kMaxEvents; ++x) bits |= rows[x] << (x * 8);
  return Rel::fromBits(bits);
}

}  // namespace evenum
