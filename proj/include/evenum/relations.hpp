#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenum {

// Events are the dense ids 0..n-1. Every relation is stored as a packed 8x8
// bit matrix, so n is capped at kMaxEvents.
inline constexpr std::size_t kMaxEvents = 8;

using EventId = std::uint8_t;
using Pair = std::pair<unsigned, unsigned>;

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

void checkEventId(unsigned id);

/// A set of event ids, one bit per id.
class IdSet {
 public:
  constexpr IdSet() = default;
  constexpr explicit IdSet(std::uint8_t bits) : bits_(bits) {}
  IdSet(std::initializer_list<unsigned> ids);

  /// {0, ..., n-1}
  static constexpr IdSet firstN(std::size_t n) {
    return IdSet(static_cast<std::uint8_t>(n >= 8 ? 0xFFu : (1u << n) - 1u));
  }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(unsigned id) const { return id < kMaxEvents && ((bits_ >> id) & 1u); }
  /// Smallest member; undefined when empty.
  constexpr unsigned min() const { return static_cast<unsigned>(std::countr_zero(bits_)); }

  void insert(unsigned id) {
    checkEventId(id);
    bits_ = static_cast<std::uint8_t>(bits_ | (1u << id));
  }
  constexpr void erase(unsigned id) {
    if (id < kMaxEvents) bits_ = static_cast<std::uint8_t>(bits_ & ~(1u << id));
  }

  constexpr bool isSubsetOf(IdSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr IdSet operator|(IdSet o) const { return IdSet(static_cast<std::uint8_t>(bits_ | o.bits_)); }
  constexpr IdSet operator&(IdSet o) const { return IdSet(static_cast<std::uint8_t>(bits_ & o.bits_)); }
  constexpr IdSet operator-(IdSet o) const { return IdSet(static_cast<std::uint8_t>(bits_ & ~o.bits_)); }
  constexpr IdSet& operator|=(IdSet o) { return *this = *this | o; }
  constexpr IdSet& operator&=(IdSet o) { return *this = *this & o; }

  constexpr bool operator==(const IdSet&) const = default;

  /// Members in increasing order.
  std::vector<unsigned> elements() const;

  template <typename F>
  void forEach(F&& f) const {
    for (std::uint8_t rest = bits_; rest != 0; rest = static_cast<std::uint8_t>(rest & (rest - 1))) {
      f(static_cast<unsigned>(std::countr_zero(rest)));
    }
  }

 private:
  std::uint8_t bits_ = 0;
};

/// Finite binary relation over event ids. Set-of-pairs semantics; the carrier
/// is whatever fieldOf() says. Bit 8*x + y stands for the pair (x, y).
class Rel {
 public:
  constexpr Rel() = default;
  Rel(std::initializer_list<Pair> pairs);
  explicit Rel(const std::vector<Pair>& pairs);

  static constexpr Rel fromBits(std::uint64_t bits) {
    Rel r;
    r.bits_ = bits;
    return r;
  }
  /// {(x, x) | x in s}
  static Rel identityOn(IdSet s);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(unsigned x, unsigned y) const {
    return x < kMaxEvents && y < kMaxEvents && ((bits_ >> (x * 8 + y)) & 1u);
  }
  void insert(unsigned x, unsigned y);
  constexpr void erase(unsigned x, unsigned y) {
    if (x < kMaxEvents && y < kMaxEvents) bits_ &= ~(std::uint64_t{1} << (x * 8 + y));
  }

  /// {y | (x, y) in r}
  constexpr IdSet successors(unsigned x) const {
    return x < kMaxEvents ? IdSet(static_cast<std::uint8_t>(bits_ >> (x * 8))) : IdSet();
  }
  /// {x | (x, y) in r}
  IdSet predecessors(unsigned y) const;

  /// Sorted lexicographically by (first, second).
  std::vector<Pair> pairs() const;

  constexpr Rel operator|(Rel o) const { return fromBits(bits_ | o.bits_); }
  constexpr Rel operator&(Rel o) const { return fromBits(bits_ & o.bits_); }
  constexpr Rel operator-(Rel o) const { return fromBits(bits_ & ~o.bits_); }
  constexpr bool isSubsetOf(Rel o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr bool operator==(const Rel&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted pair lists.
bool pairListLess(const Rel& a, const Rel& b);

std::string toString(const Rel& r);  // "{(0,0), (0,1)}"
std::string toString(IdSet s);       // "{0, 1}"

struct RelHash {
  std::size_t operator()(const Rel& r) const noexcept { return std::hash<std::uint64_t>{}(r.bits()); }
};

/// A causality/conflict pair. Validity is checked with isEventStructure(); the
/// type itself does not enforce it.
struct EventStructure {
  Rel causality;
  Rel conflict;

  bool operator==(const EventStructure&) const = default;
};

struct EventStructureHash {
  std::size_t operator()(const EventStructure& es) const noexcept {
    return std::hash<std::uint64_t>{}(es.causality.bits() * 0x9E3779B97F4A7C15ull ^ es.conflict.bits());
  }
};

/// Square boolean matrix, entry(i, j) true iff (i, j) is in the relation.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t order);
  /// Row-major nested literal; throws std::invalid_argument unless square.
  BoolMatrix(std::initializer_list<std::initializer_list<bool>> rows);

  std::size_t order() const { return order_; }
  bool operator()(std::size_t i, std::size_t j) const { return rel_.contains(unsigned(i), unsigned(j)); }
  void set(std::size_t i, std::size_t j, bool value);

  /// Row i / column j as id sets.
  IdSet row(std::size_t i) const { return rel_.successors(unsigned(i)); }
  IdSet column(std::size_t j) const { return rel_.predecessors(unsigned(j)); }

  bool isReflexive() const;
  bool isTransitive() const;

  const Rel& asRel() const { return rel_; }
  static BoolMatrix fromRel(const Rel& r, std::size_t order);

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  Rel rel_;
};

IdSet domainOf(const Rel& r);
IdSet rangeOf(const Rel& r);
IdSet fieldOf(const Rel& r);

/// {y | exists x in s with (x, y) in r}
IdSet image(const Rel& r, IdSet s);
Rel inverse(const Rel& r);

bool isReflexiveOn(const Rel& r, IdSet s);
bool isTransitive(const Rel& r);
bool isAntisymmetric(const Rel& r);
bool isSymmetric(const Rel& r);
bool isIrreflexive(const Rel& r);
bool isPartialOrder(const Rel& r);

/// Conflict c propagates over order o: x o y implies c[x] is a subset of c[y].
bool propagatesOver(const Rel& c, const Rel& o);
bool isEventStructure(const Rel& o, const Rel& c);
inline bool isEventStructure(const EventStructure& es) { return isEventStructure(es.causality, es.conflict); }

/// Drops every pair mentioning m.
Rel removeElement(const Rel& p, unsigned m);

// The following require p to be a partial order.
IdSet minimalElements(const Rel& p);
Rel coveringRelation(const Rel& p);
IdSet immediateSuccessors(const Rel& p, unsigned m);

Rel matrixToRel(const BoolMatrix& a);
/// Throws OutOfRange if some id in r is >= n.
BoolMatrix relToMatrix(const Rel& r, std::size_t n);
BoolMatrix setDiag(BoolMatrix a, bool value);

Rel reflexiveTransitiveClosure(const Rel& r, IdSet carrier);

}  // namespace evenum
