#include <gtest/gtest.h>

#include <random>

#include "evenum/order_enum.hpp"
#include "evenum/relations.hpp"
#include "naive_reference.hpp"

using namespace evenum;

namespace {

const Rel kChain2{{0, 0}, {0, 1}, {1, 1}};
const Rel kAntichain2{{0, 0}, {1, 1}};
const Rel kChain3{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
const Rel kVee{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}};
const Rel kMutual{{0, 1}, {1, 0}};

}  // namespace

TEST(Relations, DomainRangeField) {
  EXPECT_EQ(fieldOf(Rel{{0, 1}}), (IdSet{0, 1}));
  EXPECT_EQ(domainOf(Rel{}), IdSet{});
  EXPECT_EQ(fieldOf(kChain2), (IdSet{0, 1}));
  EXPECT_EQ(domainOf(Rel{{2, 5}}), IdSet{2});
  EXPECT_EQ(rangeOf(Rel{{2, 5}}), IdSet{5});
}

TEST(Relations, Image) {
  EXPECT_EQ(image(Rel{{0, 1}, {1, 2}}, IdSet{0, 1}), (IdSet{1, 2}));
  EXPECT_EQ(image(kChain3, IdSet{}), IdSet{});
  EXPECT_EQ(image(kChain2, IdSet{0}), (IdSet{0, 1}));
}

TEST(Relations, Inverse) {
  EXPECT_EQ(inverse(Rel{{0, 1}}), (Rel{{1, 0}}));
  EXPECT_EQ(inverse(Rel{}), Rel{});
  EXPECT_EQ(inverse(Rel{{7, 0}, {3, 5}}), (Rel{{0, 7}, {5, 3}}));
}

TEST(Relations, BasicPredicates) {
  EXPECT_FALSE(isTransitive(Rel{{0, 1}, {1, 2}}));
  EXPECT_TRUE(isSymmetric(kMutual));
  EXPECT_FALSE(isIrreflexive(Rel{{0, 0}}));
  EXPECT_TRUE(isReflexiveOn(kChain2, IdSet{0, 1}));
  EXPECT_FALSE(isReflexiveOn(kChain2, IdSet{0}));  // field must lie inside the set
  EXPECT_FALSE(isReflexiveOn(Rel{{0, 0}}, IdSet{0, 1}));
}

TEST(Relations, PartialOrder) {
  EXPECT_TRUE(isPartialOrder(kChain2));
  EXPECT_FALSE(isPartialOrder(Rel{{0, 1}, {1, 0}, {0, 0}, {1, 1}}));
  EXPECT_TRUE(isPartialOrder(Rel{}));
  EXPECT_FALSE(isPartialOrder(Rel{{0, 1}}));
}

TEST(Relations, Propagation) {
  EXPECT_TRUE(propagatesOver(Rel{}, kChain3));
  EXPECT_TRUE(propagatesOver(kMutual, kAntichain2));
  // 1 # 0 and 0 ->* 1 would force 1 # 1.
  EXPECT_FALSE(propagatesOver(kMutual, kChain2));
}

TEST(Relations, EventStructurePredicate) {
  EXPECT_TRUE(isEventStructure(kAntichain2, kMutual));
  EXPECT_FALSE(isEventStructure(kChain2, kMutual));
  EXPECT_TRUE(isEventStructure(Rel{}, Rel{}));
  EXPECT_FALSE(isEventStructure(Rel{{0, 0}}, Rel{{0, 1}, {1, 0}}));  // conflict outside the events
}

TEST(Relations, RemoveElement) {
  EXPECT_EQ(removeElement(kChain2, 0), (Rel{{1, 1}}));
  EXPECT_EQ(removeElement(kChain2, 5), kChain2);
  EXPECT_EQ(removeElement(Rel{{0, 0}}, 0), Rel{});
}

TEST(Relations, MinimalElements) {
  EXPECT_EQ(minimalElements(kChain2), IdSet{0});
  EXPECT_EQ(minimalElements(kAntichain2), (IdSet{0, 1}));
  EXPECT_EQ(minimalElements(Rel{}), IdSet{});
}

TEST(Relations, CoveringRelation) {
  EXPECT_EQ(coveringRelation(kChain3), (Rel{{0, 1}, {1, 2}}));
  EXPECT_EQ(coveringRelation(kAntichain2), Rel{});
  EXPECT_EQ(immediateSuccessors(kChain3, 0), IdSet{1});
  EXPECT_EQ(immediateSuccessors(kAntichain2, 0), IdSet{});
  EXPECT_EQ(immediateSuccessors(kVee, 0), (IdSet{1, 2}));
}

TEST(Relations, Matrices) {
  const BoolMatrix m = relToMatrix(Rel{{0, 1}}, 2);
  EXPECT_EQ(m, (BoolMatrix{{false, true}, {false, false}}));
  EXPECT_EQ(setDiag(m, true), (BoolMatrix{{true, true}, {false, true}}));
  EXPECT_EQ(matrixToRel(BoolMatrix(2)), Rel{});
  EXPECT_THROW(relToMatrix(Rel{{0, 2}}, 2), OutOfRange);
  EXPECT_THROW((BoolMatrix{{true, false}, {true}}), std::invalid_argument);
  EXPECT_THROW(BoolMatrix(kMaxEvents + 1), OutOfRange);
}

TEST(Relations, Closure) {
  EXPECT_EQ(reflexiveTransitiveClosure(Rel{{0, 1}, {1, 2}}, IdSet{0, 1, 2}), kChain3);
  EXPECT_EQ(reflexiveTransitiveClosure(Rel{}, IdSet{0}), (Rel{{0, 0}}));
  const Rel once = reflexiveTransitiveClosure(Rel{{3, 1}, {1, 4}}, IdSet{1, 3, 4});
  EXPECT_EQ(reflexiveTransitiveClosure(once, IdSet{1, 3, 4}), once);
}

TEST(Relations, RejectsIdsBeyondCapacity) {
  Rel r;
  EXPECT_THROW(r.insert(0, kMaxEvents), OutOfRange);
  EXPECT_THROW((IdSet{kMaxEvents}), OutOfRange);
}

TEST(Relations, ToString) {
  EXPECT_EQ(toString(kChain2), "{(0,0), (0,1), (1,1)}");
  EXPECT_EQ(toString(Rel{}), "{}");
  EXPECT_EQ(toString(IdSet{1, 3}), "{1, 3}");
}

// ---------------------------------------------------------------------------
// Properties

TEST(RelationsProperty, MatrixRoundTripExhaustiveSmall) {
  for (std::size_t n = 0; n <= 2; ++n) {
    const unsigned cells = unsigned(n * n);
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      Rel r;
      for (unsigned k = 0; k < cells; ++k) {
        if ((mask >> k) & 1u) r.insert(unsigned(k / n), unsigned(k % n));
      }
      const BoolMatrix m = relToMatrix(r, n);
      ASSERT_EQ(matrixToRel(m), r);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(m(i, j), r.contains(unsigned(i), unsigned(j)));
      }
    }
  }
}

TEST(RelationsProperty, MatrixRoundTripRandom) {
  std::mt19937 rng(20170401);
  for (unsigned n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const Rel r = naive::randomRel(rng, n, 0.4);
      ASSERT_EQ(matrixToRel(relToMatrix(r, n)), r);
    }
  }
}

TEST(RelationsProperty, TransposeAgreesWithNaive) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rel r = naive::randomRel(rng, kMaxEvents, 0.5);
    naive::PairSet expected;
    for (auto [x, y] : naive::toSet(r)) expected.emplace(y, x);
    ASSERT_EQ(naive::toSet(inverse(r)), expected);
    for (unsigned m = 0; m < kMaxEvents; ++m) {
      IdSet pred;
      for (unsigned x = 0; x < kMaxEvents; ++x) {
        if (r.contains(x, m)) pred.insert(x);
      }
      ASSERT_EQ(image(inverse(r), IdSet{m}), pred);
      ASSERT_EQ(r.predecessors(m), pred);
    }
  }
}

TEST(RelationsProperty, PredicatesAgreeWithQuantifierExpansion) {
  // Exhaustive over all relation pairs on {0,1,2} would be 2^18 squared; take
  // every causality on three events against a random sample of conflicts,
  // plus every conflict against every poset.
  std::mt19937 rng(99);
  const unsigned n = 3;
  std::vector<Rel> all;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    Rel r;
    for (unsigned k = 0; k < 9; ++k) {
      if ((mask >> k) & 1u) r.insert(k / 3, k % 3);
    }
    all.push_back(r);
  }
  for (const Rel& o : all) {
    const auto so = naive::toSet(o);
    ASSERT_EQ(isPartialOrder(o), naive::partialOrder(so)) << toString(o);
    ASSERT_EQ(isTransitive(o), naive::transitive(so)) << toString(o);
    ASSERT_EQ(isAntisymmetric(o), naive::antisymmetric(so)) << toString(o);
    ASSERT_EQ(isSymmetric(o), naive::symmetric(so)) << toString(o);
    ASSERT_EQ(isIrreflexive(o), naive::irreflexive(so)) << toString(o);
    for (int k = 0; k < 16; ++k) {
      const Rel c = all[rng() % all.size()];
      const auto sc = naive::toSet(c);
      ASSERT_EQ(propagatesOver(c, o), naive::propagates(sc, so)) << toString(o) << ' ' << toString(c);
      ASSERT_EQ(isEventStructure(o, c), naive::eventStructure(so, sc)) << toString(o) << ' ' << toString(c);
    }
  }
  for (const auto& m : enumeratePosets(n)) {
    const auto so = naive::toSet(m);
    for (const Rel& c : all) {
      const auto sc = naive::toSet(c);
      ASSERT_EQ(propagatesOver(c, m), naive::propagates(sc, so));
      ASSERT_EQ(isEventStructure(m, c), naive::eventStructure(so, sc));
    }
  }
}

TEST(RelationsProperty, CoveringRoundTripAndMinimalElements) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Rel& p : enumeratePosets(n)) {
      const Rel cover = coveringRelation(p);
      ASSERT_EQ(naive::toSet(cover), naive::covering(naive::toSet(p))) << toString(p);
      ASSERT_EQ(reflexiveTransitiveClosure(cover, fieldOf(p)), p) << toString(p);
      ASSERT_FALSE(minimalElements(p).empty()) << toString(p);
    }
  }
}
