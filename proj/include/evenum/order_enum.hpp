#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "evenum/relations.hpp"

namespace evenum {

/// Border for growing an order-n matrix A to order n+1:
///   B = [[A, alpha], [beta^T, 1]]
/// so alpha is the new last column and beta the new last row.
struct ExtensionPair {
  IdSet alpha;
  IdSet beta;

  bool operator==(const ExtensionPair&) const = default;
};

/// Builds B from A and the border.
BoolMatrix borderedMatrix(const BoolMatrix& a, const ExtensionPair& ext);

/// All borders keeping a reflexive+transitive A reflexive+transitive:
/// alpha down-closed, beta up-closed and alpha(i) & beta(j) -> A(i, j).
/// Ordered by alpha mask, then beta mask, both ascending.
std::vector<ExtensionPair> validExtensions(const BoolMatrix& a);

using MatrixVisitor = std::function<void(const BoolMatrix&)>;

/// Streams every reflexive, transitive n x n matrix in recursion order.
void forEachPreorder(std::size_t n, const MatrixVisitor& visit);
/// Streams every n x n partial order matrix (diagonal set), in the order they
/// appear among the preorders. Non-antisymmetric prefixes are pruned.
void forEachPosetMatrix(std::size_t n, const MatrixVisitor& visit);

std::vector<BoolMatrix> enumeratePreorders(std::size_t n);
std::vector<BoolMatrix> enumerateStrictPreorders(std::size_t n);
std::vector<BoolMatrix> enumerateStrictPosets(std::size_t n);
std::vector<Rel> enumeratePosets(std::size_t n);

std::uint64_t countPreorders(std::size_t n);
std::uint64_t countPosets(std::size_t n);

/// True iff no i != j has both entries set.
bool hasNoSymmetricEntries(const BoolMatrix& a);

}  // namespace evenum
