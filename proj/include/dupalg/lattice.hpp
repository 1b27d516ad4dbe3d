#pragma once

// Closure and enumeration of subsets closed under addition and a scalar
// action. Ideals (action = ring multiplication) and submodules (action =
// module action) both go through here.

#include <span>
#include <vector>

#include "dupalg/common.hpp"

namespace dupalg {

/// Read-only view of an additive group with a scalar action, both given as
/// row-major tables: add[x * elements + y], act[r * elements + x].
struct ActionTables {
  std::size_t scalars = 0;
  std::size_t elements = 0;
  std::span<const Index> add;
  std::span<const Index> act;
  Index zero = 0;

  Index sum(Index x, Index y) const { return add[x * elements + y]; }
  Index apply(Index r, Index x) const { return act[r * elements + x]; }
};

/// Smallest subset containing `seed` and zero that is closed under addition
/// and the action. Finite additive closure already gives inverses.
Bits close_span(const ActionTables& t, const Bits& seed);

/// {r . g : r scalar}; already closed because the action is bilinear.
Bits cyclic_span(const ActionTables& t, Index g);

/// closed + cyclic_span(g), for a `closed` subset that is already closed.
Bits add_cyclic(const ActionTables& t, const Bits& closed, Index g);

/// Sum of two closed subsets (the set of pairwise sums, itself closed).
Bits add_closed(const ActionTables& t, const Bits& lhs, const Bits& rhs);

/// Every closed subset, in canonical (size, lexicographic) order. Obtained
/// by repeatedly joining cyclic spans onto already-found subsets, starting
/// from {zero}, until no new subset appears.
std::vector<IndexSet> enumerate_closed(const ActionTables& t);

}  // namespace dupalg
