#include "dupalg/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace dupalg {

Bits close_span(const ActionTables& t, const Bits& seed) {
  Bits in(t.elements);
  std::vector<Index> list;
  list.reserve(t.elements);
  auto push = [&](Index x) {
    if (!in.test(x)) {
      in.set(x);
      list.push_back(x);
    }
  };
  push(t.zero);
  for (auto k = seed.find_first(); k != Bits::npos; k = seed.find_next(k)) {
    push(static_cast<Index>(k));
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Index x = list[k];
    for (Index r = 0; r < t.scalars; ++r) push(t.apply(r, x));
    // list may grow while we read it; index, never iterate.
    for (std::size_t j = 0; j <= k; ++j) push(t.sum(x, list[j]));
  }
  return in;
}

Bits cyclic_span(const ActionTables& t, Index g) {
  Bits out(t.elements);
  for (Index r = 0; r < t.scalars; ++r) out.set(t.apply(r, g));
  out.set(t.zero);
  return out;
}

Bits add_closed(const ActionTables& t, const Bits& lhs, const Bits& rhs) {
  Bits out = lhs;
  const IndexSet base = from_bits(lhs);
  for (auto c = rhs.find_first(); c != Bits::npos; c = rhs.find_next(c)) {
    if (out.test(c)) continue;  // coset lhs + c is already present
    for (Index k : base) out.set(t.sum(k, static_cast<Index>(c)));
  }
  return out;
}

Bits add_cyclic(const ActionTables& t, const Bits& closed, Index g) {
  return add_closed(t, closed, cyclic_span(t, g));
}

std::vector<IndexSet> enumerate_closed(const ActionTables& t) {
  std::vector<Bits> cyclics;
  {
    std::unordered_set<Bits> seen;
    for (Index g = 0; g < t.elements; ++g) {
      Bits c = cyclic_span(t, g);
      if (seen.insert(c).second) cyclics.push_back(std::move(c));
    }
  }

  std::vector<Bits> found;
  std::unordered_set<Bits> seen;
  Bits zero(t.elements);
  zero.set(t.zero);
  found.push_back(zero);
  seen.insert(zero);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const Bits& c : cyclics) {
      if (c.is_subset_of(found[k])) continue;
      Bits joined = add_closed(t, found[k], c);
      if (seen.insert(joined).second) found.push_back(std::move(joined));
    }
  }

  std::vector<IndexSet> out;
  out.reserve(found.size());
  for (const Bits& b : found) out.push_back(from_bits(b));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace dupalg
