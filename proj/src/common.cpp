#include "dupalg/common.hpp"

#include <algorithm>

namespace dupalg {

Bits to_bits(const IndexSet& members, std::size_t carrier_size) {
  Bits bits(carrier_size);
  for (Index m : members) {
    if (m >= carrier_size) {
      throw AlgebraError("index " + std::to_string(m) + " outside carrier of size " +
                         std::to_string(carrier_size));
    }
    bits.set(m);
  }
  return bits;
}

IndexSet from_bits(const Bits& bits) {
  IndexSet out;
  out.reserve(bits.count());
  for (auto k = bits.find_first(); k != Bits::npos; k = bits.find_next(k)) {
    out.push_back(static_cast<Index>(k));
  }
  return out;
}

bool canonical_less(const IndexSet& lhs, const IndexSet& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::string render_set(const IndexSet& members,
                       const std::function<std::string(Index)>& label) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) out += ',';
    out += label(members[k]);
  }
  out += '}';
  return out;
}

}  // namespace dupalg
