#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dupalg {

/// Position of an element in the carrier of a table ring or table module.
using Index = std::uint32_t;

/// Sorted, duplicate-free list of carrier indices.
using IndexSet = std::vector<Index>;

/// Membership mask over a carrier; bit k set iff element k is a member.
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Axiom or closure violation, or an argument that does not belong to the
/// structure it is used with.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A predicate that requires a proper ideal or submodule was handed the
/// whole ring or module.
class ImproperError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Carrier size above which cubic axiom checks are skipped.
inline constexpr std::size_t kDefaultValidationBound = 256;

Bits to_bits(const IndexSet& members, std::size_t carrier_size);
IndexSet from_bits(const Bits& bits);

/// Lexicographic comparison used for every canonical ordering of subsets:
/// smaller sets first, then lexicographic on the sorted members.
bool canonical_less(const IndexSet& lhs, const IndexSet& rhs);

/// Renders "{l0,l1,...}" using the given label lookup.
std::string render_set(const IndexSet& members,
                       const std::function<std::string(Index)>& label);

}  // namespace dupalg
