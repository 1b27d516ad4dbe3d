#pragma once

// Finite commutative rings with identity, stored extensionally as Cayley
// tables, and their ideals.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dupalg/common.hpp"
#include "dupalg/lattice.hpp"

namespace dupalg {

class TableRing;
using RingPtr = std::shared_ptr<const TableRing>;

/// Finite commutative ring with identity. Immutable once created; every
/// instance has passed the ring-axiom validation in create().
class TableRing {
 public:
  /// Validates and wraps the given tables (row-major, size*size entries).
  /// Axioms needing all triples are checked only when size <= validation_bound.
  /// Throws AlgebraError naming the first violated axiom and its elements.
  static RingPtr create(std::size_t size, std::vector<Index> add, std::vector<Index> mul,
                        Index zero, Index one, std::vector<std::string> labels = {},
                        std::string name = {},
                        std::size_t validation_bound = kDefaultValidationBound);

  std::size_t size() const { return size_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  const std::string& name() const { return name_; }
  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  Index add(Index a, Index b) const { return add_[a * size_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * size_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  /// a^k with a^0 = one.
  Index pow(Index a, std::size_t k) const;

  std::span<const Index> add_table() const { return add_; }
  std::span<const Index> mul_table() const { return mul_; }

  /// The ring acting on itself by multiplication.
  ActionTables self_action() const;

  /// Index of the element carrying `label`, if any.
  std::optional<Index> find_label(const std::string& label) const;

 private:
  TableRing() = default;

  std::size_t size_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Integers modulo n, labels "0".."n-1". Throws for n == 0.
RingPtr make_zn(std::size_t n);

/// R1 x R2 with componentwise operations; element (i, j) sits at index
/// i * |R2| + j and is labelled "(li,lj)".
RingPtr direct_product(const RingPtr& lhs, const RingPtr& rhs);

struct Subring {
  RingPtr ring;
  std::vector<Index> embedding;  // subring index -> parent index (increasing)
};

/// Re-indexes a subset that contains zero and one and is closed under
/// addition, negation and multiplication. Elements keep their parent order
/// and labels. Throws AlgebraError naming the first pair that escapes.
Subring subring_from_subset(const RingPtr& ring, const IndexSet& subset,
                            std::string name = {});

class Ideal {
 public:
  /// Wraps a member set after checking that it is an ideal.
  static Ideal from_members(RingPtr ring, IndexSet members);
  static Ideal whole(RingPtr ring);
  static Ideal zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const IndexSet& members() const { return members_; }
  const Bits& bits() const { return bits_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index a) const { return bits_.test(a); }
  bool is_whole() const { return members_.size() == ring_->size(); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_subset_of(const Ideal& other) const { return bits_.is_subset_of(other.bits_); }

  std::string to_string() const;

  friend bool operator==(const Ideal& lhs, const Ideal& rhs) {
    return lhs.ring_ == rhs.ring_ && lhs.members_ == rhs.members_;
  }

 private:
  Ideal(RingPtr ring, Bits bits);
  friend Ideal make_ideal_unchecked(RingPtr ring, Bits bits);

  RingPtr ring_;
  IndexSet members_;
  Bits bits_;
};

/// Builds an ideal from a mask known to be closed. Internal fast path.
Ideal make_ideal_unchecked(RingPtr ring, Bits bits);

struct QuotientRing {
  RingPtr ring;
  std::vector<Index> projection;      // parent index -> coset index
  std::vector<Index> representative;  // coset index -> minimal parent member
};

/// R / J with cosets indexed (and labelled) by their minimal member.
QuotientRing quotient_ring(const Ideal& ideal);

Ideal ideal_generated(const RingPtr& ring, const IndexSet& generators);

/// Every ideal of the ring, in (size, lexicographic members) order.
std::vector<Ideal> enumerate_ideals(const RingPtr& ring);

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs);
Ideal ideal_product(const Ideal& lhs, const Ideal& rhs);
/// J^k with J^0 = whole ring.
Ideal ideal_power(const Ideal& ideal, std::size_t k);
Ideal ideal_intersection(const Ideal& lhs, const Ideal& rhs);

/// {a : a^k in J for some 1 <= k <= |R|}.
Ideal radical(const Ideal& ideal);

}  // namespace dupalg
