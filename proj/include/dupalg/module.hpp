#pragma once

// Finite unital modules over a TableRing, their submodules, colon
// constructions and module maps.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dupalg/ring.hpp"

namespace dupalg {

class TableModule;
using ModulePtr = std::shared_ptr<const TableModule>;

/// Finite unital module over a TableRing, given by an addition table and a
/// scalar-action table act[r * size + x] = r . x.
class TableModule {
 public:
  /// Validates the abelian-group and module axioms. Checks that need more
  /// than quadratic work run only when max(|R|, size) <= validation_bound.
  static ModulePtr create(RingPtr ring, std::size_t size, std::vector<Index> add,
                          std::vector<Index> act, Index zero,
                          std::vector<std::string> labels = {}, std::string name = {},
                          std::size_t validation_bound = kDefaultValidationBound);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return size_; }
  Index zero() const { return zero_; }
  const std::string& name() const { return name_; }
  const std::string& label(Index x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  Index add(Index x, Index y) const { return add_[x * size_ + y]; }
  Index act(Index r, Index x) const { return act_[r * size_ + x]; }
  Index neg(Index x) const { return neg_[x]; }
  Index sub(Index x, Index y) const { return add(x, neg(y)); }

  std::span<const Index> add_table() const { return add_; }
  std::span<const Index> act_table() const { return act_; }
  ActionTables action() const;

  std::optional<Index> find_label(const std::string& label) const;

 private:
  TableModule() = default;

  RingPtr ring_;
  std::size_t size_ = 0;
  std::vector<Index> add_;
  std::vector<Index> act_;
  std::vector<Index> neg_;
  Index zero_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
};

class Submodule {
 public:
  /// Wraps a member set after checking closure.
  static Submodule from_members(ModulePtr module, IndexSet members);
  static Submodule whole(ModulePtr module);
  static Submodule zero(ModulePtr module);

  const ModulePtr& module() const { return module_; }
  const IndexSet& members() const { return members_; }
  const Bits& bits() const { return bits_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const { return bits_.test(x); }
  bool is_whole() const { return members_.size() == module_->size(); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_subset_of(const Submodule& other) const { return bits_.is_subset_of(other.bits_); }

  std::string to_string() const;

  friend bool operator==(const Submodule& lhs, const Submodule& rhs) {
    return lhs.module_ == rhs.module_ && lhs.members_ == rhs.members_;
  }

 private:
  Submodule(ModulePtr module, Bits bits);
  friend Submodule make_submodule_unchecked(ModulePtr module, Bits bits);

  ModulePtr module_;
  IndexSet members_;
  Bits bits_;
};

/// Builds a submodule from a mask known to be closed. Internal fast path.
Submodule make_submodule_unchecked(ModulePtr module, Bits bits);

/// A map between modules over the same ring, as a table of target indices.
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<Index> table;
};

struct QuotientModule {
  ModulePtr module;
  ModuleMap projection;
  std::vector<Index> representative;  // coset index -> minimal member
};

ModulePtr ring_as_module(const RingPtr& ring);

Submodule submodule_generated(const ModulePtr& module, const IndexSet& generators);
Submodule cyclic_submodule(const ModulePtr& module, Index generator);

/// Every submodule in (size, lexicographic members) order.
std::vector<Submodule> enumerate_submodules(const ModulePtr& module);

/// (N : K) = {a : a K subset of N}.
Ideal colon_into_ring(const Submodule& n, const Submodule& k);
/// (N : M).
Ideal colon_into_ring(const Submodule& n);
/// (N : a) = {m : a m in N}.
Submodule colon_by_scalar(const Submodule& n, Index a);
/// (0 : K).
Ideal annihilator(const Submodule& k);
Ideal annihilator(const ModulePtr& module);

/// J K: the submodule generated by {j k : j in J, k in K}.
Submodule ideal_action(const Ideal& ideal, const Submodule& k);

Submodule submodule_sum(const Submodule& lhs, const Submodule& rhs);
Submodule submodule_intersection(const Submodule& lhs, const Submodule& rhs);

/// M / N with cosets indexed by their minimal member and labelled "[m]".
QuotientModule quotient_module(const Submodule& n);

/// Smallest-index generator when the module is cyclic.
std::optional<Index> cyclic_generator(const ModulePtr& module);
bool is_cyclic(const ModulePtr& module);
bool is_faithful(const ModulePtr& module);

/// Pointwise check of additivity and compatibility with the action.
/// Throws AlgebraError when the two modules are over different rings.
bool check_module_map(const ModuleMap& f);
Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);

/// The map induced on source / ker(f); it lands in the same target.
ModuleMap induced_on_quotient(const ModuleMap& f, const QuotientModule& by_kernel);

}  // namespace dupalg
