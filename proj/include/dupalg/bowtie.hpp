#pragma once

// Amalgamated duplication A⋈I = {(a, a+i)} inside A x A, the module
// duplication M⋈I = {(m, m') : m - m' in IM} with action
// (a, a+i).(m, m') = (am, (a+i)m'), and the submodules built from them.

#include <optional>
#include <utility>
#include <vector>

#include "dupalg/module.hpp"
#include "dupalg/ring.hpp"

namespace dupalg {

using IndexPair = std::pair<Index, Index>;

/// (A, I, M) together with A⋈I and M⋈I. Elements of both duplications are
/// ordered by their decoded pair, lexicographically.
struct BowtieInstance {
  RingPtr base_ring;
  Ideal ideal;
  ModulePtr base_module;
  Submodule im;  // IM, computed once

  RingPtr ring;      // A⋈I
  ModulePtr module;  // M⋈I
  std::vector<IndexPair> ring_pairs;    // A⋈I index -> (a, a+i)
  std::vector<IndexPair> module_pairs;  // M⋈I index -> (m, m')

  std::optional<Index> ring_index(Index a, Index b) const;
  std::optional<Index> module_index(Index m, Index mp) const;

 private:
  friend BowtieInstance build_bowtie(const Ideal&, const ModulePtr&);
  BowtieInstance(RingPtr a, Ideal i, ModulePtr m, Submodule im);
  std::vector<Index> ring_lookup_;    // a * |A| + b -> index or npos
  std::vector<Index> module_lookup_;  // m * |M| + m' -> index or npos
};

/// Builds A⋈I as a subring of A x A and M⋈I over it, validating all axioms.
/// Throws AlgebraError if I and M are not over the same ring.
BowtieInstance build_bowtie(const Ideal& ideal, const ModulePtr& module);

/// N⋈I = {(n, m') : n in N, n - m' in IM}. Throws if N is not a submodule
/// of the base module.
Submodule bowtie_submodule(const BowtieInstance& inst, const Submodule& n);

struct DistinguishedSubmodules {
  Submodule zero_cross_im;  // 0 x IM
  Submodule im_cross_im;    // IM x IM
};

/// Also checks (0 x I)(M⋈I) = 0 x IM and throws AlgebraError if it fails.
DistinguishedSubmodules distinguished_submodules(const BowtieInstance& inst);
Ideal zero_cross_ideal(const BowtieInstance& inst);

/// a -> (a, a).
Index diagonal_embed(const BowtieInstance& inst, Index a);
/// True when a -> (a, a) is an injective unital ring homomorphism.
bool check_diagonal_embedding(const BowtieInstance& inst);

enum class Projection { First, Second };

/// M0 over A viewed over A⋈I through (a, a+i) -> a (First) or a+i (Second).
ModulePtr restrict_scalars(const BowtieInstance& inst, const ModulePtr& base,
                           Projection which = Projection::First);

/// The N with N⋈I = S, when S has that form.
std::optional<Submodule> detect_bowtie_form(const BowtieInstance& inst, const Submodule& s);

}  // namespace dupalg
