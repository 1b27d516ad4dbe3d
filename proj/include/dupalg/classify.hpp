#pragma once

// Decision procedures for prime, weakly prime and primary ideals and
// submodules. Every negative verdict carries the lexicographically first
// violation in the canonical element order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dupalg/module.hpp"
#include "dupalg/ring.hpp"

namespace dupalg {

/// Which of the inequivalent "weakly prime" definitions a verdict uses.
///   AF:       0 != a x in N  =>  x in N or a M subset of N
///   Azizi:    a b T subset of N  =>  a T subset of N or b T subset of N, all T
///   Behboodi: M / N is a weakly prime module (every nonzero submodule has
///             a prime annihilator)
enum class Variant { AF, Azizi, Behboodi, None };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);
inline constexpr Variant kWeaklyPrimeVariants[] = {Variant::AF, Variant::Azizi, Variant::Behboodi};

struct Witness {
  std::vector<Index> scalars;         // ring indices, in argument order
  std::vector<Index> elements;        // module indices, in argument order
  std::vector<IndexSet> submodules;   // member sets in the module under test
  std::vector<std::size_t> lattice_positions;  // enumeration index of each submodule
  std::string text;                   // the same data in pair notation
};

struct Verdict {
  bool holds = true;
  Variant variant = Variant::None;
  std::optional<Witness> witness;
  std::string notes;
};

// Ideal predicates. All throw ImproperError when the ideal is the whole ring.
Verdict is_prime_ideal(const Ideal& j);
Verdict is_weakly_prime_ideal(const Ideal& j);
/// ab in J  =>  a in J or b in sqrt(J).
Verdict is_primary_ideal(const Ideal& j);

// Submodule predicates. All throw ImproperError when N is the whole module.
Verdict is_prime_submodule(const Submodule& n);
Verdict is_weakly_prime_submodule_af(const Submodule& n);
Verdict is_weakly_prime_submodule_azizi(const Submodule& n);
Verdict is_weakly_prime_submodule_azizi(const Submodule& n, const std::vector<Submodule>& lattice);
Verdict is_weakly_prime_submodule_behboodi(const Submodule& n);
/// a x in N  =>  x in N or a in sqrt((N : M)).
Verdict is_primary_submodule(const Submodule& n);
Verdict is_irreducible_submodule(const Submodule& n);
Verdict is_irreducible_submodule(const Submodule& n, const std::vector<Submodule>& lattice);

/// Every nonzero submodule has a prime annihilator. Throws AlgebraError on
/// the zero module.
Verdict is_weakly_prime_module(const ModulePtr& module);
Verdict is_weakly_prime_module(const ModulePtr& module, const std::vector<Submodule>& lattice);

/// Dispatch on the variant; Variant::None is rejected.
Verdict is_weakly_prime_submodule(const Submodule& n, Variant v);

}  // namespace dupalg
