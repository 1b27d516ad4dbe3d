#pragma once

#include <random>
#include <string>
#include <vector>

#include "dupalg/bowtie.hpp"
#include "dupalg/module.hpp"
#include "dupalg/ring.hpp"

namespace testing_support {

using namespace dupalg;

inline Index el(const RingPtr& r, const std::string& label) {
  auto k = r->find_label(label);
  if (!k) throw std::runtime_error("no ring element " + label);
  return *k;
}

inline Index el(const ModulePtr& m, const std::string& label) {
  auto k = m->find_label(label);
  if (!k) throw std::runtime_error("no module element " + label);
  return *k;
}

inline IndexSet els(const RingPtr& r, const std::vector<std::string>& labels) {
  IndexSet out;
  for (const auto& l : labels) out.push_back(el(r, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline IndexSet els(const ModulePtr& m, const std::vector<std::string>& labels) {
  IndexSet out;
  for (const auto& l : labels) out.push_back(el(m, l));
  std::sort(out.begin(), out.end());
  return out;
}

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  return ideal_generated(r, els(r, gens));
}

inline Submodule sub(const ModulePtr& m, const std::vector<std::string>& gens) {
  return submodule_generated(m, els(m, gens));
}

/// Rings with at most 16 elements: Z_n and Z_a x Z_b.
inline std::vector<RingPtr> small_rings() {
  std::vector<RingPtr> out;
  for (std::size_t n = 1; n <= 16; ++n) out.push_back(make_zn(n));
  for (std::size_t a = 2; a <= 8; ++a) {
    for (std::size_t b = a; a * b <= 16; ++b) out.push_back(direct_product(make_zn(a), make_zn(b)));
  }
  return out;
}

/// Modules with at most 16 elements: each small ring acting on itself and
/// on its quotients by every ideal.
inline std::vector<ModulePtr> small_modules() {
  std::vector<ModulePtr> out;
  for (const RingPtr& r : small_rings()) {
    const ModulePtr regular = ring_as_module(r);
    out.push_back(regular);
    for (const Ideal& j : enumerate_ideals(r)) {
      if (j.is_zero() || j.is_whole()) continue;
      out.push_back(quotient_module(Submodule::from_members(regular, j.members())).module);
    }
  }
  return out;
}

/// Deterministic generator for the seeded property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace testing_support
