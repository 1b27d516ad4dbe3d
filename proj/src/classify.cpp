#include "dupalg/classify.hpp"

namespace dupalg {
namespace {

void require_proper(const Ideal& j) {
  if (j.is_whole()) throw ImproperError("predicate requires a proper ideal, got the whole ring");
}

void require_proper(const Submodule& n) {
  if (n.is_whole()) throw ImproperError("predicate requires a proper submodule, got the whole module");
}

Verdict pass(Variant v = Variant::None) { return Verdict{true, v, std::nullopt, {}}; }

Verdict fail(Witness w, Variant v = Variant::None) { return Verdict{false, v, std::move(w), {}}; }

// Shared by the three ideal predicates: first (a, b) with ab in J, a not in
// J and b outside `escape` (J itself, or its radical), optionally ab != 0.
Verdict ideal_scan(const Ideal& j, const Ideal& escape, bool nonzero_product) {
  require_proper(j);
  const TableRing& R = *j.ring();
  for (Index a = 0; a < R.size(); ++a) {
    if (j.contains(a)) continue;
    for (Index b = 0; b < R.size(); ++b) {
      const Index ab = R.mul(a, b);
      if (!j.contains(ab) || escape.contains(b)) continue;
      if (nonzero_product && ab == R.zero()) continue;
      Witness w;
      w.scalars = {a, b};
      w.text = "a=" + R.label(a) + " b=" + R.label(b) + " ab=" + R.label(ab);
      return fail(std::move(w));
    }
  }
  return pass();
}

// Shared by prime, AF and primary: first (a, x) with a x in N, x not in N,
// a outside `escape`, optionally a x != 0.
Verdict element_scan(const Submodule& n, const Ideal& escape, bool nonzero_product, Variant v) {
  require_proper(n);
  const TableModule& M = *n.module();
  const TableRing& R = *M.ring();
  for (Index a = 0; a < R.size(); ++a) {
    if (escape.contains(a)) continue;
    for (Index x = 0; x < M.size(); ++x) {
      if (n.contains(x)) continue;
      const Index ax = M.act(a, x);
      if (!n.contains(ax)) continue;
      if (nonzero_product && ax == M.zero()) continue;
      Witness w;
      w.scalars = {a};
      w.elements = {x};
      w.text = "a=" + R.label(a) + " x=" + M.label(x) + " ax=" + M.label(ax);
      return fail(std::move(w), v);
    }
  }
  return pass(v);
}

// First (a, b, T) in (a, b, lattice position) order with ab in c_T while a
// and b are not, where c_T is the ideal supplied for lattice entry T.
std::optional<Witness> colon_prime_scan(const RingPtr& ring, const std::vector<Submodule>& lattice,
                                        const std::vector<std::optional<Ideal>>& colons) {
  const TableRing& R = *ring;
  for (Index a = 0; a < R.size(); ++a) {
    for (Index b = 0; b < R.size(); ++b) {
      const Index ab = R.mul(a, b);
      for (std::size_t t = 0; t < lattice.size(); ++t) {
        const auto& c = colons[t];
        if (!c || !c->contains(ab) || c->contains(a) || c->contains(b)) continue;
        const Submodule& T = lattice[t];
        Witness w;
        w.scalars = {a, b};
        w.submodules = {T.members()};
        w.lattice_positions = {t};
        w.text = "a=" + R.label(a) + " b=" + R.label(b) + " T=" + T.to_string();
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::AF: return "AF";
    case Variant::Azizi: return "AZIZI";
    case Variant::Behboodi: return "BEHBOODI";
    case Variant::None: return "n/a";
  }
  return "n/a";
}

std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "af" || s == "AF") return Variant::AF;
  if (s == "azizi" || s == "AZIZI") return Variant::Azizi;
  if (s == "behboodi" || s == "BEHBOODI") return Variant::Behboodi;
  return std::nullopt;
}

Verdict is_prime_ideal(const Ideal& j) { return ideal_scan(j, j, false); }

Verdict is_weakly_prime_ideal(const Ideal& j) { return ideal_scan(j, j, true); }

Verdict is_primary_ideal(const Ideal& j) {
  require_proper(j);
  return ideal_scan(j, radical(j), false);
}

Verdict is_prime_submodule(const Submodule& n) {
  require_proper(n);
  return element_scan(n, colon_into_ring(n), false, Variant::None);
}

Verdict is_weakly_prime_submodule_af(const Submodule& n) {
  require_proper(n);
  return element_scan(n, colon_into_ring(n), true, Variant::AF);
}

Verdict is_primary_submodule(const Submodule& n) {
  require_proper(n);
  return element_scan(n, radical(colon_into_ring(n)), false, Variant::None);
}

Verdict is_weakly_prime_submodule_azizi(const Submodule& n) {
  require_proper(n);
  return is_weakly_prime_submodule_azizi(n, enumerate_submodules(n.module()));
}

Verdict is_weakly_prime_submodule_azizi(const Submodule& n, const std::vector<Submodule>& lattice) {
  require_proper(n);
  // abT in N with aT, bT not in N  <=>  (N : T) fails primality at (a, b).
  // T inside N makes (N : T) the whole ring, which never fails.
  std::vector<std::optional<Ideal>> colons;
  colons.reserve(lattice.size());
  for (const Submodule& t : lattice) {
    if (t.module() != n.module()) throw AlgebraError("lattice belongs to a different module");
    if (t.is_subset_of(n)) {
      colons.emplace_back(std::nullopt);
    } else {
      colons.emplace_back(colon_into_ring(n, t));
    }
  }
  if (auto w = colon_prime_scan(n.module()->ring(), lattice, colons)) {
    return fail(std::move(*w), Variant::Azizi);
  }
  return pass(Variant::Azizi);
}

Verdict is_weakly_prime_module(const ModulePtr& module) {
  return is_weakly_prime_module(module, enumerate_submodules(module));
}

Verdict is_weakly_prime_module(const ModulePtr& module, const std::vector<Submodule>& lattice) {
  if (module->size() == 1) throw AlgebraError("weakly prime module requires a nonzero module");
  std::vector<std::optional<Ideal>> anns;
  anns.reserve(lattice.size());
  for (const Submodule& t : lattice) {
    if (t.module() != module) throw AlgebraError("lattice belongs to a different module");
    if (t.is_zero()) {
      anns.emplace_back(std::nullopt);
    } else {
      anns.emplace_back(annihilator(t));
    }
  }
  // A nonzero T has a proper annihilator (one acts as the identity), so
  // primality of Ann(T) reduces to the (a, b) scan.
  if (auto w = colon_prime_scan(module->ring(), lattice, anns)) {
    return fail(std::move(*w), Variant::Behboodi);
  }
  return pass(Variant::Behboodi);
}

Verdict is_weakly_prime_submodule_behboodi(const Submodule& n) {
  require_proper(n);
  const QuotientModule q = quotient_module(n);
  Verdict v = is_weakly_prime_module(q.module);
  if (v.witness) {
    // Report the quotient submodule through its preimage in M.
    Witness& w = *v.witness;
    const TableModule& M = *n.module();
    const TableRing& R = *M.ring();
    Bits pre(M.size());
    const Bits in_quotient = to_bits(w.submodules.front(), q.module->size());
    for (Index x = 0; x < M.size(); ++x) {
      if (in_quotient.test(q.projection.table[x])) pre.set(x);
    }
    w.submodules = {from_bits(pre)};
    w.text = "a=" + R.label(w.scalars[0]) + " b=" + R.label(w.scalars[1]) +
             " T/N with T=" + render_set(w.submodules[0], [&](Index x) { return M.label(x); });
    v.notes = "Ann(T/N) is not prime";
  }
  return v;
}

Verdict is_irreducible_submodule(const Submodule& n) {
  require_proper(n);
  return is_irreducible_submodule(n, enumerate_submodules(n.module()));
}

Verdict is_irreducible_submodule(const Submodule& n, const std::vector<Submodule>& lattice) {
  require_proper(n);
  // Only strict supersets of N can meet in N.
  std::vector<std::size_t> above;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (n.is_subset_of(lattice[k]) && lattice[k].size() > n.size()) above.push_back(k);
  }
  for (std::size_t p = 0; p < above.size(); ++p) {
    for (std::size_t q = p + 1; q < above.size(); ++q) {
      const Submodule& k = lattice[above[p]];
      const Submodule& l = lattice[above[q]];
      if ((k.bits() & l.bits()) != n.bits()) continue;
      Witness w;
      w.submodules = {k.members(), l.members()};
      w.lattice_positions = {above[p], above[q]};
      w.text = "K=" + k.to_string() + " L=" + l.to_string();
      return fail(std::move(w));
    }
  }
  return pass();
}

Verdict is_weakly_prime_submodule(const Submodule& n, Variant v) {
  switch (v) {
    case Variant::AF: return is_weakly_prime_submodule_af(n);
    case Variant::Azizi: return is_weakly_prime_submodule_azizi(n);
    case Variant::Behboodi: return is_weakly_prime_submodule_behboodi(n);
    case Variant::None: break;
  }
  throw AlgebraError("a weakly prime variant must be given explicitly");
}

}  // namespace dupalg
