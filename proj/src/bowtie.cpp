#include "dupalg/bowtie.hpp"

#include <algorithm>

namespace dupalg {
namespace {

constexpr Index kAbsent = static_cast<Index>(-1);

}  // namespace

BowtieInstance::BowtieInstance(RingPtr a, Ideal i, ModulePtr m, Submodule im)
    : base_ring(std::move(a)), ideal(std::move(i)), base_module(std::move(m)), im(std::move(im)) {}

std::optional<Index> BowtieInstance::ring_index(Index a, Index b) const {
  const std::size_t n = base_ring->size();
  if (a >= n || b >= n) return std::nullopt;
  const Index k = ring_lookup_[a * n + b];
  if (k == kAbsent) return std::nullopt;
  return k;
}

std::optional<Index> BowtieInstance::module_index(Index m, Index mp) const {
  const std::size_t n = base_module->size();
  if (m >= n || mp >= n) return std::nullopt;
  const Index k = module_lookup_[m * n + mp];
  if (k == kAbsent) return std::nullopt;
  return k;
}

BowtieInstance build_bowtie(const Ideal& ideal, const ModulePtr& module) {
  const RingPtr& A = ideal.ring();
  if (module->ring() != A) throw AlgebraError("ideal and module are over different rings");
  BowtieInstance inst(A, ideal, module, ideal_action(ideal, Submodule::whole(module)));
  const std::size_t n = A->size();
  const std::string tag = "⋈" + ideal.to_string();

  // A⋈I inside A x A, whose element (a, b) sits at a * n + b.
  const RingPtr product = direct_product(A, A);
  IndexSet subset;
  for (Index a = 0; a < n; ++a) {
    for (Index i : ideal.members()) subset.push_back(static_cast<Index>(a * n + A->add(a, i)));
  }
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  Subring sub = subring_from_subset(product, subset, A->name() + tag);
  inst.ring = sub.ring;
  inst.ring_lookup_.assign(n * n, kAbsent);
  for (std::size_t k = 0; k < sub.embedding.size(); ++k) {
    const Index e = sub.embedding[k];
    inst.ring_pairs.emplace_back(static_cast<Index>(e / n), static_cast<Index>(e % n));
    inst.ring_lookup_[e] = static_cast<Index>(k);
  }

  // M⋈I, enumerated in lexicographic pair order.
  const TableModule& M = *module;
  const std::size_t mn = M.size();
  inst.module_lookup_.assign(mn * mn, kAbsent);
  std::vector<std::string> labels;
  for (Index m = 0; m < mn; ++m) {
    for (Index mp = 0; mp < mn; ++mp) {
      if (!inst.im.contains(M.sub(m, mp))) continue;
      inst.module_lookup_[m * mn + mp] = static_cast<Index>(inst.module_pairs.size());
      inst.module_pairs.emplace_back(m, mp);
      labels.push_back("(" + M.label(m) + "," + M.label(mp) + ")");
    }
  }
  const std::size_t k = inst.module_pairs.size();
  const std::size_t rk = inst.ring_pairs.size();
  std::vector<Index> add(k * k), act(rk * k);
  for (std::size_t x = 0; x < k; ++x) {
    const auto [m1, m2] = inst.module_pairs[x];
    for (std::size_t y = 0; y < k; ++y) {
      const auto [p1, p2] = inst.module_pairs[y];
      add[x * k + y] = inst.module_lookup_[M.add(m1, p1) * mn + M.add(m2, p2)];
    }
    for (std::size_t r = 0; r < rk; ++r) {
      const auto [a, b] = inst.ring_pairs[r];
      act[r * k + x] = inst.module_lookup_[M.act(a, m1) * mn + M.act(b, m2)];
    }
  }
  if (std::find(add.begin(), add.end(), kAbsent) != add.end() ||
      std::find(act.begin(), act.end(), kAbsent) != act.end()) {
    throw AlgebraError("M⋈I is not closed under its operations");
  }
  inst.module = TableModule::create(inst.ring, k, std::move(add), std::move(act),
                                    inst.module_lookup_[M.zero() * mn + M.zero()], std::move(labels),
                                    M.name() + tag);
  return inst;
}

Submodule bowtie_submodule(const BowtieInstance& inst, const Submodule& n) {
  if (n.module() != inst.base_module) throw AlgebraError("N is not a submodule of the base module");
  Bits out(inst.module->size());
  for (std::size_t x = 0; x < inst.module_pairs.size(); ++x) {
    const auto [m1, m2] = inst.module_pairs[x];
    if (n.contains(m1)) out.set(x);  // m1 - m2 in IM holds for every pair
  }
  return Submodule::from_members(inst.module, from_bits(out));
}

Ideal zero_cross_ideal(const BowtieInstance& inst) {
  IndexSet members;
  for (Index i : inst.ideal.members()) members.push_back(*inst.ring_index(inst.base_ring->zero(), i));
  std::sort(members.begin(), members.end());
  return Ideal::from_members(inst.ring, std::move(members));
}

DistinguishedSubmodules distinguished_submodules(const BowtieInstance& inst) {
  const Index z = inst.base_module->zero();
  IndexSet zero_im, im_im;
  for (std::size_t x = 0; x < inst.module_pairs.size(); ++x) {
    const auto [m1, m2] = inst.module_pairs[x];
    if (m1 == z && inst.im.contains(m2)) zero_im.push_back(static_cast<Index>(x));
    if (inst.im.contains(m1) && inst.im.contains(m2)) im_im.push_back(static_cast<Index>(x));
  }
  DistinguishedSubmodules out{Submodule::from_members(inst.module, std::move(zero_im)),
                              Submodule::from_members(inst.module, std::move(im_im))};
  const Submodule product = ideal_action(zero_cross_ideal(inst), Submodule::whole(inst.module));
  if (product != out.zero_cross_im) {
    throw AlgebraError("(0 x I)(M⋈I) differs from 0 x IM: " + product.to_string() + " vs " +
                       out.zero_cross_im.to_string());
  }
  return out;
}

Index diagonal_embed(const BowtieInstance& inst, Index a) {
  auto k = inst.ring_index(a, a);
  if (!k) throw AlgebraError("element outside the base ring");
  return *k;
}

bool check_diagonal_embedding(const BowtieInstance& inst) {
  const TableRing& A = *inst.base_ring;
  const TableRing& D = *inst.ring;
  if (diagonal_embed(inst, A.one()) != D.one()) return false;
  std::vector<bool> hit(D.size(), false);
  for (Index a = 0; a < A.size(); ++a) {
    const Index da = diagonal_embed(inst, a);
    if (hit[da]) return false;
    hit[da] = true;
    for (Index b = 0; b < A.size(); ++b) {
      const Index db = diagonal_embed(inst, b);
      if (diagonal_embed(inst, A.add(a, b)) != D.add(da, db)) return false;
      if (diagonal_embed(inst, A.mul(a, b)) != D.mul(da, db)) return false;
    }
  }
  return true;
}

ModulePtr restrict_scalars(const BowtieInstance& inst, const ModulePtr& base, Projection which) {
  if (base->ring() != inst.base_ring) throw AlgebraError("module is not over the base ring");
  const std::size_t k = base->size();
  std::vector<Index> act(inst.ring_pairs.size() * k);
  for (std::size_t r = 0; r < inst.ring_pairs.size(); ++r) {
    const auto [a, b] = inst.ring_pairs[r];
    const Index s = which == Projection::First ? a : b;
    for (Index x = 0; x < k; ++x) act[r * k + x] = base->act(s, x);
  }
  auto add = base->add_table();
  return TableModule::create(inst.ring, k, std::vector<Index>(add.begin(), add.end()), std::move(act),
                             base->zero(), base->labels(),
                             base->name() + (which == Projection::First ? "|p1" : "|p2"));
}

std::optional<Submodule> detect_bowtie_form(const BowtieInstance& inst, const Submodule& s) {
  if (s.module() != inst.module) throw AlgebraError("S is not a submodule of M⋈I");
  Bits firsts(inst.base_module->size());
  for (Index x : s.members()) firsts.set(inst.module_pairs[x].first);
  const Submodule n = Submodule::from_members(inst.base_module, from_bits(firsts));
  if (bowtie_submodule(inst, n) != s) return std::nullopt;
  return n;
}

}  // namespace dupalg
