#include "dupalg/module.hpp"

#include <algorithm>
#include <set>

namespace dupalg {
namespace {

void require_same_module(const Submodule& lhs, const Submodule& rhs) {
  if (lhs.module() != rhs.module()) throw AlgebraError("submodules belong to different modules");
}

}  // namespace

ModulePtr TableModule::create(RingPtr ring, std::size_t size, std::vector<Index> add,
                              std::vector<Index> act, Index zero,
                              std::vector<std::string> labels, std::string name,
                              std::size_t validation_bound) {
  if (!ring) throw AlgebraError("module needs a ring");
  const std::size_t rs = ring->size();
  if (size == 0) throw AlgebraError("module carrier must be non-empty");
  if (add.size() != size * size) throw AlgebraError("module addition table must have size*size entries");
  if (act.size() != rs * size) throw AlgebraError("action table must have |R|*size entries");
  if (zero >= size) throw AlgebraError("zero index outside carrier");
  if (std::any_of(add.begin(), add.end(), [size](Index v) { return v >= size; }) ||
      std::any_of(act.begin(), act.end(), [size](Index v) { return v >= size; })) {
    throw AlgebraError("table entry outside carrier");
  }
  if (labels.empty()) {
    for (std::size_t k = 0; k < size; ++k) labels.push_back(std::to_string(k));
  }
  if (labels.size() != size) throw AlgebraError("label count does not match carrier size");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != size) {
    throw AlgebraError("element labels must be distinct");
  }

  auto m = std::shared_ptr<TableModule>(new TableModule());
  m->ring_ = std::move(ring);
  m->size_ = size;
  m->add_ = std::move(add);
  m->act_ = std::move(act);
  m->zero_ = zero;
  m->labels_ = std::move(labels);
  m->name_ = std::move(name);
  const TableRing& R = *m->ring_;
  const auto& L = m->labels_;
  auto pair = [&](Index x, Index y) { return "(" + L[x] + ", " + L[y] + ")"; };

  m->neg_.assign(size, static_cast<Index>(size));
  for (Index x = 0; x < size; ++x) {
    if (m->add(zero, x) != x) throw AlgebraError("zero is not an additive identity at " + L[x]);
    if (m->act(R.one(), x) != x) throw AlgebraError("action is not unital at " + L[x]);
    for (Index y = 0; y < size; ++y) {
      if (m->add(x, y) != m->add(y, x)) throw AlgebraError("addition not commutative at " + pair(x, y));
      if (m->add(x, y) == zero && m->neg_[x] == size) m->neg_[x] = y;
    }
    if (m->neg_[x] == size) throw AlgebraError("no additive inverse for " + L[x]);
  }

  if (std::max(rs, size) <= validation_bound) {
    for (Index x = 0; x < size; ++x) {
      for (Index y = 0; y < size; ++y) {
        for (Index z = 0; z < size; ++z) {
          if (m->add(m->add(x, y), z) != m->add(x, m->add(y, z))) {
            throw AlgebraError("addition not associative at (" + L[x] + ", " + L[y] + ", " + L[z] + ")");
          }
        }
        for (Index r = 0; r < rs; ++r) {
          if (m->act(r, m->add(x, y)) != m->add(m->act(r, x), m->act(r, y))) {
            throw AlgebraError("action not additive in the module at " + R.label(r) + " . " + pair(x, y));
          }
        }
      }
      for (Index r = 0; r < rs; ++r) {
        for (Index s = 0; s < rs; ++s) {
          if (m->act(R.add(r, s), x) != m->add(m->act(r, x), m->act(s, x))) {
            throw AlgebraError("action not additive in the ring at (" + R.label(r) + ", " +
                               R.label(s) + ") . " + L[x]);
          }
          if (m->act(R.mul(r, s), x) != m->act(r, m->act(s, x))) {
            throw AlgebraError("action not associative at (" + R.label(r) + ", " + R.label(s) +
                               ") . " + L[x]);
          }
        }
      }
    }
  }
  return m;
}

ActionTables TableModule::action() const {
  return ActionTables{ring_->size(), size_, add_, act_, zero_};
}

std::optional<Index> TableModule::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Submodule::Submodule(ModulePtr module, Bits bits)
    : module_(std::move(module)), members_(from_bits(bits)), bits_(std::move(bits)) {}

Submodule make_submodule_unchecked(ModulePtr module, Bits bits) {
  return Submodule(std::move(module), std::move(bits));
}

Submodule Submodule::from_members(ModulePtr module, IndexSet members) {
  Bits bits = to_bits(members, module->size());
  if (!bits.test(module->zero())) throw AlgebraError("submodule must contain zero");
  const TableModule& M = *module;
  for (auto x = bits.find_first(); x != Bits::npos; x = bits.find_next(x)) {
    for (auto y = bits.find_first(); y != Bits::npos; y = bits.find_next(y)) {
      if (!bits.test(M.add(x, y))) {
        throw AlgebraError("not closed under addition at (" + M.label(x) + ", " + M.label(y) + ")");
      }
    }
    for (Index r = 0; r < M.ring()->size(); ++r) {
      if (!bits.test(M.act(r, x))) {
        throw AlgebraError("not closed under the action at " + M.ring()->label(r) + " . " + M.label(x));
      }
    }
  }
  return Submodule(std::move(module), std::move(bits));
}

Submodule Submodule::whole(ModulePtr module) {
  Bits bits(module->size());
  bits.set();
  return Submodule(std::move(module), std::move(bits));
}

Submodule Submodule::zero(ModulePtr module) {
  Bits bits(module->size());
  bits.set(module->zero());
  return Submodule(std::move(module), std::move(bits));
}

std::string Submodule::to_string() const {
  return render_set(members_, [this](Index x) { return module_->label(x); });
}

ModulePtr ring_as_module(const RingPtr& ring) {
  const auto t = ring->mul_table();
  return TableModule::create(ring, ring->size(),
                             std::vector<Index>(ring->add_table().begin(), ring->add_table().end()),
                             std::vector<Index>(t.begin(), t.end()), ring->zero(), ring->labels(),
                             ring->name());
}

Submodule submodule_generated(const ModulePtr& module, const IndexSet& generators) {
  return make_submodule_unchecked(module, close_span(module->action(), to_bits(generators, module->size())));
}

Submodule cyclic_submodule(const ModulePtr& module, Index generator) {
  if (generator >= module->size()) throw AlgebraError("generator outside carrier");
  return make_submodule_unchecked(module, cyclic_span(module->action(), generator));
}

std::vector<Submodule> enumerate_submodules(const ModulePtr& module) {
  std::vector<Submodule> out;
  for (IndexSet& members : enumerate_closed(module->action())) {
    out.push_back(make_submodule_unchecked(module, to_bits(members, module->size())));
  }
  return out;
}

Ideal colon_into_ring(const Submodule& n, const Submodule& k) {
  require_same_module(n, k);
  const TableModule& M = *n.module();
  Bits out(M.ring()->size());
  for (Index a = 0; a < M.ring()->size(); ++a) {
    bool inside = true;
    for (Index x : k.members()) {
      if (!n.contains(M.act(a, x))) {
        inside = false;
        break;
      }
    }
    if (inside) out.set(a);
  }
  return make_ideal_unchecked(M.ring(), std::move(out));
}

Ideal colon_into_ring(const Submodule& n) {
  return colon_into_ring(n, Submodule::whole(n.module()));
}

Submodule colon_by_scalar(const Submodule& n, Index a) {
  const TableModule& M = *n.module();
  if (a >= M.ring()->size()) throw AlgebraError("scalar outside ring carrier");
  Bits out(M.size());
  for (Index x = 0; x < M.size(); ++x) {
    if (n.contains(M.act(a, x))) out.set(x);
  }
  return make_submodule_unchecked(n.module(), std::move(out));
}

Ideal annihilator(const Submodule& k) {
  return colon_into_ring(Submodule::zero(k.module()), k);
}

Ideal annihilator(const ModulePtr& module) {
  return annihilator(Submodule::whole(module));
}

Submodule ideal_action(const Ideal& ideal, const Submodule& k) {
  const ModulePtr& M = k.module();
  if (ideal.ring() != M->ring()) throw AlgebraError("ideal and module are over different rings");
  Bits gens(M->size());
  for (Index j : ideal.members()) {
    for (Index x : k.members()) gens.set(M->act(j, x));
  }
  return make_submodule_unchecked(M, close_span(M->action(), gens));
}

Submodule submodule_sum(const Submodule& lhs, const Submodule& rhs) {
  require_same_module(lhs, rhs);
  return make_submodule_unchecked(lhs.module(), add_closed(lhs.module()->action(), lhs.bits(), rhs.bits()));
}

Submodule submodule_intersection(const Submodule& lhs, const Submodule& rhs) {
  require_same_module(lhs, rhs);
  return make_submodule_unchecked(lhs.module(), lhs.bits() & rhs.bits());
}

QuotientModule quotient_module(const Submodule& n) {
  const ModulePtr& source = n.module();
  const TableModule& M = *source;
  const RingPtr& R = M.ring();
  QuotientModule out;
  std::vector<Index> proj(M.size(), 0);
  std::vector<bool> seen(M.size(), false);
  for (Index x = 0; x < M.size(); ++x) {
    if (seen[x]) continue;
    const auto coset = static_cast<Index>(out.representative.size());
    out.representative.push_back(x);
    for (Index y : n.members()) {
      const Index z = M.add(x, y);
      seen[z] = true;
      proj[z] = coset;
    }
  }
  const std::size_t q = out.representative.size();
  std::vector<Index> add(q * q), act(R->size() * q);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < q; ++c) {
    const Index x = out.representative[c];
    labels.push_back("[" + M.label(x) + "]");
    for (std::size_t d = 0; d < q; ++d) add[c * q + d] = proj[M.add(x, out.representative[d])];
    for (Index r = 0; r < R->size(); ++r) act[r * q + c] = proj[M.act(r, x)];
  }
  out.module = TableModule::create(R, q, std::move(add), std::move(act), proj[M.zero()],
                                   std::move(labels), M.name() + "/" + n.to_string());
  out.projection = ModuleMap{source, out.module, std::move(proj)};
  return out;
}

std::optional<Index> cyclic_generator(const ModulePtr& module) {
  const ActionTables t = module->action();
  for (Index g = 0; g < module->size(); ++g) {
    if (cyclic_span(t, g).all()) return g;
  }
  return std::nullopt;
}

bool is_cyclic(const ModulePtr& module) { return cyclic_generator(module).has_value(); }

bool is_faithful(const ModulePtr& module) { return annihilator(module).is_zero(); }

bool check_module_map(const ModuleMap& f) {
  if (!f.source || !f.target) throw AlgebraError("module map needs source and target");
  if (f.source->ring() != f.target->ring()) {
    throw AlgebraError("module map between modules over different rings");
  }
  const TableModule& S = *f.source;
  const TableModule& T = *f.target;
  if (f.table.size() != S.size()) return false;
  if (std::any_of(f.table.begin(), f.table.end(), [&](Index v) { return v >= T.size(); })) return false;
  for (Index x = 0; x < S.size(); ++x) {
    for (Index y = 0; y < S.size(); ++y) {
      if (f.table[S.add(x, y)] != T.add(f.table[x], f.table[y])) return false;
    }
    for (Index r = 0; r < S.ring()->size(); ++r) {
      if (f.table[S.act(r, x)] != T.act(r, f.table[x])) return false;
    }
  }
  return true;
}

Submodule kernel(const ModuleMap& f) {
  Bits out(f.source->size());
  for (Index x = 0; x < f.source->size(); ++x) {
    if (f.table[x] == f.target->zero()) out.set(x);
  }
  return make_submodule_unchecked(f.source, std::move(out));
}

Submodule image(const ModuleMap& f) {
  Bits out(f.target->size());
  for (Index v : f.table) out.set(v);
  return make_submodule_unchecked(f.target, std::move(out));
}

ModuleMap induced_on_quotient(const ModuleMap& f, const QuotientModule& by_kernel) {
  ModuleMap out{by_kernel.module, f.target, {}};
  out.table.reserve(by_kernel.representative.size());
  for (Index rep : by_kernel.representative) out.table.push_back(f.table[rep]);
  return out;
}

}  // namespace dupalg
