#include "dupalg/ring.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dupalg {
namespace {

std::string triple(const std::vector<std::string>& labels, Index a, Index b, Index c) {
  return "(" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")";
}

std::vector<std::string> decimal_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(std::to_string(k));
  return out;
}

void require_same_ring(const Ideal& lhs, const Ideal& rhs) {
  if (lhs.ring() != rhs.ring()) throw AlgebraError("ideals belong to different rings");
}

}  // namespace

RingPtr TableRing::create(std::size_t size, std::vector<Index> add, std::vector<Index> mul,
                          Index zero, Index one, std::vector<std::string> labels,
                          std::string name, std::size_t validation_bound) {
  if (size == 0) throw AlgebraError("ring carrier must be non-empty");
  if (add.size() != size * size || mul.size() != size * size) {
    throw AlgebraError("ring tables must have size*size entries");
  }
  if (zero >= size || one >= size) throw AlgebraError("zero/one index outside carrier");
  for (std::size_t k = 0; k < size * size; ++k) {
    if (add[k] >= size || mul[k] >= size) throw AlgebraError("table entry outside carrier");
  }
  if (labels.empty()) labels = decimal_labels(size);
  if (labels.size() != size) throw AlgebraError("label count does not match carrier size");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != size) {
    throw AlgebraError("element labels must be distinct");
  }

  auto r = std::shared_ptr<TableRing>(new TableRing());
  r->size_ = size;
  r->add_ = std::move(add);
  r->mul_ = std::move(mul);
  r->zero_ = zero;
  r->one_ = one;
  r->labels_ = std::move(labels);
  r->name_ = std::move(name);
  const auto& L = r->labels_;

  if (size > 1 && zero == one) throw AlgebraError("one equals zero in a nonzero ring");
  r->neg_.assign(size, size);
  for (Index a = 0; a < size; ++a) {
    if (r->add(zero, a) != a) throw AlgebraError("zero is not an additive identity at " + L[a]);
    if (r->mul(one, a) != a) throw AlgebraError("one is not a multiplicative identity at " + L[a]);
    for (Index b = 0; b < size; ++b) {
      if (r->add(a, b) != r->add(b, a)) {
        throw AlgebraError("addition not commutative at (" + L[a] + ", " + L[b] + ")");
      }
      if (r->mul(a, b) != r->mul(b, a)) {
        throw AlgebraError("multiplication not commutative at (" + L[a] + ", " + L[b] + ")");
      }
      if (r->add(a, b) == zero && r->neg_[a] == size) r->neg_[a] = b;
    }
    if (r->neg_[a] == size) throw AlgebraError("no additive inverse for " + L[a]);
  }

  if (size <= validation_bound) {
    for (Index a = 0; a < size; ++a) {
      for (Index b = 0; b < size; ++b) {
        for (Index c = 0; c < size; ++c) {
          if (r->add(r->add(a, b), c) != r->add(a, r->add(b, c))) {
            throw AlgebraError("addition not associative at " + triple(L, a, b, c));
          }
          if (r->mul(r->mul(a, b), c) != r->mul(a, r->mul(b, c))) {
            throw AlgebraError("multiplication not associative at " + triple(L, a, b, c));
          }
          if (r->mul(a, r->add(b, c)) != r->add(r->mul(a, b), r->mul(a, c))) {
            throw AlgebraError("multiplication does not distribute at " + triple(L, a, b, c));
          }
        }
      }
    }
  }
  return r;
}

Index TableRing::pow(Index a, std::size_t k) const {
  Index out = one_;
  for (std::size_t j = 0; j < k; ++j) out = mul(out, a);
  return out;
}

ActionTables TableRing::self_action() const {
  return ActionTables{size_, size_, add_, mul_, zero_};
}

std::optional<Index> TableRing::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

RingPtr make_zn(std::size_t n) {
  if (n == 0) throw AlgebraError("Z_n requires n >= 1");
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  }
  return TableRing::create(n, std::move(add), std::move(mul), 0, static_cast<Index>(1 % n), {},
                           "Z" + std::to_string(n));
}

RingPtr direct_product(const RingPtr& lhs, const RingPtr& rhs) {
  const std::size_t n1 = lhs->size(), n2 = rhs->size(), n = n1 * n2;
  auto idx = [n2](Index i, Index j) { return static_cast<Index>(i * n2 + j); };
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Index i = 0; i < n1; ++i) {
    for (Index j = 0; j < n2; ++j) {
      labels[idx(i, j)] = "(" + lhs->label(i) + "," + rhs->label(j) + ")";
      for (Index k = 0; k < n1; ++k) {
        for (Index l = 0; l < n2; ++l) {
          add[idx(i, j) * n + idx(k, l)] = idx(lhs->add(i, k), rhs->add(j, l));
          mul[idx(i, j) * n + idx(k, l)] = idx(lhs->mul(i, k), rhs->mul(j, l));
        }
      }
    }
  }
  return TableRing::create(n, std::move(add), std::move(mul), idx(lhs->zero(), rhs->zero()),
                           idx(lhs->one(), rhs->one()), std::move(labels),
                           lhs->name() + "x" + rhs->name());
}

Subring subring_from_subset(const RingPtr& ring, const IndexSet& subset, std::string name) {
  const Bits in = to_bits(subset, ring->size());
  const IndexSet sorted = from_bits(in);
  if (!in.test(ring->zero())) throw AlgebraError("subset does not contain zero");
  if (!in.test(ring->one())) throw AlgebraError("subset does not contain one " + ring->label(ring->one()));

  std::vector<Index> local(ring->size(), 0);
  for (std::size_t k = 0; k < sorted.size(); ++k) local[sorted[k]] = static_cast<Index>(k);
  const std::size_t n = sorted.size();
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const Index a = sorted[p];
    if (!in.test(ring->neg(a))) {
      throw AlgebraError("subset not closed under negation at " + ring->label(a));
    }
    for (std::size_t q = 0; q < n; ++q) {
      const Index b = sorted[q];
      const Index s = ring->add(a, b), m = ring->mul(a, b);
      if (!in.test(s)) {
        throw AlgebraError("subset not closed under addition at (" + ring->label(a) + ", " +
                           ring->label(b) + ")");
      }
      if (!in.test(m)) {
        throw AlgebraError("subset not closed under multiplication at (" + ring->label(a) +
                           ", " + ring->label(b) + ")");
      }
      add[p * n + q] = local[s];
      mul[p * n + q] = local[m];
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Index a : sorted) labels.push_back(ring->label(a));
  Subring out;
  out.ring = TableRing::create(n, std::move(add), std::move(mul), local[ring->zero()],
                               local[ring->one()], std::move(labels), std::move(name));
  out.embedding = sorted;
  return out;
}

Ideal::Ideal(RingPtr ring, Bits bits)
    : ring_(std::move(ring)), members_(from_bits(bits)), bits_(std::move(bits)) {}

Ideal make_ideal_unchecked(RingPtr ring, Bits bits) { return Ideal(std::move(ring), std::move(bits)); }

Ideal Ideal::from_members(RingPtr ring, IndexSet members) {
  Bits bits = to_bits(members, ring->size());
  if (!bits.test(ring->zero())) throw AlgebraError("ideal must contain zero");
  for (auto a = bits.find_first(); a != Bits::npos; a = bits.find_next(a)) {
    for (auto b = bits.find_first(); b != Bits::npos; b = bits.find_next(b)) {
      if (!bits.test(ring->add(a, b))) {
        throw AlgebraError("not closed under addition at (" + ring->label(a) + ", " +
                           ring->label(b) + ")");
      }
    }
    for (Index r = 0; r < ring->size(); ++r) {
      if (!bits.test(ring->mul(r, a))) {
        throw AlgebraError("not closed under multiplication at (" + ring->label(r) + ", " +
                           ring->label(a) + ")");
      }
    }
  }
  return Ideal(std::move(ring), std::move(bits));
}

Ideal Ideal::whole(RingPtr ring) {
  Bits bits(ring->size());
  bits.set();
  return Ideal(std::move(ring), std::move(bits));
}

Ideal Ideal::zero(RingPtr ring) {
  Bits bits(ring->size());
  bits.set(ring->zero());
  return Ideal(std::move(ring), std::move(bits));
}

std::string Ideal::to_string() const {
  return render_set(members_, [this](Index a) { return ring_->label(a); });
}

QuotientRing quotient_ring(const Ideal& ideal) {
  const RingPtr& R = ideal.ring();
  const std::size_t n = R->size();
  QuotientRing out;
  out.projection.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (Index a = 0; a < n; ++a) {
    if (seen[a]) continue;
    const auto coset = static_cast<Index>(out.representative.size());
    out.representative.push_back(a);  // a is the minimal member of its coset
    for (Index j : ideal.members()) {
      const Index b = R->add(a, j);
      seen[b] = true;
      out.projection[b] = coset;
    }
  }
  const std::size_t q = out.representative.size();
  std::vector<Index> add(q * q), mul(q * q);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < q; ++c) {
    labels.push_back("[" + R->label(out.representative[c]) + "]");
    for (std::size_t d = 0; d < q; ++d) {
      const Index a = out.representative[c], b = out.representative[d];
      add[c * q + d] = out.projection[R->add(a, b)];
      mul[c * q + d] = out.projection[R->mul(a, b)];
    }
  }
  out.ring = TableRing::create(q, std::move(add), std::move(mul), out.projection[R->zero()],
                               out.projection[R->one()], std::move(labels),
                               R->name() + "/" + ideal.to_string());
  return out;
}

Ideal ideal_generated(const RingPtr& ring, const IndexSet& generators) {
  return make_ideal_unchecked(ring, close_span(ring->self_action(), to_bits(generators, ring->size())));
}

std::vector<Ideal> enumerate_ideals(const RingPtr& ring) {
  std::vector<Ideal> out;
  for (IndexSet& members : enumerate_closed(ring->self_action())) {
    out.push_back(make_ideal_unchecked(ring, to_bits(members, ring->size())));
  }
  return out;
}

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs) {
  require_same_ring(lhs, rhs);
  return make_ideal_unchecked(lhs.ring(), add_closed(lhs.ring()->self_action(), lhs.bits(), rhs.bits()));
}

Ideal ideal_product(const Ideal& lhs, const Ideal& rhs) {
  require_same_ring(lhs, rhs);
  const RingPtr& R = lhs.ring();
  Bits gens(R->size());
  for (Index a : lhs.members()) {
    for (Index b : rhs.members()) gens.set(R->mul(a, b));
  }
  return make_ideal_unchecked(R, close_span(R->self_action(), gens));
}

Ideal ideal_power(const Ideal& ideal, std::size_t k) {
  Ideal out = Ideal::whole(ideal.ring());
  for (std::size_t j = 0; j < k; ++j) out = ideal_product(out, ideal);
  return out;
}

Ideal ideal_intersection(const Ideal& lhs, const Ideal& rhs) {
  require_same_ring(lhs, rhs);
  return make_ideal_unchecked(lhs.ring(), lhs.bits() & rhs.bits());
}

Ideal radical(const Ideal& ideal) {
  const RingPtr& R = ideal.ring();
  Bits out(R->size());
  for (Index a = 0; a < R->size(); ++a) {
    Index p = a;
    for (std::size_t k = 1; k <= R->size(); ++k) {
      if (ideal.contains(p)) {
        out.set(a);
        break;
      }
      p = R->mul(p, a);
    }
  }
  return make_ideal_unchecked(R, std::move(out));
}

}  // namespace dupalg
