#include "dupalg/theorems.hpp"

#include <chrono>
#include <cstdlib>

namespace dupalg {
namespace {

std::string b(bool v) { return v ? "true" : "false"; }

TheoremReport make_report(TheoremId id, const std::string& key, Variant v = Variant::None,
                          Reading r = Reading::None) {
  TheoremReport out;
  out.id = id;
  out.instance = key;
  out.variant = v;
  out.reading = r;
  return out;
}

Witness text_witness(std::string text) {
  Witness w;
  w.text = std::move(text);
  return w;
}

// Fills outcome/gap/witness for "lhs <=> rhs" where both directions are
// part of the statement.
void settle_biconditional(TheoremReport& r, bool lhs, bool rhs,
                          const std::optional<Witness>& lhs_false_witness,
                          const std::optional<Witness>& rhs_false_witness) {
  if (lhs == rhs) {
    r.outcome = Outcome::Pass;
    return;
  }
  r.outcome = Outcome::Fail;
  r.gap = Gap::Statement;
  if (lhs) {
    r.note = "forward direction fails";
    r.witness = rhs_false_witness;
  } else {
    r.note = "backward direction fails";
    r.witness = lhs_false_witness;
  }
}

void require_variant(Variant v) {
  if (v == Variant::None) throw AlgebraError("this check needs an explicit weakly prime variant");
}

std::string first_label(const Bits& bits, const std::vector<std::string>& labels) {
  const auto k = bits.find_first();
  return k == Bits::npos ? std::string("-") : labels[k];
}

template <typename F>
TheoremReport timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport r = body();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Names

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::L1: return "L1";
    case TheoremId::L2: return "L2";
    case TheoremId::C_WP: return "C_WP";
    case TheoremId::P_PRIMARY: return "P_PRIMARY";
    case TheoremId::L3i: return "L3i";
    case TheoremId::L3ii: return "L3ii";
    case TheoremId::C_PPW: return "C_PPW";
    case TheoremId::T4: return "T4";
    case TheoremId::R_T4: return "R_T4";
    case TheoremId::C_IRR: return "C_IRR";
    case TheoremId::L_COLON_PROD: return "L_COLON_PROD";
    case TheoremId::R_CEX: return "R_CEX";
    case TheoremId::P_FAITHFUL: return "P_FAITHFUL";
    case TheoremId::L_RADICAL: return "L_RADICAL";
    case TheoremId::P_COLON_PRIMARY: return "P_COLON_PRIMARY";
    case TheoremId::C_RADICAL_PRIME: return "C_RADICAL_PRIME";
    case TheoremId::L8: return "L8";
    case TheoremId::T_FINAL: return "T_FINAL";
    case TheoremId::DIVERGENCE: return "DIVERGENCE";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view s) {
  for (TheoremId id : kAllTheorems) {
    if (to_string(id) == s) return id;
  }
  if (s == "DIVERGENCE" || s == "divergence") return TheoremId::DIVERGENCE;
  // Case-insensitive fallback.
  std::string upper(s);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (TheoremId id : kAllTheorems) {
    std::string name(to_string(id));
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == upper) return id;
  }
  return std::nullopt;
}

bool uses_variant(TheoremId id) {
  switch (id) {
    case TheoremId::L3i:
    case TheoremId::L3ii:
    case TheoremId::C_PPW:
    case TheoremId::T4:
    case TheoremId::C_IRR:
    case TheoremId::L_COLON_PROD:
    case TheoremId::R_CEX:
    case TheoremId::P_FAITHFUL:
      return true;
    default:
      return false;
  }
}

bool uses_reading(TheoremId id) { return id == TheoremId::L3i || id == TheoremId::L3ii; }

bool is_instance_level(TheoremId id) { return id == TheoremId::L8 || id == TheoremId::T_FINAL; }

std::string_view to_string(Reading r) {
  switch (r) {
    case Reading::None: return "n/a";
    case Reading::BowtieForm: return "bowtie";
    case Reading::AllSubmodules: return "all-submodules";
  }
  return "n/a";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::NotApplicable: return "NA";
    case Outcome::Skipped: return "SKIP";
  }
  return "?";
}

std::string_view to_string(Gap g) {
  switch (g) {
    case Gap::None: return "-";
    case Gap::Statement: return "statement-gap";
    case Gap::Converse: return "converse-gap";
  }
  return "-";
}

const std::string* TheoremReport::fact(std::string_view name) const {
  for (const Fact& f : facts) {
    if (f.name == name) return &f.value;
  }
  return nullptr;
}

std::string serialize(const TheoremReport& r) {
  std::string facts;
  for (std::size_t k = 0; k < r.facts.size(); ++k) {
    if (k) facts += ';';
    facts += r.facts[k].name + "=" + r.facts[k].value;
  }
  std::string out;
  out += r.instance;
  out += '\t';
  out += to_string(r.id);
  out += '\t';
  out += to_string(r.variant);
  out += '\t';
  out += to_string(r.reading);
  out += '\t';
  out += to_string(r.outcome);
  out += '\t';
  out += to_string(r.gap);
  out += '\t';
  out += r.witness ? r.witness->text : "-";
  out += '\t';
  out += facts.empty() ? "-" : facts;
  out += '\t';
  out += r.note.empty() ? "-" : r.note;
  return out;
}

std::size_t budget_from_environment() {
  if (const char* env = std::getenv("BOWTIE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultValidationBound;
}

// ---------------------------------------------------------------------------
// Contexts

InstanceData::InstanceData(const Ideal& ideal, const ModulePtr& module, std::size_t budget)
    : budget_(budget) {
  const RingPtr& A = ideal.ring();
  key_ = A->name() + " I=" + ideal.to_string();
  if (module->name() != A->name()) key_ += " M=" + module->name();
  const Submodule im = ideal_action(ideal, Submodule::whole(module));
  const std::size_t ring_size = A->size() * ideal.size();
  const std::size_t module_size = module->size() * im.size();
  over_budget_ = std::max(ring_size, module_size) > budget_;
  if (!over_budget_) inst_.emplace(build_bowtie(ideal, module));
}

const BowtieInstance& InstanceData::bowtie() const {
  if (!inst_) throw AlgebraError("instance " + key_ + " exceeds the budget of " + std::to_string(budget_));
  return *inst_;
}

const std::vector<Submodule>& InstanceData::lattice() const {
  if (!lattice_) lattice_ = enumerate_submodules(bowtie().module);
  return *lattice_;
}

const std::vector<bool>& InstanceData::bowtie_form() const {
  if (!bowtie_form_) {
    std::vector<bool> form;
    for (const Submodule& s : lattice()) form.push_back(detect_bowtie_form(bowtie(), s).has_value());
    bowtie_form_ = std::move(form);
  }
  return *bowtie_form_;
}

const std::vector<Submodule>& InstanceData::base_lattice() const {
  if (!base_lattice_) base_lattice_ = enumerate_submodules(bowtie().base_module);
  return *base_lattice_;
}

SubmoduleContext::SubmoduleContext(const InstanceData& data, Submodule n)
    : data_(data),
      base_(std::move(n)),
      lifted_(bowtie_submodule(data.bowtie(), base_)),
      key_(data.key() + " N=" + base_.to_string()) {}

const Verdict& SubmoduleContext::prime() const {
  if (!prime_) prime_ = is_prime_submodule(lifted_);
  return *prime_;
}

const Verdict& SubmoduleContext::primary() const {
  if (!primary_) primary_ = is_primary_submodule(lifted_);
  return *primary_;
}

const Verdict& SubmoduleContext::weakly_prime(Variant v) const {
  auto it = weakly_prime_.find(v);
  if (it != weakly_prime_.end()) return it->second;
  Verdict verdict;
  switch (v) {
    case Variant::AF: verdict = is_weakly_prime_submodule_af(lifted_); break;
    case Variant::Azizi: verdict = is_weakly_prime_submodule_azizi(lifted_, data_.lattice()); break;
    case Variant::Behboodi: verdict = is_weakly_prime_submodule_behboodi(lifted_); break;
    case Variant::None: require_variant(v);
  }
  return weakly_prime_.emplace(v, std::move(verdict)).first->second;
}

const Verdict& SubmoduleContext::irreducible() const {
  if (!irreducible_) irreducible_ = is_irreducible_submodule(lifted_, data_.lattice());
  return *irreducible_;
}

const Ideal& SubmoduleContext::colon() const {
  if (!colon_) colon_ = colon_into_ring(lifted_);
  return *colon_;
}

const std::vector<Bits>& SubmoduleContext::spans() const {
  if (!spans_) {
    const ActionTables t = bowtie().module->action();
    std::vector<Bits> out;
    out.reserve(t.elements);
    for (Index x = 0; x < t.elements; ++x) out.push_back(add_cyclic(t, lifted_.bits(), x));
    spans_ = std::move(out);
  }
  return *spans_;
}

const std::vector<Bits>& SubmoduleContext::element_colons() const {
  if (!element_colons_) {
    const ModulePtr& M = bowtie().module;
    std::vector<Bits> out;
    out.reserve(M->size());
    for (Index x = 0; x < M->size(); ++x) {
      out.push_back(colon_into_ring(lifted_, cyclic_submodule(M, x)).bits());
    }
    element_colons_ = std::move(out);
  }
  return *element_colons_;
}

// ---------------------------------------------------------------------------
// Checks

TheoremReport check_L1(const SubmoduleContext& ctx) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::L1, ctx.key());
    const BowtieInstance& B = ctx.bowtie();
    const Ideal lhs = colon_into_ring(ctx.lifted());
    const Ideal base_colon = colon_into_ring(ctx.base());
    Bits rhs(B.ring->size());
    for (std::size_t k = 0; k < B.ring_pairs.size(); ++k) {
      const auto [a, c] = B.ring_pairs[k];
      if (base_colon.contains(a) && B.ideal.contains(B.base_ring->sub(c, a))) rhs.set(k);
    }
    r.facts = {{"lhs_size", std::to_string(lhs.size())}, {"rhs_size", std::to_string(rhs.count())}};
    if (lhs.bits() == rhs) {
      r.outcome = Outcome::Pass;
    } else {
      r.outcome = Outcome::Fail;
      r.gap = Gap::Statement;
      const Bits diff = lhs.bits() ^ rhs;
      const auto k = static_cast<Index>(diff.find_first());
      Witness w;
      w.scalars = {k};
      w.text = "element=" + B.ring->label(k) + (lhs.contains(k) ? " only in (N⋈I:M⋈I)" : " only in (N:M)⋈I");
      r.witness = std::move(w);
    }
    return r;
  });
}

TheoremReport check_transfer(const SubmoduleContext& ctx, Notion notion) {
  return timed([&] {
    TheoremId id = TheoremId::L2;
    Variant v = Variant::None;
    Verdict base, lifted;
    switch (notion) {
      case Notion::Prime:
        base = is_prime_submodule(ctx.base());
        lifted = ctx.prime();
        break;
      case Notion::WeaklyPrimeAF:
        id = TheoremId::C_WP;
        v = Variant::AF;
        base = is_weakly_prime_submodule_af(ctx.base());
        lifted = ctx.weakly_prime(Variant::AF);
        break;
      case Notion::Primary:
        id = TheoremId::P_PRIMARY;
        base = is_primary_submodule(ctx.base());
        lifted = ctx.primary();
        break;
    }
    TheoremReport r = make_report(id, ctx.key(), v);
    r.facts = {{"N", b(base.holds)}, {"N⋈I", b(lifted.holds)}};
    settle_biconditional(r, base.holds, lifted.holds, base.witness, lifted.witness);
    return r;
  });
}

namespace {

struct ColonDomain {
  std::vector<std::size_t> positions;  // lattice entries K in the domain, K not inside N⋈I
  std::vector<Ideal> colons;           // (N⋈I : K) for each
};

ColonDomain colon_domain(const SubmoduleContext& ctx, Reading reading) {
  if (reading == Reading::None) throw AlgebraError("this check needs a reading");
  const auto& lattice = ctx.data().lattice();
  const std::vector<bool>* form = reading == Reading::BowtieForm ? &ctx.data().bowtie_form() : nullptr;
  ColonDomain d;
  for (std::size_t t = 0; t < lattice.size(); ++t) {
    if (form && !(*form)[t]) continue;
    if (lattice[t].is_subset_of(ctx.lifted())) continue;
    d.positions.push_back(t);
    d.colons.push_back(colon_into_ring(ctx.lifted(), lattice[t]));
  }
  return d;
}

}  // namespace

TheoremReport check_L3i(const SubmoduleContext& ctx, Variant v, Reading reading) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::L3i, ctx.key(), v, reading);
    const Verdict& wp = ctx.weakly_prime(v);
    const ColonDomain d = colon_domain(ctx, reading);
    std::optional<Witness> rhs_witness;
    for (std::size_t k = 0; k < d.positions.size() && !rhs_witness; ++k) {
      Verdict p = is_prime_ideal(d.colons[k]);
      if (p.holds) continue;
      Witness w = *p.witness;
      const Submodule& K = ctx.data().lattice()[d.positions[k]];
      w.submodules = {K.members()};
      w.lattice_positions = {d.positions[k]};
      w.text = "K=" + K.to_string() + " " + w.text;
      rhs_witness = std::move(w);
    }
    r.facts = {{"weakly_prime", b(wp.holds)},
               {"colons_prime", b(!rhs_witness)},
               {"domain", std::to_string(d.positions.size())}};
    settle_biconditional(r, wp.holds, !rhs_witness, wp.witness, rhs_witness);
    return r;
  });
}

TheoremReport check_L3ii(const SubmoduleContext& ctx, Variant v, Reading reading) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::L3ii, ctx.key(), v, reading);
    const Verdict& wp = ctx.weakly_prime(v);
    r.facts = {{"weakly_prime", b(wp.holds)}};
    if (!wp.holds) {
      r.outcome = Outcome::NotApplicable;
      return r;
    }
    const ColonDomain d = colon_domain(ctx, reading);
    const auto& lattice = ctx.data().lattice();
    const auto& labels = ctx.bowtie().ring->labels();
    r.facts.push_back({"domain", std::to_string(d.positions.size())});
    for (std::size_t p = 0; p < d.positions.size(); ++p) {
      for (std::size_t q = p + 1; q < d.positions.size(); ++q) {
        const Bits& ck = d.colons[p].bits();
        const Bits& cl = d.colons[q].bits();
        if (ck.is_subset_of(cl) || cl.is_subset_of(ck)) continue;
        const Submodule& K = lattice[d.positions[p]];
        const Submodule& L = lattice[d.positions[q]];
        Witness w;
        w.submodules = {K.members(), L.members()};
        w.lattice_positions = {d.positions[p], d.positions[q]};
        w.text = "K=" + K.to_string() + " L=" + L.to_string() + " a=" + first_label(ck - cl, labels) +
                 " b=" + first_label(cl - ck, labels);
        r.outcome = Outcome::Fail;
        r.gap = Gap::Statement;
        r.note = "colons are not comparable";
        r.witness = std::move(w);
        return r;
      }
    }
    r.outcome = Outcome::Pass;
    return r;
  });
}

TheoremReport check_C_PPW(const SubmoduleContext& ctx, Variant v) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::C_PPW, ctx.key(), v);
    const Verdict& prime = ctx.prime();
    const Verdict& primary = ctx.primary();
    const Verdict& wp = ctx.weakly_prime(v);
    r.facts = {{"prime", b(prime.holds)}, {"primary", b(primary.holds)}, {"weakly_prime", b(wp.holds)}};
    settle_biconditional(r, prime.holds, primary.holds && wp.holds, prime.witness,
                         !primary.holds ? primary.witness : wp.witness);
    return r;
  });
}

TheoremReport check_T4(const SubmoduleContext& ctx, Variant v) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::T4, ctx.key(), v);
    const Verdict& wp = ctx.weakly_prime(v);
    const auto& spans = ctx.spans();
    const auto& colons = ctx.element_colons();
    const Bits& n = ctx.lifted().bits();
    const TableModule& M = *ctx.bowtie().module;
    std::optional<Witness> cond_witness;
    for (Index x = 0; x < M.size() && !cond_witness; ++x) {
      for (Index y = 0; y < M.size(); ++y) {
        if (colons[x] == colons[y]) continue;
        if ((spans[x] & spans[y]) == n) continue;
        Witness w;
        w.elements = {x, y};
        w.text = "x=" + M.label(x) + " y=" + M.label(y);
        cond_witness = std::move(w);
        break;
      }
    }
    r.facts = {{"weakly_prime", b(wp.holds)}, {"intersection_condition", b(!cond_witness)}};
    settle_biconditional(r, wp.holds, !cond_witness, wp.witness, cond_witness);
    return r;
  });
}

TheoremReport check_R_T4(const SubmoduleContext& ctx) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::R_T4, ctx.key());
    const Verdict& prime = ctx.prime();
    const auto& spans = ctx.spans();
    const Bits& n = ctx.lifted().bits();
    const TableModule& M = *ctx.bowtie().module;
    const TableRing& R = *M.ring();
    std::optional<Witness> cond_witness;
    for (Index a = 0; a < R.size() && !cond_witness; ++a) {
      for (Index x = 0; x < M.size() && !cond_witness; ++x) {
        if (!n.test(M.act(a, x)) || spans[x] == n) continue;
        for (Index y = 0; y < M.size(); ++y) {
          if (spans[M.act(a, y)] == n) continue;
          Witness w;
          w.scalars = {a};
          w.elements = {x, y};
          w.text = "a=" + R.label(a) + " x=" + M.label(x) + " y=" + M.label(y);
          cond_witness = std::move(w);
          break;
        }
      }
    }
    r.facts = {{"prime", b(prime.holds)}, {"condition", b(!cond_witness)}};
    if (prime.holds) {
      r.outcome = cond_witness ? Outcome::Fail : Outcome::Pass;
      if (cond_witness) {
        r.gap = Gap::Statement;
        r.witness = cond_witness;
      }
    } else {
      r.outcome = Outcome::NotApplicable;
      if (!cond_witness) {
        r.gap = Gap::Converse;
        r.note = "condition holds without primality";
        r.witness = prime.witness;
      }
    }
    return r;
  });
}

TheoremReport check_C_IRR(const SubmoduleContext& ctx, Variant v) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::C_IRR, ctx.key(), v);
    const Verdict& wp = ctx.weakly_prime(v);
    r.facts = {{"weakly_prime", b(wp.holds)}};
    if (!wp.holds) {
      r.outcome = Outcome::NotApplicable;
      return r;
    }
    const auto& spans = ctx.spans();
    const Bits& n = ctx.lifted().bits();
    const TableModule& M = *ctx.bowtie().module;
    const TableRing& R = *M.ring();
    std::optional<Witness> part1;
    for (Index a = 0; a < R.size() && !part1; ++a) {
      for (Index x = 0; x < M.size() && !part1; ++x) {
        if (!n.test(M.act(a, x))) continue;
        for (Index y = 0; y < M.size(); ++y) {
          if ((spans[x] & spans[M.act(a, y)]) == n) continue;
          Witness w;
          w.scalars = {a};
          w.elements = {x, y};
          w.text = "a=" + R.label(a) + " x=" + M.label(x) + " y=" + M.label(y);
          part1 = std::move(w);
          break;
        }
      }
    }
    const Verdict& irr = ctx.irreducible();
    const Verdict& prime = ctx.prime();
    r.facts.push_back({"intersection_identity", b(!part1)});
    r.facts.push_back({"irreducible", b(irr.holds)});
    r.facts.push_back({"prime", b(prime.holds)});
    if (part1) {
      r.outcome = Outcome::Fail;
      r.gap = Gap::Statement;
      r.note = "part 1 intersection identity fails";
      r.witness = part1;
    } else if (irr.holds && !prime.holds) {
      r.outcome = Outcome::Fail;
      r.gap = Gap::Statement;
      r.note = "irreducible but not prime";
      r.witness = prime.witness;
    } else {
      r.outcome = Outcome::Pass;
      if (prime.holds && !irr.holds) {
        r.gap = Gap::Converse;
        r.note = "prime but not irreducible";
        r.witness = irr.witness;
      }
    }
    return r;
  });
}

TheoremReport check_L_colon_prod(const SubmoduleContext& ctx, Variant v) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::L_COLON_PROD, ctx.key(), v);
    const Verdict& wp = ctx.weakly_prime(v);
    const TableRing& R = *ctx.bowtie().ring;
    std::vector<Bits> by_scalar;
    by_scalar.reserve(R.size());
    for (Index a = 0; a < R.size(); ++a) by_scalar.push_back(colon_by_scalar(ctx.lifted(), a).bits());
    std::optional<Witness> cond_witness;
    for (Index a1 = 0; a1 < R.size() && !cond_witness; ++a1) {
      for (Index a2 = 0; a2 < R.size(); ++a2) {
        const Bits& prod = by_scalar[R.mul(a1, a2)];
        if (prod == by_scalar[a1] || prod == by_scalar[a2]) continue;
        Witness w;
        w.scalars = {a1, a2};
        w.text = "a1=" + R.label(a1) + " a2=" + R.label(a2);
        cond_witness = std::move(w);
        break;
      }
    }
    r.facts = {{"weakly_prime", b(wp.holds)}, {"colon_condition", b(!cond_witness)}};
    settle_biconditional(r, wp.holds, !cond_witness, wp.witness, cond_witness);
    return r;
  });
}

TheoremReport check_R_CEX(const SubmoduleContext& ctx, Variant v) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::R_CEX, ctx.key(), v);
    const Verdict& prime = ctx.prime();
    const Verdict& wp = ctx.weakly_prime(v);
    const Verdict colon_prime = is_prime_ideal(ctx.colon());
    const Verdict colon_wp = is_weakly_prime_ideal(ctx.colon());
    const bool exhibits = wp.holds && !prime.holds && !colon_wp.holds;
    r.facts = {{"prime", b(prime.holds)},
               {"colon_prime", b(colon_prime.holds)},
               {"weakly_prime", b(wp.holds)},
               {"colon_weakly_prime", b(colon_wp.holds)},
               {"exhibits_counterexample", b(exhibits)}};
    if (prime.holds) {
      r.outcome = colon_prime.holds ? Outcome::Pass : Outcome::Fail;
      if (!colon_prime.holds) {
        r.gap = Gap::Statement;
        r.witness = colon_prime.witness;
      }
    } else {
      r.outcome = Outcome::NotApplicable;
      if (exhibits) {
        r.note = "weakly prime, colon not a weakly prime ideal";
        r.witness = colon_wp.witness;
      }
    }
    return r;
  });
}

TheoremReport check_P_faithful(const SubmoduleContext& ctx, Variant v) {
  require_variant(v);
  return timed([&] {
    TheoremReport r = make_report(TheoremId::P_FAITHFUL, ctx.key(), v);
    const ModulePtr& M = ctx.bowtie().module;
    const bool faithful = is_faithful(M);
    const bool cyclic = is_cyclic(M);
    const Verdict& wp = ctx.weakly_prime(v);
    const Verdict colon_wp = is_weakly_prime_ideal(ctx.colon());
    r.facts = {{"faithful", b(faithful)},
               {"cyclic", b(cyclic)},
               {"weakly_prime", b(wp.holds)},
               {"colon_weakly_prime", b(colon_wp.holds)}};
    if (faithful && cyclic && wp.holds) {
      r.outcome = colon_wp.holds ? Outcome::Pass : Outcome::Fail;
      if (!colon_wp.holds) {
        r.gap = Gap::Statement;
        r.witness = colon_wp.witness;
      }
    } else {
      r.outcome = Outcome::NotApplicable;
      if (faithful && cyclic && colon_wp.holds && !wp.holds) {
        r.gap = Gap::Converse;
        r.note = "colon weakly prime without N⋈I weakly prime";
        r.witness = wp.witness;
      }
    }
    return r;
  });
}

TheoremReport check_L_radical(const SubmoduleContext& ctx) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::L_RADICAL, ctx.key());
    const Verdict& primary = ctx.primary();
    const Ideal rad = radical(ctx.colon());
    const TableModule& M = *ctx.bowtie().module;
    const TableRing& R = *M.ring();
    const auto& colons = ctx.element_colons();
    std::optional<Witness> cond_witness;
    for (Index x = 0; x < M.size(); ++x) {
      if (ctx.lifted().contains(x)) continue;
      const Bits outside = colons[x] - rad.bits();
      if (outside.none()) continue;
      const auto c = static_cast<Index>(outside.find_first());
      Witness w;
      w.scalars = {c};
      w.elements = {x};
      w.text = "b=" + M.label(x) + " c=" + R.label(c);
      cond_witness = std::move(w);
      break;
    }
    r.facts = {{"primary", b(primary.holds)}, {"colons_in_radical", b(!cond_witness)}};
    settle_biconditional(r, primary.holds, !cond_witness, primary.witness, cond_witness);
    return r;
  });
}

TheoremReport check_P_colon_primary(const SubmoduleContext& ctx) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::P_COLON_PRIMARY, ctx.key());
    const Verdict& primary = ctx.primary();
    const Verdict colon_primary = is_primary_ideal(ctx.colon());
    const Ideal ann = annihilator(quotient_module(ctx.lifted()).module);
    const bool same = ann == ctx.colon();
    r.facts = {{"primary", b(primary.holds)},
               {"colon_equals_annihilator", b(same)},
               {"colon_primary", b(colon_primary.holds)}};
    if (primary.holds) {
      if (same && colon_primary.holds) {
        r.outcome = Outcome::Pass;
      } else {
        r.outcome = Outcome::Fail;
        r.gap = Gap::Statement;
        if (!same) {
          r.note = "colon differs from Ann(M⋈I/N⋈I)";
          r.witness = text_witness("colon=" + ctx.colon().to_string() + " ann=" + ann.to_string());
        } else {
          r.witness = colon_primary.witness;
        }
      }
    } else {
      r.outcome = Outcome::NotApplicable;
      if (colon_primary.holds) {
        r.gap = Gap::Converse;
        r.note = "colon primary without N⋈I primary";
        r.witness = primary.witness;
      }
    }
    return r;
  });
}

TheoremReport check_C_radical_prime(const SubmoduleContext& ctx) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::C_RADICAL_PRIME, ctx.key());
    const Verdict& primary = ctx.primary();
    const Verdict rad_prime = is_prime_ideal(radical(ctx.colon()));
    r.facts = {{"primary", b(primary.holds)}, {"radical_prime", b(rad_prime.holds)}};
    if (primary.holds) {
      r.outcome = rad_prime.holds ? Outcome::Pass : Outcome::Fail;
      if (!rad_prime.holds) {
        r.gap = Gap::Statement;
        r.witness = rad_prime.witness;
      }
    } else {
      r.outcome = Outcome::NotApplicable;
      if (rad_prime.holds) {
        r.gap = Gap::Converse;
        r.note = "radical prime without N⋈I primary";
        r.witness = primary.witness;
      }
    }
    return r;
  });
}

namespace {

// Verifies that f is a surjective module map with the expected kernel and
// that the induced map on source/kernel is a bijective module map. Returns
// an empty string on success, otherwise what failed.
std::string verify_canonical_map(const ModuleMap& f, const Submodule& expected_kernel,
                                 std::size_t& quotient_size) {
  if (!check_module_map(f)) return "not a module map";
  if (!image(f).is_whole()) return "not surjective";
  const Submodule ker = kernel(f);
  if (ker != expected_kernel) return "kernel " + ker.to_string() + " != " + expected_kernel.to_string();
  const QuotientModule q = quotient_module(ker);
  quotient_size = q.module->size();
  const ModuleMap induced = induced_on_quotient(f, q);
  if (!check_module_map(induced)) return "induced map is not a module map";
  if (q.module->size() != f.target->size() || !image(induced).is_whole()) return "induced map is not bijective";
  return {};
}

}  // namespace

TheoremReport check_L8(const InstanceData& data) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::L8, data.key());
    const BowtieInstance& B = data.bowtie();
    const DistinguishedSubmodules d = distinguished_submodules(B);

    const ModulePtr first_target = restrict_scalars(B, B.base_module, Projection::First);
    ModuleMap first{B.module, first_target, {}};
    for (const auto& [m, mp] : B.module_pairs) first.table.push_back(m);

    const QuotientModule m_mod_im = quotient_module(B.im);
    const ModulePtr coset_target = restrict_scalars(B, m_mod_im.module, Projection::First);
    ModuleMap coset{B.module, coset_target, {}};
    for (const auto& [m, mp] : B.module_pairs) coset.table.push_back(m_mod_im.projection.table[m]);

    std::size_t q1 = 0, q2 = 0;
    const std::string e1 = verify_canonical_map(first, d.zero_cross_im, q1);
    const std::string e2 = verify_canonical_map(coset, d.im_cross_im, q2);
    r.facts = {{"|M⋈I|", std::to_string(B.module->size())},
               {"|M⋈I/0xIM|", std::to_string(q1)},
               {"|M|", std::to_string(B.base_module->size())},
               {"|M⋈I/IMxIM|", std::to_string(q2)},
               {"|M/IM|", std::to_string(m_mod_im.module->size())}};
    if (e1.empty() && e2.empty()) {
      r.outcome = Outcome::Pass;
    } else {
      r.outcome = Outcome::Fail;
      r.gap = Gap::Statement;
      r.witness = text_witness(!e1.empty() ? "first projection: " + e1 : "coset projection: " + e2);
    }
    return r;
  });
}

TheoremReport check_T_final(const InstanceData& data) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::T_FINAL, data.key(), Variant::Behboodi);
    const BowtieInstance& B = data.bowtie();
    if (B.base_module->size() == 1) throw AlgebraError("weakly prime module check needs M nonzero");
    const bool im_zero = B.im.is_zero();
    const Verdict m_wp = is_weakly_prime_module(B.base_module, data.base_lattice());
    const Verdict dup_wp = is_weakly_prime_module(B.module, data.lattice());
    const DistinguishedSubmodules d = distinguished_submodules(B);
    const Verdict zero_im_wp = is_weakly_prime_submodule_behboodi(d.zero_cross_im);
    r.facts = {{"IM=0", b(im_zero)},
               {"M_weakly_prime", b(m_wp.holds)},
               {"M⋈I_weakly_prime", b(dup_wp.holds)},
               {"0xIM_weakly_prime", b(zero_im_wp.holds)}};

    const bool rhs1 = im_zero && m_wp.holds;
    std::optional<Witness> rhs1_witness;
    if (!rhs1) rhs1_witness = im_zero ? m_wp.witness : std::optional<Witness>(text_witness("IM=" + B.im.to_string()));
    TheoremReport part1 = r, part2 = r;
    settle_biconditional(part1, dup_wp.holds, rhs1, dup_wp.witness, rhs1_witness);
    settle_biconditional(part2, zero_im_wp.holds, m_wp.holds, zero_im_wp.witness, m_wp.witness);
    if (part1.outcome == Outcome::Fail) {
      part1.note = "part 1 " + part1.note;
      return part1;
    }
    if (part2.outcome == Outcome::Fail) {
      part2.note = "part 2 " + part2.note;
      return part2;
    }
    r.outcome = Outcome::Pass;
    return r;
  });
}

TheoremReport check_divergence(const SubmoduleContext& ctx) {
  return timed([&] {
    TheoremReport r = make_report(TheoremId::DIVERGENCE, ctx.key());
    const Verdict base_af = is_weakly_prime_submodule_af(ctx.base());
    const Verdict base_b = is_weakly_prime_submodule_behboodi(ctx.base());
    const Verdict& dup_af = ctx.weakly_prime(Variant::AF);
    const Verdict& dup_b = ctx.weakly_prime(Variant::Behboodi);
    r.facts = {{"AF(N)", b(base_af.holds)},
               {"BEHBOODI(N)", b(base_b.holds)},
               {"AF(N⋈I)", b(dup_af.holds)},
               {"BEHBOODI(N⋈I)", b(dup_b.holds)}};
    auto disagree = [&](const Verdict& af, const Verdict& be, const char* where) {
      r.outcome = Outcome::Fail;
      r.note = std::string("AF and BEHBOODI disagree on ") + where;
      r.witness = af.holds ? be.witness : af.witness;
    };
    if (base_af.holds != base_b.holds) {
      disagree(base_af, base_b, "N");
    } else if (dup_af.holds != dup_b.holds) {
      disagree(dup_af, dup_b, "N⋈I");
    } else {
      r.outcome = Outcome::Pass;
    }
    return r;
  });
}

}  // namespace dupalg
