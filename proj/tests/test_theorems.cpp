#include <gtest/gtest.h>

#include <cstdlib>

#include "dupalg/theorems.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dupalg;
using namespace testing_support;

namespace {

struct Fixture {
  RingPtr ring;
  ModulePtr module;
  InstanceData data;
  Fixture(std::size_t n, const std::vector<std::string>& ideal_gens, std::size_t budget = 256)
      : ring(make_zn(n)), module(ring_as_module(ring)), data(ideal(ring, ideal_gens), module, budget) {}
  SubmoduleContext ctx(const std::vector<std::string>& gens) const { return SubmoduleContext(data, sub(module, gens)); }
};

std::string fact(const TheoremReport& r, const std::string& name) {
  const std::string* v = r.fact(name);
  return v ? *v : "<missing>";
}

}  // namespace

TEST(Names, RoundTrip) {
  for (TheoremId id : kAllTheorems) EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  EXPECT_EQ(parse_theorem_id("l3i"), TheoremId::L3i);
  EXPECT_EQ(parse_theorem_id("DIVERGENCE"), TheoremId::DIVERGENCE);
  EXPECT_FALSE(parse_theorem_id("L99").has_value());
}

TEST(CheckL1, Examples) {
  Fixture z6(6, {"3"});
  const TheoremReport r = check_L1(z6.ctx({}));
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(fact(r, "lhs_size"), "2");
  Fixture z16(16, {"4"});
  EXPECT_EQ(check_L1(z16.ctx({"8"})).outcome, Outcome::Pass);
  Fixture zero(6, {});
  for (const Submodule& n : zero.data.base_lattice()) {
    EXPECT_EQ(check_L1(SubmoduleContext(zero.data, n)).outcome, Outcome::Pass);
  }
}

TEST(CheckL1, ColonMatchesPairOracle) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const RingPtr r = make_zn(n);
    const ModulePtr m = ring_as_module(r);
    for (const Ideal& i : enumerate_ideals(r)) {
      InstanceData data(i, m);
      const BowtieInstance& B = data.bowtie();
      for (const Submodule& base : data.base_lattice()) {
        const SubmoduleContext ctx(data, base);
        // (N⋈I : M⋈I) from the definition, decoded to pairs.
        std::set<IndexPair> lhs;
        for (Index k : oracle::colon(*B.module, ctx.lifted().members())) lhs.insert(B.ring_pairs[k]);
        std::set<IndexPair> rhs;
        for (Index a : oracle::colon(*m, base.members())) {
          for (Index x : i.members()) rhs.insert({a, r->add(a, x)});
        }
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(check_L1(ctx).outcome, Outcome::Pass);
      }
    }
  }
}

TEST(CheckTransfer, FinitizedExamples) {
  Fixture z12(12, {"4"});
  const TheoremReport prime = check_transfer(z12.ctx({"3"}), Notion::Prime);
  EXPECT_EQ(prime.outcome, Outcome::Pass);
  EXPECT_EQ(fact(prime, "N"), "true");
  EXPECT_EQ(fact(prime, "N⋈I"), "true");

  Fixture z20(20, {"4"});
  const TheoremReport primary = check_transfer(z20.ctx({"5"}), Notion::Primary);
  EXPECT_EQ(primary.outcome, Outcome::Pass);
  EXPECT_EQ(fact(primary, "N"), "true");
  EXPECT_EQ(fact(primary, "N⋈I"), "true");

  Fixture z16(16, {"4"});
  const SubmoduleContext c16 = z16.ctx({"8"});
  EXPECT_EQ(check_transfer(c16, Notion::Primary).outcome, Outcome::Pass);
  const TheoremReport p16 = check_transfer(c16, Notion::Prime);
  EXPECT_EQ(p16.outcome, Outcome::Pass);
  EXPECT_EQ(fact(p16, "N⋈I"), "false");
}

TEST(CheckTransfer, WeaklyPrimeFailsOnZ6) {
  // {0} is AF-weakly prime in Z_6 but {0}⋈3Z_6 is not, so the transfer
  // statement fails here.
  Fixture z6(6, {"3"});
  const TheoremReport r = check_transfer(z6.ctx({}), Notion::WeaklyPrimeAF);
  EXPECT_EQ(r.id, TheoremId::C_WP);
  EXPECT_EQ(r.variant, Variant::AF);
  EXPECT_EQ(r.outcome, Outcome::Fail);
  EXPECT_EQ(r.gap, Gap::Statement);
  EXPECT_EQ(fact(r, "N"), "true");
  EXPECT_EQ(fact(r, "N⋈I"), "false");
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->text, "a=(2,5) x=(3,3) ax=(0,3)");
}

TEST(CheckL3, Z6UnderEachVariant) {
  Fixture z6(6, {"3"});
  const SubmoduleContext ctx = z6.ctx({});
  for (Reading reading : {Reading::BowtieForm, Reading::AllSubmodules}) {
    // AF: N⋈I is not AF-weakly prime and (N⋈I : M⋈I) = 0 x I is not prime,
    // so the biconditional holds with both sides false.
    const TheoremReport af = check_L3i(ctx, Variant::AF, reading);
    EXPECT_EQ(af.outcome, Outcome::Pass);
    EXPECT_EQ(fact(af, "weakly_prime"), "false");
    EXPECT_EQ(fact(af, "colons_prime"), "false");
    const TheoremReport az = check_L3i(ctx, Variant::Azizi, reading);
    EXPECT_EQ(az.outcome, Outcome::Pass);
    EXPECT_EQ(fact(az, "weakly_prime"), "false");
    EXPECT_EQ(check_L3ii(ctx, Variant::Azizi, reading).outcome, Outcome::NotApplicable);
  }
  EXPECT_EQ(fact(check_L3i(ctx, Variant::AF, Reading::BowtieForm), "domain"), "3");
  EXPECT_THROW(check_L3i(ctx, Variant::None, Reading::BowtieForm), AlgebraError);
  EXPECT_THROW(check_L3i(ctx, Variant::AF, Reading::None), AlgebraError);
}

TEST(CheckL3, PrimeSubmoduleWithZeroIdeal) {
  Fixture f(6, {});
  for (Variant v : kWeaklyPrimeVariants) {
    for (Reading reading : {Reading::BowtieForm, Reading::AllSubmodules}) {
      EXPECT_EQ(check_L3i(f.ctx({"2"}), v, reading).outcome, Outcome::Pass);
      EXPECT_EQ(check_L3ii(f.ctx({"2"}), v, reading).outcome, Outcome::Pass);
    }
  }
}

TEST(CheckCPPW, Examples) {
  Fixture z16(16, {"4"});
  for (Variant v : kWeaklyPrimeVariants) {
    const TheoremReport r = check_C_PPW(z16.ctx({"8"}), v);
    EXPECT_EQ(fact(r, "primary"), "true");
    EXPECT_EQ(fact(r, "prime"), "false");
    EXPECT_EQ(r.outcome, fact(r, "weakly_prime") == "false" ? Outcome::Pass : Outcome::Fail);
  }
  Fixture z6(6, {"3"});
  const TheoremReport r = check_C_PPW(z6.ctx({}), Variant::AF);
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(fact(r, "primary"), "false");
  Fixture z12(12, {"4"});
  const TheoremReport p = check_C_PPW(z12.ctx({"3"}), Variant::AF);
  EXPECT_EQ(p.outcome, Outcome::Pass);
  EXPECT_EQ(fact(p, "prime"), "true");
  EXPECT_EQ(fact(p, "primary"), "true");
  EXPECT_EQ(fact(p, "weakly_prime"), "true");
}

TEST(CheckT4, PrimeSubmodulesSatisfyCondition) {
  Fixture z12(12, {"4"});
  const TheoremReport r = check_T4(z12.ctx({"3"}), Variant::AF);
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(fact(r, "intersection_condition"), "true");
  Fixture z6(6, {"3"});
  for (Variant v : kWeaklyPrimeVariants) {
    const TheoremReport t = check_T4(z6.ctx({}), v);
    EXPECT_NE(t.outcome, Outcome::Skipped);
    EXPECT_EQ(t.variant, v);
  }
}

TEST(CheckRT4, PrimeAndNonPrime) {
  Fixture z12(12, {"4"});
  EXPECT_EQ(check_R_T4(z12.ctx({"3"})).outcome, Outcome::Pass);
  Fixture z6(6, {"3"});
  EXPECT_EQ(check_R_T4(z6.ctx({})).outcome, Outcome::NotApplicable);
}

TEST(CheckCIRR, NotApplicableUnlessWeaklyPrime) {
  Fixture z6(6, {"3"});
  EXPECT_EQ(check_C_IRR(z6.ctx({}), Variant::AF).outcome, Outcome::NotApplicable);
  Fixture z12(12, {"4"});
  const TheoremReport r = check_C_IRR(z12.ctx({"3"}), Variant::Azizi);
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(fact(r, "prime"), "true");
}

TEST(CheckColonProduct, PrimeSubmodules) {
  Fixture z12(12, {"4"});
  for (Variant v : kWeaklyPrimeVariants) {
    const TheoremReport r = check_L_colon_prod(z12.ctx({"3"}), v);
    EXPECT_EQ(r.outcome, Outcome::Pass);
    EXPECT_EQ(fact(r, "colon_condition"), "true");
  }
}

TEST(CheckRCEX, RecordsColonFacts) {
  Fixture z12(12, {"4"});
  const TheoremReport prime = check_R_CEX(z12.ctx({"3"}), Variant::AF);
  EXPECT_EQ(prime.outcome, Outcome::Pass);
  EXPECT_EQ(fact(prime, "colon_prime"), "true");
  Fixture z6(6, {"3"});
  const TheoremReport r = check_R_CEX(z6.ctx({}), Variant::AF);
  EXPECT_EQ(r.outcome, Outcome::NotApplicable);
  EXPECT_EQ(fact(r, "colon_weakly_prime"), "false");
}

TEST(CheckPFaithful, Examples) {
  Fixture z6(6, {"3"});
  const TheoremReport r = check_P_faithful(z6.ctx({}), Variant::AF);
  EXPECT_EQ(fact(r, "faithful"), "true");
  EXPECT_EQ(fact(r, "cyclic"), "true");
  EXPECT_EQ(r.outcome, Outcome::NotApplicable);
  Fixture zero(6, {});
  const TheoremReport z = check_P_faithful(zero.ctx({}), Variant::AF);
  EXPECT_EQ(fact(z, "faithful"), "true");
  EXPECT_EQ(z.outcome, Outcome::Pass);
  // A non-faithful module: Z_2 = Z_4 / 2Z_4 over Z_4.
  const RingPtr z4 = make_zn(4);
  const ModulePtr q = quotient_module(sub(ring_as_module(z4), {"2"})).module;
  InstanceData data(Ideal::zero(z4), q);
  const TheoremReport nf = check_P_faithful(SubmoduleContext(data, Submodule::zero(q)), Variant::AF);
  EXPECT_EQ(fact(nf, "faithful"), "false");
  EXPECT_EQ(nf.outcome, Outcome::NotApplicable);
}

TEST(CheckPrimaryFamily, Z16) {
  Fixture z16(16, {"4"});
  const SubmoduleContext ctx = z16.ctx({"8"});
  EXPECT_EQ(check_L_radical(ctx).outcome, Outcome::Pass);
  const TheoremReport p = check_P_colon_primary(ctx);
  EXPECT_EQ(p.outcome, Outcome::Pass);
  EXPECT_EQ(fact(p, "colon_equals_annihilator"), "true");
  EXPECT_EQ(check_C_radical_prime(ctx).outcome, Outcome::Pass);

  Fixture z6(6, {"3"});
  const TheoremReport l = check_L_radical(z6.ctx({}));
  EXPECT_EQ(l.outcome, Outcome::Pass);
  EXPECT_EQ(fact(l, "colons_in_radical"), "false");

  Fixture z3(3, {});
  const SubmoduleContext field = z3.ctx({});
  EXPECT_TRUE(field.prime().holds);
  EXPECT_EQ(check_C_radical_prime(field).outcome, Outcome::Pass);
}

TEST(CheckL8, QuotientSizes) {
  Fixture z6(6, {"3"});
  const TheoremReport r = check_L8(z6.data);
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(fact(r, "|M⋈I/0xIM|"), "6");
  EXPECT_EQ(fact(r, "|M⋈I/IMxIM|"), "3");
  Fixture z16(16, {"4"});
  const TheoremReport s = check_L8(z16.data);
  EXPECT_EQ(s.outcome, Outcome::Pass);
  EXPECT_EQ(fact(s, "|M⋈I/0xIM|"), "16");
  EXPECT_EQ(fact(s, "|M⋈I/IMxIM|"), "4");
  Fixture zero(6, {});
  EXPECT_EQ(fact(check_L8(zero.data), "|M⋈I/0xIM|"), "6");
}

TEST(CheckTFinal, Examples) {
  Fixture z6(6, {"3"});
  const TheoremReport r = check_T_final(z6.data);
  EXPECT_EQ(r.outcome, Outcome::Pass);
  EXPECT_EQ(fact(r, "M⋈I_weakly_prime"), "false");
  Fixture z3(3, {});
  const TheoremReport f = check_T_final(z3.data);
  EXPECT_EQ(f.outcome, Outcome::Pass);
  EXPECT_EQ(fact(f, "M_weakly_prime"), "true");
  EXPECT_EQ(fact(f, "M⋈I_weakly_prime"), "true");
  Fixture z6zero(6, {});
  const TheoremReport g = check_T_final(z6zero.data);
  EXPECT_EQ(g.outcome, Outcome::Pass);
  EXPECT_EQ(fact(g, "M_weakly_prime"), "false");
  Fixture z1(1, {});
  EXPECT_THROW(check_T_final(z1.data), AlgebraError);
}

TEST(CheckDivergence, Z4) {
  Fixture z4(4, {});
  const TheoremReport r = check_divergence(z4.ctx({}));
  EXPECT_EQ(r.outcome, Outcome::Fail);
  EXPECT_EQ(fact(r, "AF(N)"), "true");
  EXPECT_EQ(fact(r, "BEHBOODI(N)"), "false");
}

TEST(RunChecks, ExpansionAndImproperSubmodule) {
  Fixture z6(6, {"3"});
  Selection s;
  s.theorems = {TheoremId::L1, TheoremId::L3i, TheoremId::C_WP, TheoremId::L8};
  const auto reports = run_checks(z6.data, {Submodule::zero(z6.module), Submodule::whole(z6.module)}, s);
  // L8 once; for {0}: L1, 6 x L3i, C_WP; for M: L1 only.
  ASSERT_EQ(reports.size(), 1u + 8u + 1u);
  EXPECT_EQ(reports.front().id, TheoremId::L8);
  EXPECT_EQ(reports.back().id, TheoremId::L1);
  EXPECT_EQ(reports.back().instance, "Z6 I={0,3} N={0,1,2,3,4,5}");
}

TEST(RunChecks, OverBudgetIsSkipped) {
  Fixture z16(16, {"4"}, 32);
  EXPECT_TRUE(z16.data.over_budget());
  Selection s;
  s.theorems = {TheoremId::L1, TheoremId::L8};
  const auto reports = run_checks(z16.data, {Submodule::zero(z16.module)}, s);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) EXPECT_EQ(r.outcome, Outcome::Skipped);
  EXPECT_THROW(z16.data.bowtie(), AlgebraError);
}

TEST(Budget, Environment) {
  ::setenv("BOWTIE_BUDGET", "77", 1);
  EXPECT_EQ(budget_from_environment(), 77u);
  ::setenv("BOWTIE_BUDGET", "junk", 1);
  EXPECT_EQ(budget_from_environment(), 256u);
  ::unsetenv("BOWTIE_BUDGET");
  EXPECT_EQ(budget_from_environment(), 256u);
}

TEST(Serialize, TabSeparatedFields) {
  Fixture z6(6, {"3"});
  const TheoremReport r = check_transfer(z6.ctx({}), Notion::WeaklyPrimeAF);
  EXPECT_EQ(serialize(r),
            "Z6 I={0,3} N={0}\tC_WP\tAF\tn/a\tFAIL\tstatement-gap\ta=(2,5) x=(3,3) ax=(0,3)\t"
            "N=true;N⋈I=false\tforward direction fails");
}

TEST(Hunt, DeterministicAcrossWorkerCounts) {
  HuntOptions one;
  one.selection.theorems = {TheoremId::L1, TheoremId::C_WP, TheoremId::T4, TheoremId::L8};
  HuntOptions four = one;
  four.workers = 4;
  const HuntResult a = hunt({8, false}, one);
  const HuntResult b = hunt({8, false}, four);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t k = 0; k < a.reports.size(); ++k) EXPECT_EQ(serialize(a.reports[k]), serialize(b.reports[k]));
}

TEST(Hunt, EmptyCorpusAndDivergence) {
  HuntOptions o;
  o.selection.theorems = {TheoremId::DIVERGENCE};
  const HuntResult empty = hunt({0, false}, o);
  EXPECT_TRUE(empty.reports.empty());
  const HuntResult r = hunt({6, true}, o);
  const auto d = first_divergence(r);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->first, 4u);
  EXPECT_EQ(d->second.instance, "Z4 I={0} N={0}");
}

TEST(Hunt, LimitsAndPartialResults) {
  HuntOptions o;
  o.selection.theorems = {TheoremId::L1};
  o.max_instances = 3;
  EXPECT_THROW(hunt({6, false}, o), AlgebraError);
  o.max_instances = 0;
  o.budget = 16;
  const HuntResult r = hunt({6, false}, o);
  EXPECT_TRUE(r.partial);
  EXPECT_GT(r.tallies.at({TheoremId::L1, Variant::None}).skipped, 0u);
}

TEST(TheoremProperties, FactsMatchOracleOnCorpus) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const RingPtr r = make_zn(n);
    const ModulePtr m = ring_as_module(r);
    for (const Ideal& i : enumerate_ideals(r)) {
      InstanceData data(i, m);
      const TableModule& D = *data.bowtie().module;
      const std::vector<Submodule>& lattice = data.lattice();
      std::set<IndexSet> brute;
      for (const Submodule& t : lattice) brute.insert(t.members());
      for (const Submodule& base : data.base_lattice()) {
        if (base.is_whole()) continue;
        const SubmoduleContext ctx(data, base);
        const IndexSet& lifted = ctx.lifted().members();
        EXPECT_EQ(fact(check_transfer(ctx, Notion::Prime), "N⋈I"), oracle::prime_submodule(D, lifted) ? "true" : "false");
        EXPECT_EQ(fact(check_transfer(ctx, Notion::WeaklyPrimeAF), "N⋈I"),
                  oracle::af_submodule(D, lifted) ? "true" : "false");
        EXPECT_EQ(fact(check_transfer(ctx, Notion::Primary), "N⋈I"),
                  oracle::primary_submodule(D, lifted) ? "true" : "false");
        EXPECT_EQ(fact(check_T4(ctx, Variant::Azizi), "weakly_prime"),
                  oracle::azizi_submodule(D, lifted, brute) ? "true" : "false");
        EXPECT_EQ(fact(check_T4(ctx, Variant::Behboodi), "weakly_prime"),
                  oracle::behboodi_submodule(D, lifted, brute) ? "true" : "false");
        const TheoremReport l2 = check_transfer(ctx, Notion::Prime);
        if (l2.outcome == Outcome::Pass) {
          EXPECT_EQ(fact(l2, "N"), fact(l2, "N⋈I"));
        }
      }
    }
  }
}
