#pragma once

// Executable checks of the statements about prime, weakly prime and primary
// submodules of M⋈I, evaluated exhaustively on one finite instance at a time,
// and a corpus sweeper that runs them over families of Z_n instances.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dupalg/bowtie.hpp"
#include "dupalg/classify.hpp"

namespace dupalg {

enum class TheoremId {
  L1,               // (N⋈I : M⋈I) = (N : M)⋈I
  L2,               // N prime <=> N⋈I prime
  C_WP,             // N weakly prime (AF) <=> N⋈I weakly prime (AF)
  P_PRIMARY,        // N primary <=> N⋈I primary
  L3i,              // weakly prime <=> every (N⋈I : K) with K not in N⋈I is prime
  L3ii,             // weakly prime => those colons form a chain
  C_PPW,            // prime <=> primary and weakly prime
  T4,               // weakly prime <=> intersection identity for unequal colons
  R_T4,             // prime => N⋈I + Rx = N⋈I or N⋈I + R(a y) = N⋈I
  C_IRR,            // weakly prime => intersection identity; irreducible => prime
  L_COLON_PROD,     // weakly prime <=> (N : ab) = (N : a) or (N : b)
  R_CEX,            // prime => colon prime; weakly prime need not give weakly prime colon
  P_FAITHFUL,       // faithful cyclic, weakly prime => colon weakly prime ideal
  L_RADICAL,        // primary <=> (N : Rb) in sqrt((N : M)) for b outside N
  P_COLON_PRIMARY,  // primary => (N : M) = Ann(M/N) is primary
  C_RADICAL_PRIME,  // primary => sqrt((N : M)) prime
  L8,               // M⋈I/(0 x IM) = M and M⋈I/(IM x IM) = M/IM
  T_FINAL,          // weakly prime module characterisation of M⋈I and 0 x IM
  DIVERGENCE,       // AF and Behboodi disagree on a submodule
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::L1,     TheoremId::L2,          TheoremId::C_WP,
    TheoremId::P_PRIMARY, TheoremId::L3i,      TheoremId::L3ii,
    TheoremId::C_PPW,  TheoremId::T4,          TheoremId::R_T4,
    TheoremId::C_IRR,  TheoremId::L_COLON_PROD, TheoremId::R_CEX,
    TheoremId::P_FAITHFUL, TheoremId::L_RADICAL, TheoremId::P_COLON_PRIMARY,
    TheoremId::C_RADICAL_PRIME, TheoremId::L8, TheoremId::T_FINAL,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view s);
/// Takes a weakly prime variant parameter.
bool uses_variant(TheoremId id);
/// Quantifies over "submodules K⋈I", which has two readings.
bool uses_reading(TheoremId id);
/// Evaluated once per (A, I, M) rather than per submodule N.
bool is_instance_level(TheoremId id);

/// How "every submodule K⋈I of M⋈I" is read: only submodules of the form
/// K⋈I, or every submodule of M⋈I.
enum class Reading { None, BowtieForm, AllSubmodules };
std::string_view to_string(Reading r);

enum class Outcome { Pass, Fail, NotApplicable, Skipped };
std::string_view to_string(Outcome o);

/// Statement: a stated direction failed. Converse: the statement held (or
/// was not applicable) but the unstated reverse implication fails.
enum class Gap { None, Statement, Converse };
std::string_view to_string(Gap g);

struct Fact {
  std::string name;
  std::string value;
};

struct TheoremReport {
  TheoremId id = TheoremId::L1;
  std::string instance;
  Variant variant = Variant::None;
  Reading reading = Reading::None;
  Outcome outcome = Outcome::Pass;
  Gap gap = Gap::None;
  std::optional<Witness> witness;
  std::vector<Fact> facts;
  std::string note;
  double elapsed_ms = 0.0;  // not serialized

  // Position in a sweep; used for ordering, not serialized.
  std::size_t corpus_n = 0;
  std::size_t instance_ordinal = 0;
  std::size_t submodule_ordinal = 0;

  const std::string* fact(std::string_view name) const;
};

/// One tab-separated line: instance, theorem, variant, reading, outcome,
/// gap, witness, facts (name=value joined by ';'), note.
std::string serialize(const TheoremReport& r);

/// Reads the BOWTIE_BUDGET environment variable, falling back to 256.
std::size_t budget_from_environment();

/// (A, I, M), its duplication, and lazily computed lattices shared by all
/// checks on the instance.
class InstanceData {
 public:
  InstanceData(const Ideal& ideal, const ModulePtr& module, std::size_t budget = 256);

  const BowtieInstance& bowtie() const;
  const std::string& key() const { return key_; }
  std::size_t budget() const { return budget_; }
  /// |M⋈I| or |A⋈I| above the budget.
  bool over_budget() const { return over_budget_; }

  const std::vector<Submodule>& lattice() const;       // submodules of M⋈I
  const std::vector<bool>& bowtie_form() const;        // per lattice entry
  const std::vector<Submodule>& base_lattice() const;  // submodules of M

 private:
  std::string key_;
  std::size_t budget_;
  bool over_budget_ = false;
  std::optional<BowtieInstance> inst_;
  mutable std::optional<std::vector<Submodule>> lattice_;
  mutable std::optional<std::vector<bool>> bowtie_form_;
  mutable std::optional<std::vector<Submodule>> base_lattice_;
};

/// N together with N⋈I and cached classifications of N⋈I.
class SubmoduleContext {
 public:
  SubmoduleContext(const InstanceData& data, Submodule n);

  const InstanceData& data() const { return data_; }
  const BowtieInstance& bowtie() const { return data_.bowtie(); }
  const Submodule& base() const { return base_; }
  const Submodule& lifted() const { return lifted_; }
  const std::string& key() const { return key_; }

  // Classifications of N⋈I (throw ImproperError when N = M).
  const Verdict& prime() const;
  const Verdict& primary() const;
  const Verdict& weakly_prime(Variant v) const;
  const Verdict& irreducible() const;
  const Ideal& colon() const;  // (N⋈I : M⋈I)

  /// Per element x of M⋈I: N⋈I + (A⋈I) x, and (N⋈I : (A⋈I) x).
  const std::vector<Bits>& spans() const;
  const std::vector<Bits>& element_colons() const;

 private:
  const InstanceData& data_;
  Submodule base_;
  Submodule lifted_;
  std::string key_;
  mutable std::optional<Verdict> prime_, primary_, irreducible_;
  mutable std::map<Variant, Verdict> weakly_prime_;
  mutable std::optional<Ideal> colon_;
  mutable std::optional<std::vector<Bits>> spans_, element_colons_;
};

enum class Notion { Prime, WeaklyPrimeAF, Primary };

TheoremReport check_L1(const SubmoduleContext& ctx);
TheoremReport check_transfer(const SubmoduleContext& ctx, Notion notion);
TheoremReport check_L3i(const SubmoduleContext& ctx, Variant v, Reading reading);
TheoremReport check_L3ii(const SubmoduleContext& ctx, Variant v, Reading reading);
TheoremReport check_C_PPW(const SubmoduleContext& ctx, Variant v);
TheoremReport check_T4(const SubmoduleContext& ctx, Variant v);
TheoremReport check_R_T4(const SubmoduleContext& ctx);
TheoremReport check_C_IRR(const SubmoduleContext& ctx, Variant v);
TheoremReport check_L_colon_prod(const SubmoduleContext& ctx, Variant v);
TheoremReport check_R_CEX(const SubmoduleContext& ctx, Variant v);
TheoremReport check_P_faithful(const SubmoduleContext& ctx, Variant v);
TheoremReport check_L_radical(const SubmoduleContext& ctx);
TheoremReport check_P_colon_primary(const SubmoduleContext& ctx);
TheoremReport check_C_radical_prime(const SubmoduleContext& ctx);
TheoremReport check_L8(const InstanceData& data);
TheoremReport check_T_final(const InstanceData& data);
TheoremReport check_divergence(const SubmoduleContext& ctx);

struct Selection {
  std::vector<TheoremId> theorems;
  std::vector<Variant> variants{std::begin(kWeaklyPrimeVariants), std::end(kWeaklyPrimeVariants)};
  std::vector<Reading> readings{Reading::BowtieForm, Reading::AllSubmodules};
};

/// Every instance-level check of the selection, then every per-submodule
/// check for each N in `submodules`, expanded over variants and readings.
/// Submodules equal to M only receive L1. Over-budget instances yield
/// Skipped reports.
std::vector<TheoremReport> run_checks(const InstanceData& data,
                                      const std::vector<Submodule>& submodules,
                                      const Selection& selection);

// ---------------------------------------------------------------------------
// Corpus sweeps

struct CorpusSpec {
  std::size_t max_n = 0;  // Z_n for 1 <= n <= max_n, regular module, every ideal I
  bool zero_submodule_only = false;
};

struct HuntOptions {
  Selection selection;
  std::size_t workers = 1;
  std::size_t budget = 256;
  /// Refuse corpora with more base instances than this (0 = unlimited).
  std::size_t max_instances = 0;
};

struct Tally {
  std::size_t pass = 0, fail = 0, not_applicable = 0, skipped = 0, converse_gaps = 0;
};

struct HuntResult {
  std::vector<TheoremReport> reports;
  std::map<std::pair<TheoremId, Variant>, Tally> tallies;
  bool partial = false;  // some instance exceeded the budget
  std::size_t instances = 0;
};

/// Runs the selection over the corpus. Reports are ordered by (instance,
/// submodule, theorem, variant, reading) independently of worker count.
/// Throws AlgebraError if an L8 check fails (construction bug) or the corpus
/// exceeds max_instances.
HuntResult hunt(const CorpusSpec& corpus, const HuntOptions& options);

/// Smallest n whose corpus has a DIVERGENCE failure, with its report.
std::optional<std::pair<std::size_t, TheoremReport>> first_divergence(const HuntResult& result);

}  // namespace dupalg
