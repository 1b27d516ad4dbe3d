#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "dupalg/theorems.hpp"

namespace dupalg {
namespace {

struct Expanded {
  TheoremId id;
  Variant variant;
  Reading reading;
};

std::vector<Expanded> expand(const Selection& selection) {
  std::vector<Expanded> out;
  for (TheoremId id : selection.theorems) {
    std::vector<Variant> variants{Variant::None};
    if (id == TheoremId::C_WP) variants = {Variant::AF};
    if (id == TheoremId::T_FINAL) variants = {Variant::Behboodi};
    if (uses_variant(id)) variants = selection.variants;
    std::vector<Reading> readings{Reading::None};
    if (uses_reading(id)) readings = selection.readings;
    for (Variant v : variants) {
      for (Reading r : readings) out.push_back({id, v, r});
    }
  }
  return out;
}

TheoremReport run_one(const SubmoduleContext& ctx, const Expanded& e) {
  switch (e.id) {
    case TheoremId::L1: return check_L1(ctx);
    case TheoremId::L2: return check_transfer(ctx, Notion::Prime);
    case TheoremId::C_WP: return check_transfer(ctx, Notion::WeaklyPrimeAF);
    case TheoremId::P_PRIMARY: return check_transfer(ctx, Notion::Primary);
    case TheoremId::L3i: return check_L3i(ctx, e.variant, e.reading);
    case TheoremId::L3ii: return check_L3ii(ctx, e.variant, e.reading);
    case TheoremId::C_PPW: return check_C_PPW(ctx, e.variant);
    case TheoremId::T4: return check_T4(ctx, e.variant);
    case TheoremId::R_T4: return check_R_T4(ctx);
    case TheoremId::C_IRR: return check_C_IRR(ctx, e.variant);
    case TheoremId::L_COLON_PROD: return check_L_colon_prod(ctx, e.variant);
    case TheoremId::R_CEX: return check_R_CEX(ctx, e.variant);
    case TheoremId::P_FAITHFUL: return check_P_faithful(ctx, e.variant);
    case TheoremId::L_RADICAL: return check_L_radical(ctx);
    case TheoremId::P_COLON_PRIMARY: return check_P_colon_primary(ctx);
    case TheoremId::C_RADICAL_PRIME: return check_C_radical_prime(ctx);
    case TheoremId::DIVERGENCE: return check_divergence(ctx);
    case TheoremId::L8:
    case TheoremId::T_FINAL: break;
  }
  throw AlgebraError("not a per-submodule check: " + std::string(to_string(e.id)));
}

TheoremReport placeholder(const Expanded& e, const std::string& key, Outcome outcome, std::string note) {
  TheoremReport r;
  r.id = e.id;
  r.instance = key;
  r.variant = e.variant;
  r.reading = e.reading;
  r.outcome = outcome;
  r.note = std::move(note);
  return r;
}

}  // namespace

std::vector<TheoremReport> run_checks(const InstanceData& data, const std::vector<Submodule>& submodules,
                                      const Selection& selection) {
  const std::vector<Expanded> work = expand(selection);
  std::vector<TheoremReport> out;
  if (data.over_budget()) {
    for (const Expanded& e : work) {
      out.push_back(placeholder(e, data.key(), Outcome::Skipped,
                                "over budget " + std::to_string(data.budget())));
    }
    return out;
  }
  for (const Expanded& e : work) {
    if (e.id == TheoremId::L8) {
      out.push_back(check_L8(data));
    } else if (e.id == TheoremId::T_FINAL) {
      if (data.bowtie().base_module->size() == 1) {
        out.push_back(placeholder(e, data.key(), Outcome::NotApplicable, "M is zero"));
      } else {
        out.push_back(check_T_final(data));
      }
    }
  }
  for (std::size_t k = 0; k < submodules.size(); ++k) {
    SubmoduleContext ctx(data, submodules[k]);
    for (const Expanded& e : work) {
      if (is_instance_level(e.id)) continue;
      if (ctx.base().is_whole() && e.id != TheoremId::L1) continue;
      TheoremReport r = run_one(ctx, e);
      r.submodule_ordinal = k + 1;
      out.push_back(std::move(r));
    }
  }
  return out;
}

HuntResult hunt(const CorpusSpec& corpus, const HuntOptions& options) {
  struct Job {
    std::size_t n;
    Ideal ideal;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 1; n <= corpus.max_n; ++n) {
    const RingPtr ring = make_zn(n);
    for (Ideal& i : enumerate_ideals(ring)) jobs.push_back({n, std::move(i)});
  }
  if (options.max_instances && jobs.size() > options.max_instances) {
    throw AlgebraError("corpus has " + std::to_string(jobs.size()) + " instances, limit is " +
                       std::to_string(options.max_instances));
  }

  std::vector<std::vector<TheoremReport>> slots(jobs.size());
  std::vector<char> over(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        const Job& job = jobs[k];
        const ModulePtr module = ring_as_module(job.ideal.ring());
        InstanceData data(job.ideal, module, options.budget);
        over[k] = data.over_budget();
        std::vector<Submodule> subs;
        if (corpus.zero_submodule_only) {
          subs.push_back(Submodule::zero(module));
        } else if (!data.over_budget()) {
          subs = data.base_lattice();
        }
        std::vector<TheoremReport> reports = run_checks(data, subs, options.selection);
        for (TheoremReport& r : reports) {
          r.corpus_n = job.n;
          r.instance_ordinal = k;
        }
        slots[k] = std::move(reports);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(jobs.size());
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, jobs.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  HuntResult result;
  result.instances = jobs.size();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (over[k]) result.partial = true;
    for (TheoremReport& r : slots[k]) result.reports.push_back(std::move(r));
  }
  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](const TheoremReport& a, const TheoremReport& b) {
                     return std::tie(a.instance_ordinal, a.submodule_ordinal, a.id, a.variant, a.reading) <
                            std::tie(b.instance_ordinal, b.submodule_ordinal, b.id, b.variant, b.reading);
                   });
  for (const TheoremReport& r : result.reports) {
    if (r.id == TheoremId::L8 && r.outcome == Outcome::Fail) {
      throw AlgebraError("L8 failed on " + r.instance + ": " + (r.witness ? r.witness->text : r.note));
    }
    Tally& t = result.tallies[{r.id, r.variant}];
    switch (r.outcome) {
      case Outcome::Pass: ++t.pass; break;
      case Outcome::Fail: ++t.fail; break;
      case Outcome::NotApplicable: ++t.not_applicable; break;
      case Outcome::Skipped: ++t.skipped; break;
    }
    if (r.gap == Gap::Converse) ++t.converse_gaps;
  }
  return result;
}

std::optional<std::pair<std::size_t, TheoremReport>> first_divergence(const HuntResult& result) {
  std::optional<std::pair<std::size_t, TheoremReport>> best;
  for (const TheoremReport& r : result.reports) {
    if (r.id != TheoremId::DIVERGENCE || r.outcome != Outcome::Fail) continue;
    if (!best || r.corpus_n < best->first) best.emplace(r.corpus_n, r);
  }
  return best;
}

}  // namespace dupalg
