#include "dupalg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

namespace dupalg::cli {
namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void verdict_line(std::ostream& out, const std::string& object, const std::string& predicate,
                  const Verdict& v) {
  out << object << '\t' << predicate << '\t' << to_string(v.variant) << '\t' << (v.holds ? "true" : "false")
      << '\t' << (v.witness ? v.witness->text : "-") << '\n';
}

void ideal_lines(std::ostream& out, const std::string& object, const Ideal& j) {
  out << object << "\tmembers\tn/a\t" << j.to_string() << "\t-\n";
  if (j.is_whole()) return;
  verdict_line(out, object, "prime-ideal", is_prime_ideal(j));
  verdict_line(out, object, "weakly-prime-ideal", is_weakly_prime_ideal(j));
  verdict_line(out, object, "primary-ideal", is_primary_ideal(j));
}

void submodule_lines(std::ostream& out, const std::string& object, const Submodule& n,
                     const std::vector<Submodule>& lattice) {
  out << object << "\tmembers\tn/a\t" << n.to_string() << "\t-\n";
  verdict_line(out, object, "prime", is_prime_submodule(n));
  verdict_line(out, object, "weakly-prime", is_weakly_prime_submodule_af(n));
  verdict_line(out, object, "weakly-prime", is_weakly_prime_submodule_azizi(n, lattice));
  verdict_line(out, object, "weakly-prime", is_weakly_prime_submodule_behboodi(n));
  verdict_line(out, object, "primary", is_primary_submodule(n));
  verdict_line(out, object, "irreducible", is_irreducible_submodule(n, lattice));
}

std::string badges(const Submodule& s, const std::vector<Submodule>& lattice) {
  if (s.is_whole()) return "M";
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(is_prime_submodule(s).holds, "P");
  add(is_weakly_prime_submodule_af(s).holds, "WP-af");
  add(is_weakly_prime_submodule_azizi(s, lattice).holds, "WP-az");
  add(is_weakly_prime_submodule_behboodi(s).holds, "WP-b");
  add(is_primary_submodule(s).holds, "Pri");
  add(is_irreducible_submodule(s, lattice).holds, "Irr");
  return out.empty() ? "-" : out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  std::vector<TheoremId> out;
  auto push = [&](TheoremId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const std::string& item : split(text)) {
    const std::string key = lower(item);
    if (key == "all") {
      for (TheoremId id : kAllTheorems) push(id);
    } else if (key == "transfer-all") {
      push(TheoremId::L2);
      push(TheoremId::C_WP);
      push(TheoremId::P_PRIMARY);
    } else if (key == "divergence") {
      push(TheoremId::DIVERGENCE);
    } else if (auto id = parse_theorem_id(item)) {
      push(*id);
    } else {
      throw std::invalid_argument("unknown theorem id: " + item);
    }
  }
  if (out.empty()) throw std::invalid_argument("no theorem selected");
  return out;
}

std::vector<Variant> parse_variant_list(const std::string& text) {
  std::vector<Variant> out;
  for (const std::string& item : split(text)) {
    if (lower(item) == "all") return {std::begin(kWeaklyPrimeVariants), std::end(kWeaklyPrimeVariants)};
    auto v = parse_variant(lower(item));
    if (!v) throw std::invalid_argument("unknown variant: " + item);
    if (std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
  }
  if (out.empty()) throw std::invalid_argument("no variant selected");
  return out;
}

std::vector<Reading> parse_reading_list(const std::string& text) {
  std::vector<Reading> out;
  for (const std::string& item : split(text)) {
    const std::string key = lower(item);
    if (key == "all") return {Reading::BowtieForm, Reading::AllSubmodules};
    Reading r;
    if (key == "bowtie") {
      r = Reading::BowtieForm;
    } else if (key == "all-submodules") {
      r = Reading::AllSubmodules;
    } else {
      throw std::invalid_argument("unknown reading: " + item);
    }
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  if (out.empty()) throw std::invalid_argument("no reading selected");
  return out;
}

int cmd_classify(const Instance& inst, std::size_t budget, std::ostream& out, std::ostream& err) {
  if (inst.submodule.is_whole()) {
    err << "N = " << inst.submodule.to_string() << " is the whole module\n";
    return kImproper;
  }
  InstanceData data(inst.ideal, inst.module, budget);
  out << "# " << data.key() << " N=" << inst.submodule.to_string() << '\n';
  submodule_lines(out, "N", inst.submodule, data.over_budget() ? enumerate_submodules(inst.module)
                                                               : data.base_lattice());
  ideal_lines(out, "(N:M)", colon_into_ring(inst.submodule));
  if (data.over_budget()) {
    err << "M⋈I exceeds the budget of " << budget << " elements; N⋈I not classified\n";
    return kOverBudget;
  }
  const Submodule lifted = bowtie_submodule(data.bowtie(), inst.submodule);
  submodule_lines(out, "N⋈I", lifted, data.lattice());
  ideal_lines(out, "(N⋈I:M⋈I)", colon_into_ring(lifted));
  return kOk;
}

int cmd_verify(const Instance& inst, const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  InstanceData data(inst.ideal, inst.module, options.budget);
  const std::vector<TheoremReport> reports = run_checks(data, {inst.submodule}, options.selection);
  std::size_t pass = 0, fail = 0, na = 0, skipped = 0;
  for (const TheoremReport& r : reports) {
    out << serialize(r) << '\n';
    switch (r.outcome) {
      case Outcome::Pass: ++pass; break;
      case Outcome::Fail: ++fail; break;
      case Outcome::NotApplicable: ++na; break;
      case Outcome::Skipped: ++skipped; break;
    }
  }
  err << reports.size() << " checks: " << pass << " pass, " << fail << " fail, " << na << " not applicable, "
      << skipped << " skipped\n";
  if (fail) return kCheckFailed;
  if (skipped) return kOverBudget;
  return kOk;
}

int cmd_hunt(const HuntCliOptions& options, std::ostream& out, std::ostream& err) {
  const HuntResult result = hunt(options.corpus, options.hunt);
  std::ostream* summary = &out;
  if (options.out_path.empty()) {
    for (const TheoremReport& r : result.reports) out << serialize(r) << '\n';
    summary = &err;
  } else {
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << options.out_path << '\n';
      return kUsage;
    }
    for (const TheoremReport& r : result.reports) file << serialize(r) << '\n';
  }

  std::ostream& s = *summary;
  s << result.instances << " instances, " << result.reports.size() << " reports\n";
  s << std::left << std::setw(16) << "theorem" << std::setw(10) << "variant" << std::right << std::setw(7)
    << "pass" << std::setw(7) << "fail" << std::setw(7) << "na" << std::setw(7) << "skip" << std::setw(10)
    << "converse" << '\n';
  bool statement_failure = false;
  for (const auto& [key, t] : result.tallies) {
    s << std::left << std::setw(16) << to_string(key.first) << std::setw(10) << to_string(key.second)
      << std::right << std::setw(7) << t.pass << std::setw(7) << t.fail << std::setw(7) << t.not_applicable
      << std::setw(7) << t.skipped << std::setw(10) << t.converse_gaps << '\n';
    if (key.first != TheoremId::DIVERGENCE && t.fail) statement_failure = true;
  }
  const auto& theorems = options.hunt.selection.theorems;
  if (std::find(theorems.begin(), theorems.end(), TheoremId::DIVERGENCE) != theorems.end()) {
    if (auto d = first_divergence(result)) {
      s << "first divergence: n=" << d->first << ' ' << d->second.instance << " (" << d->second.note << ")\n";
    } else {
      s << "no divergence for n <= " << options.corpus.max_n << '\n';
    }
  }
  if (result.partial) {
    s << "partial: some instances exceed the budget of " << options.hunt.budget << " elements\n";
  }
  if (statement_failure) return kCheckFailed;
  if (result.partial) return kOverBudget;
  return kOk;
}

std::string lattice_dot(const InstanceData& data) {
  const BowtieInstance& B = data.bowtie();
  const std::vector<Submodule>& lattice = data.lattice();
  const std::vector<bool>& form = data.bowtie_form();
  std::ostringstream dot;
  dot << "digraph lattice {\n";
  dot << "  label=\"" << dot_escape(B.module->name()) << "\";\n";
  dot << "  rankdir=BT;\n";
  dot << "  node [shape=box];\n";
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    const Submodule& s = lattice[k];
    std::string label = dot_escape(s.size() <= 16 ? s.to_string() : "|S|=" + std::to_string(s.size()));
    label += "\\n" + dot_escape(badges(s, lattice));
    if (form[k]) label += "\\nN=" + dot_escape(detect_bowtie_form(B, s)->to_string());
    dot << "  s" << k << " [label=\"" << label << "\"";
    if (form[k]) dot << ", peripheries=2";
    dot << "];\n";
  }
  // Covering relations: S < T with nothing strictly in between.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t j = 0; j < lattice.size(); ++j) {
      const Bits& lo = lattice[i].bits();
      const Bits& hi = lattice[j].bits();
      if (lattice[i].size() >= lattice[j].size() || !lo.is_subset_of(hi)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < lattice.size() && covered; ++k) {
        const Bits& mid = lattice[k].bits();
        if (lattice[k].size() > lattice[i].size() && lattice[k].size() < lattice[j].size() &&
            lo.is_subset_of(mid) && mid.is_subset_of(hi)) {
          covered = false;
        }
      }
      if (covered) dot << "  s" << i << " -> s" << j << ";\n";
    }
  }
  dot << "}\n";
  return dot.str();
}

int cmd_lattice(const Instance& inst, std::size_t budget, const std::string& dot_path, std::ostream& out,
                std::ostream& err) {
  InstanceData data(inst.ideal, inst.module, budget);
  if (data.over_budget()) {
    err << "M⋈I exceeds the budget of " << budget << " elements\n";
    return kOverBudget;
  }
  const std::string dot = lattice_dot(data);
  if (dot_path.empty() || dot_path == "-") {
    out << dot;
  } else {
    std::ofstream file(dot_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << dot_path << '\n';
      return kUsage;
    }
    file << dot;
    out << data.lattice().size() << " submodules written to " << dot_path << '\n';
  }
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for duplications of finite rings and modules"};
  app.name("dupcheck");
  app.require_subcommand(1);

  std::string spec_path, seed;
  auto add_source = [&](CLI::App* cmd) {
    auto* path = cmd->add_option("spec", spec_path, "Instance spec (JSON)");
    auto* seed_opt = cmd->add_option("--seed-corpus", seed, "Built-in instance: z6, z12-4-3, z20-4-5, z16-4-8");
    path->excludes(seed_opt);
  };

  auto* classify = app.add_subcommand("classify", "Classify N and N⋈I under every predicate");
  add_source(classify);

  std::string theorem_text = "all", variant_text = "all", reading_text = "all";
  auto* verify = app.add_subcommand("verify", "Check theorem statements on one instance");
  add_source(verify);
  verify->add_option("--theorem", theorem_text, "Ids, all, transfer-all or divergence (comma separated)");
  verify->add_option("--variant", variant_text, "af, azizi, behboodi or all");
  verify->add_option("--reading", reading_text, "bowtie, all-submodules or all");

  std::string family = "zn", out_path;
  std::size_t max_n = 0, workers = 1;
  bool zero_only = false;
  auto* hunt_cmd = app.add_subcommand("hunt", "Sweep the theorem checks over a corpus");
  hunt_cmd->add_option("--family", family, "Instance family (zn)");
  hunt_cmd->add_option("--max", max_n, "Largest n")->required();
  hunt_cmd->add_option("--theorem", theorem_text, "Ids, all, transfer-all or divergence (comma separated)");
  hunt_cmd->add_option("--variant", variant_text, "af, azizi, behboodi or all");
  hunt_cmd->add_option("--reading", reading_text, "bowtie, all-submodules or all");
  hunt_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  hunt_cmd->add_option("--out", out_path, "Report file (default: standard output)");
  hunt_cmd->add_flag("--zero-only", zero_only, "Only N = {0}");

  std::string dot_path;
  auto* lattice = app.add_subcommand("lattice", "Export the submodule lattice of M⋈I");
  add_source(lattice);
  lattice->add_option("--dot", dot_path, "Output DOT file (default: standard output)");

  std::string seeds_dir = "seeds";
  auto* seeds = app.add_subcommand("seeds", "Write the built-in instance specs as JSON files");
  seeds->add_option("--dir", seeds_dir, "Target directory");

  std::vector<const char*> argv{"dupcheck"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    const std::size_t budget = budget_from_environment();
    auto load = [&]() -> Instance {
      if (!seed.empty()) {
        auto s = seed_spec(seed);
        if (!s) throw SpecError("", "unknown seed " + seed);
        return realize(*s);
      }
      if (spec_path.empty()) throw SpecError("", "no spec file or --seed-corpus given");
      return realize(load_instance_spec(spec_path));
    };
    auto selection = [&] {
      Selection s;
      s.theorems = parse_theorem_list(theorem_text);
      s.variants = parse_variant_list(variant_text);
      s.readings = parse_reading_list(reading_text);
      return s;
    };

    if (classify->parsed()) return cmd_classify(load(), budget, out, err);
    if (verify->parsed()) {
      VerifyOptions o;
      o.selection = selection();
      o.budget = budget;
      return cmd_verify(load(), o, out, err);
    }
    if (hunt_cmd->parsed()) {
      if (family != "zn") {
        err << "unknown family: " << family << '\n';
        return kUsage;
      }
      HuntCliOptions o;
      o.corpus.max_n = max_n;
      o.corpus.zero_submodule_only = zero_only;
      o.hunt.selection = selection();
      o.hunt.workers = workers;
      o.hunt.budget = budget;
      o.out_path = out_path;
      return cmd_hunt(o, out, err);
    }
    if (lattice->parsed()) return cmd_lattice(load(), budget, dot_path, out, err);
    if (seeds->parsed()) {
      std::filesystem::create_directories(seeds_dir);
      for (const std::string& name : seed_names()) {
        const std::filesystem::path p = std::filesystem::path(seeds_dir) / (name + ".json");
        std::ofstream(p, std::ios::binary) << to_json(*seed_spec(name));
        out << p.string() << '\n';
      }
      return kOk;
    }
  } catch (const SpecError& e) {
    err << "spec error at " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ImproperError& e) {
    err << e.what() << '\n';
    return kImproper;
  }
  return kUsage;
}

}  // namespace dupalg::cli
