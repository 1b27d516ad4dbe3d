#pragma once

// The dupcheck command-line driver. Commands write to the given streams and
// return the process exit code so they can be exercised in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "dupalg/instance_spec.hpp"
#include "dupalg/theorems.hpp"

namespace dupalg::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,  // bad flags, unknown theorem id, unreadable or invalid spec
  kImproper = 3,
  kOverBudget = 4,
};

/// Verdicts of every ideal and submodule predicate on N, N⋈I and their
/// colon ideals, one tab-separated line each.
int cmd_classify(const Instance& inst, std::size_t budget, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  Selection selection;
  std::size_t budget = 256;
};
int cmd_verify(const Instance& inst, const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct HuntCliOptions {
  CorpusSpec corpus;
  HuntOptions hunt;
  std::string out_path;  // empty: reports go to `out`, the summary to `err`
};
int cmd_hunt(const HuntCliOptions& options, std::ostream& out, std::ostream& err);

/// Hasse diagram of the submodule lattice of M⋈I in DOT syntax.
std::string lattice_dot(const InstanceData& data);
int cmd_lattice(const Instance& inst, std::size_t budget, const std::string& dot_path, std::ostream& out,
                std::ostream& err);

/// Expands "all", "transfer-all", "divergence" and comma-separated ids.
/// Throws std::invalid_argument naming an unknown id.
std::vector<TheoremId> parse_theorem_list(const std::string& text);
std::vector<Variant> parse_variant_list(const std::string& text);
std::vector<Reading> parse_reading_list(const std::string& text);

/// Full command line without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dupalg::cli
