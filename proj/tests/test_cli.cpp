#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <regex>
#include <sstream>

#include "dupalg/cli.hpp"
#include "support.hpp"

using namespace dupalg;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "dupcheck_test";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string spec_error_path(const std::string& text) {
  try {
    realize(parse_instance_spec(text));
  } catch (const SpecError& e) {
    return e.path();
  }
  return "<none>";
}

}  // namespace

TEST(InstanceSpec, RoundTripSeeds) {
  for (const std::string& name : seed_names()) {
    const InstanceSpec spec = *seed_spec(name);
    const InstanceSpec again = parse_instance_spec(to_json(spec));
    EXPECT_EQ(spec, again) << name;
    const Instance a = realize(spec);
    const Instance b = realize(again);
    EXPECT_EQ(a.ring->name(), b.ring->name());
    EXPECT_EQ(a.ideal.members(), b.ideal.members());
    EXPECT_EQ(a.submodule.members(), b.submodule.members());
  }
  EXPECT_FALSE(seed_spec("nope").has_value());
}

TEST(InstanceSpec, RoundTripTablesAndProducts) {
  const std::string text = R"json({
    "ring": {"product": [{"zn": 2}, {"tables": {"add": [[0,1],[1,0]], "mul": [[0,0],[0,1]], "labels": ["o","e"]}}]},
    "ideal_generators": ["(1,o)"],
    "module": {"tables": {"add": [[0,1],[1,0]], "act": [[0,0],[0,1],[0,0],[0,1]], "labels": ["z","u"]}},
    "submodule_generators": []
  })json";
  const InstanceSpec spec = parse_instance_spec(text);
  EXPECT_EQ(parse_instance_spec(to_json(spec)), spec);
  const Instance inst = realize(spec);
  EXPECT_EQ(inst.ring->size(), 4u);
  EXPECT_EQ(inst.ideal.size(), 2u);
  EXPECT_EQ(inst.module->size(), 2u);
  EXPECT_TRUE(inst.submodule.is_zero());
}

TEST(InstanceSpec, RandomZnRoundTrip) {
  auto gen = testing_support::rng(7);
  for (int k = 0; k < 50; ++k) {
    InstanceSpec s;
    s.ring.n = 1 + gen() % 20;
    s.ideal_generators = {std::to_string(gen() % s.ring.n)};
    s.submodule_generators = {std::to_string(gen() % s.ring.n), std::to_string(gen() % s.ring.n)};
    EXPECT_EQ(parse_instance_spec(to_json(s)), s);
  }
}

TEST(InstanceSpec, LocatedErrors) {
  EXPECT_EQ(spec_error_path("[1,2]"), "");
  EXPECT_EQ(spec_error_path("{"), "");
  EXPECT_EQ(spec_error_path(R"({"ring": {"zn": 6}, "extra": 1})"), "/extra");
  EXPECT_EQ(spec_error_path(R"({"ring": {"zn": 0}})"), "/ring/zn");
  EXPECT_EQ(spec_error_path(R"({"ring": {"zn": 6}, "ideal_generators": ["3", "9"]})"), "/ideal_generators/1");
  EXPECT_EQ(spec_error_path(R"({"ring": {"zn": 6}, "submodule_generators": [7]})"), "/submodule_generators/0");
  EXPECT_EQ(spec_error_path(R"({"ring": {"product": [{"zn": 2}]}})"), "/ring/product");
  EXPECT_EQ(spec_error_path(R"({"ring": {"tables": {"add": [[0,1],[1,0]], "mul": [[0,0],[0,7]]}}})"),
            "/ring/tables/mul/1/1");
  EXPECT_EQ(spec_error_path(R"({"ring": {"tables": {"add": [[0,1],[1,1]], "mul": [[0,0],[0,1]]}}})"), "/ring");
  EXPECT_EQ(spec_error_path(R"({"ring": {"zn": 2}, "module": "free"})"), "/module");
  try {
    parse_instance_spec("[]");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(std::string(e.what()).substr(0, 3), "/: ");
  }
}

TEST(ListParsing, TheoremsVariantsReadings) {
  EXPECT_EQ(cli::parse_theorem_list("all").size(), std::size(kAllTheorems));
  EXPECT_EQ(cli::parse_theorem_list("divergence"), std::vector<TheoremId>{TheoremId::DIVERGENCE});
  EXPECT_EQ(cli::parse_theorem_list("l1,L8"), (std::vector<TheoremId>{TheoremId::L1, TheoremId::L8}));
  EXPECT_THROW(cli::parse_theorem_list("L1,L99"), std::invalid_argument);
  EXPECT_EQ(cli::parse_variant_list("af,behboodi"), (std::vector<Variant>{Variant::AF, Variant::Behboodi}));
  EXPECT_THROW(cli::parse_variant_list("weird"), std::invalid_argument);
  EXPECT_EQ(cli::parse_reading_list("all-submodules"), std::vector<Reading>{Reading::AllSubmodules});
}

TEST(Classify, Z6Lines) {
  const CliResult r = run({"classify", "--seed-corpus", "z6"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("N⋈I\tmembers\tn/a\t{(0,0),(0,3)}"), std::string::npos) << r.out;
  // N⋈I is not AF-weakly prime.
  EXPECT_NE(r.out.find("N⋈I\tweakly-prime\tAF\tfalse\ta=(2,5) x=(3,3) ax=(0,3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("N\tweakly-prime\tAF\ttrue"), std::string::npos);
}

TEST(Classify, ExitCodes) {
  EXPECT_EQ(run({"classify", write_file("whole.json", R"({"ring": {"zn": 6}, "submodule_generators": ["1"]})").string()})
                .code,
            cli::kImproper);
  const CliResult bad = run({"classify", write_file("bad.json", R"({"ring": {"zn": 6}, "bogus": 1})").string()});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("/bogus"), std::string::npos);
  EXPECT_EQ(run({"classify", scratch("missing.json").string()}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--seed-corpus", "zz"}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Verify, SeedsAndUnknownTheorem) {
  const CliResult l8 = run({"verify", "--seed-corpus", "z16-4-8", "--theorem", "L8,P_PRIMARY"});
  EXPECT_EQ(l8.code, cli::kOk) << l8.out << l8.err;
  EXPECT_NE(l8.out.find("|M⋈I/0xIM|=16"), std::string::npos);
  EXPECT_NE(l8.out.find("|M⋈I/IMxIM|=4"), std::string::npos);
  const CliResult wp = run({"verify", "--seed-corpus", "z6", "--theorem", "C_WP"});
  EXPECT_EQ(wp.code, cli::kCheckFailed);
  EXPECT_NE(wp.out.find("a=(2,5) x=(3,3) ax=(0,3)"), std::string::npos);
  const CliResult unknown = run({"verify", "--seed-corpus", "z6", "--theorem", "L1,NOPE"});
  EXPECT_EQ(unknown.code, cli::kUsage);
  EXPECT_NE(unknown.err.find("NOPE"), std::string::npos);
}

TEST(Verify, OverBudget) {
  ::setenv("BOWTIE_BUDGET", "8", 1);
  const CliResult r = run({"verify", "--seed-corpus", "z16-4-8", "--theorem", "L1"});
  ::unsetenv("BOWTIE_BUDGET");
  EXPECT_EQ(r.code, cli::kOverBudget);
  EXPECT_NE(r.out.find("SKIP"), std::string::npos);
}

TEST(HuntCommand, EmptyCorpus) {
  const fs::path out = scratch("empty.tsv");
  const CliResult r = run({"hunt", "--family", "zn", "--max", "0", "--theorem", "all", "--out", out.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(read_file(out).empty());
}

TEST(HuntCommand, FirstDivergenceAndDeterminism) {
  const fs::path a = scratch("div1.tsv");
  const fs::path b = scratch("div2.tsv");
  const CliResult one = run({"hunt", "--family", "zn", "--max", "6", "--theorem", "divergence", "--zero-only", "--workers",
                       "1", "--out", a.string()});
  const CliResult two = run({"hunt", "--family", "zn", "--max", "6", "--theorem", "divergence", "--zero-only", "--workers",
                       "3", "--out", b.string()});
  EXPECT_EQ(one.code, cli::kOk);
  EXPECT_NE(one.out.find("first divergence: n=4"), std::string::npos) << one.out;
  EXPECT_EQ(read_file(a), read_file(b));
  EXPECT_FALSE(read_file(a).empty());
}

TEST(Lattice, Z6Dot) {
  const fs::path p = scratch("z6.dot");
  const CliResult r = run({"lattice", "--seed-corpus", "z6", "--dot", p.string()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const std::string dot = read_file(p);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(dot, m, std::regex(R"(label="\{\(0,0\),\(0,3\)\}\\n([^"]*)\")")));
  // 0 x 3Z_6 is neither prime nor AF-weakly prime.
  std::istringstream badges(m[1].str().substr(0, m[1].str().find("\\n")));
  std::vector<std::string> tokens{std::istream_iterator<std::string>(badges), {}};
  EXPECT_EQ(std::count(tokens.begin(), tokens.end(), "WP-af"), 0) << m[1];
  EXPECT_EQ(std::count(tokens.begin(), tokens.end(), "P"), 0) << m[1];
  const auto nodes = [](const std::string& d) {
    static const std::regex node(R"(\n\s*s\d+ \[)");
    return std::distance(std::sregex_iterator(d.begin(), d.end(), node), std::sregex_iterator());
  };
  EXPECT_EQ(nodes(dot), 8);

  const CliResult zero = run({"lattice", write_file("z6zero.json", R"({"ring": {"zn": 6}})").string()});
  ASSERT_EQ(zero.code, cli::kOk);
  EXPECT_EQ(nodes(zero.out), 4);
}

TEST(Seeds, WritesParsableFiles) {
  const fs::path dir = scratch("seeds");
  fs::remove_all(dir);
  ASSERT_EQ(run({"seeds", "--dir", dir.string()}).code, cli::kOk);
  for (const std::string& name : seed_names()) {
    const InstanceSpec s = load_instance_spec((dir / (name + ".json")).string());
    EXPECT_EQ(s, *seed_spec(name));
  }
}
