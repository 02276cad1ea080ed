#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "mpr/cli.hpp"

using namespace mpr;
namespace fs = std::filesystem;

namespace {

const char* kC4 = "n 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n";
const char* kC5 = "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n";
const char* kK3 = "n 3\ne 0 1\ne 0 2\ne 1 2\n";

RunConfig inline_config(const char* graph, Command c, OutputFormat f = OutputFormat::Text) {
  RunConfig cfg;
  cfg.inline_graph = graph;
  cfg.command = c;
  cfg.format = f;
  return cfg;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("mpr_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path_ / name) << text; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST(Cli, VerifyC4) {
  const RunResult r = run(inline_config(kC4, Command::Verify));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.output.find("rho=0"), std::string::npos);
}

TEST(Cli, VerifyC5) {
  const RunResult r = run(inline_config(kC5, Command::Verify));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.output.find("rho=1"), std::string::npos);
  EXPECT_NE(r.output.find("certificates=1"), std::string::npos);

  const RunResult j = run(inline_config(kC5, Command::Verify, OutputFormat::Json));
  const auto doc = nlohmann::json::parse(j.output);
  EXPECT_EQ(doc["rank"]["rho"], 1);
  EXPECT_EQ(doc["rank"]["certificates"].size(), 1u);
  EXPECT_EQ(doc["fallback_count"], 0);
  EXPECT_EQ(doc["witnesses"][0]["witnesses"].size(), 9u);
  EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(Cli, FacetsK3) {
  const RunResult j = run(inline_config(kK3, Command::Facets, OutputFormat::Json));
  ASSERT_EQ(j.exit_code, kExitOk);
  const auto doc = nlohmann::json::parse(j.output);
  EXPECT_EQ(doc["facets"].size(), 4u);
  EXPECT_EQ(doc["facets"][3]["kind"], "OddSet");
  EXPECT_EQ(doc["facets"][3]["rhs"], 1);
  EXPECT_NE(run(inline_config(kK3, Command::Facets)).output.find("facets=4"), std::string::npos);
}

TEST(Cli, OtherCommands) {
  for (Command c : {Command::Dim, Command::Ridges, Command::Rank, Command::Witness, Command::EarDecomp,
                    Command::Matchings}) {
    const RunResult r = run(inline_config(kC5, c, OutputFormat::Json));
    EXPECT_EQ(r.exit_code, kExitOk) << to_string(c) << ": " << r.error;
    EXPECT_EQ(nlohmann::json::parse(r.output)["command"], to_string(c));
  }
  const auto dim = nlohmann::json::parse(run(inline_config(kC5, Command::Dim, OutputFormat::Json)).output);
  EXPECT_EQ(dim["dimension"], 5);
  EXPECT_EQ(dim["vertices"], 11);
  const auto ms = nlohmann::json::parse(run(inline_config(kC5, Command::Matchings, OutputFormat::Json)).output);
  EXPECT_EQ(ms["count"], 11);
}

TEST(Cli, ExhaustiveRankOnC4) {
  RunConfig cfg = inline_config(kC4, Command::Rank, OutputFormat::Json);
  cfg.f0_mode = F0Mode::Exhaustive;
  const auto doc = nlohmann::json::parse(run(cfg).output);
  EXPECT_EQ(doc["rank"]["f0_mode"], "exhaustive");
  EXPECT_EQ(doc["rank"]["rank_zero"].size(), 8u);
  EXPECT_EQ(doc["rank"]["rho"], 0);
}

TEST(Cli, WitnessForGivenSetAndAnchor) {
  RunConfig cfg = inline_config(kC5, Command::Witness, OutputFormat::Json);
  cfg.node_set = parse_node_set("{0,1,2,3,4}");
  cfg.anchor = 2;
  const RunResult r = run(cfg);
  ASSERT_EQ(r.exit_code, kExitOk) << r.error;
  const auto doc = nlohmann::json::parse(r.output);
  EXPECT_EQ(doc["reports"][0]["anchor"], 2);
  EXPECT_TRUE(doc["reports"][0]["ok"].get<bool>());
}

TEST(Cli, ExitCodes) {
  RunResult r = run(inline_config("n 3\ne 0 1\ne 0 0\n", Command::Facets));
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_NE(r.error.find("line 3"), std::string::npos);

  RunConfig missing;
  missing.input_path = "/nonexistent/graph.txt";
  EXPECT_EQ(run(missing).exit_code, kExitInputError);

  RunConfig guard = inline_config(kC5, Command::Facets);
  guard.guards.max_nodes = 4;
  r = run(guard);
  EXPECT_EQ(r.exit_code, kExitGuardExceeded);
  EXPECT_NE(r.error.find("4"), std::string::npos);

  RunConfig edges = inline_config(kC5, Command::Matchings);
  edges.guards.max_edges = 3;
  EXPECT_EQ(run(edges).exit_code, kExitGuardExceeded);

  RunConfig bad = inline_config(kC5, Command::Facets);
  bad.guards.max_nodes = 0;
  EXPECT_EQ(run(bad).exit_code, kExitInputError);

  RunConfig not_blossom = inline_config(kC5, Command::Witness);
  not_blossom.node_set = NodeSet{0, 1, 2};
  EXPECT_EQ(run(not_blossom).exit_code, kExitInputError);

  // Standalone K3: its blossom is rank 0 and has no anchor.
  RunConfig k3 = inline_config(kK3, Command::Witness);
  k3.node_set = NodeSet{0, 1, 2};
  EXPECT_EQ(run(k3).exit_code, kExitInputError);
}

TEST(Cli, JsonIsByteStable) {
  for (Command c : {Command::Verify, Command::Rank, Command::Facets}) {
    const RunResult a = run(inline_config(kC5, c, OutputFormat::Json));
    RunConfig serial = inline_config(kC5, c, OutputFormat::Json);
    serial.execution = Execution::Serial;
    EXPECT_EQ(a.output, run(inline_config(kC5, c, OutputFormat::Json)).output);
    EXPECT_EQ(a.output, run(serial).output);
  }
}

TEST(Cli, ParseNodeSet) {
  EXPECT_EQ(parse_node_set("0,2, 4"), (NodeSet{0, 2, 4}));
  EXPECT_EQ(parse_node_set("{1,3}"), (NodeSet{1, 3}));
  EXPECT_THROW(parse_node_set("1,x"), std::invalid_argument);
  EXPECT_THROW(parse_node_set("{}"), std::invalid_argument);
  EXPECT_EQ(parse_command("verify"), Command::Verify);
  EXPECT_FALSE(parse_command("nope").has_value());
}

TEST(Cli, CorpusRunner) {
  const CorpusSummary s = run_corpus(MPR_CORPUS_DIR);
  EXPECT_EQ(s.rows.size(), 9u);
  EXPECT_TRUE(s.passed());
  for (const CorpusRow& row : s.rows) {
    EXPECT_TRUE(row.ok) << row.name << ": " << row.error;
    EXPECT_LE(row.rho, 1) << row.name;
    EXPECT_EQ(row.fallback_count, 0) << row.name;
  }
  EXPECT_NE(format_corpus(s, OutputFormat::Text).find("overall: pass"), std::string::npos);
}

TEST(Cli, CorpusRunnerEdgeCases) {
  const TempDir empty;
  const CorpusSummary none = run_corpus(empty.path().string());
  EXPECT_TRUE(none.rows.empty());
  EXPECT_TRUE(none.passed());
  EXPECT_EQ(nlohmann::json::parse(format_corpus(none, OutputFormat::Json))["rows"].size(), 0u);

  const TempDir mixed;
  mixed.write("a_c5.graph", kC5);
  mixed.write("b_broken.graph", "n 3\ne 0 9\n");
  mixed.write("c_c4.graph", kC4);
  const CorpusSummary s = run_corpus(mixed.path().string());
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_TRUE(s.rows[0].ok);
  EXPECT_FALSE(s.rows[1].ok);
  EXPECT_NE(s.rows[1].error.find("line 2"), std::string::npos);
  EXPECT_TRUE(s.rows[2].ok);
  EXPECT_FALSE(s.passed());
}
