#include <gtest/gtest.h>

#include <random>

#include "commands.hpp"
#include "goal_arbiter/spec_json.hpp"
#include "test_support.hpp"

namespace goal_arbiter {
namespace {

using nlohmann::json;
using testing::goals;

GoalSet as_set(const json& arr) {
  GoalSet out;
  for (const auto& v : arr) out.emplace(v.get<std::string>());
  return out;
}

AgentSpec load(const char* name) { return cli::load_spec(testing::data_dir() / name); }

TEST(LoadSpec, MissingFileIsIoError) {
  EXPECT_THROW(cli::load_spec(testing::data_dir() / "does_not_exist.json"), cli::IoError);
}

TEST(LoadSpec, MalformedFileListsEveryIssue) {
  try {
    load("malformed.json");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_GE(e.issues().size(), 5u);
    const auto doc = cli::validation_errors(e);
    EXPECT_EQ(doc["errors"].size(), e.issues().size());
  }
}

TEST(LoadSpec, DataFilesMatchBuilders) {
  EXPECT_EQ(load("example1.json"), testing::example1_spec());
  EXPECT_EQ(load("table1.json"), testing::table1_spec());
}

TEST(CmdFeasibility, ExampleOne) {
  const auto doc = cli::cmd_feasibility(load("example1.json"));
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(as_set(doc["enabled"]), goals({"g2", "g3"}));
  ASSERT_EQ(doc["excluded"].size(), 1u);
  EXPECT_EQ(doc["excluded"][0]["goal"], "g1");
  EXPECT_EQ(doc["excluded"][0]["shortfalls"][0]["needed"], 70);
  EXPECT_EQ(doc["excluded"][0]["shortfalls"][0]["available"], 60);
}

TEST(CmdDetect, TableOne) {
  const auto doc = cli::cmd_detect(load("table1.json"));
  EXPECT_EQ(doc["kind"], "complex");
  ASSERT_EQ(doc["conflict_sets"].size(), 4u);
  EXPECT_EQ(doc["conflict_sets"][0]["resource"], "res_A");
  EXPECT_EQ(as_set(doc["conflict_sets"][0]["goals"]), goals({"g1", "g2", "g8"}));
}

TEST(CmdSolve, StrategiesOnDataFiles) {
  cli::SolveOptions algo;
  EXPECT_EQ(as_set(cli::cmd_solve(load("table1.json"), algo)["resolution"]["consistent_goals"]),
            goals({"g1", "g2", "g7"}));
  // A single conflict set is simple, so dispatch picks per-set argmax.
  EXPECT_EQ(as_set(cli::cmd_solve(load("partial_allocation.json"), algo)["resolution"]["consistent_goals"]),
            goals({"gi"}));
  EXPECT_EQ(as_set(cli::cmd_solve(load("conflict_free.json"), algo)["resolution"]["consistent_goals"]),
            as_set(cli::cmd_feasibility(load("conflict_free.json"))["enabled"]));
  EXPECT_TRUE(cli::cmd_solve(load("empty_goals.json"), algo)["resolution"]["consistent_goals"].empty());

  cli::SolveOptions arg;
  arg.strategy = Strategy::Argumentation;
  const auto doc = cli::cmd_solve(load("example3.json"), arg);
  EXPECT_EQ(doc["resolution"]["semantics"], "grounded");
  EXPECT_EQ(as_set(doc["resolution"]["consistent_goals"]), goals({"g1", "g3", "g8"}));
  EXPECT_EQ(doc["framework"]["defeats"].size(), 10u);
}

TEST(CmdSolve, ArgumentationCapRaisesLimit) {
  std::vector<testing::GoalDecl> decls;
  for (int i = 0; i < 10; ++i) decls.push_back({"g" + std::to_string(i), 0.5, {{"e", 10}}});
  cli::SolveOptions opts;
  opts.strategy = Strategy::Argumentation;
  opts.semantics = Semantics::Preferred;
  opts.max_framework = 5;
  EXPECT_THROW(cli::cmd_solve(testing::inline_spec({{"e", 15}}, decls), opts), LimitExceeded);
}

TEST(CmdExportAf, EdgeCounts) {
  const auto count = [](const std::string& dot) {
    std::size_t n = 0;
    for (auto p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count(cli::cmd_export_af(load("example3.json"))), 10u);
  EXPECT_EQ(count(cli::cmd_export_af(load("equal_worth_pair.json"))), 2u);
  EXPECT_EQ(cli::cmd_export_af(load("conflict_free.json")), "digraph goal_framework {\n}\n");
}

TEST(CmdOracle, AgreesWithSolveOnTableOne) {
  const auto doc = cli::cmd_oracle(load("table1.json"));
  EXPECT_EQ(doc["conflict_sets"].size(), 4u);
  EXPECT_TRUE(doc.contains("grounded"));
}

// The command output must equal what the library calls produce directly.
TEST(CmdSolve, ComposesModuleCalls) {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 200; ++i) {
    const auto spec = testing::random_spec(rng, {6, 4, 100, 5});
    const auto enabled = eval_resources(spec);
    const auto report = resource_incom(spec, enabled);
    const auto doc = cli::cmd_solve(spec, {});
    EXPECT_EQ(as_set(doc["enabled"]), enabled.goals);
    EXPECT_EQ(as_set(doc["incompatible_goals"]), report.incompatible_goals);
    EXPECT_EQ(doc["conflict_sets"].size(), report.sets.size());
    EXPECT_EQ(as_set(doc["resolution"]["consistent_goals"]),
              solve_algorithmic(spec, enabled, report, TieBreak::by_id()).consistent_goals);

    cli::SolveOptions arg;
    arg.strategy = Strategy::Argumentation;
    EXPECT_EQ(as_set(cli::cmd_solve(spec, arg)["resolution"]["consistent_goals"]),
              solve_argumentation(spec, enabled, report, Semantics::Auto).consistent_goals);
  }
}

TEST(RenderJson, RoundTripsSets) {
  std::mt19937_64 rng(405);
  for (int i = 0; i < 100; ++i) {
    const auto spec = testing::random_spec(rng);
    const auto doc = cli::cmd_solve(spec, {});
    const auto back = json::parse(cli::render_json(doc));
    EXPECT_EQ(back, doc);
    for (std::size_t k = 0; k < doc["conflict_sets"].size(); ++k) {
      EXPECT_EQ(as_set(back["conflict_sets"][k]["goals"]), as_set(doc["conflict_sets"][k]["goals"]));
    }
  }
}

TEST(RenderText, MentionsKeyFacts) {
  const auto text = cli::render_text(cli::cmd_solve(load("example1.json"), {}));
  EXPECT_NE(text.find("excluded g1"), std::string::npos);
  EXPECT_NE(text.find("consistent goals: {g2}"), std::string::npos);
}

}  // namespace
}  // namespace goal_arbiter
