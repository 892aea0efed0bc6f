#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "goal_arbiter/oracle.hpp"
#include "goal_arbiter/resolve.hpp"
#include "test_support.hpp"

namespace goal_arbiter {
namespace {

using testing::goals;

struct Pipeline {
  AgentSpec spec;
  EnabledGoals enabled;
  IncompatibilityReport report;

  explicit Pipeline(AgentSpec s)
      : spec(std::move(s)), enabled(eval_resources(spec)), report(resource_incom(spec, enabled)) {}

  Resolution algorithmic(TieBreak tb = TieBreak::by_id()) const {
    return solve_algorithmic(spec, enabled, report, tb);
  }
  Resolution argumentation(Semantics s = Semantics::Auto) const {
    return solve_argumentation(spec, enabled, report, s);
  }
};

AgentSpec single_resource(double available, const std::vector<testing::GoalDecl>& decls) {
  return testing::inline_spec({{"energy", available}}, decls);
}

AgentSpec partial_allocation() {
  return single_resource(50, {{"gi", 0.9, {{"energy", 20}}},
                              {"gj", 0.6, {{"energy", 30}}},
                              {"gk", 0.3, {{"energy", 50}}}});
}

bool fits(const AgentSpec& spec, const GoalSet& chosen) {
  std::map<ResourceId, Quantity> used;
  for (const auto& g : chosen) {
    for (const auto& [res, qty] : oracle::needs_of(spec, g)) used[res] += qty;
  }
  for (const auto& [res, qty] : used) {
    const auto it = spec.resources.find(res);
    const Quantity avail = it == spec.resources.end() ? Quantity{} : it->second;
    if (qty > avail) return false;
  }
  return true;
}

TEST(ResidualLedger, DeductsAndRefusesOverdraft) {
  ResidualLedger ledger({{ResourceId("energy"), Quantity::units(50)}});
  const RequirementList thirty{{ResourceId("energy"), Quantity::units(30)}};
  EXPECT_TRUE(ledger.affords(thirty));
  ledger.deduct(thirty);
  EXPECT_EQ(ledger.remaining(ResourceId("energy")), Quantity::units(20));
  EXPECT_EQ(ledger.first_shortfall(thirty), ResourceId("energy"));
  EXPECT_THROW(ledger.deduct(thirty), std::logic_error);
  EXPECT_EQ(ledger.remaining(ResourceId("energy")), Quantity::units(20));
  EXPECT_EQ(ledger.remaining(ResourceId("oil")), Quantity{});
}

TEST(EvalSimple, PerSetArgmax) {
  const auto spec = testing::inline_spec(
      {{"a", 10}, {"b", 10}, {"c", 10}},
      {{"g1", 0.9, {{"a", 6}}}, {"g2", 0.5, {{"a", 6}}}, {"g3", 0.2, {{"b", 6}}},
       {"g4", 0.4, {{"b", 6}}}, {"g5", 0.1, {{"c", 3}}}});
  const Pipeline p(spec);
  ASSERT_EQ(p.report.kind, IncompatibilityKind::Simple);
  const auto res = eval_simple(p.report, p.enabled, spec.worth_table(), TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"g1", "g4", "g5"}));
}

TEST(EvalSimple, EqualWorthTieGoesToSmallestId) {
  const Pipeline p(single_resource(50, {{"gb", 0.5, {{"energy", 30}}}, {"ga", 0.5, {{"energy", 30}}}}));
  const auto res = eval_simple(p.report, p.enabled, p.spec.worth_table(), TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"ga"}));
}

TEST(EvalSimple, SeededTieIsReproducible) {
  const Pipeline p(single_resource(50, {{"gb", 0.5, {{"energy", 30}}}, {"ga", 0.5, {{"energy", 30}}}}));
  GoalSet winners;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    const auto a = eval_simple(p.report, p.enabled, p.spec.worth_table(), TieBreak::seeded(seed));
    const auto b = eval_simple(p.report, p.enabled, p.spec.worth_table(), TieBreak::seeded(seed));
    EXPECT_EQ(a, b);
    ASSERT_EQ(a.consistent_goals.size(), 1u);
    winners.insert(*a.consistent_goals.begin());
  }
  // Different seeds are free to pick either goal; both should show up.
  EXPECT_EQ(winners, goals({"ga", "gb"}));
}

TEST(EvalSimple, ExampleOneKeepsG2) {
  const Pipeline p(testing::example1_spec());
  const auto res = eval_simple(p.report, p.enabled, p.spec.worth_table(), TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"g2"}));
  const auto best = oracle::enumerate_feasible(p.spec, p.enabled.goals);
  EXPECT_EQ(best.best_worth, std::vector<GoalSet>{goals({"g2"})});
}

TEST(EvalSimple, RejectsOtherKinds) {
  const Pipeline complex(testing::table1_spec());
  EXPECT_THROW(eval_simple(complex.report, complex.enabled, complex.spec.worth_table(), TieBreak::by_id()),
               WrongKind);
  const Pipeline none(testing::inline_spec({{"e", 10}}, {{"g", 0.5, {{"e", 1}}}}));
  EXPECT_THROW(eval_simple(none.report, none.enabled, none.spec.worth_table(), TieBreak::by_id()),
               WrongKind);
}

TEST(EvalComplex, TableOne) {
  const Pipeline p(testing::table1_spec());
  ASSERT_EQ(p.report.kind, IncompatibilityKind::Complex);
  const auto res = eval_complex(p.report, p.enabled, p.spec.resources, p.spec.worth_table(),
                                TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"g1", "g2", "g7"}));

  const auto feasible = oracle::enumerate_feasible(p.spec, p.enabled.goals);
  EXPECT_NE(std::find(feasible.feasible.begin(), feasible.feasible.end(), goals({"g1", "g2", "g7"})),
            feasible.feasible.end());

  // g4 outranks every remaining partner once g1 is gone but finds res_C at 5.
  const auto g4 = std::find_if(res.audit.begin(), res.audit.end(),
                               [](const AuditRecord& r) { return r.goal == GoalId("g4"); });
  ASSERT_NE(g4, res.audit.end());
  EXPECT_EQ(g4->reason, DecisionReason::InsufficientResidual);
  EXPECT_EQ(g4->short_resource, ResourceId("res_C"));
  EXPECT_EQ(g4->residual.at(ResourceId("res_C")), Quantity::units(5));
}

TEST(EvalComplex, FullConsumptionDropsSecondBest) {
  const Pipeline p(single_resource(50, {{"ga", 0.9, {{"energy", 50}}}, {"gb", 0.4, {{"energy", 30}}}}));
  const auto res = eval_complex(p.report, p.enabled, p.spec.resources, p.spec.worth_table(),
                                TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"ga"}));
  EXPECT_EQ(res.audit[1].residual.at(ResourceId("energy")), Quantity{});
}

TEST(EvalComplex, PartialAllocationKeepsTwo) {
  const Pipeline p(partial_allocation());
  ASSERT_EQ(p.report.kind, IncompatibilityKind::Simple);
  const auto res = eval_complex(p.report, p.enabled, p.spec.resources, p.spec.worth_table(),
                                TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"gi", "gj"}));
  const auto report = oracle::enumerate_feasible(p.spec, p.enabled.goals);
  EXPECT_EQ(report.maximal, (std::vector<GoalSet>{goals({"gi", "gj"}), goals({"gk"})}));
  EXPECT_EQ(report.best_worth, std::vector<GoalSet>{goals({"gi", "gj"})});
}

TEST(EvalComplex, FlagsLessValuableGoalOvertaking) {
  // g_hi is dropped for lack of time; g_lo shares energy with it and is kept.
  const auto spec = testing::inline_spec(
      {{"energy", 10}, {"time", 10}},
      {{"top", 0.9, {{"time", 8}}},
       {"hi", 0.8, {{"energy", 6}, {"time", 5}}},
       {"lo", 0.2, {{"energy", 6}}}});
  const Pipeline p(spec);
  ASSERT_EQ(p.report.kind, IncompatibilityKind::Complex);
  const auto res = eval_complex(p.report, p.enabled, p.spec.resources, p.spec.worth_table(),
                                TieBreak::by_id());
  EXPECT_EQ(res.consistent_goals, goals({"top", "lo"}));
  const auto& lo = res.audit.back();
  EXPECT_EQ(lo.goal, GoalId("lo"));
  EXPECT_TRUE(lo.overtook_more_valuable);
  EXPECT_EQ(lo.more_valuable, goals({"hi"}));
}

TEST(SolveAlgorithmic, Dispatch) {
  const Pipeline none(testing::inline_spec({{"e", 10}}, {{"a", 0.5, {{"e", 4}}}, {"b", 0.1, {{"e", 6}}}}));
  EXPECT_EQ(none.algorithmic().consistent_goals, none.enabled.goals);
  EXPECT_EQ(none.algorithmic().kind, IncompatibilityKind::None);

  const Pipeline simple(testing::example1_spec());
  EXPECT_EQ(simple.algorithmic(),
            eval_simple(simple.report, simple.enabled, simple.spec.worth_table(), TieBreak::by_id()));

  const Pipeline complex(testing::table1_spec());
  EXPECT_EQ(complex.algorithmic(), eval_complex(complex.report, complex.enabled, complex.spec.resources,
                                                complex.spec.worth_table(), TieBreak::by_id()));
}

TEST(SolveArgumentation, ExampleOneAndEqualPair) {
  const Pipeline ex1(testing::example1_spec());
  const auto res = ex1.argumentation();
  EXPECT_EQ(res.consistent_goals, goals({"g2"}));
  EXPECT_EQ(res.semantics, Semantics::Grounded);

  const Pipeline pair(single_resource(50, {{"gb", 0.5, {{"energy", 30}}}, {"ga", 0.5, {{"energy", 30}}}}));
  const auto tied = pair.argumentation();
  EXPECT_EQ(tied.semantics, Semantics::Preferred);
  EXPECT_EQ(tied.extensions, (std::vector<Extension>{goals({"ga"}), goals({"gb"})}));
  EXPECT_EQ(tied.consistent_goals, goals({"ga"}));
  EXPECT_TRUE(pair.argumentation(Semantics::Grounded).consistent_goals.empty());
}

TEST(SolveArgumentation, IgnoresPartialAllocation) {
  const Pipeline p(partial_allocation());
  EXPECT_EQ(p.argumentation().consistent_goals, goals({"gi"}));
}

TEST(SolveArgumentation, CapPropagates) {
  std::vector<testing::GoalDecl> decls;
  for (int i = 0; i < 12; ++i) {
    decls.push_back({"g" + std::to_string(i), 0.5, {{"energy", 10}}});
  }
  const Pipeline p(single_resource(15, decls));
  EXPECT_THROW(solve_argumentation(p.spec, p.enabled, p.report, Semantics::Preferred, 8),
               FrameworkTooLarge);
  EXPECT_EQ(solve_argumentation(p.spec, p.enabled, p.report, Semantics::Preferred, 12).extensions.size(),
            12u);
}

AgentSpec rescale_worth(AgentSpec spec) {
  for (auto& [id, goal] : spec.goals) goal.worth = (goal.worth + 1.0) / 2.0;
  return spec;
}

class RandomSpecs : public ::testing::Test {
protected:
  template <typename F>
  void for_each_spec(std::uint64_t seed, int count, F&& f, testing::RandomSpecConfig cfg = {}) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
      const Pipeline p(testing::random_spec(rng, cfg));
      f(p);
      if (HasFatalFailure()) return;
    }
  }
};

TEST_F(RandomSpecs, NoOverconsumptionAndSubsetOfEnabled) {
  for_each_spec(31, 500, [](const Pipeline& p) {
    for (const auto& res : {p.algorithmic(), p.argumentation()}) {
      EXPECT_TRUE(std::includes(p.enabled.goals.begin(), p.enabled.goals.end(),
                                res.consistent_goals.begin(), res.consistent_goals.end()));
      EXPECT_TRUE(fits(p.spec, res.consistent_goals));
    }
  });
}

TEST_F(RandomSpecs, AlgorithmicWithinOracleOptimum) {
  for_each_spec(32, 400, [](const Pipeline& p) {
    const auto res = p.algorithmic();
    const auto best = oracle::enumerate_feasible(p.spec, p.enabled.goals);
    EXPECT_LE(oracle::worth_sum(p.spec, res.consistent_goals), best.best_total + 1e-12);
    EXPECT_NE(std::find(best.feasible.begin(), best.feasible.end(), res.consistent_goals),
              best.feasible.end());
  });
}

TEST_F(RandomSpecs, SimpleReportsKeepEachSetsArgmax) {
  for_each_spec(33, 600, [](const Pipeline& p) {
    if (p.report.kind != IncompatibilityKind::Simple) return;
    const GoalOrder order(p.spec.worth_table(), TieBreak::by_id());
    const auto res = p.algorithmic();
    for (const auto& set : p.report.sets) {
      GoalSet kept;
      for (const auto& g : set.goals()) {
        if (res.consistent_goals.contains(g)) kept.insert(g);
      }
      EXPECT_EQ(kept, GoalSet{order.best(set.goals())});
    }
  });
}

// eval_complex only adds goals the residual still covers, so on simple
// reports it keeps at least what eval_simple keeps.
TEST_F(RandomSpecs, ComplexExtendsSimpleOnSimpleReports) {
  for_each_spec(34, 600, [](const Pipeline& p) {
    if (p.report.kind != IncompatibilityKind::Simple) return;
    const auto worth = p.spec.worth_table();
    const auto simple = eval_simple(p.report, p.enabled, worth, TieBreak::by_id());
    const auto complex = eval_complex(p.report, p.enabled, p.spec.resources, worth, TieBreak::by_id());
    EXPECT_TRUE(std::includes(complex.consistent_goals.begin(), complex.consistent_goals.end(),
                              simple.consistent_goals.begin(), simple.consistent_goals.end()));
  });
}

TEST_F(RandomSpecs, DominantGoalsKeptAndStarvedLosersDropped) {
  for_each_spec(35, 600, [](const Pipeline& p) {
    const auto worth = p.spec.worth_table();
    const auto res = eval_complex(p.report, p.enabled, p.spec.resources, worth, TieBreak::by_id());
    const GoalOrder order(worth, TieBreak::by_id());
    std::map<GoalId, GoalSet> partners;
    for (const auto& s : p.report.sets)
      for (const auto& g : s.goals())
        for (const auto& h : s.goals())
          if (g != h) partners[g].insert(h);

    for (const auto& [g, nb] : partners) {
      const bool dominant = std::all_of(nb.begin(), nb.end(),
                                        [&](const GoalId& h) { return worth.at(g) > worth.at(h); });
      const bool dominated = std::all_of(nb.begin(), nb.end(),
                                         [&](const GoalId& h) { return worth.at(g) < worth.at(h); });
      if (dominant) EXPECT_TRUE(res.consistent_goals.contains(g)) << g.str();
      if (!dominated) continue;
      // Residual after deducting every kept goal ranked ahead of g.
      std::map<ResourceId, Quantity> residual = p.spec.resources;
      for (const auto& k : res.consistent_goals) {
        if (!order.before(k, g)) continue;
        for (const auto& [r, q] : oracle::needs_of(p.spec, k)) residual[r] -= q;
      }
      bool starved = false;
      for (const auto& [r, q] : oracle::needs_of(p.spec, g)) {
        const auto it = residual.find(r);
        if (q > (it == residual.end() ? Quantity{} : it->second)) starved = true;
      }
      if (starved) EXPECT_FALSE(res.consistent_goals.contains(g)) << g.str();
    }
  });
}

TEST_F(RandomSpecs, StrictlyIncreasingWorthMapLeavesResultUnchanged) {
  for_each_spec(36, 500, [](const Pipeline& p) {
    const Pipeline scaled(rescale_worth(p.spec));
    EXPECT_EQ(scaled.algorithmic().consistent_goals, p.algorithmic().consistent_goals);
    EXPECT_EQ(scaled.argumentation().consistent_goals, p.argumentation().consistent_goals);
  }, {6, 4, 100, 8});
}

TEST_F(RandomSpecs, SeededRunsRepeat) {
  for_each_spec(37, 300, [](const Pipeline& p) {
    EXPECT_EQ(p.algorithmic(TieBreak::seeded(99)), p.algorithmic(TieBreak::seeded(99)));
    EXPECT_EQ(p.argumentation(), p.argumentation());
  }, {6, 4, 100, 4});
}

TEST_F(RandomSpecs, ArgumentationKeepsAtMostOnePerSet) {
  for_each_spec(38, 500, [](const Pipeline& p) {
    const auto res = p.argumentation();
    for (const auto& set : p.report.sets) {
      const auto n = std::count_if(set.goals().begin(), set.goals().end(),
                                   [&](const GoalId& g) { return res.consistent_goals.contains(g); });
      EXPECT_LE(n, 1);
    }
  }, {6, 4, 100, 5});
}

}  // namespace
}  // namespace goal_arbiter
