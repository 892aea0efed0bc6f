#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "goal_arbiter/argue.hpp"
#include "goal_arbiter/model.hpp"

// Deliberately naive reference implementations for checking the main
// pipeline on small instances. Nothing here calls into feasibility, detect,
// argue or resolve; each routine works from the definitions directly.
namespace goal_arbiter::oracle {

inline constexpr std::size_t kFeasibleCap = 20;
inline constexpr std::size_t kSemanticsCap = 16;

/// Requirements of the plan the agent would pick for `goal`, recomputed from
/// the raw plan library.
RequirementList needs_of(const AgentSpec& spec, const GoalId& goal);

/// Goals whose chosen plan fits the summary on its own.
GoalSet enabled_by_definition(const AgentSpec& spec);

struct ConflictGroup {
  ResourceId resource;
  GoalSet goals;
  Quantity total_need;
  Quantity available;

  friend bool operator==(const ConflictGroup&, const ConflictGroup&) = default;
};

/// For each resource, the union of every subset of two or more goals that
/// all need it and jointly overdraw it. Subsets are enumerated exhaustively.
/// Throws TooManyGoals above kFeasibleCap.
std::vector<ConflictGroup> conflict_groups(const AgentSpec& spec, const GoalSet& enabled);

struct FeasibleSubsetReport {
  /// Every subset whose per-resource needs fit the summary.
  std::vector<GoalSet> feasible;
  /// Inclusion-maximal members of `feasible`.
  std::vector<GoalSet> maximal;
  /// Members of `maximal` with the highest total worth.
  std::vector<GoalSet> best_worth;
  double best_total = 0.0;
};

/// Exhaustive 2^n enumeration of jointly affordable goal subsets.
/// Throws TooManyGoals above kFeasibleCap.
FeasibleSubsetReport enumerate_feasible(const AgentSpec& spec, const GoalSet& enabled);

/// Sum of worth over `goals`, accumulated in id order.
double worth_sum(const AgentSpec& spec, const GoalSet& goals);

struct SemanticsReport {
  Extension grounded;
  std::vector<Extension> preferred;
  std::vector<Extension> complete;
  std::vector<Extension> admissible;
};

/// Classifies every subset of the framework's goals by the literal
/// definitions of conflict-freeness, defense, admissibility and
/// completeness. Throws TooManyGoals above kSemanticsCap.
SemanticsReport semantics_by_definition(const GoalFramework& gf);

}  // namespace goal_arbiter::oracle
