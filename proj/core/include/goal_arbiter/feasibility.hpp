#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "goal_arbiter/model.hpp"

namespace goal_arbiter {

/// Available quantity of `res`; a resource absent from the summary counts as 0.
Quantity availa_res(const ResourceSummary& summary, const ResourceId& res);

/// True when every literal holds: "atom" needs atom in the belief base,
/// "~atom" needs it absent.
bool context_holds(const BeliefBase& beliefs, const std::vector<Literal>& context);

struct SelectedPlan {
  /// nullopt for the implicit plan built from a goal's inline requirements.
  std::optional<PlanId> plan;
  RequirementList requirements;
};

/// The plan the agent would use for `goal`: its inline requirements if
/// declared, else the first plan (declaration order) whose context holds.
/// Throws UnknownGoal or NoApplicablePlan.
SelectedPlan resolve_plan(const AgentSpec& spec, const GoalId& goal);

/// Amount of `res` the selected plan for `goal` needs, 0 if not listed.
Quantity need_res(const AgentSpec& spec, const GoalId& goal, const ResourceId& res);

struct Shortfall {
  ResourceId resource;
  Quantity needed;
  Quantity available;

  friend bool operator==(const Shortfall&, const Shortfall&) = default;
};

enum class ExclusionReason { InsufficientResources, NoApplicablePlan };

struct Exclusion {
  ExclusionReason reason = ExclusionReason::InsufficientResources;
  /// Only the violating resources; empty for NoApplicablePlan.
  std::vector<Shortfall> shortfalls;

  friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

/// Goals that are individually affordable, plus the reason every other goal
/// was left out.
struct EnabledGoals {
  std::set<GoalId> goals;
  std::map<GoalId, Exclusion> excluded;
  /// Requirements of the selected plan, for enabled goals only.
  std::map<GoalId, RequirementList> needs;

  bool contains(const GoalId& goal) const { return goals.contains(goal); }
  /// Need of an enabled goal for `res`, 0 if not listed.
  Quantity need(const GoalId& goal, const ResourceId& res) const;
  const RequirementList& requirements(const GoalId& goal) const;

  friend bool operator==(const EnabledGoals&, const EnabledGoals&) = default;
};

/// Per-goal feasibility filter. Each goal is tested on its own against the
/// full summary; need equal to availability is affordable.
EnabledGoals eval_resources(const AgentSpec& spec);

}  // namespace goal_arbiter
