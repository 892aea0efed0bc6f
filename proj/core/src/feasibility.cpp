#include "goal_arbiter/feasibility.hpp"

#include <algorithm>

namespace goal_arbiter {

Quantity availa_res(const ResourceSummary& summary, const ResourceId& res) {
  auto it = summary.find(res);
  return it == summary.end() ? Quantity{} : it->second;
}

bool context_holds(const BeliefBase& beliefs, const std::vector<Literal>& context) {
  return std::all_of(context.begin(), context.end(), [&](const Literal& lit) {
    return beliefs.contains(lit.atom) != lit.negated;
  });
}

SelectedPlan resolve_plan(const AgentSpec& spec, const GoalId& goal) {
  const Goal& g = spec.goal(goal);
  if (g.inline_requirements) return {std::nullopt, *g.inline_requirements};
  for (const auto& plan : spec.plans) {
    if (plan.goal == goal && context_holds(spec.beliefs, plan.context)) {
      return {plan.id, plan.requirements};
    }
  }
  throw NoApplicablePlan(goal);
}

Quantity need_res(const AgentSpec& spec, const GoalId& goal, const ResourceId& res) {
  const auto plan = resolve_plan(spec, goal);
  auto it = plan.requirements.find(res);
  return it == plan.requirements.end() ? Quantity{} : it->second;
}

Quantity EnabledGoals::need(const GoalId& goal, const ResourceId& res) const {
  const auto& reqs = requirements(goal);
  auto it = reqs.find(res);
  return it == reqs.end() ? Quantity{} : it->second;
}

const RequirementList& EnabledGoals::requirements(const GoalId& goal) const {
  auto it = needs.find(goal);
  if (it == needs.end()) throw UnknownGoal(goal);
  return it->second;
}

EnabledGoals eval_resources(const AgentSpec& spec) {
  EnabledGoals out;
  for (const auto& [id, goal] : spec.goals) {
    SelectedPlan plan;
    try {
      plan = resolve_plan(spec, id);
    } catch (const NoApplicablePlan&) {
      out.excluded.emplace(id, Exclusion{ExclusionReason::NoApplicablePlan, {}});
      continue;
    }
    std::vector<Shortfall> shortfalls;
    for (const auto& [res, needed] : plan.requirements) {
      const Quantity available = availa_res(spec.resources, res);
      if (needed > available) shortfalls.push_back({res, needed, available});
    }
    if (shortfalls.empty()) {
      out.goals.insert(id);
      out.needs.emplace(id, std::move(plan.requirements));
    } else {
      out.excluded.emplace(
          id, Exclusion{ExclusionReason::InsufficientResources, std::move(shortfalls)});
    }
  }
  return out;
}

}  // namespace goal_arbiter
