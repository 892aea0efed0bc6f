#pragma once

#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "goal_arbiter/feasibility.hpp"
#include "goal_arbiter/model.hpp"

namespace goal_arbiter {

using GoalSet = std::set<GoalId>;

/// Enabled goals that jointly overdraw one resource.
/// Construction enforces |goals| >= 2 and total_need > available.
class ConflictSet {
public:
  ConflictSet(ResourceId resource, GoalSet goals, Quantity total_need, Quantity available);

  const ResourceId& resource() const noexcept { return resource_; }
  const GoalSet& goals() const noexcept { return goals_; }
  Quantity total_need() const noexcept { return total_need_; }
  Quantity available() const noexcept { return available_; }

  friend bool operator==(const ConflictSet&, const ConflictSet&) = default;

private:
  ResourceId resource_;
  GoalSet goals_;
  Quantity total_need_;
  Quantity available_;
};

enum class IncompatibilityKind { None, Simple, Complex };

std::string_view to_string(IncompatibilityKind kind) noexcept;

struct IncompatibilityReport {
  /// Ordered by resource id.
  std::vector<ConflictSet> sets;
  /// Union of the goals of every set.
  GoalSet incompatible_goals;
  IncompatibilityKind kind = IncompatibilityKind::None;

  friend bool operator==(const IncompatibilityReport&, const IncompatibilityReport&) = default;
};

/// Simple when every conflicting goal lies in exactly one set, Complex when
/// some goal lies in two or more, None for an empty family.
IncompatibilityKind classify(std::span<const GoalSet> sets);
IncompatibilityKind classify(std::span<const ConflictSet> sets);

/// For each resource in the summary, gathers the enabled goals with a
/// positive need of it and keeps the group when it has at least two goals
/// whose summed need strictly exceeds availability.
IncompatibilityReport resource_incom(const AgentSpec& spec, const EnabledGoals& enabled);

/// Assembles a report from already-computed sets (used by tests and tools).
IncompatibilityReport make_report(std::vector<ConflictSet> sets);

}  // namespace goal_arbiter
