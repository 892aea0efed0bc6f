#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "goal_arbiter/error.hpp"
#include "goal_arbiter/ids.hpp"
#include "goal_arbiter/quantity.hpp"

namespace goal_arbiter {

/// Available quantity per resource. Keyed by id, so each resource appears
/// exactly once.
using ResourceSummary = std::map<ResourceId, Quantity>;

/// Needed quantity per resource for one plan; every entry is strictly positive.
using RequirementList = std::map<ResourceId, Quantity>;

/// Ground atoms the agent currently believes, e.g. "battery_ok" or "at(room1)".
using BeliefBase = std::set<std::string>;

using WorthMap = std::map<GoalId, double>;

struct Literal {
  std::string atom;
  bool negated = false;

  /// Parses "atom" or "~atom"; nullopt when the atom is not well formed.
  static std::optional<Literal> parse(std::string_view text);
  std::string to_string() const { return negated ? "~" + atom : atom; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// True for `name` or `name(arg,...)` with identifier-like names and args.
bool is_valid_atom(std::string_view text);

struct Goal {
  GoalId id;
  double worth = 0.0;
  /// Shortcut for a single always-applicable plan.
  std::optional<RequirementList> inline_requirements;

  friend bool operator==(const Goal&, const Goal&) = default;
};

struct Plan {
  PlanId id;
  GoalId goal;
  std::vector<Literal> context;
  std::string body;  // opaque; never interpreted
  RequirementList requirements;

  friend bool operator==(const Plan&, const Plan&) = default;
};

enum class WarningKind { MissingResource };

struct Warning {
  WarningKind kind = WarningKind::MissingResource;
  ResourceId resource;
  /// Goal or plan whose requirement list mentions the resource.
  std::string owner;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

/// Validated agent state. Goals are keyed (and therefore ordered) by id;
/// plans keep declaration order because plan selection depends on it.
struct AgentSpec {
  ResourceSummary resources;
  BeliefBase beliefs;
  std::map<GoalId, Goal> goals;
  std::vector<Plan> plans;
  std::vector<Warning> warnings;

  const Goal& goal(const GoalId& id) const;
  bool has_goal(const GoalId& id) const { return goals.contains(id); }
  WorthMap worth_table() const;

  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

// Unvalidated document shape, as produced by a parser or built by hand.

struct RawAmount {
  std::string id;
  double amount = 0.0;
};

struct RawGoal {
  std::string id;
  double worth = 0.0;
  std::optional<std::vector<RawAmount>> requirements;
};

struct RawPlan {
  std::string id;
  std::string goal;
  std::vector<std::string> context;
  std::string body;
  std::vector<RawAmount> requirements;
};

struct RawSpec {
  std::vector<RawAmount> resources;
  std::vector<std::string> beliefs;
  std::vector<RawGoal> goals;
  std::vector<RawPlan> plans;
};

enum class IssueKind {
  Malformed,
  UnknownKey,
  InvalidIdentifier,
  InvalidLiteral,
  InvalidQuantity,
  DuplicateResource,
  NegativeQuantity,
  NonPositiveRequirement,
  WorthOutOfRange,
  DuplicateGoalId,
  DuplicatePlanId,
  DanglingPlanGoalRef,
  GoalWithoutRequirements,
};

std::string_view to_string(IssueKind kind) noexcept;

struct Issue {
  IssueKind kind;
  /// Offending identifier or document path.
  std::string subject;
  std::string message;
};

class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<Issue> issues);
  const std::vector<Issue>& issues() const noexcept { return issues_; }
  bool has(IssueKind kind) const noexcept;

private:
  std::vector<Issue> issues_;
};

/// Checks every invariant of the agent model and returns the canonical form.
/// Throws ValidationError listing all violations found, not just the first.
AgentSpec validate_spec(const RawSpec& raw);

/// Inverse of validate_spec for canonical specs; validate_spec(to_raw(s)) == s.
RawSpec to_raw(const AgentSpec& spec);

/// Declared worth of `goal`. Throws UnknownGoal.
double worth_of(const AgentSpec& spec, const GoalId& goal);

}  // namespace goal_arbiter
