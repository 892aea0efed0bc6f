#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "goal_arbiter/argue.hpp"
#include "goal_arbiter/detect.hpp"
#include "goal_arbiter/feasibility.hpp"
#include "goal_arbiter/ordering.hpp"

namespace goal_arbiter {

enum class Strategy { Algorithmic, Argumentation };

std::string_view to_string(Strategy s) noexcept;
std::optional<Strategy> parse_strategy(std::string_view text);

/// Remaining quantity per resource while goals are being granted.
class ResidualLedger {
public:
  explicit ResidualLedger(const ResourceSummary& summary) : remaining_(summary) {}

  Quantity remaining(const ResourceId& res) const;
  /// First resource in `needs` whose remaining quantity is too small.
  std::optional<ResourceId> first_shortfall(const RequirementList& needs) const;
  bool affords(const RequirementList& needs) const { return !first_shortfall(needs); }
  /// Throws std::logic_error if any remaining quantity would go negative.
  void deduct(const RequirementList& needs);
  const ResourceSummary& snapshot() const noexcept { return remaining_; }

private:
  ResourceSummary remaining_;
};

enum class Decision { Kept, Dropped };

enum class DecisionReason {
  NonConflicting,        // not in any conflict set
  MostValuable,          // ranked first in all its sets and affordable
  Outranked,             // a remaining goal in one of its sets ranks ahead
  InsufficientResidual,  // ranked first but the ledger cannot cover it
  InExtension,           // member of the chosen extension
  NotInExtension,
};

std::string_view to_string(Decision d) noexcept;
std::string_view to_string(DecisionReason r) noexcept;

struct AuditRecord {
  GoalId goal;
  Decision decision = Decision::Dropped;
  DecisionReason reason = DecisionReason::NonConflicting;
  /// Ledger state when the decision was taken (algorithmic strategy only).
  ResourceSummary residual;
  std::optional<ResourceId> short_resource;
  /// Conflict partners ranking ahead of / behind this goal.
  GoalSet more_valuable;
  GoalSet less_valuable;
  /// Kept although a conflict partner ranking ahead of it was dropped.
  bool overtook_more_valuable = false;

  friend bool operator==(const AuditRecord&, const AuditRecord&) = default;
};

struct Resolution {
  GoalSet consistent_goals;
  Strategy strategy = Strategy::Algorithmic;
  /// Algorithmic: the incompatibility kind that selected the routine.
  IncompatibilityKind kind = IncompatibilityKind::None;
  /// Argumentation only: applied semantics and every extension it produced.
  std::optional<Semantics> semantics;
  std::vector<Extension> extensions;
  /// Conflicting goals in decision order, then non-conflicting goals by id.
  std::vector<AuditRecord> audit;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

/// Keeps the top-ranked goal of every conflict set plus all enabled goals
/// outside the conflict sets. Throws WrongKind unless the report is Simple.
Resolution eval_simple(const IncompatibilityReport& report, const EnabledGoals& enabled,
                       const WorthMap& worth, TieBreak tiebreak);

/// Visits conflicting goals from highest to lowest rank. A goal is kept when
/// it ranks first among the remaining goals of each set it is in and the
/// residual ledger covers all of its needs; kept goals are deducted from the
/// ledger. Each visited goal then leaves every set, and emptied sets are
/// discarded. Accepts Simple and Complex reports.
Resolution eval_complex(const IncompatibilityReport& report, const EnabledGoals& enabled,
                        const ResourceSummary& summary, const WorthMap& worth,
                        TieBreak tiebreak);

/// None: every enabled goal; Simple: eval_simple; Complex: eval_complex.
Resolution solve_algorithmic(const AgentSpec& spec, const EnabledGoals& enabled,
                             const IncompatibilityReport& report, TieBreak tiebreak);

/// Consistent goals are the members of one acceptable extension (chosen by
/// select_extension when there are several) plus the non-conflicting enabled
/// goals. Propagates FrameworkTooLarge.
Resolution solve_argumentation(const AgentSpec& spec, const EnabledGoals& enabled,
                               const IncompatibilityReport& report, Semantics semantics,
                               std::size_t cap = kDefaultEnumerationCap);

}  // namespace goal_arbiter
