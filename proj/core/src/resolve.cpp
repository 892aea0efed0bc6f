#include "goal_arbiter/resolve.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace goal_arbiter {

std::string_view to_string(Strategy s) noexcept {
  return s == Strategy::Algorithmic ? "algorithmic" : "argumentation";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  if (text == "algorithmic") return Strategy::Algorithmic;
  if (text == "argumentation") return Strategy::Argumentation;
  return std::nullopt;
}

std::string_view to_string(Decision d) noexcept { return d == Decision::Kept ? "kept" : "dropped"; }

std::string_view to_string(DecisionReason r) noexcept {
  switch (r) {
    case DecisionReason::NonConflicting: return "non_conflicting";
    case DecisionReason::MostValuable: return "most_valuable";
    case DecisionReason::Outranked: return "outranked";
    case DecisionReason::InsufficientResidual: return "insufficient_residual";
    case DecisionReason::InExtension: return "in_extension";
    case DecisionReason::NotInExtension: return "not_in_extension";
  }
  return "unknown";
}

Quantity ResidualLedger::remaining(const ResourceId& res) const { return availa_res(remaining_, res); }

std::optional<ResourceId> ResidualLedger::first_shortfall(const RequirementList& needs) const {
  for (const auto& [res, qty] : needs) {
    if (qty > remaining(res)) return res;
  }
  return std::nullopt;
}

void ResidualLedger::deduct(const RequirementList& needs) {
  if (auto res = first_shortfall(needs)) {
    throw std::logic_error("ledger overdraft on resource '" + res->str() + "'");
  }
  for (const auto& [res, qty] : needs) remaining_[res] -= qty;
}

namespace {

// Conflict partners of each goal: every goal sharing at least one set.
std::map<GoalId, GoalSet> partner_map(const IncompatibilityReport& report) {
  std::map<GoalId, GoalSet> partners;
  for (const auto& set : report.sets) {
    for (const auto& g : set.goals()) {
      for (const auto& h : set.goals()) {
        if (g != h) partners[g].insert(h);
      }
    }
  }
  return partners;
}

void split_partners(AuditRecord& rec, const GoalSet& partners, const GoalOrder& order) {
  for (const auto& p : partners) {
    (order.before(p, rec.goal) ? rec.more_valuable : rec.less_valuable).insert(p);
  }
}

void add_non_conflicting(Resolution& out, const IncompatibilityReport& report,
                         const EnabledGoals& enabled) {
  for (const auto& g : enabled.goals) {
    if (report.incompatible_goals.contains(g)) continue;
    out.consistent_goals.insert(g);
    AuditRecord rec;
    rec.goal = g;
    rec.decision = Decision::Kept;
    rec.reason = DecisionReason::NonConflicting;
    out.audit.push_back(std::move(rec));
  }
}

}  // namespace

Resolution eval_simple(const IncompatibilityReport& report, const EnabledGoals& enabled,
                       const WorthMap& worth, TieBreak tiebreak) {
  if (report.kind != IncompatibilityKind::Simple) {
    throw WrongKind("eval_simple requires a simple incompatibility report, got " +
                    std::string(to_string(report.kind)));
  }
  const GoalOrder order(worth, tiebreak);
  const auto partners = partner_map(report);

  Resolution out;
  out.strategy = Strategy::Algorithmic;
  out.kind = report.kind;
  for (const auto& set : report.sets) {
    const GoalId winner = order.best(set.goals());
    for (const auto& g : order.sorted(set.goals())) {
      AuditRecord rec;
      rec.goal = g;
      if (g == winner) {
        rec.decision = Decision::Kept;
        rec.reason = DecisionReason::MostValuable;
        out.consistent_goals.insert(g);
      } else {
        rec.decision = Decision::Dropped;
        rec.reason = DecisionReason::Outranked;
      }
      split_partners(rec, partners.at(g), order);
      out.audit.push_back(std::move(rec));
    }
  }
  add_non_conflicting(out, report, enabled);
  return out;
}

Resolution eval_complex(const IncompatibilityReport& report, const EnabledGoals& enabled,
                        const ResourceSummary& summary, const WorthMap& worth,
                        TieBreak tiebreak) {
  const GoalOrder order(worth, tiebreak);
  const auto partners = partner_map(report);

  std::vector<GoalSet> open_sets;
  open_sets.reserve(report.sets.size());
  for (const auto& s : report.sets) open_sets.push_back(s.goals());

  ResidualLedger ledger(summary);
  GoalSet dropped;

  Resolution out;
  out.strategy = Strategy::Algorithmic;
  out.kind = report.kind;
  for (const auto& g : order.sorted(report.incompatible_goals)) {
    AuditRecord rec;
    rec.goal = g;
    rec.residual = ledger.snapshot();
    split_partners(rec, partners.at(g), order);

    bool ranked_first = true;
    for (const auto& set : open_sets) {
      if (set.contains(g) && order.best(set) != g) ranked_first = false;
    }
    if (!ranked_first) {
      rec.reason = DecisionReason::Outranked;
    } else if (auto res = ledger.first_shortfall(enabled.requirements(g))) {
      rec.reason = DecisionReason::InsufficientResidual;
      rec.short_resource = std::move(res);
    } else {
      rec.decision = Decision::Kept;
      rec.reason = DecisionReason::MostValuable;
      ledger.deduct(enabled.requirements(g));
      out.consistent_goals.insert(g);
      rec.overtook_more_valuable = std::any_of(
          rec.more_valuable.begin(), rec.more_valuable.end(),
          [&](const GoalId& p) { return dropped.contains(p); });
    }
    if (rec.decision == Decision::Dropped) dropped.insert(g);

    for (auto& set : open_sets) set.erase(g);
    std::erase_if(open_sets, [](const GoalSet& s) { return s.empty(); });
    out.audit.push_back(std::move(rec));
  }
  add_non_conflicting(out, report, enabled);
  return out;
}

Resolution solve_algorithmic(const AgentSpec& spec, const EnabledGoals& enabled,
                             const IncompatibilityReport& report, TieBreak tiebreak) {
  const WorthMap worth = spec.worth_table();
  switch (report.kind) {
    case IncompatibilityKind::Simple:
      return eval_simple(report, enabled, worth, tiebreak);
    case IncompatibilityKind::Complex:
      return eval_complex(report, enabled, spec.resources, worth, tiebreak);
    case IncompatibilityKind::None:
      break;
  }
  Resolution out;
  out.strategy = Strategy::Algorithmic;
  add_non_conflicting(out, report, enabled);
  return out;
}

Resolution solve_argumentation(const AgentSpec& spec, const EnabledGoals& enabled,
                               const IncompatibilityReport& report, Semantics semantics,
                               std::size_t cap) {
  const WorthMap worth = spec.worth_table();
  const GoalFramework gf = build_framework(report, worth);

  Resolution out;
  out.strategy = Strategy::Argumentation;
  out.kind = report.kind;
  out.semantics = effective_semantics(gf, semantics);
  out.extensions = acceptable_goals(gf, *out.semantics, cap);
  const Extension& chosen = select_extension(gf, out.extensions);

  for (const auto& g : gf.goals()) {
    AuditRecord rec;
    rec.goal = g;
    const bool member = chosen.contains(g);
    rec.decision = member ? Decision::Kept : Decision::Dropped;
    rec.reason = member ? DecisionReason::InExtension : DecisionReason::NotInExtension;
    for (const auto& p : gf.neighbors(g)) {
      if (gf.worth(p) > gf.worth(g)) rec.more_valuable.insert(p);
      if (gf.worth(p) < gf.worth(g)) rec.less_valuable.insert(p);
    }
    if (member) out.consistent_goals.insert(g);
    out.audit.push_back(std::move(rec));
  }
  add_non_conflicting(out, report, enabled);
  return out;
}

}  // namespace goal_arbiter
