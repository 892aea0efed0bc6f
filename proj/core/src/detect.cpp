#include "goal_arbiter/detect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace goal_arbiter {

ConflictSet::ConflictSet(ResourceId resource, GoalSet goals, Quantity total_need,
                         Quantity available)
    : resource_(std::move(resource)),
      goals_(std::move(goals)),
      total_need_(total_need),
      available_(available) {
  if (goals_.size() < 2) {
    throw std::invalid_argument("conflict set on '" + resource_.str() +
                                "' needs at least two goals");
  }
  if (!(total_need_ > available_)) {
    throw std::invalid_argument("conflict set on '" + resource_.str() +
                                "' is affordable: " + total_need_.to_string() +
                                " <= " + available_.to_string());
  }
}

std::string_view to_string(IncompatibilityKind kind) noexcept {
  switch (kind) {
    case IncompatibilityKind::None: return "none";
    case IncompatibilityKind::Simple: return "simple";
    case IncompatibilityKind::Complex: return "complex";
  }
  return "none";
}

IncompatibilityKind classify(std::span<const GoalSet> sets) {
  if (sets.empty()) return IncompatibilityKind::None;
  std::map<GoalId, int> occurrences;
  for (const auto& set : sets) {
    for (const auto& g : set) {
      if (++occurrences[g] > 1) return IncompatibilityKind::Complex;
    }
  }
  return IncompatibilityKind::Simple;
}

IncompatibilityKind classify(std::span<const ConflictSet> sets) {
  std::vector<GoalSet> families;
  families.reserve(sets.size());
  for (const auto& s : sets) families.push_back(s.goals());
  return classify(std::span<const GoalSet>(families));
}

IncompatibilityReport make_report(std::vector<ConflictSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const ConflictSet& a, const ConflictSet& b) {
    return a.resource() < b.resource();
  });
  IncompatibilityReport report;
  for (const auto& s : sets) report.incompatible_goals.insert(s.goals().begin(), s.goals().end());
  report.kind = classify(std::span<const ConflictSet>(sets));
  report.sets = std::move(sets);
  return report;
}

IncompatibilityReport resource_incom(const AgentSpec& spec, const EnabledGoals& enabled) {
  std::vector<ConflictSet> sets;
  for (const auto& [res, available] : spec.resources) {
    GoalSet needers;
    Quantity total;
    for (const auto& g : enabled.goals) {
      const Quantity need = enabled.need(g, res);
      if (need.is_zero()) continue;
      needers.insert(g);
      total += need;
    }
    if (needers.size() >= 2 && total > available) {
      sets.emplace_back(res, std::move(needers), total, available);
    }
  }
  return make_report(std::move(sets));
}

}  // namespace goal_arbiter
