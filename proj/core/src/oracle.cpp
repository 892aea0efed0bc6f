#include "goal_arbiter/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace goal_arbiter::oracle {

namespace {

std::vector<GoalSet> all_subsets(const std::vector<GoalId>& items) {
  std::vector<GoalSet> out;
  const std::size_t n = items.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    GoalSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(items[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool subset_of(const GoalSet& a, const GoalSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Quantity lookup(const RequirementList& reqs, const ResourceId& res) {
  for (const auto& [r, q] : reqs) {
    if (r == res) return q;
  }
  return Quantity{};
}

Quantity available_of(const AgentSpec& spec, const ResourceId& res) {
  for (const auto& [r, q] : spec.resources) {
    if (r == res) return q;
  }
  return Quantity{};
}

}  // namespace

RequirementList needs_of(const AgentSpec& spec, const GoalId& goal) {
  const auto it = spec.goals.find(goal);
  if (it == spec.goals.end()) throw UnknownGoal(goal);
  if (it->second.inline_requirements.has_value()) return *it->second.inline_requirements;
  for (const auto& plan : spec.plans) {
    if (plan.goal != goal) continue;
    bool applicable = true;
    for (const auto& lit : plan.context) {
      const bool believed = spec.beliefs.count(lit.atom) > 0;
      if (lit.negated ? believed : !believed) applicable = false;
    }
    if (applicable) return plan.requirements;
  }
  throw NoApplicablePlan(goal);
}

GoalSet enabled_by_definition(const AgentSpec& spec) {
  GoalSet out;
  for (const auto& [id, goal] : spec.goals) {
    RequirementList reqs;
    try {
      reqs = needs_of(spec, id);
    } catch (const NoApplicablePlan&) {
      continue;
    }
    bool fits = true;
    for (const auto& [res, need] : reqs) {
      if (need > available_of(spec, res)) fits = false;
    }
    if (fits) out.insert(id);
  }
  return out;
}

std::vector<ConflictGroup> conflict_groups(const AgentSpec& spec, const GoalSet& enabled) {
  if (enabled.size() > kFeasibleCap) throw TooManyGoals(enabled.size(), kFeasibleCap);
  const std::vector<GoalId> items(enabled.begin(), enabled.end());
  const auto subsets = all_subsets(items);

  std::vector<ConflictGroup> out;
  for (const auto& [res, available] : spec.resources) {
    GoalSet witnesses;
    for (const auto& subset : subsets) {
      if (subset.size() < 2) continue;
      Quantity sum;
      bool all_need = true;
      for (const auto& g : subset) {
        const Quantity need = lookup(needs_of(spec, g), res);
        if (need.is_zero()) all_need = false;
        sum += need;
      }
      if (all_need && sum > available) witnesses.insert(subset.begin(), subset.end());
    }
    if (witnesses.empty()) continue;
    Quantity total;
    for (const auto& g : witnesses) total += lookup(needs_of(spec, g), res);
    out.push_back({res, std::move(witnesses), total, available});
  }
  return out;
}

double worth_sum(const AgentSpec& spec, const GoalSet& goals) {
  double sum = 0.0;
  for (const auto& g : goals) sum += spec.goal(g).worth;
  return sum;
}

FeasibleSubsetReport enumerate_feasible(const AgentSpec& spec, const GoalSet& enabled) {
  if (enabled.size() > kFeasibleCap) throw TooManyGoals(enabled.size(), kFeasibleCap);
  const std::vector<GoalId> items(enabled.begin(), enabled.end());

  FeasibleSubsetReport report;
  for (auto& subset : all_subsets(items)) {
    bool fits = true;
    for (const auto& [res, available] : spec.resources) {
      Quantity sum;
      for (const auto& g : subset) sum += lookup(needs_of(spec, g), res);
      if (sum > available) fits = false;
    }
    // Resources missing from the summary have availability 0.
    for (const auto& g : subset) {
      for (const auto& [res, need] : needs_of(spec, g)) {
        if (!spec.resources.contains(res) && !need.is_zero()) fits = false;
      }
    }
    if (fits) report.feasible.push_back(std::move(subset));
  }

  for (const auto& s : report.feasible) {
    bool maximal = std::none_of(report.feasible.begin(), report.feasible.end(),
                                [&](const GoalSet& t) { return t.size() > s.size() && subset_of(s, t); });
    if (maximal) report.maximal.push_back(s);
  }

  // Worths are non-negative, so the optimum is always attained by a maximal
  // set; restricting to those keeps zero-worth padding out of best_worth.
  bool first = true;
  for (const auto& s : report.maximal) {
    const double total = worth_sum(spec, s);
    if (first || total > report.best_total) {
      report.best_total = total;
      report.best_worth.clear();
      first = false;
    }
    if (total == report.best_total) report.best_worth.push_back(s);
  }
  std::sort(report.maximal.begin(), report.maximal.end());
  std::sort(report.best_worth.begin(), report.best_worth.end());
  return report;
}

SemanticsReport semantics_by_definition(const GoalFramework& gf) {
  if (gf.size() > kSemanticsCap) throw TooManyGoals(gf.size(), kSemanticsCap);
  const std::vector<GoalId> items(gf.goals().begin(), gf.goals().end());

  // Attack: an incompatible pair survives the worth comparison when the
  // attacker is at least as valuable as the target.
  auto attacks = [&](const GoalId& a, const GoalId& b) {
    if (a == b) return false;
    bool paired = false;
    for (const auto& p : gf.incompatibility()) {
      if ((p.first() == a && p.second() == b) || (p.first() == b && p.second() == a)) paired = true;
    }
    return paired && !(gf.worth_table().at(a) < gf.worth_table().at(b));
  };
  auto conflict_free = [&](const GoalSet& e) {
    for (const auto& a : e)
      for (const auto& b : e)
        if (attacks(a, b)) return false;
    return true;
  };
  auto defended = [&](const GoalSet& e, const GoalId& g) {
    for (const auto& attacker : items) {
      if (!attacks(attacker, g)) continue;
      bool countered = false;
      for (const auto& k : e) countered = countered || attacks(k, attacker);
      if (!countered) return false;
    }
    return true;
  };

  SemanticsReport report;
  for (const auto& e : all_subsets(items)) {
    if (!conflict_free(e)) continue;
    bool admissible = std::all_of(e.begin(), e.end(), [&](const GoalId& g) { return defended(e, g); });
    if (!admissible) continue;
    report.admissible.push_back(e);
    bool complete = std::all_of(items.begin(), items.end(),
                                [&](const GoalId& g) { return !defended(e, g) || e.contains(g); });
    if (complete) report.complete.push_back(e);
  }

  std::vector<Extension> minimal;
  for (const auto& c : report.complete) {
    bool is_min = std::none_of(report.complete.begin(), report.complete.end(), [&](const GoalSet& d) {
      return d.size() < c.size() && subset_of(d, c);
    });
    bool is_max = std::none_of(report.complete.begin(), report.complete.end(), [&](const GoalSet& d) {
      return d.size() > c.size() && subset_of(c, d);
    });
    if (is_min) minimal.push_back(c);
    if (is_max) report.preferred.push_back(c);
  }
  if (minimal.size() != 1) {
    throw std::logic_error("grounded extension must be the unique minimal complete extension");
  }
  report.grounded = minimal.front();
  std::sort(report.preferred.begin(), report.preferred.end());
  std::sort(report.complete.begin(), report.complete.end());
  std::sort(report.admissible.begin(), report.admissible.end());
  return report;
}

}  // namespace goal_arbiter::oracle
