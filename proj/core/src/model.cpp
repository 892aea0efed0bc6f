#include "goal_arbiter/model.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <utility>

namespace goal_arbiter {

namespace {

const std::regex& atom_pattern() {
  static const std::regex pattern(
      R"([A-Za-z_][A-Za-z0-9_]*(\([A-Za-z0-9_.\-]+(,[A-Za-z0-9_.\-]+)*\))?)");
  return pattern;
}

std::string describe(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

class Validator {
public:
  AgentSpec run(const RawSpec& raw) {
    check_resources(raw.resources);
    for (const auto& belief : raw.beliefs) {
      if (!is_valid_atom(belief)) {
        add(IssueKind::InvalidLiteral, belief, "belief is not a well-formed ground atom");
      } else {
        spec_.beliefs.insert(belief);
      }
    }
    for (const auto& goal : raw.goals) check_goal(goal);
    for (const auto& plan : raw.plans) check_plan(plan);

    for (const auto& [id, goal] : spec_.goals) {
      if (goal.inline_requirements) continue;
      bool has_plan = std::any_of(spec_.plans.begin(), spec_.plans.end(),
                                  [&](const Plan& p) { return p.goal == id; });
      if (!has_plan) {
        add(IssueKind::GoalWithoutRequirements, id.str(),
            "goal has neither inline requirements nor a plan");
      }
    }

    if (!issues_.empty()) throw ValidationError(std::move(issues_));
    collect_warnings();
    return std::move(spec_);
  }

private:
  void add(IssueKind kind, std::string subject, std::string message) {
    issues_.push_back({kind, std::move(subject), std::move(message)});
  }

  // Shared by the resource summary and every requirement list.
  std::optional<std::map<ResourceId, Quantity>> check_amounts(
      const std::vector<RawAmount>& amounts, const std::string& owner, bool strictly_positive) {
    std::map<ResourceId, Quantity> out;
    bool ok = true;
    for (const auto& entry : amounts) {
      if (!is_valid_identifier(entry.id)) {
        add(IssueKind::InvalidIdentifier, owner,
            "resource id '" + entry.id + "' is empty or contains whitespace");
        ok = false;
        continue;
      }
      ResourceId id(entry.id);
      if (out.contains(id)) {
        add(IssueKind::DuplicateResource, entry.id, "resource listed twice in " + owner);
        ok = false;
        continue;
      }
      auto qty = Quantity::from_double(entry.amount);
      if (!qty) {
        add(IssueKind::InvalidQuantity, entry.id,
            "amount " + describe(entry.amount) + " in " + owner +
                " is not finite, exceeds " + std::to_string(Quantity::kMaxUnits) +
                ", or has more than 6 decimals");
        ok = false;
        continue;
      }
      if (qty->is_negative()) {
        add(IssueKind::NegativeQuantity, entry.id,
            "amount " + qty->to_string() + " in " + owner + " is negative");
        ok = false;
        continue;
      }
      if (strictly_positive && qty->is_zero()) {
        add(IssueKind::NonPositiveRequirement, entry.id,
            "required amount in " + owner + " must be greater than zero");
        ok = false;
        continue;
      }
      out.emplace(std::move(id), *qty);
    }
    if (!ok) return std::nullopt;
    return out;
  }

  void check_resources(const std::vector<RawAmount>& resources) {
    if (auto summary = check_amounts(resources, "resources", false)) {
      spec_.resources = std::move(*summary);
    }
  }

  void check_goal(const RawGoal& raw) {
    if (!is_valid_identifier(raw.id)) {
      add(IssueKind::InvalidIdentifier, raw.id, "goal id is empty or contains whitespace");
      return;
    }
    GoalId id(raw.id);
    if (spec_.goals.contains(id)) {
      add(IssueKind::DuplicateGoalId, raw.id, "goal declared twice");
      return;
    }
    Goal goal{id, raw.worth, std::nullopt};
    if (!std::isfinite(raw.worth) || raw.worth < 0.0 || raw.worth > 1.0) {
      add(IssueKind::WorthOutOfRange, raw.id,
          "worth " + describe(raw.worth) + " is outside [0, 1]");
    }
    if (raw.requirements) {
      auto reqs = check_amounts(*raw.requirements, "goal '" + raw.id + "'", true);
      goal.inline_requirements = reqs.value_or(RequirementList{});
    }
    spec_.goals.emplace(std::move(id), std::move(goal));
  }

  void check_plan(const RawPlan& raw) {
    if (!is_valid_identifier(raw.id)) {
      add(IssueKind::InvalidIdentifier, raw.id, "plan id is empty or contains whitespace");
      return;
    }
    if (!plan_ids_.insert(raw.id).second) {
      add(IssueKind::DuplicatePlanId, raw.id, "plan declared twice");
      return;
    }
    Plan plan;
    plan.id = PlanId(raw.id);
    plan.goal = GoalId(raw.goal);
    plan.body = raw.body;
    if (!spec_.goals.contains(plan.goal)) {
      add(IssueKind::DanglingPlanGoalRef, raw.id,
          "plan refers to undeclared goal '" + raw.goal + "'");
    }
    for (const auto& text : raw.context) {
      if (auto lit = Literal::parse(text)) {
        plan.context.push_back(std::move(*lit));
      } else {
        add(IssueKind::InvalidLiteral, raw.id, "context literal '" + text + "' is malformed");
      }
    }
    if (auto reqs = check_amounts(raw.requirements, "plan '" + raw.id + "'", true)) {
      plan.requirements = std::move(*reqs);
    }
    spec_.plans.push_back(std::move(plan));
  }

  void note_missing(const RequirementList& reqs, const std::string& owner) {
    for (const auto& [res, qty] : reqs) {
      if (spec_.resources.contains(res)) continue;
      spec_.warnings.push_back(
          {WarningKind::MissingResource, res, owner,
           "resource '" + res.str() + "' required by " + owner +
               " is not in the resource summary; treated as available quantity 0"});
    }
  }

  void collect_warnings() {
    for (const auto& [id, goal] : spec_.goals) {
      if (goal.inline_requirements) note_missing(*goal.inline_requirements, id.str());
    }
    for (const auto& plan : spec_.plans) note_missing(plan.requirements, plan.id.str());
  }

  AgentSpec spec_;
  std::set<std::string> plan_ids_;
  std::vector<Issue> issues_;
};

std::vector<RawAmount> amounts_to_raw(const std::map<ResourceId, Quantity>& amounts) {
  std::vector<RawAmount> out;
  out.reserve(amounts.size());
  for (const auto& [res, qty] : amounts) out.push_back({res.str(), qty.to_double()});
  return out;
}

}  // namespace

std::optional<Literal> Literal::parse(std::string_view text) {
  Literal lit;
  if (!text.empty() && text.front() == '~') {
    lit.negated = true;
    text.remove_prefix(1);
  }
  if (!is_valid_atom(text)) return std::nullopt;
  lit.atom = std::string(text);
  return lit;
}

bool is_valid_atom(std::string_view text) {
  return std::regex_match(text.begin(), text.end(), atom_pattern());
}

const Goal& AgentSpec::goal(const GoalId& id) const {
  auto it = goals.find(id);
  if (it == goals.end()) throw UnknownGoal(id);
  return it->second;
}

WorthMap AgentSpec::worth_table() const {
  WorthMap out;
  for (const auto& [id, g] : goals) out.emplace(id, g.worth);
  return out;
}

std::string_view to_string(IssueKind kind) noexcept {
  switch (kind) {
    case IssueKind::Malformed: return "Malformed";
    case IssueKind::UnknownKey: return "UnknownKey";
    case IssueKind::InvalidIdentifier: return "InvalidIdentifier";
    case IssueKind::InvalidLiteral: return "InvalidLiteral";
    case IssueKind::InvalidQuantity: return "InvalidQuantity";
    case IssueKind::DuplicateResource: return "DuplicateResource";
    case IssueKind::NegativeQuantity: return "NegativeQuantity";
    case IssueKind::NonPositiveRequirement: return "NonPositiveRequirement";
    case IssueKind::WorthOutOfRange: return "WorthOutOfRange";
    case IssueKind::DuplicateGoalId: return "DuplicateGoalId";
    case IssueKind::DuplicatePlanId: return "DuplicatePlanId";
    case IssueKind::DanglingPlanGoalRef: return "DanglingPlanGoalRef";
    case IssueKind::GoalWithoutRequirements: return "GoalWithoutRequirements";
  }
  return "Unknown";
}

namespace {
std::string summarize(const std::vector<Issue>& issues) {
  std::string out = "invalid agent spec (" + std::to_string(issues.size()) + " issue" +
                    (issues.size() == 1 ? "" : "s") + ")";
  for (const auto& issue : issues) {
    out += "\n  ";
    out += to_string(issue.kind);
    out += " [" + issue.subject + "]: " + issue.message;
  }
  return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(summarize(issues)), issues_(std::move(issues)) {}

bool ValidationError::has(IssueKind kind) const noexcept {
  return std::any_of(issues_.begin(), issues_.end(),
                     [kind](const Issue& i) { return i.kind == kind; });
}

AgentSpec validate_spec(const RawSpec& raw) { return Validator{}.run(raw); }

RawSpec to_raw(const AgentSpec& spec) {
  RawSpec raw;
  raw.resources = amounts_to_raw(spec.resources);
  raw.beliefs.assign(spec.beliefs.begin(), spec.beliefs.end());
  for (const auto& [id, goal] : spec.goals) {
    RawGoal g{id.str(), goal.worth, std::nullopt};
    if (goal.inline_requirements) g.requirements = amounts_to_raw(*goal.inline_requirements);
    raw.goals.push_back(std::move(g));
  }
  for (const auto& plan : spec.plans) {
    RawPlan p;
    p.id = plan.id.str();
    p.goal = plan.goal.str();
    for (const auto& lit : plan.context) p.context.push_back(lit.to_string());
    p.body = plan.body;
    p.requirements = amounts_to_raw(plan.requirements);
    raw.plans.push_back(std::move(p));
  }
  return raw;
}

double worth_of(const AgentSpec& spec, const GoalId& goal) { return spec.goal(goal).worth; }

}  // namespace goal_arbiter
