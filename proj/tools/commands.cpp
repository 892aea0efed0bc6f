#include "commands.hpp"

#include <fstream>
#include <sstream>

#include "goal_arbiter/detect.hpp"
#include "goal_arbiter/feasibility.hpp"
#include "goal_arbiter/oracle.hpp"
#include "goal_arbiter/spec_json.hpp"

namespace goal_arbiter::cli {

namespace {

using nlohmann::json;

json ids(const GoalSet& goals) {
  json arr = json::array();
  for (const auto& g : goals) arr.push_back(g.str());
  return arr;
}

json amounts(const ResourceSummary& summary) {
  json obj = json::object();
  for (const auto& [res, qty] : summary) obj[res.str()] = quantity_json(qty);
  return obj;
}

json header(const char* command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

void add_feasibility(json& doc, const AgentSpec& spec, const EnabledGoals& enabled) {
  doc["enabled"] = ids(enabled.goals);
  json excluded = json::array();
  for (const auto& [goal, ex] : enabled.excluded) {
    json shortfalls = json::array();
    for (const auto& s : ex.shortfalls) {
      shortfalls.push_back({{"resource", s.resource.str()},
                            {"needed", quantity_json(s.needed)},
                            {"available", quantity_json(s.available)}});
    }
    excluded.push_back({{"goal", goal.str()},
                        {"reason", ex.reason == ExclusionReason::NoApplicablePlan
                                       ? "no_applicable_plan"
                                       : "insufficient_resources"},
                        {"shortfalls", std::move(shortfalls)}});
  }
  doc["excluded"] = std::move(excluded);
  json warnings = json::array();
  for (const auto& w : spec.warnings) {
    warnings.push_back({{"kind", "missing_resource"},
                        {"resource", w.resource.str()},
                        {"owner", w.owner},
                        {"message", w.message}});
  }
  doc["warnings"] = std::move(warnings);
}

void add_detection(json& doc, const IncompatibilityReport& report) {
  json sets = json::array();
  for (const auto& s : report.sets) {
    sets.push_back({{"resource", s.resource().str()},
                    {"goals", ids(s.goals())},
                    {"total_need", quantity_json(s.total_need())},
                    {"available", quantity_json(s.available())}});
  }
  doc["conflict_sets"] = std::move(sets);
  doc["incompatible_goals"] = ids(report.incompatible_goals);
  doc["kind"] = to_string(report.kind);
}

json framework_doc(const GoalFramework& gf) {
  json pairs = json::array();
  for (const auto& p : gf.incompatibility()) pairs.push_back({p.first().str(), p.second().str()});
  json defeat_edges = json::array();
  for (const auto& a : gf.goals()) {
    for (const auto& b : gf.neighbors(a)) {
      if (defeats(gf, a, b)) defeat_edges.push_back({a.str(), b.str()});
    }
  }
  json worth = json::object();
  for (const auto& [g, w] : gf.worth_table()) worth[g.str()] = w;
  return {{"goals", ids(gf.goals())},
          {"incompatibility", std::move(pairs)},
          {"defeats", std::move(defeat_edges)},
          {"worth", std::move(worth)}};
}

json resolution_doc(const Resolution& res) {
  json audit = json::array();
  for (const auto& rec : res.audit) {
    json entry = {{"goal", rec.goal.str()},
                  {"decision", to_string(rec.decision)},
                  {"reason", to_string(rec.reason)},
                  {"more_valuable", ids(rec.more_valuable)},
                  {"less_valuable", ids(rec.less_valuable)}};
    if (!rec.residual.empty()) entry["residual"] = amounts(rec.residual);
    if (rec.short_resource) entry["short_resource"] = rec.short_resource->str();
    if (rec.overtook_more_valuable) entry["overtook_more_valuable"] = true;
    audit.push_back(std::move(entry));
  }
  json doc = {{"strategy", to_string(res.strategy)},
              {"consistent_goals", ids(res.consistent_goals)},
              {"audit", std::move(audit)}};
  if (res.semantics) {
    json exts = json::array();
    for (const auto& e : res.extensions) exts.push_back(ids(e));
    doc["semantics"] = to_string(*res.semantics);
    doc["extensions"] = std::move(exts);
  }
  return doc;
}

}  // namespace

AgentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open spec file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading spec file '" + path.string() + "'");
  return parse_spec(buf.str());
}

nlohmann::json cmd_feasibility(const AgentSpec& spec) {
  json doc = header("feasibility");
  add_feasibility(doc, spec, eval_resources(spec));
  return doc;
}

nlohmann::json cmd_detect(const AgentSpec& spec) {
  json doc = header("detect");
  const auto enabled = eval_resources(spec);
  add_feasibility(doc, spec, enabled);
  add_detection(doc, resource_incom(spec, enabled));
  return doc;
}

nlohmann::json cmd_solve(const AgentSpec& spec, const SolveOptions& options) {
  json doc = header("solve");
  const auto enabled = eval_resources(spec);
  const auto report = resource_incom(spec, enabled);
  add_feasibility(doc, spec, enabled);
  add_detection(doc, report);

  Resolution res;
  if (options.strategy == Strategy::Argumentation) {
    res = solve_argumentation(spec, enabled, report, options.semantics, options.max_framework);
    doc["framework"] = framework_doc(build_framework(report, spec.worth_table()));
  } else {
    res = solve_algorithmic(spec, enabled, report, options.tiebreak);
    doc["tiebreak"] = options.tiebreak.to_string();
  }
  doc["resolution"] = resolution_doc(res);
  return doc;
}

std::string cmd_export_af(const AgentSpec& spec) {
  const auto enabled = eval_resources(spec);
  const auto report = resource_incom(spec, enabled);
  return to_dot(build_framework(report, spec.worth_table()));
}

nlohmann::json cmd_oracle(const AgentSpec& spec) {
  json doc = header("oracle");
  const GoalSet enabled = oracle::enabled_by_definition(spec);
  doc["enabled"] = ids(enabled);

  json groups = json::array();
  std::vector<GoalSet> families;
  for (const auto& g : oracle::conflict_groups(spec, enabled)) {
    groups.push_back({{"resource", g.resource.str()},
                      {"goals", ids(g.goals)},
                      {"total_need", quantity_json(g.total_need)},
                      {"available", quantity_json(g.available)}});
    families.push_back(g.goals);
  }
  doc["conflict_sets"] = std::move(groups);

  const auto feasible = oracle::enumerate_feasible(spec, enabled);
  json maximal = json::array();
  for (const auto& s : feasible.maximal) maximal.push_back(ids(s));
  json best = json::array();
  for (const auto& s : feasible.best_worth) best.push_back(ids(s));
  doc["feasible_count"] = feasible.feasible.size();
  doc["maximal_feasible"] = std::move(maximal);
  doc["best_worth"] = std::move(best);
  doc["best_total_worth"] = feasible.best_total;

  const auto gf = build_framework(std::span<const GoalSet>(families), spec.worth_table());
  if (gf.size() <= oracle::kSemanticsCap) {
    const auto sem = oracle::semantics_by_definition(gf);
    json preferred = json::array();
    for (const auto& e : sem.preferred) preferred.push_back(ids(e));
    doc["grounded"] = ids(sem.grounded);
    doc["preferred"] = std::move(preferred);
    doc["complete_count"] = sem.complete.size();
    doc["admissible_count"] = sem.admissible.size();
  }
  return doc;
}

std::string render_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

nlohmann::json validation_errors(const ValidationError& err) {
  json issues = json::array();
  for (const auto& issue : err.issues()) {
    issues.push_back({{"kind", to_string(issue.kind)},
                      {"subject", issue.subject},
                      {"message", issue.message}});
  }
  return {{"schema_version", kSchemaVersion}, {"errors", std::move(issues)}};
}

namespace {

std::string join(const json& arr) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
    first = false;
  }
  return out + "}";
}

std::string number(const json& v) { return v.dump(); }

}  // namespace

std::string render_text(const nlohmann::json& doc) {
  std::ostringstream os;
  if (doc.contains("errors")) {
    for (const auto& e : doc["errors"]) {
      os << e["kind"].get<std::string>() << " [" << e["subject"].get<std::string>()
         << "]: " << e["message"].get<std::string>() << "\n";
    }
    return os.str();
  }
  if (doc.contains("enabled")) os << "enabled: " << join(doc["enabled"]) << "\n";
  if (doc.contains("excluded")) {
    for (const auto& ex : doc["excluded"]) {
      os << "excluded " << ex["goal"].get<std::string>() << ": " << ex["reason"].get<std::string>();
      for (const auto& s : ex["shortfalls"]) {
        os << " (" << s["resource"].get<std::string>() << " needs " << number(s["needed"])
           << " > " << number(s["available"]) << ")";
      }
      os << "\n";
    }
  }
  if (doc.contains("warnings")) {
    for (const auto& w : doc["warnings"]) os << "warning: " << w["message"].get<std::string>() << "\n";
  }
  if (doc.contains("conflict_sets")) {
    for (const auto& s : doc["conflict_sets"]) {
      os << "conflict on " << s["resource"].get<std::string>() << ": " << join(s["goals"])
         << " need " << number(s["total_need"]) << " > " << number(s["available"]) << "\n";
    }
  }
  if (doc.contains("kind")) os << "incompatibility: " << doc["kind"].get<std::string>() << "\n";
  if (doc.contains("resolution")) {
    const auto& res = doc["resolution"];
    os << "strategy: " << res["strategy"].get<std::string>() << "\n";
    if (res.contains("semantics")) {
      os << "semantics: " << res["semantics"].get<std::string>() << "\n";
      for (const auto& e : res["extensions"]) os << "extension: " << join(e) << "\n";
    }
    for (const auto& rec : res["audit"]) {
      os << "  " << rec["goal"].get<std::string>() << " " << rec["decision"].get<std::string>()
         << " (" << rec["reason"].get<std::string>();
      if (rec.contains("short_resource")) os << " on " << rec["short_resource"].get<std::string>();
      if (rec.contains("overtook_more_valuable")) os << ", overtook a more valuable goal";
      os << ")\n";
    }
    os << "consistent goals: " << join(res["consistent_goals"]) << "\n";
  }
  if (doc.contains("maximal_feasible")) {
    for (const auto& s : doc["maximal_feasible"]) os << "maximal feasible: " << join(s) << "\n";
    for (const auto& s : doc["best_worth"]) os << "best worth: " << join(s) << "\n";
  }
  if (doc.contains("grounded")) {
    os << "grounded: " << join(doc["grounded"]) << "\n";
    for (const auto& e : doc["preferred"]) os << "preferred: " << join(e) << "\n";
  }
  return os.str();
}

}  // namespace goal_arbiter::cli
