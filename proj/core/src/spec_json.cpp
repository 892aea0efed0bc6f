#include "goal_arbiter/spec_json.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <utility>

namespace goal_arbiter {

namespace {

using nlohmann::json;

class Decoder {
public:
  explicit Decoder(std::vector<Issue>& issues) : issues_(issues) {}

  RawSpec run(const json& doc) {
    RawSpec raw;
    if (!doc.is_object()) {
      malformed("$", "document must be a JSON object");
      return raw;
    }
    reject_unknown(doc, "$", {"resources", "beliefs", "goals", "plans"});

    if (const json* arr = array_at(doc, "resources", "$", true)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        if (auto a = amount((*arr)[i], "$.resources[" + std::to_string(i) + "]")) {
          raw.resources.push_back(std::move(*a));
        }
      }
    }
    if (const json* arr = array_at(doc, "beliefs", "$", false)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        if (auto s = string_value((*arr)[i], "$.beliefs[" + std::to_string(i) + "]")) {
          raw.beliefs.push_back(std::move(*s));
        }
      }
    }
    if (const json* arr = array_at(doc, "goals", "$", true)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        goal((*arr)[i], "$.goals[" + std::to_string(i) + "]", raw);
      }
    }
    if (const json* arr = array_at(doc, "plans", "$", false)) {
      for (std::size_t i = 0; i < arr->size(); ++i) {
        plan((*arr)[i], "$.plans[" + std::to_string(i) + "]", raw);
      }
    }
    return raw;
  }

private:
  void malformed(std::string path, std::string message) {
    issues_.push_back({IssueKind::Malformed, std::move(path), std::move(message)});
  }

  void reject_unknown(const json& obj, const std::string& path,
                      std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : obj.items()) {
      bool found = false;
      for (auto k : known) found = found || k == key;
      if (!found) {
        issues_.push_back({IssueKind::UnknownKey, path + "." + key, "unknown key '" + key + "'"});
      }
    }
  }

  bool require_object(const json& node, const std::string& path) {
    if (node.is_object()) return true;
    malformed(path, "expected an object");
    return false;
  }

  const json* member(const json& obj, const char* key, const std::string& path, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) malformed(path + "." + key, "missing required key");
      return nullptr;
    }
    return &*it;
  }

  const json* array_at(const json& obj, const char* key, const std::string& path, bool required) {
    const json* node = member(obj, key, path, required);
    if (node == nullptr) return nullptr;
    if (!node->is_array()) {
      malformed(path + "." + key, "expected an array");
      return nullptr;
    }
    return node;
  }

  std::optional<std::string> string_value(const json& node, const std::string& path) {
    if (!node.is_string()) {
      malformed(path, "expected a string");
      return std::nullopt;
    }
    return node.get<std::string>();
  }

  std::optional<double> number_value(const json& node, const std::string& path) {
    if (!node.is_number()) {
      malformed(path, "expected a number");
      return std::nullopt;
    }
    return node.get<double>();
  }

  std::optional<std::string> string_at(const json& obj, const char* key, const std::string& path,
                                       bool required) {
    const json* node = member(obj, key, path, required);
    if (node == nullptr) return std::nullopt;
    return string_value(*node, path + "." + key);
  }

  std::optional<RawAmount> amount(const json& node, const std::string& path) {
    if (!require_object(node, path)) return std::nullopt;
    reject_unknown(node, path, {"id", "amount"});
    auto id = string_at(node, "id", path, true);
    const json* qty = member(node, "amount", path, true);
    auto value = qty ? number_value(*qty, path + ".amount") : std::nullopt;
    if (!id || !value) return std::nullopt;
    return RawAmount{std::move(*id), *value};
  }

  std::vector<RawAmount> amounts(const json& arr, const std::string& path) {
    std::vector<RawAmount> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (auto a = amount(arr[i], path + "[" + std::to_string(i) + "]")) out.push_back(std::move(*a));
    }
    return out;
  }

  void goal(const json& node, const std::string& path, RawSpec& raw) {
    if (!require_object(node, path)) return;
    reject_unknown(node, path, {"id", "worth", "requires"});
    RawGoal g;
    auto id = string_at(node, "id", path, true);
    const json* worth = member(node, "worth", path, true);
    auto worth_value = worth ? number_value(*worth, path + ".worth") : std::nullopt;
    if (const json* reqs = array_at(node, "requires", path, false)) {
      g.requirements = amounts(*reqs, path + ".requires");
    }
    if (!id || !worth_value) return;
    g.id = std::move(*id);
    g.worth = *worth_value;
    raw.goals.push_back(std::move(g));
  }

  void plan(const json& node, const std::string& path, RawSpec& raw) {
    if (!require_object(node, path)) return;
    reject_unknown(node, path, {"id", "goal", "context", "body", "requires"});
    RawPlan p;
    auto id = string_at(node, "id", path, true);
    auto goal_ref = string_at(node, "goal", path, true);
    if (const json* ctx = array_at(node, "context", path, false)) {
      for (std::size_t i = 0; i < ctx->size(); ++i) {
        if (auto s = string_value((*ctx)[i], path + ".context[" + std::to_string(i) + "]")) {
          p.context.push_back(std::move(*s));
        }
      }
    }
    if (auto body = string_at(node, "body", path, false)) p.body = std::move(*body);
    if (const json* reqs = array_at(node, "requires", path, true)) {
      p.requirements = amounts(*reqs, path + ".requires");
    }
    if (!id || !goal_ref) return;
    p.id = std::move(*id);
    p.goal = std::move(*goal_ref);
    raw.plans.push_back(std::move(p));
  }

  std::vector<Issue>& issues_;
};

json encode_amounts(const std::map<ResourceId, Quantity>& amounts) {
  json arr = json::array();
  for (const auto& [res, qty] : amounts) {
    arr.push_back({{"id", res.str()}, {"amount", quantity_json(qty)}});
  }
  return arr;
}

}  // namespace

RawSpec decode_spec(const nlohmann::json& doc) {
  std::vector<Issue> issues;
  RawSpec raw = Decoder(issues).run(doc);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return raw;
}

AgentSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError({{IssueKind::Malformed, "$", e.what()}});
  }
  // Structural problems skip the offending entry; the rest is still
  // validated so that every violation is reported together.
  std::vector<Issue> issues;
  RawSpec raw = Decoder(issues).run(doc);
  try {
    AgentSpec spec = validate_spec(raw);
    if (issues.empty()) return spec;
  } catch (const ValidationError& e) {
    issues.insert(issues.end(), e.issues().begin(), e.issues().end());
  }
  throw ValidationError(std::move(issues));
}

nlohmann::json quantity_json(Quantity q) {
  if (q.micros() % Quantity::kScale == 0) return json(q.micros() / Quantity::kScale);
  return json(q.to_double());
}

nlohmann::json encode_spec(const AgentSpec& spec) {
  json doc = json::object();
  doc["resources"] = encode_amounts(spec.resources);
  doc["beliefs"] = json(std::vector<std::string>(spec.beliefs.begin(), spec.beliefs.end()));
  json goals = json::array();
  for (const auto& [id, g] : spec.goals) {
    json entry = {{"id", id.str()}, {"worth", g.worth}};
    if (g.inline_requirements) entry["requires"] = encode_amounts(*g.inline_requirements);
    goals.push_back(std::move(entry));
  }
  doc["goals"] = std::move(goals);
  json plans = json::array();
  for (const auto& p : spec.plans) {
    json context = json::array();
    for (const auto& lit : p.context) context.push_back(lit.to_string());
    plans.push_back({{"id", p.id.str()},
                     {"goal", p.goal.str()},
                     {"context", std::move(context)},
                     {"body", p.body},
                     {"requires", encode_amounts(p.requirements)}});
  }
  doc["plans"] = std::move(plans);
  return doc;
}

}  // namespace goal_arbiter
