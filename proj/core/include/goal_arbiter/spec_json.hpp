#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "goal_arbiter/model.hpp"

namespace goal_arbiter {

/// Structural decoding of an agent spec document. Collects every type error,
/// missing key and unknown key, then throws ValidationError if any were found.
///
/// Document shape:
///   resources: [{"id": str, "amount": num}]          required
///   beliefs:   [str]                                  optional
///   goals:     [{"id": str, "worth": num,
///                "requires"?: [{"id": str, "amount": num}]}]  required
///   plans:     [{"id": str, "goal": str, "context"?: [str],
///                "body"?: str, "requires": [...]}]   optional
RawSpec decode_spec(const nlohmann::json& doc);

/// Parses JSON text, decodes and validates it. Syntax errors are reported as
/// a ValidationError with a single Malformed issue.
AgentSpec parse_spec(std::string_view text);

/// JSON number for a quantity: an integer when it has no fractional part.
nlohmann::json quantity_json(Quantity q);

/// Encodes a spec in the same document shape decode_spec accepts.
nlohmann::json encode_spec(const AgentSpec& spec);

}  // namespace goal_arbiter
