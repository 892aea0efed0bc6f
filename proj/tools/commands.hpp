#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "goal_arbiter/argue.hpp"
#include "goal_arbiter/model.hpp"
#include "goal_arbiter/ordering.hpp"
#include "goal_arbiter/resolve.hpp"

namespace goal_arbiter::cli {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kSeedEnvVar = "GOAL_ARBITER_SEED";

enum ExitCode : int { kOk = 0, kIoError = 1, kValidationError = 2, kLimitError = 3 };

class IoError : public Error {
public:
  using Error::Error;
};

/// Reads and validates a spec file. Throws IoError or ValidationError.
AgentSpec load_spec(const std::filesystem::path& path);

struct SolveOptions {
  Strategy strategy = Strategy::Algorithmic;
  Semantics semantics = Semantics::Auto;
  TieBreak tiebreak = TieBreak::by_id();
  std::size_t max_framework = kDefaultEnumerationCap;
};

// Each command composes the library calls and returns the output document;
// nothing here adds selection logic of its own.
nlohmann::json cmd_feasibility(const AgentSpec& spec);
nlohmann::json cmd_detect(const AgentSpec& spec);
nlohmann::json cmd_solve(const AgentSpec& spec, const SolveOptions& options);
std::string cmd_export_af(const AgentSpec& spec);
nlohmann::json cmd_oracle(const AgentSpec& spec);

/// Human-readable rendering of any command's output document.
std::string render_text(const nlohmann::json& doc);

/// Canonical serialization used for --format json (sorted keys, 2-space indent).
std::string render_json(const nlohmann::json& doc);

nlohmann::json validation_errors(const ValidationError& err);

}  // namespace goal_arbiter::cli
