#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace ga = goal_arbiter;
namespace cli = goal_arbiter::cli;

namespace {

struct Common {
  std::string spec_path;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("spec", common.spec_path, "Agent spec file (JSON)")->required();
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

void emit(const nlohmann::json& doc, const std::string& format) {
  std::cout << (format == "text" ? cli::render_text(doc) : cli::render_json(doc));
}

// Explicit --tiebreak wins, then GOAL_ARBITER_SEED, then ordering by id.
ga::TieBreak pick_tiebreak(const std::string& flag) {
  if (!flag.empty()) {
    if (auto tb = ga::TieBreak::parse(flag)) return *tb;
    throw CLI::ValidationError("--tiebreak", "expected 'id' or 'seed:N', got '" + flag + "'");
  }
  if (const char* env = std::getenv(cli::kSeedEnvVar); env != nullptr && *env != '\0') {
    if (auto tb = ga::TieBreak::parse(std::string("seed:") + env)) return *tb;
    throw CLI::ValidationError(cli::kSeedEnvVar, std::string("not an unsigned integer: ") + env);
  }
  return ga::TieBreak::by_id();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects resource conflicts among an agent's goals and selects the goals to keep"};
  app.require_subcommand(1);

  Common common;

  auto* feasibility = app.add_subcommand("feasibility", "List goals that are individually affordable");
  add_common(feasibility, common);

  auto* detect = app.add_subcommand("detect", "Report per-resource conflict sets and their kind");
  add_common(detect, common);

  std::string strategy = "algorithmic";
  std::string semantics = "auto";
  std::string tiebreak;
  std::size_t max_framework = ga::kDefaultEnumerationCap;
  auto* solve = app.add_subcommand("solve", "Select the consistent goals to keep pursuing");
  add_common(solve, common);
  solve->add_option("--strategy", strategy, "Resolution strategy")
      ->check(CLI::IsMember({"algorithmic", "argumentation"}));
  solve->add_option("--semantics", semantics, "Extension semantics for argumentation")
      ->check(CLI::IsMember({"grounded", "preferred", "auto"}));
  solve->add_option("--tiebreak", tiebreak, "Equal-worth ordering: id | seed:N");
  solve->add_option("--max-framework", max_framework,
                    "Largest framework for preferred-extension enumeration (<= 63)");

  std::string dot_out;
  auto* export_af = app.add_subcommand("export-af", "Write the defeat graph as Graphviz DOT");
  export_af->add_option("spec", common.spec_path, "Agent spec file (JSON)")->required();
  export_af->add_option("--out", dot_out, "Output .dot file (stdout if omitted)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference results (debugging)");
  add_common(oracle, common);
  oracle->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kValidationError;
  }

  try {
    const ga::AgentSpec spec = cli::load_spec(common.spec_path);
    if (feasibility->parsed()) {
      emit(cli::cmd_feasibility(spec), common.format);
    } else if (detect->parsed()) {
      emit(cli::cmd_detect(spec), common.format);
    } else if (solve->parsed()) {
      cli::SolveOptions opts;
      opts.strategy = *ga::parse_strategy(strategy);
      opts.semantics = *ga::parse_semantics(semantics);
      opts.tiebreak = pick_tiebreak(tiebreak);
      opts.max_framework = max_framework;
      emit(cli::cmd_solve(spec, opts), common.format);
    } else if (export_af->parsed()) {
      const std::string dot = cli::cmd_export_af(spec);
      if (dot_out.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(dot_out, std::ios::binary);
        if (!(out << dot)) throw cli::IoError("cannot write '" + dot_out + "'");
      }
    } else if (oracle->parsed()) {
      emit(cli::cmd_oracle(spec), common.format);
    }
  } catch (const cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kIoError;
  } catch (const ga::ValidationError& e) {
    std::cerr << cli::render_text(cli::validation_errors(e));
    return cli::kValidationError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kValidationError;
  } catch (const ga::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kLimitError;
  }
  return cli::kOk;
}
