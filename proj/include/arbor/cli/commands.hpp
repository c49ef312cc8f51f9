#pragma once

#include <ostream>

#include <json.hpp>

#include "arbor/cli/config.hpp"
#include "arbor/error.hpp"

namespace arbor::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitPass;
  nlohmann::ordered_json output;
};

// Each command returns its JSON document. Library errors propagate.
CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_enumerate(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_reproduce(const RunConfig& config);
CommandResult cmd_search_detmf(const RunConfig& config);

// Dispatches on config.command and converts library errors into an error
// document with the matching exit code.
CommandResult run_command(const RunConfig& config);
int exit_code_for(ErrorKind kind);
nlohmann::ordered_json error_json(const Error& e);

// Full command line: parses, runs, writes JSON to out (or --out) and
// diagnostics to err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
