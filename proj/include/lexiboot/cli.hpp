#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "lexiboot/game.hpp"

namespace lexiboot::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kNotFrozen = 2 };

// Runs the command line `args` (without the program name). Reports go to `out`,
// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

// Merges `key value` / `key=value` lines from a config file into the argument list,
// skipping keys already given on the command line. Throws ConfigError if unreadable.
std::vector<std::string> merge_config_file(const std::vector<std::string>& args,
                                           const std::string& path);

// Written next to every output file as <file>.manifest.json.
struct RunManifest {
    std::string tool_version;
    std::string command;
    std::vector<std::string> args;  // full resolved argument list, replayable
    GameConfig config;
    std::uint64_t n_samples = 0;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;
    std::string started;
    std::string finished;
};

nlohmann::json to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const nlohmann::json& j);

// Default worker count: LEXIBOOT_WORKERS if set and positive, else hardware threads.
unsigned default_workers();

}  // namespace lexiboot::cli
