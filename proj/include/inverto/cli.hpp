#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace inverto::cli {

enum ExitStatus : int { kOk = 0, kDomainError = 1, kParseError = 2 };

struct CommandResult {
    int status = kOk;
    /// Human-readable output (or the error message when status != 0).
    std::string text;
    /// {"op", "input", "result", "witness"}; null on error.
    nlohmann::ordered_json json;
    /// Print JSON instead of text.
    bool want_json = false;
};

/// Runs one command; args exclude the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace inverto::cli
