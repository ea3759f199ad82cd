#pragma once

// Command layer behind hdrtool: JSON in, ordered JSON report and exit code out.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace hdr::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, contract_violation = 2, undecided = 3, input_error = 4 };

struct RunConfig {
    std::string command;
    std::string input;  // JSON text
    std::optional<std::uint32_t> p;
    std::size_t guard_enum = 1000000;
    std::size_t guard_iter = 50;
    std::uint64_t seed = 42;
    std::size_t max_iter = 10;
};

struct RunResult {
    Json report;
    int exit_code = ok;
};

// Never throws: errors become a report with an "error" field.
RunResult run(const RunConfig& cfg);

std::string render_json(const Json& report);
std::string render_text(const Json& report);

// p must be an odd prime below 2^16
bool supported_prime(std::uint64_t p);

}  // namespace hdr::cli
