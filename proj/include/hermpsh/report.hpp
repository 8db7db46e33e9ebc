#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hermpsh/counterexample.hpp"

namespace hermpsh {

inline constexpr std::string_view kVersion = "0.1.0";

/// Output of one CLI command. Serialization is deterministic; timings are
/// only emitted when explicitly requested.
struct Report {
    std::string command;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    std::vector<CheckResult> checks;
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::optional<std::uint64_t> seed;
    std::optional<nlohmann::ordered_json> timings;

    bool all_passed() const;
    nlohmann::ordered_json to_json() const;
    std::string dump() const;
    /// Plain-text rendering for terminals.
    std::string text() const;
};

/// "fnv1a64:<16 hex digits>" of the raw input bytes.
std::string input_digest(std::string_view text);

}  // namespace hermpsh
