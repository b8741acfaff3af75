#pragma once

// The CLI commands as functions from a JSON request to a JSON report. Every
// report carries "schema": 1 and keeps wall-clock data under "timings".

#include <json.hpp>
#include <string>
#include <string_view>

namespace cibound {

enum class Outcome { Ok, Inconclusive, Violation };

struct CommandResult {
  nlohmann::json report;
  Outcome outcome = Outcome::Ok;
};

/// Commands: bound, smooth, stab, verify, tangent, disc, corpus. Request keys
/// mirror the CLI flags (e.g. {"n": 2, "d": 4, "kind": "projective"}).
/// Errors are thrown as cibound::Error.
CommandResult run_command(std::string_view name, const nlohmann::json& request);

// Directory for discriminant caches: $CIBOUND_CACHE_DIR or ./.cibound-cache.
std::string cache_directory();

}  // namespace cibound
