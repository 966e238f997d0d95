#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "shiish/core.h"

namespace shiish::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_skipped = 3 };

/// "complete", "empty", "path", an inline edge list such as "1-2,2-3",
/// or a path to a JSON graph file {"n": int, "edges": [[i, j], ...]}.
/// Throws std::invalid_argument on malformed input or a size mismatch.
Graph parse_graph_spec(const std::string& spec, int n);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shiish::cli
