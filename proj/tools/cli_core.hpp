#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lzbound/model.hpp"

namespace lzbound::cli {

// Parses "2", "1,2,5", "0:1:11" (linear) or "1:100:log:20" (log-spaced).
std::vector<double> parse_range(const std::string& text);

// Parses "A", "B,C", ...
std::vector<PathVariant> parse_paths(const std::string& text);

// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

// Full command-line entry point; returns the process exit code.
// 0 success, 1 validation failure, 2 usage error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lzbound::cli
