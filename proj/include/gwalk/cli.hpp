#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwalk/io.hpp"

namespace gwalk::cli {

/// Parsed problem file:
///
///     # comment
///     ring x, y
///     from degrevlex
///     to lex
///     x^2 - y^3
///     [x^3] - y^2 - x
///
/// `order`, `from` and `to` lines are optional. Every other non-empty line is a
/// generator; a bracketed term marks it.
struct ProblemFile {
    std::vector<std::string> variables;
    std::optional<std::string> order;
    std::optional<std::string> from;
    std::optional<std::string> to;
    std::vector<std::string> generators;
    std::vector<std::size_t> generator_lines;

    Ring ring() const { return Ring(variables); }
};

ProblemFile parse_problem(std::string_view text);

/// Runs one invocation (`args` excludes the program name). Results go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 2 parse/validation, 3 step cap
/// or internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwalk::cli
