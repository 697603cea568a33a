#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oddcut/errors.hpp"

namespace oddcut::cli {

// Exit taxonomy: 0 success, 1 bad input (unparsable args, unreadable files,
// malformed graph6), 2 well-formed input outside the solver's scope
// (bipartite/K4 graphs, k outside the guaranteed range, exhausted budgets,
// coloring types only guaranteed above the two-fifths threshold), 3 a broken
// internal invariant. Diagnostics go to the error stream only.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_scope = 2;
inline constexpr int exit_internal = 3;

// Maps a library error code onto the taxonomy above. Codes that a
// well-formed invocation can never trigger count as internal.
int exit_code_for(errc c);

// Entry point behind the oddcut binary: args is argv without the program
// name. Graphs are read from the file named by --in, or from `in` when the
// name is "-". Data is written to out, diagnostics to err, and the return
// value is the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace oddcut::cli
