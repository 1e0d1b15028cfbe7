#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli
{
    /// Runs one invocation of the command-line tool. args excludes the program
    /// name. Exit codes: 0 success, 1 negative outcome, 2 input error.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
