#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace backedge::cli {

enum Exit
{
    ok = 0,
    usage = 1,
    inexact = 2,
    verification_failed = 3
};

/// args excludes the program name.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace backedge::cli
