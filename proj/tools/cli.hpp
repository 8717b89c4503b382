#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "shiftlr/gpairs.hpp"

namespace shiftlr::cli {

enum Exit { ok = 0, usage = 1, counterexample = 2 };

// Replacement data sources for the verify command; empty members mean the real computation.
struct Hooks {
    RowSource rows;
    CompositeFactory bij;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace shiftlr::cli
