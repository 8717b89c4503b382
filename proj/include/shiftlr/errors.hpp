#pragma once

#include <stdexcept>
#include <string>

namespace shiftlr {

// Malformed partition or skew shape.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tableau violates the class an operation requires.
struct TableauError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain of a bijection or algorithm.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Too few variables for a polynomial computation.
struct DimensionError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace shiftlr
