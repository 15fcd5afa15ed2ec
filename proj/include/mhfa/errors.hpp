// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mhfa {

// Caller handed us something outside an operation's contract.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A machine description violates its structural invariants.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input could not be parsed; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

// A Turing machine broke one of the run conventions it is assumed to obey.
struct ConformanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power-set determinization found co-reachable states proposing different
// head moves; the data-independence precondition was not actually met.
struct ObliviousnessViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mhfa
