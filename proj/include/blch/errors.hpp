#pragma once

#include <stdexcept>
#include <string>

namespace blch {

// Malformed textual input: DGA files, polynomial strings, selectors.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(format(msg, line, col)), line(line), col(col) {}

    int line;
    int col;

private:
    static std::string format(const std::string& msg, int line, int col) {
        if (line <= 0) return msg;
        std::string where = "line " + std::to_string(line);
        if (col > 0) where += ", col " + std::to_string(col);
        return where + ": " + msg;
    }
};

// A documented precondition was violated: bad dimensions, unknown
// generator, cap exceeded.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The computation detected an inconsistency in otherwise well-formed data:
// d^2 != 0, dimension criterion out of range, decision methods disagreeing.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace blch
