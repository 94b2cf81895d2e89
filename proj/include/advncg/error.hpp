#pragma once

#include <stdexcept>
#include <string>

namespace advncg {

enum class ErrorKind {
    InvalidArgument,
    InvalidTarget,   // self-loop or out-of-range node id
    CapExceeded,     // pair multiplicity above the configured cap
    NotOwner,        // agent tried to delete an edge it does not own
    BudgetExceeded,  // search space above the configured budget
    Precondition,    // operation precondition violated (e.g. not 2-edge-connected)
    Parse,           // malformed graph file / rational literal
    Infeasible,      // no valid solution exists
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, int line = 0)
        : std::runtime_error(msg), kind_(kind), line_(line) {}

    ErrorKind kind() const { return kind_; }
    // 1-based input line for parse errors, 0 otherwise
    int line() const { return line_; }

private:
    ErrorKind kind_;
    int line_;
};

} // namespace advncg
