#pragma once

#include <stdexcept>
#include <string>

namespace ckalg {

// Raised for malformed input (DSL text, words, points, CLI arguments).
class InputError : public std::runtime_error {
public:
    InputError(const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                            std::to_string(col) + ": " + msg
                                      : msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_, col_;
};

// Raised when an operation's precondition does not hold.
class DomainError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ckalg
