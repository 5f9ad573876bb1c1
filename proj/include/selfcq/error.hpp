#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace selfcq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by validate_atm; carries every violation found, not just the first.
class AtmValidationError : public Error {
public:
    explicit AtmValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class OffTapeError : public Error {
public:
    using Error::Error;
};

/// Search or step budget exhausted (CLI exit code 3).
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class QueryError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? msg
                          : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace selfcq
