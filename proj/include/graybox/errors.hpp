#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graybox {

/// Raised when an operation would have to enumerate more solutions than the
/// configured cap allows.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for the inputs.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed instance, solution or moves file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace graybox
