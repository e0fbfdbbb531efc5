#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bott {

// Base for all library errors. `code` is a stable machine-readable tag,
// `what()` the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Bad input: malformed text, invalid matrix, violated precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured resource cap was hit (orbit size, kernel size, level count).
class BudgetError : public Error {
public:
    using Error::Error;
};

[[noreturn]] inline void throw_domain(std::string code, const std::string& message) {
    throw DomainError(std::move(code), message);
}

[[noreturn]] inline void throw_budget(std::string code, const std::string& message) {
    throw BudgetError(std::move(code), message);
}

}  // namespace bott
