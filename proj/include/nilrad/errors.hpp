#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilrad {

// Anything caused by bad user input: malformed text, values outside a
// function's domain, declarations that violate an invariant. The CLI maps
// these to exit code 1.
class UserError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public UserError {
public:
    SyntaxError(const std::string& message, std::size_t position,
                std::vector<std::string> expected = {})
        : UserError(message), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

class DomainError : public UserError {
public:
    using UserError::UserError;
};

class NotInvertible : public UserError {
public:
    using UserError::UserError;
};

class UnboundVariable : public UserError {
public:
    explicit UnboundVariable(const std::string& name)
        : UserError("unbound variable '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class AlgebraMismatch : public UserError {
public:
    using UserError::UserError;
};

class MalformedAlpha : public UserError {
public:
    using UserError::UserError;
};

class NotFirstOrder : public UserError {
public:
    using UserError::UserError;
};

class DuplicateName : public UserError {
public:
    using UserError::UserError;
};

// A broken internal invariant, never a user's fault. The CLI maps these to
// exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The ratio extraction in a derivative construction degenerated; signals a
// bug in the construction rather than bad input.
class RatioUndefined : public InternalError {
public:
    using InternalError::InternalError;
};

}  // namespace nilrad
