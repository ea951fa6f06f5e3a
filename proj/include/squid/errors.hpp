#pragma once

#include <stdexcept>
#include <string>

namespace squid {

/// Base class for all squid-specific failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Aerodynamic center is undefined (zero total normal force).
class DegenerateFlow : public Error {
public:
    explicit DegenerateFlow(const std::string& msg) : Error(msg) {}
};

/// Requested a stability-dependent quantity for a statically unstable setup.
class UnstableConfiguration : public Error {
public:
    explicit UnstableConfiguration(const std::string& msg) : Error(msg) {}
};

/// Vehicle cannot hover within the given propulsion limits.
class OverCapacity : public Error {
public:
    explicit OverCapacity(const std::string& msg) : Error(msg) {}
};

/// Integrator produced a non-finite state component.
class NonFiniteState : public Error {
public:
    explicit NonFiniteState(const std::string& msg) : Error(msg) {}
};

/// Config text could not be parsed. line is 1-based, 0 if not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Config contained a key that is not part of the schema.
class UnknownKey : public ParseError {
public:
    UnknownKey(const std::string& key, int line)
        : ParseError("unknown key '" + key + "'", line), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// A parsed value violates a domain invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

} // namespace squid
