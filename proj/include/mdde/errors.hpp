#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdde {

/// Base class of all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error while parsing an expression string.
/// Positions are 1-based; `offset` is the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset, int line, int column,
               std::vector<std::string> expected = {})
        : Error(format(message, line, column, expected)),
          offset(offset), line(line), column(column), expected(std::move(expected)) {}

    std::size_t offset;
    int line;
    int column;
    std::vector<std::string> expected;

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::vector<std::string>& expected) {
        std::string s = "parse error at " + std::to_string(line) + ":" +
                        std::to_string(column) + ": " + message;
        if (!expected.empty()) {
            s += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) s += ", ";
                s += expected[i];
            }
            s += ")";
        }
        return s;
    }
};

/// Domain error during expression evaluation (division by zero, log of a
/// nonpositive value, ...). Carries the offending subexpression in printed form.
class EvalError : public Error {
public:
    EvalError(const std::string& message, std::string subexpression, double t)
        : Error(message + " in '" + subexpression + "' at t=" + std::to_string(t)),
          subexpression(std::move(subexpression)), t(t) {}

    std::string subexpression;
    double t;
};

/// Query outside a function's domain, or an invalid interval (a > b).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A piecewise function or integrator failed its construction-time checks.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// A problem failed validation; `violations` lists (field, rule) pairs.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::pair<std::string, std::string>> violations)
        : Error(format(violations)), violations(std::move(violations)) {}

    std::vector<std::pair<std::string, std::string>> violations;

private:
    static std::string format(const std::vector<std::pair<std::string, std::string>>& v) {
        std::string s = "problem validation failed:";
        for (const auto& [field, rule] : v) s += "\n  " + field + ": " + rule;
        return s;
    }
};

/// A criterion's hypothesis does not hold; `hypothesis` names the violated one.
class HypothesisError : public Error {
public:
    HypothesisError(std::string hypothesis, const std::string& detail)
        : Error("hypothesis violated: " + hypothesis + " (" + detail + ")"),
          hypothesis(std::move(hypothesis)) {}

    std::string hypothesis;
};

/// Malformed configuration file; `path` is the JSON field path.
class ConfigError : public Error {
public:
    ConfigError(std::string path, const std::string& message)
        : Error("config field '" + path + "': " + message), path(std::move(path)) {}

    std::string path;
};

/// File could not be opened or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace mdde
