#pragma once

#include <stdexcept>
#include <string>

namespace riskload {

/// Rejected input: malformed data, domain violations, inconsistent configuration.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: infeasible constraint set or a non-convergent solve.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form allocation landed on a boundary; callers must fall back to
/// the numeric solver.
class CornerSolutionError : public NumericError {
public:
    explicit CornerSolutionError(const std::string& what) : NumericError(what) {}
};

} // namespace riskload
