#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

// Domain errors thrown by the invariant computations. All derive from
// std::invalid_argument / std::runtime_error so callers can catch broadly.

struct NotAKnot : std::invalid_argument {
    explicit NotAKnot(const std::string& msg) : std::invalid_argument(msg) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ZeroEuler : std::invalid_argument {
    explicit ZeroEuler(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidFraction : std::invalid_argument {
    explicit InvalidFraction(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidPresentation : std::invalid_argument {
    explicit InvalidPresentation(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NonNegativeEuler : std::invalid_argument {
    explicit NonNegativeEuler(const std::string& msg) : std::invalid_argument(msg) {}
};

// A table-driven formula was asked for an input no published row covers.
struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

struct MagnitudeCapExceeded : std::invalid_argument {
    explicit MagnitudeCapExceeded(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ArithmeticOverflow : std::overflow_error {
    explicit ArithmeticOverflow(const std::string& msg) : std::overflow_error(msg) {}
};

// Cross-module consistency check failed while assembling a report.
struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace pretzel
