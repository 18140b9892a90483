#pragma once

#include <stdexcept>
#include <string>

namespace lforge {

// Shared error taxonomy. Everything user-triggerable throws one of these;
// the CLI maps them onto exit codes (input -> 2, contour/precondition -> 3).

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& msg) : std::runtime_error(msg) {}
};

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContourViolation : std::runtime_error {
    explicit ContourViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct BalanceViolation : std::runtime_error {
    explicit BalanceViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct CentralCharacterViolation : std::runtime_error {
    explicit CentralCharacterViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lforge
