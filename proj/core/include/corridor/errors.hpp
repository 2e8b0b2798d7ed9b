#pragma once

#include <stdexcept>
#include <string>

namespace corridor {

/// (alpha, beta) pair outside the supported case list.
struct UnsupportedLaw : std::invalid_argument {
    explicit UnsupportedLaw(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Kernel constants have no finite closed form for the requested law
/// (|beta| = 1 belongs to the totally skewed case with its own formula).
struct ConstantsUnavailable : std::invalid_argument {
    explicit ConstantsUnavailable(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Diagonal inner integral diverges (x = y with alpha <= 1).
struct DivergentDiagonal : std::domain_error {
    explicit DivergentDiagonal(const std::string& msg) : std::domain_error(msg) {}
};

/// Iterative eigensolver failed to reach tolerance within its iteration cap.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

/// Linear system conditioning beyond the trusted range.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace corridor
