#pragma once

#include <stdexcept>
#include <string>

namespace loguncert {

// Bad arguments, parameter ranges, malformed configs. Maps to exit code 2.
struct invalid_argument : std::runtime_error {
    explicit invalid_argument(const std::string& what) : std::runtime_error(what) {}
};

// Quadrature breakdown, failed convergence, violated runtime hypotheses.
// Maps to exit code 3.
struct numerical_failure : std::runtime_error {
    explicit numerical_failure(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invalid_argument(msg);
}

}  // namespace loguncert
