#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace loguncert {

// Result of a derivative-free box-constrained minimization.
struct SimplexResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    std::size_t evaluations = 0;
    // True when every executed start collapsed its simplex below tolerance
    // before the evaluation budget ran out.
    bool converged = false;
};

// Deterministic Nelder-Mead over the box [lower, upper], started at x0, with
// reflection 1, expansion 2, contraction 1/2, shrink 1/2. Candidates are
// clamped into the box before evaluation. Spends at most `budget` calls.
SimplexResult minimize(const std::function<double(const std::vector<double>&)>& fn,
                       const std::vector<double>& lower,
                       const std::vector<double>& upper,
                       const std::vector<double>& x0, std::size_t budget);

// Multi-start wrapper: start points drawn uniformly in the box from a seeded
// engine, each start capped at ceil(budget / n_starts) evaluations, run
// serially in start order so a repeated (seed, budget) reproduces the result
// exactly. Ties between starts resolve to the earliest start.
SimplexResult multi_start_minimize(
    const std::function<double(const std::vector<double>&)>& fn,
    const std::vector<double>& lower, const std::vector<double>& upper,
    std::size_t n_starts, std::uint64_t seed, std::size_t budget);

}  // namespace loguncert
