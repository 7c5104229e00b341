#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loguncert/functionals.hpp"
#include "loguncert/grid.hpp"
#include "loguncert/trial.hpp"

namespace loguncert {

// Registry of logarithmic uncertainty inequalities probed by this project.
enum class CaseId {
    hls,              // double-integral power kernel vs Lebesgue norm
    log_hls,          // log kernel vs mass entropy
    log_sobolev,      // entropy vs gradient, scale parameter a
    hausdorff_young,  // spectral L4 vs physical L4/3
    beckner,          // entropy sum in both domains
    sobolev_log,      // entropy vs spectral log moment
    hardy_log,        // physical log moment vs spectral log moment
    stein_weiss_log,  // interpolation sweep between the previous two
    rubin,            // weighted Lp vs smoothness norm, ratio-form constant
    main,             // entropy plus physical log moment vs spectral log moment
};

// Stable kebab-case names used in reports and output files.
std::string case_name(CaseId id);

enum class ConstantStatus { exact, bound, unknown };
enum class Normalization { none, unit_l2, unit_mass };

struct InequalityCase {
    CaseId id = CaseId::main;
    InequalityParams params;
    Normalization normalization = Normalization::none;
    bool require_nonnegative = false;
    std::vector<std::string> assumptions;  // human-readable preconditions
    // For unknown-constant cases the rhs omits the constant entirely.
    std::function<double(const RadialProfile&)> lhs, rhs;
    ConstantStatus constant_status = ConstantStatus::exact;
    double constant_value = 0.0;  // meaningful for exact and bound
    std::string anchor;           // one-line statement of the inequality
};

// Builds the registry entry for a case from its parameters (d always; lambda,
// a, t, s, p where the case uses them). Throws on out-of-range parameters.
InequalityCase make_case(CaseId id, const InequalityParams& params);

struct GapReport {
    std::string case_name;
    std::string descriptor;  // which trial profile was evaluated
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double slack = 0.0;  // rhs - lhs, meaningful only when valid
    bool assumptions_passed = false;
    std::string assumption_check;  // "pass" or what failed
    bool constant_included = true;  // false when the case constant is unknown
    bool valid = false;             // assumptions passed and values finite
};

// Evaluates both sides on the profile, auto-normalizing where the case
// demands a unit norm. Assumption failures and evaluation errors are folded
// into the report, never thrown.
GapReport evaluate_gap(const InequalityCase& c, const RadialProfile& f,
                       const std::string& descriptor = "profile");

// Trial-shape family searched by the constant estimator.
enum class FamilySpec {
    gaussian_only,  // single width parameter
    wide,           // two-gaussian mix with a polynomial tilt, 4 parameters
};

struct ConstantEstimate {
    std::string case_name;
    double c_emp = 0.0;           // best lhs - rhs, or best lhs/rhs ratio
    bool ratio_form = false;      // true for the multiplicative-constant case
    std::vector<double> witness;  // family parameters attaining c_emp
    std::string witness_descriptor;
    std::size_t evaluations = 0;
    std::uint64_t seed = 0;
    bool budget_exhausted = false;  // search stopped before convergence
};

// Empirical lower bound for the case's constant: seeded multi-start simplex
// search over the family, maximizing lhs - rhs (additive constants) or
// lhs / rhs (the ratio-form case). Deterministic given (seed, budget, grid).
// Requires a case whose constant is unknown or ratio-form.
ConstantEstimate estimate_constant(const InequalityCase& c, FamilySpec family,
                                   const GridPtr& grid, std::size_t budget,
                                   std::uint64_t seed);

// Evaluates every (case, trial) pair on the grid. Per-item failures become
// failed reports; the scan itself never throws.
std::vector<GapReport> scan_suite(const std::vector<InequalityCase>& cases,
                                  const std::vector<TrialSpec>& trials,
                                  const GridPtr& grid);

// Worst slack per case over the valid rows of a scan.
struct SlackSummary {
    std::string case_name;
    double min_slack = 0.0;
    std::size_t valid_rows = 0;
    bool constant_included = true;
};
std::vector<SlackSummary> minimum_slack(const std::vector<GapReport>& reports);

// The registry for one dimension: kernel, entropy, spectral, sweep, and
// ratio-form cases with per-dimension default parameters.
std::vector<InequalityCase> standard_suite(int d);

// Mixed bag of decaying shapes, including sign-changing ones that exercise
// the assumption checks.
std::vector<TrialSpec> standard_trials(int d);

// Interpolation-sweep cases at the given t values.
std::vector<InequalityCase> stein_weiss_sweep(int d, const std::vector<double>& ts);

}  // namespace loguncert
