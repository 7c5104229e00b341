#include "loguncert/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "loguncert/constants.hpp"
#include "loguncert/errors.hpp"
#include "loguncert/simplex.hpp"
#include "loguncert/spectral.hpp"

namespace loguncert {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// int |fhat|^2 log|fhat| over the frequency domain.
double spectral_entropy(const RadialProfile& f) {
    const SpectralProfile F = fourier_radial(f);
    double acc = 0.0;
    for (std::size_t i = 0; i < F.values.size(); ++i) {
        const double v = F.values[i];
        if (v != 0.0) acc += F.grid->weights[i] * v * v * std::log(std::abs(v));
    }
    return acc;
}

std::string format_params(const char* fmt, double a, double b = 0.0,
                          double c = 0.0, double e = 0.0, double g = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, fmt, a, b, c, e, g);
    return buf;
}

}  // namespace

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::hls: return "hls";
        case CaseId::log_hls: return "log-hls";
        case CaseId::log_sobolev: return "log-sobolev";
        case CaseId::hausdorff_young: return "hausdorff-young";
        case CaseId::beckner: return "beckner";
        case CaseId::sobolev_log: return "sobolev-log";
        case CaseId::hardy_log: return "hardy-log";
        case CaseId::stein_weiss_log: return "stein-weiss-log";
        case CaseId::rubin: return "rubin";
        case CaseId::main: return "main";
    }
    return "unknown";
}

InequalityCase make_case(CaseId id, const InequalityParams& params) {
    const int d = params.d;
    require(d >= 1, "dimension must be at least 1");
    InequalityCase c;
    c.id = id;
    c.params = params;
    switch (id) {
        case CaseId::hls: {
            const double lambda = params.lambda;
            require(lambda > 0.0 && lambda < d,
                    "kernel power must satisfy 0 < lambda < d");
            const double p = 2.0 * d / (2.0 * d - lambda);
            const double k = hls_constant(d, lambda);
            c.require_nonnegative = true;
            c.assumptions = {"f >= 0"};
            c.lhs = [lambda](const RadialProfile& f) { return hls_energy(f, lambda); };
            c.rhs = [k, p](const RadialProfile& f) {
                const double n = weighted_lp_norm(f, p, 0.0);
                return k * n * n;
            };
            c.constant_value = k;
            c.anchor =
                "int int f(x) f(y) / |x-y|^lambda <= k_lambda ||f||_{2d/(2d-lambda)}^2";
            break;
        }
        case CaseId::log_hls: {
            const double c0 = log_hls_constant(d);
            c.normalization = Normalization::unit_mass;
            c.require_nonnegative = true;
            c.assumptions = {"f >= 0", "||f||_1 = 1"};
            c.lhs = [](const RadialProfile& f) { return log_hls_energy(f); };
            c.rhs = [d, c0](const RadialProfile& f) {
                return mass_entropy(f) / d + c0;
            };
            c.constant_value = c0;
            c.anchor = "int int -log|x-y| f(x) f(y) <= (1/d) int f log f + C0";
            break;
        }
        case CaseId::log_sobolev: {
            const double a = params.a;
            require(a > 0.0, "scale must be positive");
            c.normalization = Normalization::unit_l2;
            c.assumptions = {"||f||_2 = 1"};
            // Entropy of f^2 is twice the entropy functional; the gradient
            // energy is the squared first-order smoothness norm.
            c.lhs = [](const RadialProfile& f) { return 2.0 * entropy(f); };
            c.rhs = [d, a](const RadialProfile& f) {
                const double g = sobolev_norm(f, 1.0);
                return log_sobolev_rhs(d, a, g * g);
            };
            c.constant_value = -d * (1.0 + std::log(a));
            c.anchor =
                "int f^2 log f^2 <= (a^2/pi) int |grad f|^2 - d (1 + log a)";
            break;
        }
        case CaseId::hausdorff_young: {
            // Constant 1 interpolates the Plancherel identity against the
            // L1 -> Linf bound (2 pi)^{-d/2} <= 1 of this convention.
            c.lhs = [](const RadialProfile& f) { return lp_norm_spectral(f, 4.0); };
            c.rhs = [](const RadialProfile& f) {
                return weighted_lp_norm(f, 4.0 / 3.0, 0.0);
            };
            c.constant_status = ConstantStatus::bound;
            c.constant_value = 1.0;
            c.anchor = "||fhat||_4 <= ||f||_{4/3}";
            break;
        }
        case CaseId::beckner: {
            const double bound = beckner_bound(d);
            c.normalization = Normalization::unit_l2;
            c.assumptions = {"||f||_2 = 1"};
            c.lhs = [](const RadialProfile& f) {
                return entropy(f) + spectral_entropy(f);
            };
            c.rhs = [bound](const RadialProfile&) { return bound; };
            c.constant_value = bound;
            c.anchor =
                "int f^2 log|f| + int fhat^2 log|fhat| <= (d/2)(log 2 - 1)";
            break;
        }
        case CaseId::sobolev_log: {
            c.normalization = Normalization::unit_l2;
            c.assumptions = {"||f||_2 = 1"};
            c.lhs = [d](const RadialProfile& f) { return 2.0 / d * entropy(f); };
            c.rhs = [](const RadialProfile& f) { return log_moment_fourier(f); };
            c.constant_status = ConstantStatus::unknown;
            c.anchor = "(2/d) int f^2 log|f| <= int fhat^2 log|xi| + c";
            break;
        }
        case CaseId::hardy_log: {
            c.normalization = Normalization::unit_l2;
            c.assumptions = {"||f||_2 = 1"};
            c.lhs = [](const RadialProfile& f) { return -log_moment_physical(f); };
            c.rhs = [](const RadialProfile& f) { return log_moment_fourier(f); };
            c.constant_status = ConstantStatus::unknown;
            c.anchor = "-int f^2 log|x| <= int fhat^2 log|xi| + c";
            break;
        }
        case CaseId::stein_weiss_log: {
            const double t = params.t;
            require(t >= 0.0 && t <= 1.0, "sweep position must lie in [0, 1]");
            c.normalization = Normalization::unit_l2;
            c.assumptions = {"||f||_2 = 1"};
            c.lhs = [d, t](const RadialProfile& f) {
                return 2.0 * (1.0 - t) / d * entropy(f) -
                       t * log_moment_physical(f);
            };
            c.rhs = [](const RadialProfile& f) { return log_moment_fourier(f); };
            c.constant_status = ConstantStatus::unknown;
            c.anchor =
                "(2(1-t)/d) int f^2 log|f| - t int f^2 log|x| <= "
                "int fhat^2 log|xi| + c";
            break;
        }
        case CaseId::rubin: {
            const double s = params.s, p = params.p;
            const double beta = rubin_beta(d, p, s);  // validates (s, p)
            c.assumptions = {"0 <= s < d/2", "2 <= p, and p <= 2/(1-2s) for s < 1/2"};
            c.lhs = [p, beta](const RadialProfile& f) {
                return weighted_lp_norm(f, p, beta);
            };
            c.rhs = [s](const RadialProfile& f) { return sobolev_norm(f, s); };
            c.constant_status = ConstantStatus::unknown;
            c.anchor = "|| |x|^{-beta} f ||_p <= C(p,s) ||f||_{H^s}";
            break;
        }
        case CaseId::main: {
            c.normalization = Normalization::unit_l2;
            c.assumptions = {"||f||_2 = 1"};
            c.lhs = [d](const RadialProfile& f) {
                return 2.0 * entropy(f) + (d - 1.0) * log_moment_physical(f);
            };
            c.rhs = [](const RadialProfile& f) { return log_moment_fourier(f); };
            c.constant_status = ConstantStatus::unknown;
            c.anchor =
                "2 int f^2 log|f| + (d-1) int f^2 log|x| <= int fhat^2 log|xi| + c";
            break;
        }
    }
    return c;
}

GapReport evaluate_gap(const InequalityCase& c, const RadialProfile& f,
                       const std::string& descriptor) {
    GapReport rep;
    rep.case_name = case_name(c.id);
    rep.descriptor = descriptor;
    rep.constant_included = c.constant_status != ConstantStatus::unknown;
    rep.lhs_value = rep.rhs_value = rep.slack = kNaN;

    try {
        RadialProfile g = f;
        if (c.normalization == Normalization::unit_l2) {
            g = normalize_l2(g);
        } else if (c.normalization == Normalization::unit_mass) {
            const double mass = volume_integral(g);
            if (!(mass > 0.0)) {
                rep.assumption_check = "failed: total mass must be positive";
                return rep;
            }
            for (double& v : g.values) v /= mass;
        }
        if (c.require_nonnegative) {
            double floor = 0.0, peak = 0.0;
            for (double v : g.values) {
                floor = std::min(floor, v);
                peak = std::max(peak, std::abs(v));
            }
            if (floor < -1e-12 * peak) {
                rep.assumption_check = "failed: profile must be nonnegative";
                return rep;
            }
            for (double& v : g.values) v = std::max(v, 0.0);
        }
        rep.lhs_value = c.lhs(g);
        rep.rhs_value = c.rhs(g);
    } catch (const std::exception& e) {
        rep.assumption_check = std::string("failed: ") + e.what();
        return rep;
    }
    if (!std::isfinite(rep.lhs_value) || !std::isfinite(rep.rhs_value)) {
        rep.assumption_check = "failed: non-finite functional value";
        return rep;
    }
    rep.assumptions_passed = true;
    rep.valid = true;
    rep.assumption_check = "pass";
    rep.slack = rep.rhs_value - rep.lhs_value;
    return rep;
}

ConstantEstimate estimate_constant(const InequalityCase& c, FamilySpec family,
                                   const GridPtr& grid, std::size_t budget,
                                   std::uint64_t seed) {
    require(static_cast<bool>(grid), "estimation requires a grid");
    require(c.constant_status == ConstantStatus::unknown,
            "estimation applies to unknown-constant cases only");
    const bool ratio = c.id == CaseId::rubin;

    // Scale boxes stay inside the band the default grids represent
    // faithfully: outside it a profile or its transform leaks past r_max
    // and truncation error, not the functional, drives the search. For the
    // stretched-exponential core exp(-a1 r^q) the faithful band shrinks as
    // q -> 1 (polynomial transform tails), so its scale is parameterized by
    // u in [0, 1] inside the q-dependent band [0.1, 4]^(q-1).
    std::vector<double> lower, upper;
    if (family == FamilySpec::gaussian_only) {
        lower = {std::log(0.1)};
        upper = {std::log(4.0)};
    } else {
        // (u, q, tilt, log a2, w): core (1 + tilt r^2) exp(-a1(u, q) r^q)
        // spanning exponential to Gaussian decay, plus a Gaussian bump
        // w exp(-a2 r^2).
        lower = {0.0, 1.0, 0.0, std::log(0.1), 0.0};
        upper = {1.0, 2.0, 2.0, std::log(4.0), 3.0};
    }

    auto core_scale = [](double u, double q) {
        return std::exp((q - 1.0) * ((1.0 - u) * std::log(0.1) +
                                     u * std::log(4.0)));
    };
    auto build = [&](const std::vector<double>& x) {
        if (family == FamilySpec::gaussian_only) {
            const double a = std::exp(x[0]);
            return sample(grid, [a](double r) { return std::exp(-a * r * r); });
        }
        const double q = x[1], a1 = core_scale(x[0], q), tilt = x[2];
        const double a2 = std::exp(x[3]), w = x[4];
        return sample(grid, [=](double r) {
            const double r2 = r * r;
            return (1.0 + tilt * r2) * std::exp(-a1 * std::pow(r, q)) +
                   w * std::exp(-a2 * r2);
        });
    };
    auto objective = [&](const std::vector<double>& x) {
        const GapReport rep = evaluate_gap(c, build(x), "search");
        if (!rep.valid) return 1e100;
        if (ratio) {
            if (!(rep.rhs_value > 0.0)) return 1e100;
            return -(rep.lhs_value / rep.rhs_value);
        }
        return rep.slack;  // minimizing rhs - lhs maximizes the constant
    };

    if (budget == 0)
        throw numerical_failure("search budget exhausted before any evaluation");
    const SimplexResult best =
        multi_start_minimize(objective, lower, upper, 8, seed, budget);
    if (best.evaluations == 0)
        throw numerical_failure("search budget exhausted before any evaluation");

    ConstantEstimate est;
    est.case_name = case_name(c.id);
    est.c_emp = -best.best_value;
    est.ratio_form = ratio;
    est.witness = best.best_point;
    est.evaluations = best.evaluations;
    est.seed = seed;
    est.budget_exhausted = !best.converged;
    if (family == FamilySpec::gaussian_only) {
        est.witness_descriptor =
            format_params("gaussian(a=%g)", std::exp(best.best_point[0]));
    } else {
        est.witness_descriptor = format_params(
            "wide(a1=%g,q=%g,tilt=%g,a2=%g,w=%g)",
            core_scale(best.best_point[0], best.best_point[1]),
            best.best_point[1], best.best_point[2],
            std::exp(best.best_point[3]), best.best_point[4]);
    }
    return est;
}

std::vector<GapReport> scan_suite(const std::vector<InequalityCase>& cases,
                                  const std::vector<TrialSpec>& trials,
                                  const GridPtr& grid) {
    std::vector<GapReport> out;
    out.reserve(cases.size() * trials.size());
    for (const InequalityCase& c : cases) {
        for (const TrialSpec& spec : trials) {
            try {
                out.push_back(evaluate_gap(c, trial(spec, grid), describe(spec)));
            } catch (const std::exception& e) {
                GapReport rep;
                rep.case_name = case_name(c.id);
                rep.descriptor = describe(spec);
                rep.lhs_value = rep.rhs_value = rep.slack = kNaN;
                rep.constant_included = c.constant_status != ConstantStatus::unknown;
                rep.assumption_check = std::string("failed: ") + e.what();
                out.push_back(rep);
            }
        }
    }
    return out;
}

std::vector<SlackSummary> minimum_slack(const std::vector<GapReport>& reports) {
    std::vector<SlackSummary> out;
    for (const GapReport& rep : reports) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SlackSummary& s) {
            return s.case_name == rep.case_name;
        });
        if (it == out.end()) {
            out.push_back({rep.case_name, 0.0, 0, rep.constant_included});
            it = out.end() - 1;
        }
        if (!rep.valid) continue;
        if (it->valid_rows == 0 || rep.slack < it->min_slack)
            it->min_slack = rep.slack;
        ++it->valid_rows;
    }
    return out;
}

std::vector<InequalityCase> standard_suite(int d) {
    require(d >= 1, "dimension must be at least 1");
    std::vector<InequalityCase> cases;
    InequalityParams base;
    base.d = d;
    {
        InequalityParams q = base;
        q.lambda = d >= 3 ? 1.0 : 0.5;
        cases.push_back(make_case(CaseId::hls, q));
    }
    cases.push_back(make_case(CaseId::log_hls, base));
    for (double a : {0.5, 1.0, 1.7724538509055160273, 2.0}) {
        InequalityParams q = base;
        q.a = a;
        cases.push_back(make_case(CaseId::log_sobolev, q));
    }
    cases.push_back(make_case(CaseId::hausdorff_young, base));
    cases.push_back(make_case(CaseId::beckner, base));
    cases.push_back(make_case(CaseId::sobolev_log, base));
    cases.push_back(make_case(CaseId::hardy_log, base));
    for (double t : {0.25, 0.5, 0.75}) {
        InequalityParams q = base;
        q.t = t;
        cases.push_back(make_case(CaseId::stein_weiss_log, q));
    }
    {
        InequalityParams q = base;
        if (d == 1) {
            q.s = 0.2;
            q.p = 3.0;
        } else if (d == 2) {
            q.s = 0.25;
            q.p = 4.0;
        } else {
            q.s = 0.3;
            q.p = 3.0;
        }
        cases.push_back(make_case(CaseId::rubin, q));
    }
    cases.push_back(make_case(CaseId::main, base));
    return cases;
}

std::vector<TrialSpec> standard_trials(int d) {
    require(d >= 1, "dimension must be at least 1");
    std::vector<TrialSpec> trials;
    for (double a : {0.25, 0.5, 1.0, 2.0})
        trials.push_back({TrialKind::gaussian, a});
    for (double a : {0.5, 1.0})
        trials.push_back({TrialKind::exponential, a});
    trials.push_back({.kind = TrialKind::poly_decay, .a = 1.0, .k = d + 3});
    trials.push_back({.kind = TrialKind::radial_hermite, .k = 1});
    trials.push_back({.kind = TrialKind::radial_hermite, .k = 2});
    trials.push_back({.kind = TrialKind::random_schwartz, .seed = 7});
    trials.push_back({.kind = TrialKind::random_schwartz, .seed = 11});
    return trials;
}

std::vector<InequalityCase> stein_weiss_sweep(int d,
                                              const std::vector<double>& ts) {
    std::vector<InequalityCase> cases;
    for (double t : ts) {
        InequalityParams q;
        q.d = d;
        q.t = t;
        cases.push_back(make_case(CaseId::stein_weiss_log, q));
    }
    return cases;
}

}  // namespace loguncert
