#include "loguncert/cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "loguncert/cli/report.hpp"
#include "loguncert/constants.hpp"
#include "loguncert/derivative.hpp"
#include "loguncert/errors.hpp"
#include "loguncert/functionals.hpp"
#include "loguncert/lab.hpp"

namespace loguncert::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Derivative slack below this is scheme breakdown, not quadrature noise.
constexpr double kDerivativeTolerance = 1e-4;

template <typename Body>
int run_guarded(std::ostream& out, Body&& body) {
    try {
        return body();
    } catch (const invalid_argument& e) {
        out << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

std::string printf_string(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

unsigned worker_count(std::size_t items) {
    unsigned workers = 1;
    if (const char* env = std::getenv("LOGUNCERT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) workers = static_cast<unsigned>(v);
    }
    if (workers > 64) workers = 64;
    if (items < workers) workers = static_cast<unsigned>(items);
    return workers == 0 ? 1 : workers;
}

// Evaluates every (case, trial) pair, optionally across worker threads.
// Results are stored by item index, so the output order never depends on
// scheduling. The transform and kernel caches are mutex-protected, which is
// what makes the concurrent evaluation safe.
std::vector<GapReport> scan_parallel(const std::vector<InequalityCase>& cases,
                                     const std::vector<TrialSpec>& trials,
                                     const GridPtr& grid) {
    struct Item {
        std::size_t ci, ti;
    };
    std::vector<Item> items;
    items.reserve(cases.size() * trials.size());
    for (std::size_t ci = 0; ci < cases.size(); ++ci)
        for (std::size_t ti = 0; ti < trials.size(); ++ti)
            items.push_back({ci, ti});

    std::vector<GapReport> rows(items.size());
    const auto evaluate = [&](std::size_t i) {
        const std::vector<InequalityCase> one_case{cases[items[i].ci]};
        const std::vector<TrialSpec> one_trial{trials[items[i].ti]};
        rows[i] = scan_suite(one_case, one_trial, grid).front();
    };

    const unsigned workers = worker_count(items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) evaluate(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
                evaluate(i);
        });
    for (std::thread& t : pool) t.join();
    return rows;
}

// The standard suite for the configured dimension, with the optional kernel
// power override applied and the optional case-name filter enforced.
std::vector<InequalityCase> build_suite(const Config& cfg) {
    const int d = cfg.grid.dimension;
    std::vector<InequalityCase> all = standard_suite(d);
    if (cfg.suite.lambda != 0.0) {
        InequalityParams q;
        q.d = d;
        q.lambda = cfg.suite.lambda;
        for (InequalityCase& c : all)
            if (c.id == CaseId::hls) c = make_case(CaseId::hls, q);
    }
    if (cfg.suite.cases.empty()) return all;
    std::vector<InequalityCase> picked;
    for (const std::string& name : cfg.suite.cases) {
        bool found = false;
        for (const InequalityCase& c : all)
            if (case_name(c.id) == name) {
                picked.push_back(c);
                found = true;
            }
        require(found, "unknown case name: " + name);
    }
    return picked;
}

CaseId parse_case_id(const std::string& name) {
    static constexpr CaseId ids[] = {
        CaseId::hls,         CaseId::log_hls,  CaseId::log_sobolev,
        CaseId::hausdorff_young, CaseId::beckner, CaseId::sobolev_log,
        CaseId::hardy_log,   CaseId::stein_weiss_log, CaseId::rubin,
        CaseId::main,
    };
    for (CaseId id : ids)
        if (case_name(id) == name) return id;
    throw invalid_argument("unknown case name: " + name);
}

// Writes <command>.csv and/or <command>.json into cfg.out_dir per the
// configured format.
void write_reports(const Config& cfg, const std::string& command,
                   const std::vector<ReportRow>& rows,
                   const nlohmann::json& doc) {
    const std::string base =
        (cfg.out_dir.empty() ? std::string(".") : cfg.out_dir) + "/" + command;
    if (cfg.format == "csv" || cfg.format == "both")
        write_atomic(base + ".csv", to_csv(rows));
    if (cfg.format == "json" || cfg.format == "both")
        write_atomic(base + ".json", doc.dump(2) + "\n");
}

nlohmann::json grid_json(const Config& cfg) {
    nlohmann::json g;
    g["dimension"] = cfg.grid.dimension;
    g["resolution"] = cfg.grid.resolution;
    g["r_max"] = cfg.grid.r_max;
    g["scheme"] = cfg.grid.scheme;
    return g;
}

}  // namespace

int cmd_verify(const Config& cfg, std::ostream& out) {
    return run_guarded(out, [&]() -> int {
        const GridPtr grid = make_grid_from(cfg.grid);
        const std::vector<InequalityCase> cases = build_suite(cfg);
        const std::vector<TrialSpec> trials =
            parse_trials(cfg.suite.trials, cfg.grid.dimension);
        const std::vector<GapReport> reports =
            scan_parallel(cases, trials, grid);

        const double tol = cfg.suite.slack_tolerance;
        std::vector<ReportRow> rows;
        rows.reserve(reports.size());
        nlohmann::json json_rows = nlohmann::json::array();
        nlohmann::json violations = nlohmann::json::array();
        std::size_t violation_count = 0;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const GapReport& rep = reports[i];
            const InequalityCase& c = cases[i / trials.size()];
            ReportRow row;
            row.case_name = rep.case_name;
            row.d = cfg.grid.dimension;
            row.n = static_cast<int>(grid->size());
            row.r_max = grid->r_max;
            row.trial = rep.descriptor;
            row.lhs = rep.lhs_value;
            row.rhs = rep.rhs_value;
            row.slack = rep.slack;
            row.mode = !rep.valid ? "rejected"
                       : rep.constant_included ? "gap"
                                               : "gap-no-constant";
            row.anchor = c.anchor;
            nlohmann::json j = row_json(row);
            j["status"] = rep.assumption_check;
            j["valid"] = rep.valid;
            j["constant_included"] = rep.constant_included;
            json_rows.push_back(j);
            if (rep.valid && rep.constant_included && rep.slack < -tol) {
                ++violation_count;
                nlohmann::json v;
                v["case"] = rep.case_name;
                v["trial"] = rep.descriptor;
                v["slack"] = rep.slack;
                violations.push_back(v);
                out << "violation: " << rep.case_name << " on "
                    << rep.descriptor << " slack "
                    << printf_string("%.6e", rep.slack) << "\n";
            }
            rows.push_back(row);
        }

        const std::vector<SlackSummary> summary = minimum_slack(reports);
        out << "verify: d=" << cfg.grid.dimension << " n=" << grid->size()
            << " cases=" << cases.size() << " trials=" << trials.size()
            << " rows=" << reports.size() << "\n";
        nlohmann::json json_summary = nlohmann::json::array();
        for (const SlackSummary& s : summary) {
            out << printf_string("  %-18s min slack %12.6g over %3zu rows%s\n",
                                 s.case_name.c_str(), s.min_slack,
                                 s.valid_rows,
                                 s.constant_included ? "" : " (no constant)");
            nlohmann::json j;
            j["case"] = s.case_name;
            j["min_slack"] = s.min_slack;
            j["valid_rows"] = s.valid_rows;
            j["constant_included"] = s.constant_included;
            json_summary.push_back(j);
        }

        nlohmann::json doc;
        doc["command"] = "verify";
        doc["grid"] = grid_json(cfg);
        doc["slack_tolerance"] = tol;
        doc["rows"] = json_rows;
        doc["summary"] = json_summary;
        doc["violations"] = violations;
        write_reports(cfg, "verify", rows, doc);

        if (violation_count > 0) {
            out << "verify: FAIL (" << violation_count << " violation"
                << (violation_count == 1 ? "" : "s") << ")\n";
            return 1;
        }
        out << "verify: PASS\n";
        return 0;
    });
}

int cmd_differentiate(const Config& cfg, std::ostream& out) {
    return run_guarded(out, [&]() -> int {
        const GridPtr grid = make_grid_from(cfg.grid);
        const int d = cfg.grid.dimension;
        const DifferentiateConfig& dc = cfg.differentiate;
        require(dc.family == "rubin" || dc.family == "identity",
                "differentiate family must be rubin or identity");

        std::vector<ReportRow> rows;
        nlohmann::json json_rows = nlohmann::json::array();
        nlohmann::json recovered = nlohmann::json::array();
        std::size_t violation_count = 0;

        const auto push_row = [&](const std::string& name,
                                  const std::string& trial_name,
                                  const std::string& mode,
                                  const std::string& anchor,
                                  const DerivativeReport& rep,
                                  double s1, double p1) {
            ReportRow row;
            row.case_name = name;
            row.d = d;
            row.n = static_cast<int>(grid->size());
            row.r_max = grid->r_max;
            row.trial = trial_name;
            row.lhs = rep.lhs_derivative;
            row.rhs = rep.rhs_derivative;
            row.slack = rep.slack;
            row.mode = mode;
            row.anchor = anchor;
            rows.push_back(row);
            nlohmann::json j = row_json(row);
            if (name == "rubin") {
                j["s1"] = s1;
                j["p1"] = p1;
            }
            j["steps"] = rep.steps;
            j["lhs_quotients"] = rep.lhs_quotients;
            j["rhs_quotients"] = rep.rhs_quotients;
            j["lhs_error"] = rep.lhs_error;
            j["rhs_error"] = rep.rhs_error;
            j["extrapolation_order"] = rep.extrapolation_order;
            json_rows.push_back(j);
            out << printf_string("  %-10s %-24s lhs' %14.8f rhs' %14.8f slack %10.3e\n",
                                 name.c_str(), trial_name.c_str(),
                                 rep.lhs_derivative, rep.rhs_derivative,
                                 rep.slack);
            if (rep.slack < -kDerivativeTolerance) {
                ++violation_count;
                out << "violation: " << name << " on " << trial_name
                    << " derivative slack "
                    << printf_string("%.6e", rep.slack) << "\n";
            }
        };

        out << "differentiate: family=" << dc.family << " d=" << d
            << " n=" << grid->size() << "\n";

        if (dc.family == "identity") {
            ParametricFamily fam;
            fam.lhs = [](double t, const RadialProfile&) { return std::exp(t); };
            fam.rhs_functional = [](double t, const RadialProfile&) {
                return std::exp(t);
            };
            fam.constant = [](double) { return 1.0; };
            fam.t_max = 1.0;
            fam.equality_check = "both sides equal 1 at t = 0 by construction";
            const RadialProfile f = trial(TrialSpec{}, grid);
            const DerivativeReport rep =
                differentiate_at_zero(fam, f, default_steps());
            push_row("identity", "synthetic", "differentiate",
                     "d/dt e^t at t = 0 equals 1 on both sides", rep, 0.0, 0.0);
        } else {
            const std::vector<TrialSpec> specs = parse_trials(dc.trials, d);
            std::vector<RadialProfile> profiles;
            profiles.reserve(specs.size());
            for (const TrialSpec& spec : specs)
                profiles.push_back(normalize_l2(trial(spec, grid)));

            require(dc.endpoint == "upper" || dc.endpoint == "sobolev",
                    "differentiate endpoint must be upper or sobolev");
            for (const double s1 : dc.s1) {
                double p1 = 0.0;
                if (dc.endpoint == "upper") {
                    require(s1 > 0.0 && s1 < 0.5,
                            "upper endpoint requires 0 < s1 < 1/2");
                    p1 = 2.0 / (1.0 - 2.0 * s1);
                } else {
                    require(s1 > 0.0 && 2.0 * s1 < d,
                            "sobolev endpoint requires 0 < s1 < d/2");
                    p1 = 2.0 * d / (d - 2.0 * s1);
                }
                const ParametricFamily fam = rubin_family(
                    d, s1, p1, ConstantMode::bound, dc.constant);
                const std::string mode =
                    printf_string("differentiate s1=%g p1=%g", s1, p1);
                std::vector<DerivativeReport> reps;
                reps.reserve(specs.size());
                for (std::size_t i = 0; i < specs.size(); ++i) {
                    reps.push_back(differentiate_at_zero(fam, profiles[i],
                                                         default_steps()));
                    push_row("rubin", describe(specs[i]), mode,
                             "d/ds of the weighted norm against the smoothness "
                             "norm along the interpolation path",
                             reps.back(), s1, p1);
                }
                if (specs.size() >= 2) {
                    // The differentiated left side is a linear combination of
                    // entropy and the physical log moment; two profiles give a
                    // 2x2 system for its coefficients.
                    const double e1 = entropy(profiles[0]);
                    const double m1 = log_moment_physical(profiles[0]);
                    const double e2 = entropy(profiles[1]);
                    const double m2 = log_moment_physical(profiles[1]);
                    const DerivativeReport& r1 = reps[0];
                    const DerivativeReport& r2 = reps[1];
                    const double det = e1 * m2 - e2 * m1;
                    const double scale =
                        std::abs(e1 * m2) + std::abs(e2 * m1) + 1e-300;
                    if (std::abs(det) > 1e-10 * scale) {
                        const double alpha =
                            (r1.lhs_derivative * m2 - r2.lhs_derivative * m1) /
                            det;
                        const double beta =
                            (e1 * r2.lhs_derivative - e2 * r1.lhs_derivative) /
                            det;
                        const double expected_alpha =
                            dc.endpoint == "upper" ? 2.0 : 2.0 / d;
                        const double expected_beta =
                            dc.endpoint == "upper" ? d - 1.0 : 0.0;
                        out << printf_string(
                            "  recovered coefficients (s1=%g): entropy %.6f "
                            "log-moment %.6f (expected %g, %g)\n",
                            s1, alpha, beta, expected_alpha, expected_beta);
                        nlohmann::json j;
                        j["s1"] = s1;
                        j["p1"] = p1;
                        j["alpha"] = alpha;
                        j["beta"] = beta;
                        j["expected_alpha"] = expected_alpha;
                        j["expected_beta"] = expected_beta;
                        recovered.push_back(j);
                    } else {
                        out << printf_string(
                            "  coefficient recovery skipped (s1=%g): profiles "
                            "nearly dependent\n",
                            s1);
                    }
                }
            }
        }

        nlohmann::json doc;
        doc["command"] = "differentiate";
        doc["grid"] = grid_json(cfg);
        doc["family"] = dc.family;
        doc["endpoint"] = dc.endpoint;
        doc["constant"] = dc.constant;
        doc["rows"] = json_rows;
        doc["recovered_coefficients"] = recovered;
        write_reports(cfg, "differentiate", rows, doc);

        if (violation_count > 0) {
            out << "differentiate: FAIL (" << violation_count
                << " violation" << (violation_count == 1 ? "" : "s") << ")\n";
            return 1;
        }
        out << "differentiate: PASS\n";
        return 0;
    });
}

int cmd_estimate(const Config& cfg, std::ostream& out) {
    return run_guarded(out, [&]() -> int {
        const GridPtr grid = make_grid_from(cfg.grid);
        const EstimateConfig& ec = cfg.estimate;
        const CaseId id = parse_case_id(ec.case_name);

        InequalityParams q;
        q.d = cfg.grid.dimension;
        if (id == CaseId::rubin) {
            q.s = ec.s;
            q.p = ec.p;
        } else if (id == CaseId::stein_weiss_log) {
            q.t = ec.t;
        }
        const InequalityCase c = make_case(id, q);

        FamilySpec family;
        if (ec.family == "gaussian-only")
            family = FamilySpec::gaussian_only;
        else if (ec.family == "wide")
            family = FamilySpec::wide;
        else
            throw invalid_argument("unknown estimation family: " + ec.family);

        const ConstantEstimate est =
            estimate_constant(c, family, grid, ec.budget, ec.seed);

        out << "estimate: case=" << ec.case_name << " family=" << ec.family
            << " d=" << cfg.grid.dimension << " n=" << grid->size()
            << " budget=" << ec.budget << " seed=" << ec.seed << "\n";
        out << printf_string("  c_emp = %.12g%s\n", est.c_emp,
                             est.ratio_form ? " (ratio form)" : "");
        out << "  witness " << est.witness_descriptor << "\n";
        out << "  evaluations " << est.evaluations
            << (est.budget_exhausted ? " (budget exhausted)" : "") << "\n";

        ReportRow row;
        row.case_name = est.case_name;
        row.d = cfg.grid.dimension;
        row.n = static_cast<int>(grid->size());
        row.r_max = grid->r_max;
        row.trial = est.witness_descriptor;
        row.lhs = kNaN;
        row.rhs = kNaN;
        row.slack = est.c_emp;
        row.mode = est.ratio_form ? "estimate-ratio" : "estimate";
        row.anchor = c.anchor;

        nlohmann::json doc;
        doc["command"] = "estimate";
        doc["grid"] = grid_json(cfg);
        doc["case"] = est.case_name;
        doc["family"] = ec.family;
        doc["budget"] = ec.budget;
        doc["seed"] = est.seed;
        doc["c_emp"] = est.c_emp;
        doc["ratio_form"] = est.ratio_form;
        doc["witness"] = est.witness;
        doc["witness_descriptor"] = est.witness_descriptor;
        doc["evaluations"] = est.evaluations;
        doc["budget_exhausted"] = est.budget_exhausted;
        doc["rows"] = nlohmann::json::array({row_json(row)});
        write_reports(cfg, "estimate", {row}, doc);
        return 0;
    });
}

int cmd_constants(const Config& cfg, std::ostream& out) {
    return run_guarded(out, [&]() -> int {
        nlohmann::json hls = nlohmann::json::array();
        out << "double-integral kernel constants k(d, lambda)\n";
        for (int d = 1; d <= 3; ++d)
            for (const double frac : {0.25, 0.5, 0.75}) {
                const double lambda = frac * d;
                const double value = hls_constant(d, lambda);
                out << printf_string("  d=%d lambda=%-6g k=%.17g\n", d, lambda,
                                     value);
                nlohmann::json j;
                j["d"] = d;
                j["lambda"] = lambda;
                j["value"] = value;
                hls.push_back(j);
            }

        nlohmann::json log_hls = nlohmann::json::array();
        out << "log-kernel additive constants C0(d)\n";
        for (int d = 1; d <= 8; ++d) {
            const double value = log_hls_constant(d);
            out << printf_string("  d=%d C0=%.17g\n", d, value);
            nlohmann::json j;
            j["d"] = d;
            j["value"] = value;
            log_hls.push_back(j);
        }

        nlohmann::json beckner = nlohmann::json::array();
        out << "entropy bound constants (d/2)(log 2 - 1)\n";
        for (int d = 1; d <= 3; ++d) {
            const double value = beckner_bound(d);
            out << printf_string("  d=%d bound=%.17g\n", d, value);
            nlohmann::json j;
            j["d"] = d;
            j["value"] = value;
            beckner.push_back(j);
        }

        if (cfg.format == "json" || cfg.format == "both") {
            nlohmann::json doc;
            doc["command"] = "constants";
            doc["hls"] = hls;
            doc["log_hls"] = log_hls;
            doc["beckner"] = beckner;
            const std::string base =
                (cfg.out_dir.empty() ? std::string(".") : cfg.out_dir);
            write_atomic(base + "/constants.json", doc.dump(2) + "\n");
        }
        return 0;
    });
}

}  // namespace loguncert::cli
