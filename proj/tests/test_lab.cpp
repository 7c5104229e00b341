#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "loguncert/constants.hpp"
#include "loguncert/errors.hpp"
#include "loguncert/functionals.hpp"
#include "loguncert/grid.hpp"
#include "loguncert/lab.hpp"
#include "loguncert/special.hpp"
#include "loguncert/spectral.hpp"
#include "loguncert/trial.hpp"

using namespace loguncert;

namespace {

const GridPtr& fine_grid(int d) {
    static GridPtr g[3] = {make_grid(1, 16.0, 1024), make_grid(2, 16.0, 1024),
                           make_grid(3, 16.0, 1024)};
    return g[d - 1];
}

const GridPtr& scan_grid(int d) {
    static GridPtr g[3] = {make_grid(1, 16.0, 512), make_grid(2, 16.0, 512),
                           make_grid(3, 16.0, 512)};
    return g[d - 1];
}

InequalityParams params_d(int d) {
    InequalityParams q;
    q.d = d;
    return q;
}

// Supremum of lhs - rhs over gaussians for the unconstrained case: width-flat,
// assembled from digamma/log closed forms for the unit gaussian.
double gaussian_plateau(int d) {
    return -0.5 * d * (1.0 + std::log(M_PI)) + 0.5 * (d - 2) * digamma(0.5 * d);
}

}  // namespace

TEST_CASE("trial profiles match their closed forms and reject bad parameters") {
    const GridPtr& g = scan_grid(3);

    auto expect_shape = [&](const TrialSpec& spec, auto fn) {
        const RadialProfile f = trial(spec, g);
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            CAPTURE(i);
            CHECK(f.values[i] == doctest::Approx(fn(g->nodes[i])).epsilon(1e-14));
        }
    };
    expect_shape({TrialKind::gaussian, 0.7},
                 [](double r) { return std::exp(-0.7 * r * r); });
    expect_shape({TrialKind::exponential, 1.3},
                 [](double r) { return std::exp(-1.3 * r); });
    expect_shape({.kind = TrialKind::poly_decay, .a = 2.0, .k = 5},
                 [](double r) { return std::pow(1.0 + r * r / 4.0, -2.5); });
    expect_shape({.kind = TrialKind::radial_hermite, .k = 0},
                 [](double r) { return std::exp(-0.5 * r * r); });

    CHECK(describe({TrialKind::gaussian, 0.5}) == "gaussian(a=0.5)");
    CHECK(describe({TrialKind::exponential, 1.0}) == "exponential(a=1)");
    CHECK(describe({.kind = TrialKind::poly_decay, .a = 2.0, .k = 5}) ==
          "poly-decay(a=2,k=5)");
    CHECK(describe({.kind = TrialKind::radial_hermite, .k = 2}) ==
          "radial-hermite(k=2)");
    CHECK(describe({.kind = TrialKind::random_schwartz, .seed = 7}) ==
          "random-schwartz(seed=7,m=5)");

    CHECK_THROWS_WITH_AS(trial({TrialKind::gaussian, 0.0}, g),
                         doctest::Contains("gaussian scale"), invalid_argument);
    CHECK_THROWS_WITH_AS(trial({TrialKind::exponential, -1.0}, g),
                         doctest::Contains("exponential scale"), invalid_argument);
    CHECK_THROWS_WITH_AS(
        trial({.kind = TrialKind::poly_decay, .a = 1.0, .k = 3}, g),
        doctest::Contains("at least dimension + 1"), invalid_argument);
    CHECK_THROWS_WITH_AS(trial({.kind = TrialKind::radial_hermite, .k = -1}, g),
                         doctest::Contains("mode index"), invalid_argument);
    CHECK_THROWS_WITH_AS(
        trial({.kind = TrialKind::random_schwartz, .seed = 1, .m = 0}, g),
        doctest::Contains("mode count"), invalid_argument);
    CHECK_THROWS_WITH_AS(trial({TrialKind::gaussian, 1.0}, GridPtr{}),
                         doctest::Contains("requires a grid"), invalid_argument);
}

TEST_CASE("random trials are reproducible and hermite modes are eigenmodes") {
    TrialSpec spec;
    spec.kind = TrialKind::random_schwartz;
    spec.seed = 7;
    const RadialProfile f1 = trial(spec, scan_grid(3));
    const RadialProfile f2 = trial(spec, scan_grid(3));
    CHECK(f1.values == f2.values);
    spec.seed = 8;
    CHECK(trial(spec, scan_grid(3)).values != f1.values);

    // The k-th radial hermite mode is a transform eigenfunction with
    // eigenvalue (-1)^k; this exercises trial + transform end to end.
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            TrialSpec h;
            h.kind = TrialKind::radial_hermite;
            h.k = k;
            const RadialProfile f = trial(h, fine_grid(d));
            const SpectralProfile F = fourier_radial(f);
            const double sign = k % 2 ? -1.0 : 1.0;
            double peak = 0.0, err = 0.0;
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                peak = std::max(peak, std::abs(f.values[i]));
                err = std::max(err, std::abs(F.values[i] - sign * f.values[i]));
            }
            CHECK(err <= 1e-12 * peak);
        }
    }

    // Width-1 gaussian is self-dual.
    const RadialProfile f = trial({TrialKind::gaussian, 0.5}, fine_grid(3));
    const SpectralProfile F = fourier_radial(f);
    for (std::size_t i = 0; i < f.values.size(); i += 37)
        CHECK(F.values[i] == doctest::Approx(f.values[i]).epsilon(1e-10));
}

TEST_CASE("case registry names, anchors, and parameter validation") {
    CHECK(case_name(CaseId::hls) == "hls");
    CHECK(case_name(CaseId::log_hls) == "log-hls");
    CHECK(case_name(CaseId::log_sobolev) == "log-sobolev");
    CHECK(case_name(CaseId::hausdorff_young) == "hausdorff-young");
    CHECK(case_name(CaseId::beckner) == "beckner");
    CHECK(case_name(CaseId::sobolev_log) == "sobolev-log");
    CHECK(case_name(CaseId::hardy_log) == "hardy-log");
    CHECK(case_name(CaseId::stein_weiss_log) == "stein-weiss-log");
    CHECK(case_name(CaseId::rubin) == "rubin");
    CHECK(case_name(CaseId::main) == "main");

    const InequalityCase hls = make_case(CaseId::hls, params_d(3));
    CHECK(hls.constant_status == ConstantStatus::exact);
    CHECK(hls.constant_value == doctest::Approx(hls_constant(3, 1.0)));
    CHECK(hls.require_nonnegative);
    CHECK(!hls.anchor.empty());
    CHECK(!hls.assumptions.empty());

    const InequalityCase hy = make_case(CaseId::hausdorff_young, params_d(2));
    CHECK(hy.constant_status == ConstantStatus::bound);
    CHECK(hy.constant_value == 1.0);

    const InequalityCase sl = make_case(CaseId::sobolev_log, params_d(3));
    CHECK(sl.constant_status == ConstantStatus::unknown);
    CHECK(sl.normalization == Normalization::unit_l2);

    InequalityParams bad = params_d(3);
    bad.lambda = 3.0;
    CHECK_THROWS_WITH_AS(make_case(CaseId::hls, bad),
                         doctest::Contains("0 < lambda < d"), invalid_argument);
    bad = params_d(3);
    bad.a = 0.0;
    CHECK_THROWS_WITH_AS(make_case(CaseId::log_sobolev, bad),
                         doctest::Contains("scale must be positive"),
                         invalid_argument);
    bad = params_d(3);
    bad.t = 1.5;
    CHECK_THROWS_WITH_AS(make_case(CaseId::stein_weiss_log, bad),
                         doctest::Contains("[0, 1]"), invalid_argument);
    bad = params_d(3);
    bad.s = 0.2;
    bad.p = 4.0;  // above 2/(1-2s) = 10/3
    CHECK_THROWS_WITH_AS(make_case(CaseId::rubin, bad),
                         doctest::Contains("must not exceed"), invalid_argument);
    CHECK_THROWS_WITH_AS(make_case(CaseId::main, params_d(0)),
                         doctest::Contains("dimension"), invalid_argument);
}

TEST_CASE("gap evaluation normalizes, enforces assumptions, and flags failures") {
    const GridPtr& g = fine_grid(1);

    // Unit-L2 normalization is applied internally: the unnormalized width-1
    // gaussian must produce the unit-gaussian entropy values.
    const InequalityCase bk = make_case(CaseId::beckner, params_d(1));
    const GapReport row =
        evaluate_gap(bk, trial({TrialKind::gaussian, 0.5}, g), "gauss");
    CHECK(row.valid);
    CHECK(row.assumptions_passed);
    CHECK(row.assumption_check == "pass");
    CHECK(row.descriptor == "gauss");
    CHECK(row.constant_included);
    CHECK(row.lhs_value ==
          doctest::Approx(-0.5 * (1.0 + std::log(M_PI))).epsilon(1e-12));
    CHECK(row.rhs_value == beckner_bound(1));
    CHECK(row.slack == row.rhs_value - row.lhs_value);
    CHECK(row.slack > 0.0);

    // Sign-changing profiles are rejected by the nonnegative cases.
    InequalityParams hq = params_d(1);
    hq.lambda = 0.5;
    const InequalityCase hls = make_case(CaseId::hls, hq);
    TrialSpec herm;
    herm.kind = TrialKind::radial_hermite;
    herm.k = 1;
    const GapReport bad = evaluate_gap(hls, trial(herm, g));
    CHECK(!bad.valid);
    CHECK(!bad.assumptions_passed);
    CHECK(bad.assumption_check.find("nonnegative") != std::string::npos);
    CHECK(std::isnan(bad.slack));

    // A zero profile cannot be normalized to unit mass.
    const InequalityCase lh = make_case(CaseId::log_hls, params_d(1));
    const RadialProfile zero{g, std::vector<double>(g->size(), 0.0)};
    const GapReport z = evaluate_gap(lh, zero);
    CHECK(!z.valid);
    CHECK(z.assumption_check.find("mass must be positive") != std::string::npos);

    // The zero profile also fails unit-L2 cases, through the failure path.
    const GapReport z2 = evaluate_gap(bk, zero);
    CHECK(!z2.valid);
    CHECK(z2.assumption_check.rfind("failed:", 0) == 0);

    // The unconstrained case is dilation invariant on gaussians, so its
    // slack is width-flat up to discretization noise.
    const InequalityCase main3 = make_case(CaseId::main, params_d(3));
    const double s1 =
        evaluate_gap(main3, trial({TrialKind::gaussian, 0.25}, scan_grid(3))).slack;
    const double s2 =
        evaluate_gap(main3, trial({TrialKind::gaussian, 2.0}, scan_grid(3))).slack;
    CHECK(s1 == doctest::Approx(s2).epsilon(1e-9));
    const InequalityCase main1 = make_case(CaseId::main, params_d(1));
    const double u1 =
        evaluate_gap(main1, trial({TrialKind::gaussian, 0.25}, scan_grid(1))).slack;
    const double u2 =
        evaluate_gap(main1, trial({TrialKind::gaussian, 2.0}, scan_grid(1))).slack;
    CHECK(u1 == doctest::Approx(u2).epsilon(1e-6));
}

TEST_CASE("sharp profiles achieve near-equality in the exact cases") {
    // HLS extremizer (1+r^2)^(-(2d-lambda)/2) at d=3, lambda=1.
    {
        auto g = make_grid(3, 1.0e4, 1024, GridScheme::log_uniform);
        auto f = sample(g, [](double r) { return std::pow(1.0 + r * r, -2.5); });
        InequalityParams q = params_d(3);
        q.lambda = 1.0;
        const GapReport rep = evaluate_gap(make_case(CaseId::hls, q), f);
        CHECK(rep.valid);
        CHECK(std::abs(rep.slack) <= 1e-3 * rep.lhs_value);
    }
    // log-HLS equality at the conformal profiles (1+r^2)^(-d); their fat
    // tails need a log-uniform grid reaching far out.
    {
        auto g = make_grid(1, 1.0e6, 1024, GridScheme::log_uniform);
        auto f = sample(g, [](double r) { return 1.0 / (1.0 + r * r); });
        const GapReport rep = evaluate_gap(make_case(CaseId::log_hls, params_d(1)), f);
        CHECK(rep.valid);
        CHECK(std::abs(rep.slack) <= 1e-3);
    }
    {
        auto g = make_grid(3, 1.0e4, 1024, GridScheme::log_uniform);
        auto f = sample(g, [](double r) { return std::pow(1.0 + r * r, -3.0); });
        const GapReport rep = evaluate_gap(make_case(CaseId::log_hls, params_d(3)), f);
        CHECK(rep.valid);
        CHECK(std::abs(rep.slack) <= 1e-3);
    }
}

TEST_CASE("gaussian rows match closed-form gap values") {
    // log-HLS at the standard normal: lhs = -log 2 - psi(d/2)/2 via the chi
    // log-moment of X - Y ~ N(0, 2I); rhs = -(log(2 pi) + 1)/2 + C0.
    const double c0[3] = {1.8378770664093454836, 1.0723649429247000871,
                          0.74420231741958188590};
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        const GapReport rep =
            evaluate_gap(make_case(CaseId::log_hls, params_d(d)),
                         trial({TrialKind::gaussian, 0.5}, fine_grid(d)));
        REQUIRE(rep.valid);
        const double lhs = -std::log(2.0) - 0.5 * digamma(0.5 * d);
        const double rhs = -0.5 * (1.8378770664093454836 + 1.0) + c0[d - 1];
        CHECK(rep.lhs_value == doctest::Approx(lhs).epsilon(1e-12));
        CHECK(rep.rhs_value == doctest::Approx(rhs).epsilon(1e-12));
        CHECK(rep.slack > 0.0);
    }

    // log-Sobolev slack over the a-grid in closed form:
    // slack(a) = (d/2)(a^2/pi + log pi - 1) - d log a; zero at a = sqrt(pi).
    const double root_pi = 1.7724538509055160273;
    for (int d : {1, 3}) {
        for (double a : {0.5, 1.0, root_pi, 2.0}) {
            CAPTURE(d);
            CAPTURE(a);
            InequalityParams q = params_d(d);
            q.a = a;
            const GapReport rep =
                evaluate_gap(make_case(CaseId::log_sobolev, q),
                             trial({TrialKind::gaussian, 0.5}, fine_grid(d)));
            REQUIRE(rep.valid);
            const double want =
                0.5 * d * (a * a / M_PI + std::log(M_PI) - 1.0) - d * std::log(a);
            CHECK(rep.slack == doctest::Approx(want).epsilon(1e-12));
            if (a == root_pi) CHECK(std::abs(rep.slack) <= 1e-12);
        }
    }

    // Entropy bound at the gaussian: slack is the width-flat (d/2) log(2 pi).
    for (int d = 1; d <= 3; ++d) {
        const GapReport rep =
            evaluate_gap(make_case(CaseId::beckner, params_d(d)),
                         trial({TrialKind::gaussian, 0.5}, fine_grid(d)));
        REQUIRE(rep.valid);
        CHECK(rep.slack ==
              doctest::Approx(0.5 * d * 1.8378770664093454836).epsilon(1e-10));
    }
}

TEST_CASE("sweep cases join endpoints exactly and are affine in between") {
    const GridPtr& g = fine_grid(3);
    const InequalityCase sob = make_case(CaseId::sobolev_log, params_d(3));
    const InequalityCase hardy = make_case(CaseId::hardy_log, params_d(3));

    const std::vector<InequalityCase> sweep =
        stein_weiss_sweep(3, {0.0, 0.25, 0.5, 0.75, 1.0});
    REQUIRE(sweep.size() == 5);
    for (const auto& c : sweep) CHECK(case_name(c.id) == "stein-weiss-log");

    for (const char* name : {"gauss", "poly"}) {
        const RadialProfile f =
            name[0] == 'g'
                ? trial({TrialKind::gaussian, 0.7}, g)
                : trial({.kind = TrialKind::poly_decay, .a = 1.0, .k = 6}, g);
        CAPTURE(name);
        // t = 0 collapses to the entropy endpoint and t = 1 to the moment
        // endpoint exactly, not merely to rounding.
        const GapReport e0 = evaluate_gap(sweep[0], f);
        const GapReport e1 = evaluate_gap(sweep[4], f);
        const GapReport s = evaluate_gap(sob, f);
        const GapReport h = evaluate_gap(hardy, f);
        CHECK(e0.lhs_value == s.lhs_value);
        CHECK(e0.rhs_value == s.rhs_value);
        CHECK(e1.lhs_value == h.lhs_value);
        CHECK(e1.rhs_value == h.rhs_value);

        const double s25 = evaluate_gap(sweep[1], f).slack;
        const double s50 = evaluate_gap(sweep[2], f).slack;
        const double s75 = evaluate_gap(sweep[3], f).slack;
        CHECK(std::abs(s50 - 0.5 * (s25 + s75)) <=
              1e-12 * std::max(1.0, std::abs(s50)));
    }
}

TEST_CASE("rubin case reduces to the weighted norm with the scaling exponent") {
    InequalityParams q = params_d(3);
    q.s = 0.2;
    q.p = 2.0;
    const InequalityCase c = make_case(CaseId::rubin, q);
    const RadialProfile f = trial({TrialKind::gaussian, 0.5}, fine_grid(3));
    // At p = 2 the scale-invariant weight power equals s.
    CHECK(c.lhs(f) == weighted_lp_norm(f, 2.0, 0.2));
    CHECK(c.rhs(f) == sobolev_norm(f, 0.2));
    CHECK(c.constant_status == ConstantStatus::unknown);
}

TEST_CASE("constant estimation: plateau recovery, determinism, seed stability") {
    const GridPtr& g = scan_grid(3);

    const InequalityCase main3 = make_case(CaseId::main, params_d(3));
    const ConstantEstimate est =
        estimate_constant(main3, FamilySpec::gaussian_only, g, 600, 1);
    CHECK(std::abs(est.c_emp - gaussian_plateau(3)) <= 1e-4);
    CHECK(!est.ratio_form);
    CHECK(est.case_name == "main");
    CHECK(est.seed == 1);
    CHECK(est.evaluations <= 600);
    CHECK(est.witness_descriptor.rfind("gaussian(a=", 0) == 0);

    const ConstantEstimate est2 =
        estimate_constant(main3, FamilySpec::gaussian_only, g, 600, 1);
    CHECK(est2.c_emp == est.c_emp);
    CHECK(est2.witness == est.witness);
    CHECK(est2.evaluations == est.evaluations);

    const InequalityCase sob = make_case(CaseId::sobolev_log, params_d(3));
    const ConstantEstimate s1 =
        estimate_constant(sob, FamilySpec::wide, g, 2000, 1);
    const ConstantEstimate s2 =
        estimate_constant(sob, FamilySpec::wide, g, 2000, 2);
    CHECK(std::isfinite(s1.c_emp));
    CHECK(std::abs(s1.c_emp - s2.c_emp) <= 1e-3);
    const GapReport member =
        evaluate_gap(sob, trial({TrialKind::gaussian, 0.5}, g));
    CHECK(s1.c_emp >= member.lhs_value - member.rhs_value - 1e-6);
    CHECK(s1.witness_descriptor.rfind("wide(", 0) == 0);

    InequalityParams rq = params_d(3);
    rq.s = 0.3;
    rq.p = 3.0;
    const InequalityCase rubin = make_case(CaseId::rubin, rq);
    const ConstantEstimate rest =
        estimate_constant(rubin, FamilySpec::gaussian_only, g, 400, 5);
    CHECK(rest.ratio_form);
    CHECK(rest.c_emp > 0.0);
    const GapReport rmember =
        evaluate_gap(rubin, trial({TrialKind::gaussian, 0.5}, g));
    CHECK(rest.c_emp >= rmember.lhs_value / rmember.rhs_value - 1e-9);

    CHECK_THROWS_WITH_AS(
        estimate_constant(make_case(CaseId::log_sobolev, params_d(3)),
                          FamilySpec::gaussian_only, g, 100, 1),
        doctest::Contains("unknown-constant"), invalid_argument);
    CHECK_THROWS_WITH_AS(
        estimate_constant(main3, FamilySpec::gaussian_only, GridPtr{}, 100, 1),
        doctest::Contains("requires a grid"), invalid_argument);
}

TEST_CASE("suite scan keeps exact-case slack nonnegative and aggregates minima") {
    const std::vector<InequalityCase> cases = standard_suite(1);
    const std::vector<TrialSpec> trials = standard_trials(1);
    const std::vector<GapReport> reports = scan_suite(cases, trials, scan_grid(1));
    REQUIRE(reports.size() == cases.size() * trials.size());

    std::size_t valid_exact = 0, rejected = 0;
    for (const GapReport& rep : reports) {
        CAPTURE(rep.case_name);
        CAPTURE(rep.descriptor);
        CAPTURE(rep.assumption_check);
        if (!rep.valid) {
            ++rejected;
            CHECK(rep.assumption_check.rfind("failed:", 0) == 0);
            continue;
        }
        if (rep.constant_included) {
            ++valid_exact;
            CHECK(rep.slack >= -1e-6);
        }
    }
    CHECK(valid_exact > 50);
    CHECK(rejected > 0);  // hermite trials fail the nonnegative cases

    const std::vector<SlackSummary> summaries = minimum_slack(reports);
    REQUIRE(summaries.size() == 10);
    CHECK(summaries.front().case_name == "hls");
    for (const SlackSummary& s : summaries) {
        CAPTURE(s.case_name);
        double manual = std::numeric_limits<double>::infinity();
        std::size_t rows = 0;
        for (const GapReport& rep : reports) {
            if (rep.case_name != s.case_name || !rep.valid) continue;
            manual = std::min(manual, rep.slack);
            ++rows;
        }
        CHECK(s.valid_rows == rows);
        if (rows > 0) CHECK(s.min_slack == manual);
    }

    CHECK(scan_suite(cases, {}, scan_grid(1)).empty());
}

TEST_CASE("searched constant dominates held-out trials in every dimension") {
    for (int d = 1; d <= 3; ++d) {
        CAPTURE(d);
        const GridPtr& g = scan_grid(d);
        const InequalityCase c = make_case(CaseId::main, params_d(d));

        const ConstantEstimate narrow =
            estimate_constant(c, FamilySpec::gaussian_only, g, 600, 1);
        CHECK(std::abs(narrow.c_emp - gaussian_plateau(d)) <= 1e-4);

        const ConstantEstimate est =
            estimate_constant(c, FamilySpec::wide, g, 2000, 1);
        CHECK(est.c_emp >= narrow.c_emp - 1e-6);
        for (const TrialSpec& spec : standard_trials(d)) {
            const GapReport rep = evaluate_gap(c, trial(spec, g), describe(spec));
            CAPTURE(rep.descriptor);
            REQUIRE(rep.valid);
            CHECK(rep.slack + est.c_emp + 1e-3 >= -1e-6);
        }
    }
}
