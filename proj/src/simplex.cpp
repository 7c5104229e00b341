#include "loguncert/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "loguncert/errors.hpp"
#include "loguncert/rng.hpp"

namespace loguncert {
namespace {

void check_box(const std::vector<double>& lower, const std::vector<double>& upper) {
    require(!lower.empty() && lower.size() == upper.size(),
            "box bounds must be nonempty and of equal dimension");
    for (std::size_t i = 0; i < lower.size(); ++i)
        require(lower[i] < upper[i], "box must have positive extent");
}

}  // namespace

SimplexResult minimize(const std::function<double(const std::vector<double>&)>& fn,
                       const std::vector<double>& lower,
                       const std::vector<double>& upper,
                       const std::vector<double>& x0, std::size_t budget) {
    check_box(lower, upper);
    const std::size_t n = lower.size();
    require(x0.size() == n, "start point dimension must match the box");
    require(budget >= 1, "evaluation budget must be positive");

    auto clamp = [&](std::vector<double> x) {
        for (std::size_t i = 0; i < n; ++i)
            x[i] = std::min(upper[i], std::max(lower[i], x[i]));
        return x;
    };

    SimplexResult out;
    auto can_eval = [&] { return out.evaluations < budget; };
    auto eval = [&](const std::vector<double>& x) {
        ++out.evaluations;
        return fn(x);
    };

    // Initial simplex: x0 plus an axis step of a tenth of the box extent,
    // flipped inward when it would leave the box.
    std::vector<std::vector<double>> verts;
    verts.push_back(clamp(x0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v = verts[0];
        double step = 0.1 * (upper[i] - lower[i]);
        if (v[i] + step > upper[i]) step = -step;
        v[i] += step;
        verts.push_back(clamp(std::move(v)));
    }
    std::vector<double> fv;
    for (const auto& v : verts) {
        if (!can_eval()) break;
        fv.push_back(eval(v));
    }

    auto finalize = [&] {
        std::size_t best = 0;
        for (std::size_t i = 1; i < fv.size(); ++i)
            if (fv[i] < fv[best]) best = i;
        out.best_point = verts[best];
        out.best_value = fv[best];
        return out;
    };
    if (fv.size() < verts.size()) return finalize();  // budget died during setup

    double extent = 0.0;
    for (std::size_t i = 0; i < n; ++i) extent = std::max(extent, upper[i] - lower[i]);

    std::vector<std::size_t> order(n + 1);
    while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return fv[a] != fv[b] ? fv[a] < fv[b] : a < b;
        });
        const std::size_t best = order[0], second_worst = order[n - 1],
                          worst = order[n];

        double diameter = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t c = 0; c < n; ++c)
                diameter = std::max(diameter, std::abs(verts[i][c] - verts[best][c]));
        const double spread = std::abs(fv[worst] - fv[best]);
        if (spread <= 1e-11 * (1.0 + std::abs(fv[best])) && diameter <= 1e-7 * extent) {
            out.converged = true;
            return finalize();
        }
        if (!can_eval()) return finalize();

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t c = 0; c < n; ++c) centroid[c] += verts[i][c];
        }
        for (std::size_t c = 0; c < n; ++c) centroid[c] /= static_cast<double>(n);

        auto along = [&](double coeff) {
            std::vector<double> x(n);
            for (std::size_t c = 0; c < n; ++c)
                x[c] = centroid[c] + coeff * (centroid[c] - verts[worst][c]);
            return clamp(std::move(x));
        };

        const std::vector<double> xr = along(1.0);
        const double fr = eval(xr);
        if (fr < fv[best]) {
            if (can_eval()) {
                const std::vector<double> xe = along(2.0);
                const double fe = eval(xe);
                if (fe < fr) {
                    verts[worst] = xe;
                    fv[worst] = fe;
                    continue;
                }
            }
            verts[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        if (fr < fv[second_worst]) {
            verts[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        if (!can_eval()) return finalize();
        // Outside contraction against a mere reflection gain, inside otherwise.
        const bool outside = fr < fv[worst];
        const std::vector<double> xc = along(outside ? 0.5 : -0.5);
        const double fc = eval(xc);
        if ((outside && fc <= fr) || (!outside && fc < fv[worst])) {
            verts[worst] = xc;
            fv[worst] = fc;
            continue;
        }
        // Shrink toward the best vertex; abandon cleanly if the budget dies.
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            if (!can_eval()) return finalize();
            std::vector<double> v(n);
            for (std::size_t c = 0; c < n; ++c)
                v[c] = verts[best][c] + 0.5 * (verts[i][c] - verts[best][c]);
            const double fs = eval(v);
            verts[i] = std::move(v);
            fv[i] = fs;
        }
    }
}

SimplexResult multi_start_minimize(
    const std::function<double(const std::vector<double>&)>& fn,
    const std::vector<double>& lower, const std::vector<double>& upper,
    std::size_t n_starts, std::uint64_t seed, std::size_t budget) {
    check_box(lower, upper);
    require(n_starts >= 1, "need at least one start");
    require(budget >= 1, "evaluation budget must be positive");

    const std::size_t n = lower.size();
    const std::size_t slice = (budget + n_starts - 1) / n_starts;
    std::mt19937_64 gen = seeded_engine(seed, 0);

    SimplexResult best;
    bool all_converged = true;
    std::size_t used = 0;
    for (std::size_t s = 0; s < n_starts; ++s) {
        if (used >= budget) {
            all_converged = false;
            break;
        }
        std::vector<double> x0(n);
        for (std::size_t i = 0; i < n; ++i)
            x0[i] = lower[i] + (upper[i] - lower[i]) * canonical(gen);
        SimplexResult r =
            minimize(fn, lower, upper, x0, std::min(slice, budget - used));
        used += r.evaluations;
        all_converged = all_converged && r.converged;
        if (s == 0 || r.best_value < best.best_value) {
            best.best_point = r.best_point;
            best.best_value = r.best_value;
        }
    }
    best.evaluations = used;
    best.converged = all_converged;
    return best;
}

}  // namespace loguncert
