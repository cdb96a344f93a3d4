#include "krigmean/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace krigmean {

namespace {

constexpr double kDegenerateFxf = 1e-12;
constexpr double kRouteConsistencyTol = 1e-10;

CorrelationModel with_parameter(const CorrelationModel& prototype, double t) {
    if (prototype.kind == CorrelationKind::NegativePower)
        return CorrelationModel::negative_power(t, prototype.beta);
    CorrelationModel m = prototype;
    m.t = t;
    return m;
}

} // namespace

ClassicSolution classic(const KrigingSystem& system, const Series& v) {
    const double fxf = system.fxf();
    if (std::abs(fxf) < kDegenerateFxf)
        throw DegenerateSchurError("classic estimator undefined: |F' Lambda^-1 F| = " +
                                   std::to_string(std::abs(fxf)));

    const Eigen::VectorXd vn = v.head(system.n());

    ClassicSolution sol;
    sol.fxf = fxf;
    sol.xi = 1.0 / (2.0 * fxf);
    sol.weights = system.lambda_inv_ones() / fxf;
    sol.statistic_variance = std::abs(1.0 / fxf);

    // Two routes to the same number: w'v and F' Lambda^-1 v / (F' Lambda^-1 F).
    const double via_weights = sol.weights.dot(vn);
    const double via_quad = system.factorization().solve(vn).sum() / fxf;
    const double scale = std::max({1.0, std::abs(via_weights), std::abs(via_quad)});
    if (std::abs(via_weights - via_quad) > kRouteConsistencyTol * scale)
        throw Error("classic estimator routes disagree: " + std::to_string(via_weights) +
                    " vs " + std::to_string(via_quad));
    sol.estimate = via_quad;
    return sol;
}

ClassicSolution classic(const CorrelationMatrix& lambda, const Series& v) {
    return classic(KrigingSystem(lambda), v);
}

ClassicLimitReport classic_limit_consistency(const CorrelationMatrix& lambda) {
    const KrigingSystem system(lambda);
    const double fxf = system.fxf();
    if (std::abs(fxf) < kDegenerateFxf)
        throw DegenerateSchurError("classic limit undefined: |F' Lambda^-1 F| = " +
                                   std::to_string(std::abs(fxf)));
    const double xi = 1.0 / (2.0 * fxf);

    // The collapsed correlation vector r = xi F; j is notional here.
    CorrelationVector r;
    r.n = lambda.n;
    r.j = static_cast<double>(lambda.n) + 1.0;
    r.entries = Eigen::VectorXd::Constant(lambda.n, xi);

    const KrigingSolution sol = system.solve(r);
    const Eigen::VectorXd classic_weights = system.lambda_inv_ones() / fxf;
    const VarianceReport var = variances(sol, lambda, r);

    ClassicLimitReport rep;
    rep.xi = xi;
    rep.mu = sol.mu;
    rep.max_weight_diff = (sol.weights - classic_weights).cwiseAbs().maxCoeff();
    rep.prediction_variance = var.prediction_variance;
    rep.statistic_variance = var.statistic_variance;
    rep.mu_ok = std::abs(sol.mu - (-xi)) <= 1e-9;
    rep.weights_ok = rep.max_weight_diff <= 1e-9;
    rep.prediction_ok = std::abs(var.prediction_variance - 1.0) <= 1e-8;
    rep.statistic_ok = std::abs(var.statistic_variance - std::abs(2.0 * xi)) <= 1e-9;
    return rep;
}

std::vector<ScanPoint> scan_residual(const CorrelationModel& model, Eigen::Index n,
                                     const Series& v, const std::vector<double>& j_grid) {
    const KrigingSystem system(build_matrix(model, n));
    const Eigen::VectorXd vn = v.head(n);

    std::vector<ScanPoint> points;
    points.reserve(j_grid.size());
    for (double j : j_grid) {
        const CorrelationVector r = build_vector(model, n, j);
        const KrigingSolution sol = system.solve(r);
        ScanPoint p;
        p.j = j;
        p.residual = constraint_residual(sol, r);
        p.estimate = sol.weights.dot(vn);
        p.statistic_variance = std::abs(sol.weights.dot(system.lambda().entries * sol.weights));
        points.push_back(p);
    }
    return points;
}

NumericalEstimate find_root(const CorrelationModel& model, Eigen::Index n, const Series& v,
                            const RootOptions& opts) {
    if (!(opts.j_lo >= static_cast<double>(n) + 1.0))
        throw OutOfRegimeError("find_root: j_lo = " + std::to_string(opts.j_lo) +
                               " below the regime j >= n+1");
    const double first = std::ceil(opts.j_lo);
    const double last = std::floor(opts.j_hi);
    if (first > last)
        throw InvalidParameterError("find_root: no integers in [" + std::to_string(opts.j_lo) +
                                    ", " + std::to_string(opts.j_hi) + "]");

    const KrigingSystem system(build_matrix(model, n));
    const Eigen::VectorXd vn = v.head(n);

    auto residual_at = [&](double j) {
        const CorrelationVector r = build_vector(model, n, j);
        return constraint_residual(system.solve(r), r);
    };

    // Integer scan: a scanned integer already inside root_tol is the root;
    // otherwise the first sign change wins and the argmin is the fallback.
    double best_j = first;
    double best_abs = std::numeric_limits<double>::infinity();
    double bracket_lo = 0.0, bracket_hi = 0.0, g_lo = 0.0, g_hi = 0.0;
    bool have_bracket = false;
    bool integer_hit = false;
    double prev_g = 0.0;
    bool have_prev = false;

    for (double j = first; j <= last; j += 1.0) {
        const double g = residual_at(j);
        if (std::abs(g) < best_abs) {
            best_abs = std::abs(g);
            best_j = j;
        }
        if (std::abs(g) <= opts.root_tol) {
            integer_hit = true;
            best_j = j;
            break;
        }
        if (have_prev && std::signbit(g) != std::signbit(prev_g)) {
            have_bracket = true;
            bracket_lo = j - 1.0;
            bracket_hi = j;
            g_lo = prev_g;
            g_hi = g;
            break; // smallest-j bracket
        }
        prev_g = g;
        have_prev = true;
    }

    double j_star;
    bool bracketed;
    if (integer_hit) {
        j_star = best_j;
        bracketed = true;
    } else if (have_bracket && !opts.integer_only) {
        double a = bracket_lo, b = bracket_hi, ga = g_lo;
        double m = a, gm = ga;
        for (int iter = 0; iter < 200; ++iter) {
            m = 0.5 * (a + b);
            gm = residual_at(m);
            if (std::abs(gm) <= opts.root_tol)
                break;
            if (std::signbit(gm) == std::signbit(ga)) {
                a = m;
                ga = gm;
            } else {
                b = m;
            }
            if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, b))
                break;
        }
        j_star = m;
        bracketed = true;
    } else if (have_bracket) {
        // Integer mode: the bracket endpoint closest to the crossing.
        j_star = std::abs(g_lo) <= std::abs(g_hi) ? bracket_lo : bracket_hi;
        bracketed = true;
    } else {
        j_star = best_j;
        bracketed = false;
    }

    const CorrelationVector r = build_vector(model, n, j_star);
    const KrigingSolution sol = system.solve(r);

    NumericalEstimate est;
    est.t = model.t;
    est.j_star = j_star;
    est.estimate = sol.weights.dot(vn);
    est.statistic_variance = std::abs(sol.weights.dot(system.lambda().entries * sol.weights));
    est.residual = constraint_residual(sol, r);
    est.bracketed = bracketed;
    return est;
}

std::vector<SweepEntry> sweep(const CorrelationModel& prototype, Eigen::Index n, const Series& v,
                              const std::vector<double>& t_list, const RootOptions& opts) {
    if (t_list.empty())
        throw InvalidParameterError("sweep: empty t list");

    std::vector<SweepEntry> entries(t_list.size());

    // Embarrassingly parallel across t: each entry owns its factorization
    // and writes only its own slot, so results are schedule-independent.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= t_list.size())
                return;
            SweepEntry& entry = entries[k];
            entry.t = t_list[k];
            try {
                const CorrelationModel model = with_parameter(prototype, t_list[k]);
                entry.result = find_root(model, n, v, opts);
                entry.result->t = t_list[k];
            } catch (const std::exception& e) {
                entry.error = e.what();
            }
        }
    };

    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t n_threads = std::min(hw, t_list.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t i = 0; i < n_threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return entries;
}

} // namespace krigmean
