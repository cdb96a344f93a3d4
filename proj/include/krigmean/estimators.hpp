#ifndef KRIGMEAN_ESTIMATORS_HPP
#define KRIGMEAN_ESTIMATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "krigmean/kriging.hpp"
#include "krigmean/series.hpp"

namespace krigmean {

// Classic generalized least-squares estimator of the constant mean,
// the j -> infinity limit construction:
//   weights  = Lambda^-1 F / (F' Lambda^-1 F)
//   estimate = F' Lambda^-1 v / (F' Lambda^-1 F)
//   xi       = 1 / (2 F' Lambda^-1 F)
struct ClassicSolution {
    Eigen::VectorXd weights;
    double xi = 0.0;
    double fxf = 0.0;
    double estimate = 0.0;
    double statistic_variance = 0.0; // |1 / (F' Lambda^-1 F)|, units of sigma^2
};

ClassicSolution classic(const CorrelationMatrix& lambda, const Series& v);
ClassicSolution classic(const KrigingSystem& system, const Series& v);

// Executable check of the limit construction: with r = xi F the bordered
// system must return mu = -xi, the classic weights, prediction variance 1
// and statistic variance |2 xi|.
struct ClassicLimitReport {
    double xi = 0.0;
    double mu = 0.0;
    double max_weight_diff = 0.0;
    double prediction_variance = 0.0;
    double statistic_variance = 0.0;
    bool mu_ok = false;
    bool weights_ok = false;
    bool prediction_ok = false;
    bool statistic_ok = false;
    bool passed() const noexcept { return mu_ok && weights_ok && prediction_ok && statistic_ok; }
};

ClassicLimitReport classic_limit_consistency(const CorrelationMatrix& lambda);

struct ScanPoint {
    double j = 0.0;
    double residual = 0.0;           // w'r + mu
    double estimate = 0.0;           // w'v
    double statistic_variance = 0.0; // |w' Lambda w|
};

// Residual, estimate and variance at every j in the grid, reusing one
// Lambda factorization across the whole scan.
std::vector<ScanPoint> scan_residual(const CorrelationModel& model, Eigen::Index n,
                                     const Series& v, const std::vector<double>& j_grid);

struct RootOptions {
    double j_lo = 0.0; // must be >= n+1
    double j_hi = 0.0;
    double root_tol = 1e-8;
    bool integer_only = false;
};

// Result of the root search for one correlation parameter t.
// bracketed means a sign change was found between adjacent integers and (in
// continuous mode) refined until |residual| <= root_tol; without a bracket
// j_star is the integer argmin of |residual| (smallest j on ties).
// Integer-only mode never refines, so its residual is reported as scanned.
struct NumericalEstimate {
    double t = 0.0;
    double j_star = 0.0;
    double estimate = 0.0;           // w'v at j_star
    double statistic_variance = 0.0; // units of sigma^2
    double residual = 0.0;           // w'r + mu at j_star
    bool bracketed = false;
};

// Integer scan over [j_lo, j_hi] followed by bisection on real j across the
// first sign change (smallest-j bracket wins).
NumericalEstimate find_root(const CorrelationModel& model, Eigen::Index n, const Series& v,
                            const RootOptions& opts);

// One sweep entry per correlation parameter t; failures are recorded
// per entry so a single bad t cannot abort the sweep.
struct SweepEntry {
    double t = 0.0;
    std::optional<NumericalEstimate> result;
    std::string error;
};

// find_root once per t, in parallel, results ordered by t_list position.
// `prototype` supplies the model family (kind, beta); t is replaced per entry.
std::vector<SweepEntry> sweep(const CorrelationModel& prototype, Eigen::Index n, const Series& v,
                              const std::vector<double>& t_list, const RootOptions& opts);

} // namespace krigmean

#endif
