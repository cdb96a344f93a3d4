#include "krigmean/kriging.hpp"

#include <cmath>
#include <utility>

namespace krigmean {

namespace {

constexpr double kDegenerateFxf = 1e-12;
constexpr double kSignConsistencyTol = 1e-6;

} // namespace

KrigingSystem::KrigingSystem(CorrelationMatrix lambda)
    : lambda_(std::move(lambda)), fact_(lambda_.entries) {
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(lambda_.n);
    lambda_inv_ones_ = fact_.solve(ones);
    fxf_ = ones.dot(lambda_inv_ones_);
}

KrigingSolution KrigingSystem::solve(const CorrelationVector& r) const {
    if (r.n != lambda_.n)
        throw InvalidParameterError("correlation vector has n = " + std::to_string(r.n) +
                                    ", matrix has n = " + std::to_string(lambda_.n));
    if (std::abs(fxf_) < kDegenerateFxf)
        throw DegenerateSchurError("|F' Lambda^-1 F| = " + std::to_string(std::abs(fxf_)) +
                                   " < 1e-12; Lagrange parameter undefined");

    const Eigen::VectorXd z = fact_.solve(r.entries);
    const double mu = (z.sum() - 1.0) / fxf_;

    KrigingSolution sol;
    sol.weights = z - mu * lambda_inv_ones_;
    sol.mu = mu;
    sol.j = r.j;
    sol.system_residual = (lambda_.entries * sol.weights +
                           Eigen::VectorXd::Constant(lambda_.n, mu) - r.entries)
                              .cwiseAbs()
                              .maxCoeff();
    return sol;
}

KrigingSolution solve_system(const CorrelationMatrix& lambda, const CorrelationVector& r) {
    return KrigingSystem(lambda).solve(r);
}

VarianceReport variances(const KrigingSolution& sol, const CorrelationMatrix& lambda,
                         const CorrelationVector& r) {
    if (sol.weights.size() != lambda.n || r.n != lambda.n)
        throw InvalidParameterError("variances: dimension mismatch");

    const double wr = sol.weights.dot(r.entries);
    const double wLw = sol.weights.dot(lambda.entries * sol.weights);

    VarianceReport rep;
    rep.statistic_variance = std::abs(wLw);
    rep.prediction_variance = 1.0 - 2.0 * std::abs(wr) + std::abs(wLw);

    // Sign resolution: upper signs when both quadratic terms are negative,
    // lower when both are nonnegative. Strictly opposite signs fall outside
    // the covered regimes.
    bool upper;
    if (wLw < 0.0 && wr <= 0.0) {
        rep.sign_case = SignCase::NegativeCorrelation;
        rep.mixed_sign = false;
        upper = true;
    } else if (wLw >= 0.0 && wr >= 0.0) {
        rep.sign_case = wr == 0.0 ? SignCase::WhiteNoise : SignCase::NonnegativeCorrelation;
        rep.mixed_sign = false;
        upper = false;
    } else {
        rep.sign_case = wLw < 0.0 ? SignCase::NegativeCorrelation : SignCase::NonnegativeCorrelation;
        rep.mixed_sign = true;
        upper = wLw < 0.0;
    }

    const double sign = upper ? 1.0 : -1.0;
    rep.statistic_variance_identity = -sign * (wr - sol.mu);
    rep.prediction_variance_identity = 1.0 + sign * (wr + sol.mu);

    if (!rep.mixed_sign) {
        const double ds = std::abs(rep.statistic_variance_identity - rep.statistic_variance);
        const double dp = std::abs(rep.prediction_variance_identity - rep.prediction_variance);
        if (ds > kSignConsistencyTol || dp > kSignConsistencyTol)
            throw SignRuleViolationError(
                "variance forms disagree in a pure-sign regime: |d_statistic| = " +
                std::to_string(ds) + ", |d_prediction| = " + std::to_string(dp));
    }
    return rep;
}

double constraint_residual(const KrigingSolution& sol, const CorrelationVector& r) {
    if (sol.weights.size() != r.n)
        throw InvalidParameterError("constraint_residual: dimension mismatch");
    return sol.weights.dot(r.entries) + sol.mu;
}

} // namespace krigmean
