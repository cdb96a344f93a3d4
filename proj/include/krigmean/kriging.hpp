#ifndef KRIGMEAN_KRIGING_HPP
#define KRIGMEAN_KRIGING_HPP

#include <Eigen/Core>

#include "krigmean/corr.hpp"
#include "krigmean/symsolve.hpp"

namespace krigmean {

// Solution of the bordered system
//   [ Lambda  F ] [ w  ]   [ r ]
//   [ F'      0 ] [ mu ] = [ 1 ]
// for one prediction index j. sum(w) = 1 and the recorded residual is the
// infinity norm of Lambda w + F mu - r.
struct KrigingSolution {
    Eigen::VectorXd weights;
    double mu = 0.0;
    double j = 0.0;
    double system_residual = 0.0;
};

enum class SignCase {
    NegativeCorrelation,    // w'r <= 0 and w'Lw < 0: upper signs
    NonnegativeCorrelation, // w'r >= 0 and w'Lw >= 0: lower signs
    WhiteNoise              // w'r = 0: lower signs, w'Lw = w'w
};

// Both variances in units of sigma^2. The absolute-value forms
//   statistic  = |w' Lambda w|
//   prediction = 1 - 2|w'r| + |w' Lambda w|
// are the primitives; the sign-resolved identities
//   statistic  = -/+ (w'r - mu)
//   prediction = 1 +/- (w'r + mu)
// are recomputed for cross-checking. When w'r and w' Lambda w carry strictly
// opposite signs neither sign rule applies; mixed_sign is set and the
// absolute-value values stand on their own.
struct VarianceReport {
    double statistic_variance = 0.0;
    double prediction_variance = 0.0;
    SignCase sign_case = SignCase::WhiteNoise;
    bool mixed_sign = false;
    double statistic_variance_identity = 0.0;
    double prediction_variance_identity = 0.0;
};

// Owns Lambda and its factorization so that one factorization serves the
// whole j scan. Lambda^-1 F and F' Lambda^-1 F are cached; each solve then
// costs a single back-substitution:
//   mu = (F' Lambda^-1 r - 1) / (F' Lambda^-1 F)
//   w  = Lambda^-1 (r - F mu)
// Immutable after construction; concurrent solve() calls are safe.
class KrigingSystem {
public:
    explicit KrigingSystem(CorrelationMatrix lambda);

    const CorrelationMatrix& lambda() const noexcept { return lambda_; }
    const Factorization& factorization() const noexcept { return fact_; }
    Eigen::Index n() const noexcept { return lambda_.n; }

    // F' Lambda^-1 F. Negative for the paper's indefinite Lambda.
    double fxf() const noexcept { return fxf_; }

    // Lambda^-1 F (shared by every solve and by the classic estimator).
    const Eigen::VectorXd& lambda_inv_ones() const noexcept { return lambda_inv_ones_; }

    KrigingSolution solve(const CorrelationVector& r) const;

private:
    CorrelationMatrix lambda_;
    Factorization fact_;
    Eigen::VectorXd lambda_inv_ones_;
    double fxf_ = 0.0;
};

// One-shot convenience: factor Lambda, solve for r.
KrigingSolution solve_system(const CorrelationMatrix& lambda, const CorrelationVector& r);

// Evaluate both variance forms and verify they agree within tol_consistency
// in pure-sign regimes (SignRuleViolationError otherwise).
VarianceReport variances(const KrigingSolution& sol, const CorrelationMatrix& lambda,
                         const CorrelationVector& r);

// w'r + mu, the quantity whose root enforces prediction variance = sigma^2.
double constraint_residual(const KrigingSolution& sol, const CorrelationVector& r);

} // namespace krigmean

#endif
