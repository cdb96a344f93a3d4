#ifndef KRIGMEAN_CORR_HPP
#define KRIGMEAN_CORR_HPP

#include <Eigen/Core>
#include <map>

#include "krigmean/errors.hpp"

namespace krigmean {

// Exponent of the negative-power correlation model. Treated as an opaque
// calibration constant; configurable everywhere it appears.
inline constexpr double kDefaultBeta = 0.62590;

enum class CorrelationKind {
    NegativePower, // rho(d) = -t^(-beta (d/t)^2) for d > 0
    WhiteNoise,    // rho(d) = 0 for d > 0
    Tabulated      // explicit lag -> value map (test injection)
};

// Parametric correlation rule rho(delta). rho(0) = +1 for every kind.
struct CorrelationModel {
    CorrelationKind kind = CorrelationKind::NegativePower;
    double t = 183.0;            // decay parameter, same units as the lag; must be > 1
    double beta = kDefaultBeta;  // positive exponent
    std::map<double, double> table; // Tabulated only; exact lag match

    static CorrelationModel negative_power(double t, double beta = kDefaultBeta);
    static CorrelationModel white_noise();
    static CorrelationModel tabulated(std::map<double, double> table);
};

// Symmetric n x n correlation matrix with unit diagonal (Lambda = rho_il).
struct CorrelationMatrix {
    Eigen::Index n = 0;
    Eigen::MatrixXd entries;
};

// Correlations between the sample sites i = 1..n and the prediction index j
// (r = rho_ij). Valid in the prediction regime j >= n+1; j may be real.
struct CorrelationVector {
    Eigen::Index n = 0;
    double j = 0.0;
    Eigen::VectorXd entries;
};

// Evaluate rho at a nonnegative lag.
// NegativePower: -t^(-beta (delta/t)^2), in (-1, 0) for delta > 0 and
// strictly shrinking in magnitude as delta grows.
double eval_rho(const CorrelationModel& model, double delta);

// Lambda with entries rho(|i - l|), i, l = 1..n. The upper triangle is
// evaluated once and mirrored, so symmetry is exact.
CorrelationMatrix build_matrix(const CorrelationModel& model, Eigen::Index n);

// r with entries rho(|i - j|), i = 1..n. Requires j >= n+1.
CorrelationVector build_vector(const CorrelationModel& model, Eigen::Index n, double j);

} // namespace krigmean

#endif
