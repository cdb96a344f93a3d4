#ifndef KRIGMEAN_ASYMPTOTICS_HPP
#define KRIGMEAN_ASYMPTOTICS_HPP

#include <vector>

#include "krigmean/corr.hpp"

namespace krigmean {

// Limit quantities per sample size n, evaluated on Lambda(n):
//   fxf_inv                   = (F' Lambda^-1 F)^-1
//   mu_limit                  = xi - fxf_inv            (identically -xi)
//   statistic_variance_limit  = |fxf_inv|
//   prediction_variance_limit = 1 +/- (2 xi - fxf_inv)  (identically 1)
// The n -> infinity decay of |fxf_inv| is an empirical observation over the
// tested ladder, reported as a flag and never asserted.
struct AsymptoticReport {
    std::vector<int> n_values;
    std::vector<double> fxf_inv;
    std::vector<double> xi;
    std::vector<double> mu_limit;
    std::vector<double> statistic_variance_limit;
    std::vector<double> prediction_variance_limit;
    bool abs_fxf_inv_decreasing = false;
};

// xi - (F' Lambda^-1 F)^-1; asserts the identity with -xi.
double mu_limit(const CorrelationMatrix& lambda);

// Evaluate the limit quantities over a strictly increasing ladder of n.
AsymptoticReport decay_study(const CorrelationModel& model, const std::vector<int>& n_values);

} // namespace krigmean

#endif
