#include "krigmean/asymptotics.hpp"

#include <cmath>

#include "krigmean/kriging.hpp"

namespace krigmean {

namespace {

constexpr double kDegenerateFxf = 1e-12;
constexpr double kIdentityTol = 1e-12;

struct LimitQuantities {
    double fxf_inv;
    double xi;
    double mu;
    double statistic;
    double prediction;
};

LimitQuantities limits_for(const CorrelationMatrix& lambda) {
    const KrigingSystem system(lambda);
    if (std::abs(system.fxf()) < kDegenerateFxf)
        throw DegenerateSchurError("asymptotics undefined: |F' Lambda^-1 F| = " +
                                   std::to_string(std::abs(system.fxf())));
    LimitQuantities q;
    q.fxf_inv = 1.0 / system.fxf();
    q.xi = 1.0 / (2.0 * system.fxf());
    q.mu = q.xi - q.fxf_inv;
    if (std::abs(q.mu - (-q.xi)) > kIdentityTol * std::max(1.0, std::abs(q.xi)))
        throw Error("limit identity violated: xi - (F'L^-1F)^-1 = " + std::to_string(q.mu) +
                    " but -xi = " + std::to_string(-q.xi));
    q.statistic = std::abs(q.fxf_inv);
    // Bracket 2 xi - fxf_inv vanishes identically; the sign cannot matter.
    const double bracket = 2.0 * q.xi - q.fxf_inv;
    q.prediction = q.xi < 0.0 ? 1.0 + bracket : 1.0 - bracket;
    return q;
}

} // namespace

double mu_limit(const CorrelationMatrix& lambda) {
    return limits_for(lambda).mu;
}

AsymptoticReport decay_study(const CorrelationModel& model, const std::vector<int>& n_values) {
    if (n_values.empty())
        throw InvalidParameterError("decay_study: empty n ladder");
    for (std::size_t k = 1; k < n_values.size(); ++k)
        if (n_values[k] <= n_values[k - 1])
            throw InvalidParameterError("decay_study: n ladder must be strictly increasing");

    AsymptoticReport rep;
    rep.n_values = n_values;
    rep.abs_fxf_inv_decreasing = n_values.size() > 1;
    for (std::size_t k = 0; k < n_values.size(); ++k) {
        const LimitQuantities q = limits_for(build_matrix(model, n_values[k]));
        rep.fxf_inv.push_back(q.fxf_inv);
        rep.xi.push_back(q.xi);
        rep.mu_limit.push_back(q.mu);
        rep.statistic_variance_limit.push_back(q.statistic);
        rep.prediction_variance_limit.push_back(q.prediction);
        if (k > 0 && !(std::abs(rep.fxf_inv[k]) < std::abs(rep.fxf_inv[k - 1])))
            rep.abs_fxf_inv_decreasing = false;
    }
    return rep;
}

} // namespace krigmean
