#include "krigmean/corr.hpp"

#include <cmath>
#include <utility>

namespace krigmean {

CorrelationModel CorrelationModel::negative_power(double t, double beta) {
    if (!(t > 1.0))
        throw InvalidParameterError("negative-power model requires t > 1, got t = " +
                                    std::to_string(t));
    if (!(beta > 0.0))
        throw InvalidParameterError("negative-power model requires beta > 0, got beta = " +
                                    std::to_string(beta));
    CorrelationModel m;
    m.kind = CorrelationKind::NegativePower;
    m.t = t;
    m.beta = beta;
    return m;
}

CorrelationModel CorrelationModel::white_noise() {
    CorrelationModel m;
    m.kind = CorrelationKind::WhiteNoise;
    return m;
}

CorrelationModel CorrelationModel::tabulated(std::map<double, double> table) {
    CorrelationModel m;
    m.kind = CorrelationKind::Tabulated;
    m.table = std::move(table);
    return m;
}

double eval_rho(const CorrelationModel& model, double delta) {
    if (!(delta >= 0.0))
        throw InvalidParameterError("lag must be nonnegative, got " + std::to_string(delta));
    if (delta == 0.0)
        return 1.0;

    switch (model.kind) {
    case CorrelationKind::NegativePower: {
        if (!(model.t > 1.0))
            throw InvalidParameterError("negative-power model requires t > 1, got t = " +
                                        std::to_string(model.t));
        const double x = delta / model.t;
        return -std::pow(model.t, -model.beta * x * x);
    }
    case CorrelationKind::WhiteNoise:
        return 0.0;
    case CorrelationKind::Tabulated: {
        auto it = model.table.find(delta);
        if (it == model.table.end())
            throw MissingLagError(delta);
        return it->second;
    }
    }
    throw InvalidParameterError("unknown correlation kind");
}

CorrelationMatrix build_matrix(const CorrelationModel& model, Eigen::Index n) {
    if (n < 1)
        throw InvalidParameterError("empty sample: correlation matrix needs n >= 1");

    CorrelationMatrix m;
    m.n = n;
    m.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m.entries(i, i) = 1.0;
        for (Eigen::Index l = i + 1; l < n; ++l) {
            const double rho = eval_rho(model, static_cast<double>(l - i));
            m.entries(i, l) = rho;
            m.entries(l, i) = rho; // mirror, exact symmetry
        }
    }
    return m;
}

CorrelationVector build_vector(const CorrelationModel& model, Eigen::Index n, double j) {
    if (n < 1)
        throw InvalidParameterError("empty sample: correlation vector needs n >= 1");
    if (!(j >= static_cast<double>(n) + 1.0))
        throw OutOfRegimeError("prediction index j = " + std::to_string(j) +
                               " below the regime j >= n+1 = " + std::to_string(n + 1));

    CorrelationVector v;
    v.n = n;
    v.j = j;
    v.entries.resize(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v.entries(i) = eval_rho(model, std::abs(static_cast<double>(i + 1) - j));
    return v;
}

} // namespace krigmean
