#include "support/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

Matrix from_eigen(const Eigen::MatrixXd& a) {
    Matrix m(static_cast<std::size_t>(a.rows()),
             std::vector<double>(static_cast<std::size_t>(a.cols())));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index l = 0; l < a.cols(); ++l)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = a(i, l);
    return m;
}

std::vector<double> from_eigen(const Eigen::VectorXd& v) {
    return {v.data(), v.data() + v.size()};
}

std::vector<double> gauss_jordan_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw std::runtime_error("oracle: bad dimensions");
    for (const auto& row : a)
        if (row.size() != n)
            throw std::runtime_error("oracle: non-square matrix");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row][col]) > std::abs(a[piv][col]))
                piv = row;
        if (std::abs(a[piv][col]) < 1e-300)
            throw std::runtime_error("oracle: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);

        const double d = a[col][col];
        for (std::size_t k = 0; k < n; ++k)
            a[col][k] /= d;
        b[col] /= d;

        for (std::size_t row = 0; row < n; ++row) {
            if (row == col)
                continue;
            const double f = a[row][col];
            if (f == 0.0)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    return b;
}

BorderedSolution bordered_kriging(const krigmean::CorrelationMatrix& lambda,
                                  const krigmean::CorrelationVector& r) {
    const std::size_t n = static_cast<std::size_t>(lambda.n);
    Matrix a(n + 1, std::vector<double>(n + 1, 0.0));
    std::vector<double> rhs(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l)
            a[i][l] = lambda.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l));
        a[i][n] = 1.0;
        a[n][i] = 1.0;
        rhs[i] = r.entries(static_cast<Eigen::Index>(i));
    }
    rhs[n] = 1.0;

    std::vector<double> x = gauss_jordan_solve(std::move(a), std::move(rhs));
    BorderedSolution sol;
    sol.mu = x[n];
    x.pop_back();
    sol.weights = std::move(x);
    return sol;
}

} // namespace oracle
