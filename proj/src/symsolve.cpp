#include "krigmean/symsolve.hpp"

#include <cmath>
#include <limits>

namespace krigmean {

namespace {

void require_symmetric(const Eigen::MatrixXd& A) {
    if (A.rows() != A.cols())
        throw InvalidParameterError("factorization requires a square matrix, got " +
                                    std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    if (A.rows() == 0)
        throw InvalidParameterError("factorization requires n >= 1");
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index l = i + 1; l < A.cols(); ++l)
            if (A(i, l) != A(l, i))
                throw InvalidParameterError("matrix is not exactly symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(l) + ")");
}

} // namespace

Factorization::Factorization(const Eigen::MatrixXd& A) : n_(A.rows()) {
    require_symmetric(A);

    lu_.compute(A);

    const double max_entry = A.cwiseAbs().maxCoeff();
    const double singular_tol = kSingularTolScale * max_entry;
    const Eigen::VectorXd pivots = lu_.matrixLU().diagonal();
    for (Eigen::Index k = 0; k < n_; ++k) {
        const double p = std::abs(pivots(k));
        if (!(p > singular_tol))
            throw SingularMatrixError(k, p, singular_tol);
    }

    const double rcond = lu_.rcond();
    condition_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

Eigen::VectorXd Factorization::solve(const Eigen::VectorXd& b) const {
    if (b.size() != n_)
        throw InvalidParameterError("solve: right-hand side has length " +
                                    std::to_string(b.size()) + ", expected " + std::to_string(n_));
    return lu_.solve(b);
}

Eigen::MatrixXd Factorization::solve(const Eigen::MatrixXd& B) const {
    if (B.rows() != n_)
        throw InvalidParameterError("solve: right-hand sides have " + std::to_string(B.rows()) +
                                    " rows, expected " + std::to_string(n_));
    return lu_.solve(B);
}

double Factorization::quad_form(const Eigen::VectorXd& u, const Eigen::VectorXd& w) const {
    if (u.size() != n_ || w.size() != n_)
        throw InvalidParameterError("quad_form: dimension mismatch");
    return u.dot(solve(w));
}

} // namespace krigmean
