#ifndef KRIGMEAN_SYMSOLVE_HPP
#define KRIGMEAN_SYMSOLVE_HPP

#include <Eigen/Dense>

#include "krigmean/errors.hpp"

namespace krigmean {

// Factor-once / solve-many wrapper for dense symmetric real matrices.
//
// The correlation matrices produced by the negative-power model are
// indefinite (off-diagonals near -1), so the factorization must not assume
// positive definiteness; row-pivoted LU qualifies. Immutable after
// construction; concurrent solves are safe.
class Factorization {
public:
    // Pivots with magnitude below singular_tol_scale * max|A| raise
    // SingularMatrixError carrying the pivot index.
    static constexpr double kSingularTolScale = 1e-12;

    // A must be square and exactly symmetric (as constructed by build_matrix).
    explicit Factorization(const Eigen::MatrixXd& A);

    Eigen::Index size() const noexcept { return n_; }

    // 1-norm condition estimate; 1 for the identity.
    double condition_estimate() const noexcept { return condition_; }

    // x with A x = b.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

    // Column-wise multi-right-hand-side solve.
    Eigen::MatrixXd solve(const Eigen::MatrixXd& B) const;

    // u' A^-1 w; symmetric in (u, w) since A is symmetric.
    double quad_form(const Eigen::VectorXd& u, const Eigen::VectorXd& w) const;

private:
    Eigen::Index n_ = 0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double condition_ = 0.0;
};

} // namespace krigmean

#endif
