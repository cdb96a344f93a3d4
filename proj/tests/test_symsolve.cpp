#include <doctest.h>

#include <cmath>
#include <random>

#include "krigmean/corr.hpp"
#include "krigmean/symsolve.hpp"
#include "support/oracle.hpp"

using namespace krigmean;

namespace {

Eigen::MatrixXd random_symmetric(std::mt19937& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = static_cast<double>(n) + dist(rng); // diagonally dominant
        for (Eigen::Index l = i + 1; l < n; ++l) {
            const double x = dist(rng);
            a(i, l) = x;
            a(l, i) = x;
        }
    }
    return a;
}

Eigen::VectorXd random_vector(std::mt19937& rng, Eigen::Index n) {
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i)
        b(i) = dist(rng);
    return b;
}

} // namespace

TEST_CASE("identity factorization: exact solve, condition estimate 1") {
    const Factorization f(Eigen::MatrixXd::Identity(3, 3));
    CHECK(f.condition_estimate() == doctest::Approx(1.0));
    const Eigen::VectorXd b = (Eigen::VectorXd(3) << 1.5, -2.0, 0.25).finished();
    CHECK(f.solve(b) == b);
}

TEST_CASE("2x2 indefinite-leaning solve") {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, -0.9, -0.9, 1.0;
    const Factorization f(a);
    const Eigen::VectorXd x = f.solve((Eigen::VectorXd(2) << 1.0, 1.0).finished());
    CHECK(x(0) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(x(1) == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("scaled identity halves the right-hand side") {
    const Factorization f(2.0 * Eigen::MatrixXd::Identity(4, 4));
    const Eigen::VectorXd b = (Eigen::VectorXd(4) << 2.0, 4.0, -6.0, 1.0).finished();
    CHECK(f.solve(b) == 0.5 * b);
}

TEST_CASE("indefinite correlation matrix factors and solves tightly") {
    const auto lambda = build_matrix(CorrelationModel::negative_power(183.0), 10);
    const Factorization f(lambda.entries);

    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::VectorXd b = random_vector(rng, 10);
        const Eigen::VectorXd x = f.solve(b);
        const double resid = (lambda.entries * x - b).cwiseAbs().maxCoeff();
        CHECK(resid <= 1e-10);
    }
}

TEST_CASE("solve matches the Gauss-Jordan oracle on random symmetric systems") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 6);
        const Eigen::MatrixXd a = random_symmetric(rng, n);
        const Eigen::VectorXd b = random_vector(rng, n);
        const Eigen::VectorXd x = Factorization(a).solve(b);
        const auto ref = oracle::gauss_jordan_solve(oracle::from_eigen(a), oracle::from_eigen(b));
        for (Eigen::Index i = 0; i < n; ++i)
            CHECK(x(i) == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-9));
    }
}

TEST_CASE("round-trip residual bound on larger random systems") {
    std::mt19937 rng(13);
    for (Eigen::Index n : {5, 20, 50}) {
        const Eigen::MatrixXd a = random_symmetric(rng, n);
        const Factorization f(a);
        for (int rep = 0; rep < 5; ++rep) {
            const Eigen::VectorXd b = random_vector(rng, n);
            const Eigen::VectorXd x = f.solve(b);
            const double resid = (a * x - b).cwiseAbs().maxCoeff();
            CHECK(resid <= 1e-9 * (1.0 + b.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("multi-right-hand-side solve equals column-wise solves") {
    std::mt19937 rng(17);
    const Eigen::MatrixXd a = random_symmetric(rng, 6);
    const Factorization f(a);
    Eigen::MatrixXd rhs(6, 3);
    for (int c = 0; c < 3; ++c)
        rhs.col(c) = random_vector(rng, 6);
    const Eigen::MatrixXd sol = f.solve(rhs);
    for (int c = 0; c < 3; ++c)
        CHECK((sol.col(c) - f.solve(Eigen::VectorXd(rhs.col(c)))).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("quad_form on identities") {
    const Eigen::VectorXd ones7 = Eigen::VectorXd::Ones(7);
    CHECK(Factorization(Eigen::MatrixXd::Identity(7, 7)).quad_form(ones7, ones7) == 7.0);

    const Eigen::VectorXd ones4 = Eigen::VectorXd::Ones(4);
    CHECK(Factorization(2.0 * Eigen::MatrixXd::Identity(4, 4)).quad_form(ones4, ones4) == 2.0);
}

TEST_CASE("quad_form F'L^-1F is negative for the indefinite correlation matrix") {
    const auto lambda = build_matrix(CorrelationModel::negative_power(183.0), 10);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(10);
    const double fxf = Factorization(lambda.entries).quad_form(ones, ones);
    CHECK(fxf < 0.0);

    // Same number through the oracle.
    const auto z = oracle::gauss_jordan_solve(oracle::from_eigen(lambda.entries),
                                              oracle::from_eigen(ones));
    double ref = 0.0;
    for (double v : z)
        ref += v;
    CHECK(fxf == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("quad_form is symmetric in its arguments") {
    std::mt19937 rng(19);
    const Eigen::MatrixXd a = random_symmetric(rng, 8);
    const Factorization f(a);
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::VectorXd u = random_vector(rng, 8);
        const Eigen::VectorXd w = random_vector(rng, 8);
        const double uw = f.quad_form(u, w);
        const double wu = f.quad_form(w, u);
        CHECK(uw == doctest::Approx(wu).epsilon(1e-9));
    }
}

TEST_CASE("rejects non-symmetric and non-square input") {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 0.3, 0.300000001, 1.0;
    CHECK_THROWS_AS(Factorization{a}, InvalidParameterError);
    CHECK_THROWS_AS(Factorization{Eigen::MatrixXd::Zero(2, 3)}, InvalidParameterError);
    CHECK_THROWS_AS(Factorization{Eigen::MatrixXd()}, InvalidParameterError);
}

TEST_CASE("singular matrix raises with the pivot index") {
    Eigen::MatrixXd a(2, 2);
    a << 1.0, 1.0, 1.0, 1.0;
    CHECK_THROWS_AS(Factorization{a}, SingularMatrixError);
    try {
        Factorization f(a);
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot_index() == 1);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const Factorization f(Eigen::MatrixXd::Identity(3, 3));
    CHECK_THROWS_AS(f.solve(Eigen::VectorXd(Eigen::VectorXd::Ones(4))), InvalidParameterError);
    CHECK_THROWS_AS(f.quad_form(Eigen::VectorXd::Ones(3), Eigen::VectorXd::Ones(2)),
                    InvalidParameterError);
}
