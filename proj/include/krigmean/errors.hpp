#ifndef KRIGMEAN_ERRORS_HPP
#define KRIGMEAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace krigmean {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected model or operation parameter (t <= 1, n = 0, bad dimensions, ...).
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// Tabulated model queried at a lag it does not define.
class MissingLagError : public Error {
public:
    explicit MissingLagError(double lag)
        : Error("tabulated correlation model has no entry for lag " + std::to_string(lag)),
          lag_(lag) {}
    double lag() const noexcept { return lag_; }

private:
    double lag_;
};

// Prediction index j below the j >= n+1 regime.
class OutOfRegimeError : public Error {
public:
    using Error::Error;
};

// Pivot magnitude fell below the singularity threshold during factorization.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(std::ptrdiff_t pivot_index, double pivot, double threshold)
        : Error("matrix is numerically singular: pivot " + std::to_string(pivot_index) +
                " has magnitude " + std::to_string(pivot) + " < " + std::to_string(threshold)),
          pivot_index_(pivot_index) {}
    std::ptrdiff_t pivot_index() const noexcept { return pivot_index_; }

private:
    std::ptrdiff_t pivot_index_;
};

// |F' Lambda^-1 F| too small for the Schur step; the Lagrange parameter is undefined.
class DegenerateSchurError : public Error {
public:
    using Error::Error;
};

// Absolute-value and sign-resolved variance forms disagree in a pure-sign regime.
class SignRuleViolationError : public Error {
public:
    using Error::Error;
};

// CSV cell that does not parse as a number; carries the 1-based data row.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t row) : Error(what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

// Missing input file or unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace krigmean

#endif
