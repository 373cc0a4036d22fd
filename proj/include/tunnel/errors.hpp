#pragma once

#include <stdexcept>
#include <string>

namespace tunnel {

/// Input outside the mathematical domain of an operation (poles, empty ranges, bad levels).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to reach its tolerance. Carries the best estimate
/// it had and the error estimate achieved at that point.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double estimate, double achieved_error)
        : std::runtime_error(what), estimate_(estimate), achieved_error_(achieved_error) {}

    double estimate() const noexcept { return estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double estimate_;
    double achieved_error_;
};

/// Grid-based result not converged under refinement.
class AccuracyError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A finite-box construction whose assumptions do not hold (e.g. a zero mode that
/// is not isolated from the rest of the spectrum).
class DiagnosticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tunnel
