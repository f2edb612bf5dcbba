#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dualpricer {

/// Base class for every failure raised by the library. The CLI maps all of
/// these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the model's domain (non-positive strike, maturity, vol, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested engine cannot price the given contract (e.g. closed form asked
/// for an American exercise).
class EngineMismatch : public Error {
public:
    using Error::Error;
};

/// Binomial parameters violate d < exp((r - q) dt) < u.
class ArbitrageError : public Error {
public:
    using Error::Error;
};

/// A hedge configuration breaks one of the ordering constraints on strikes
/// and maturities. `constraint()` names the violated inequality.
class HedgeConstraintError : public Error {
public:
    explicit HedgeConstraintError(std::string constraint)
        : Error("hedge constraint violated: " + constraint), constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

/// The 3x3 weight system has a (numerically) vanishing determinant.
class SingularHedgeSystem : public Error {
public:
    explicit SingularHedgeSystem(double determinant);

    double determinant() const noexcept { return determinant_; }

private:
    double determinant_;
};

}  // namespace dualpricer
