#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace eplab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// The triple A|C|B partition needs strictly increasing couplings.
class UnsupportedPartition : public Error
{
public:
    using Error::Error;
};

class BlocksNotDecoupled : public Error
{
public:
    using Error::Error;
};

/// Exact arithmetic was requested but the couplings carry no exact value.
class UnsupportedExact : public Error
{
public:
    using Error::Error;
};

class NotEven : public Error
{
public:
    NotEven(std::string const& what, double offending)
        : Error(what), offending_(offending)
    {}

    double offending() const noexcept { return offending_; }

private:
    double offending_;
};

/// Root finder or eigensolver ran out of iterations. Carries the best
/// approximations available when it gave up.
class ConvergenceError : public Error
{
public:
    ConvergenceError(std::string const& what, std::vector<std::complex<double>> partial)
        : Error(what), partial_(std::move(partial))
    {}

    std::vector<std::complex<double>> const& partial() const noexcept { return partial_; }

private:
    std::vector<std::complex<double>> partial_;
};

/// The chain seeded at e_1 did not terminate in the kernel of (C - eI).
class NotDefectiveEnough : public Error
{
public:
    NotDefectiveEnough(std::string const& what, double residual)
        : Error(what), residual_(residual)
    {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

class ConditioningError : public Error
{
public:
    ConditioningError(std::string const& what, double rcond)
        : Error(what), rcond_(rcond)
    {}

    double rcond() const noexcept { return rcond_; }

private:
    double rcond_;
};

class SingularSystem : public Error
{
public:
    using Error::Error;
};

class NotEpTime : public Error
{
public:
    using Error::Error;
};

class CapExceeded : public Error
{
public:
    using Error::Error;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace eplab
