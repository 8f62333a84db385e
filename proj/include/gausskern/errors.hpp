#ifndef GAUSSKERN_ERRORS_HPP
#define GAUSSKERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gausskern
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

class OverflowError : public Error
{
public:
    using Error::Error;
};

/// An iterative kernel (Newton, SVD, eigen-solver, quadrature) hit its cap.
class ConvergenceFailure : public Error
{
public:
    using Error::Error;
};

///
/// Raised by the pivoted Cholesky solve when a pivot drops below the
/// relative threshold. `order()` is the exponential-sum order N when the
/// failure came out of a coefficient solve, -1 otherwise.
///
class NotPositiveDefinite : public Error
{
public:
    NotPositiveDefinite(const std::string& what, int order = -1)
        : Error(what), order_(order)
    {
    }

    int order() const noexcept { return order_; }

private:
    int order_;
};

/// Pencil eigenvalues left the imaginary axis beyond tolerance.
class ProjectionFailure : public Error
{
public:
    ProjectionFailure(const std::string& what, int order)
        : Error(what), order_(order)
    {
    }

    int order() const noexcept { return order_; }

private:
    int order_;
};

} // namespace gausskern

#endif
