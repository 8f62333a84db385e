#include "gausskern/quadrature.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gausskern/errors.hpp"
#include "gausskern/kernels.hpp"

namespace gausskern
{

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, int max_depth)
{
    if (!(b >= a))
    {
        throw DomainError("integrate_adaptive: requires a <= b");
    }
    if (a == b)
    {
        return {};
    }
    double error = 0.0;
    double l1    = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, static_cast<unsigned>(max_depth), rel_tol, &error, &l1);
    const bool ok = error <= rel_tol * l1 || error <= std::numeric_limits<double>::min();
    return {value, error, l1, ok};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options)
{
    if (options.panels < 1)
    {
        throw DomainError("integrate: need at least one panel");
    }
    const auto breaks = kernels::linspace(a, b, options.panels + 1);
    const auto sum    = kernels::integrate_panels(f, breaks, options.rel_tol, options.max_depth);
    return {sum.value, sum.error, sum.l1, sum.converged};
}

} // namespace gausskern
