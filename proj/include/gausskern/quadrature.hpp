#ifndef GAUSSKERN_QUADRATURE_HPP
#define GAUSSKERN_QUADRATURE_HPP

#include <functional>

namespace gausskern
{

struct QuadratureOptions
{
    /// Target total |error| <= rel_tol · ∫|f|.
    double rel_tol = 1.0e-11;
    /// Bisection depth per panel.
    int max_depth = 12;
    /// [a, b] is split into this many equal panels before adaptation.
    int panels = 64;
};

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
    /// ∫|f| as seen by the rule.
    double l1 = 0.0;
    bool converged = true;
};

/// Adaptive 15-point Gauss-Kronrod on one interval, stopping once the
/// error estimate is at most rel_tol · ∫|f| or max_depth bisections deep.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, int max_depth);

/// Composite adaptive quadrature over equal panels; panels may be processed
/// concurrently and are summed in a fixed order.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

} // namespace gausskern

#endif
