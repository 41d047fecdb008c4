#pragma once

#include "steady/grid.hpp"
#include "steady/spline.hpp"

#include <vector>

namespace steady {

/// Continuous slope b(x, y): periodic cubic spline in x on each stored row,
/// linear between rows.
class SlopeInterpolator {
public:
    explicit SlopeInterpolator(const ScalarField& b);

    double operator()(double x, double y) const;
    const StripGrid& grid() const noexcept { return grid_; }

private:
    StripGrid grid_;
    std::vector<PeriodicCubicSpline> rows_;
};

/// b = v¹/v². Throws TangencyDetected if min |v²| < vmin.
ScalarField slope_field(const VectorField& v, double vmin);

/// X(a, y) for dX/dy = b(X, y), X(a, 0) = a, by RK4 with one step per grid row.
/// The result lives on the universal cover (not wrapped to [0,1)).
double integrate_flow(const SlopeInterpolator& b, double a, double y);
double integrate_flow(const ScalarField& b, double a, double y);

/// The label a with X(a, y) = x, integrating the same ODE downward from y.
double backtrace(const SlopeInterpolator& b, double x, double y);
double backtrace(const ScalarField& b, double x, double y);

/// Forward characteristics X(x_i, y_j) for every grid label.
struct FlowMap {
    ScalarField X;
    ScalarField b;

    static FlowMap compute(const ScalarField& b);
};

/// ω(x_i, y_j) = ω₀(backtrace(b, x_i, y_j) mod 1), ω₀ read through a periodic
/// cubic spline.
ScalarField solve_transport(const VectorField& v, const BoundaryTrace& omega0, double vmin);

}  // namespace steady
