#include "steady/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace steady {

BaseFlow BaseFlow::from_fields(VectorField v0, ScalarField p0) {
    BaseFlow b{std::move(v0), std::move(p0)};
    b.J0 = flux_through_C(b.v0);
    double m = INFINITY;
    for (double v : b.v0.comp2.values()) m = std::min(m, std::abs(v));
    b.vbar2 = m;
    return b;
}

BaseFlow BaseFlow::uniform(const StripGrid& grid, double speed) {
    return from_fields(VectorField(ScalarField(grid, 0.0), ScalarField(grid, speed)), ScalarField(grid, 0.0));
}

BaseFlow BaseFlow::harmonic(const StripGrid& grid, double eps) {
    constexpr double tau = 2.0 * std::numbers::pi;
    auto v1 = ScalarField::sample(grid, [&](double x, double y) { return eps * std::exp(-tau * y) * std::cos(tau * x); });
    auto v2 = ScalarField::sample(grid, [&](double x, double y) { return 1.0 - eps * std::exp(-tau * y) * std::sin(tau * x); });
    ScalarField p0(grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double a = v1.values()[k], b = v2.values()[k];
        p0.values()[k] = 0.5 - 0.5 * (a * a + b * b);
    }
    return from_fields(VectorField(std::move(v1), std::move(v2)), std::move(p0));
}

}  // namespace steady
