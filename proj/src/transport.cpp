#include "steady/transport.hpp"

#include "steady/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steady {

SlopeInterpolator::SlopeInterpolator(const ScalarField& b) : grid_(b.grid()) {
    rows_.reserve(grid_.ny());
    for (std::size_t j = 0; j < grid_.ny(); ++j) rows_.emplace_back(b.row(j));
}

double SlopeInterpolator::operator()(double x, double y) const {
    const double h = grid_.dy();
    const std::size_t last = grid_.ny() - 1;
    double u = std::clamp(y / h, 0.0, static_cast<double>(last));
    std::size_t j = std::min(static_cast<std::size_t>(u), last - 1);
    const double t = u - static_cast<double>(j);
    if (t == 0.0) return rows_[j](x);
    if (t == 1.0) return rows_[j + 1](x);
    return (1.0 - t) * rows_[j](x) + t * rows_[j + 1](x);
}

ScalarField slope_field(const VectorField& v, double vmin) {
    const auto& g = v.grid();
    ScalarField b(g);
    double smallest = INFINITY;
    bool pos = false, neg = false;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double v2 = v.comp2.values()[k];
        smallest = std::min(smallest, std::abs(v2));
        pos = pos || v2 > 0.0;
        neg = neg || v2 < 0.0;
        b.values()[k] = v.comp1.values()[k] / v2;
    }
    // v² changing sign vanishes somewhere between nodes.
    if (pos && neg)
        throw SolverError(ErrorKind::TangencyDetected, "v2 changes sign", 0.0);
    if (!(smallest >= vmin))
        throw SolverError(ErrorKind::TangencyDetected,
                          "min |v2| = " + format_number(smallest) + " below " + format_number(vmin), smallest);
    return b;
}

namespace {

// RK4 from y0 to y1 (either direction) with steps no longer than one row.
double rk4(const SlopeInterpolator& b, double x, double y0, double y1) {
    const double h = b.grid().dy();
    const double span = y1 - y0;
    if (span == 0.0) return x;
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(span) / h - 1e-9)));
    const double dy = span / n;
    double y = y0;
    for (int s = 0; s < n; ++s) {
        const double k1 = b(x, y);
        const double k2 = b(x + 0.5 * dy * k1, y + 0.5 * dy);
        const double k3 = b(x + 0.5 * dy * k2, y + 0.5 * dy);
        const double yn = s + 1 == n ? y1 : y0 + (s + 1) * dy;
        const double k4 = b(x + dy * k3, yn);
        x += dy / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        y = yn;
    }
    return x;
}

}  // namespace

double integrate_flow(const SlopeInterpolator& b, double a, double y) { return rk4(b, a, 0.0, y); }
double integrate_flow(const ScalarField& b, double a, double y) { return integrate_flow(SlopeInterpolator(b), a, y); }

double backtrace(const SlopeInterpolator& b, double x, double y) { return rk4(b, x, y, 0.0); }
double backtrace(const ScalarField& b, double x, double y) { return backtrace(SlopeInterpolator(b), x, y); }

FlowMap FlowMap::compute(const ScalarField& b) {
    const SlopeInterpolator interp(b);
    const auto& g = b.grid();
    FlowMap fm{ScalarField(g), b};
    for (std::size_t i = 0; i < g.nx(); ++i) {
        double x = g.x(i);
        fm.X(i, 0) = x;
        for (std::size_t j = 1; j < g.ny(); ++j) {
            x = rk4(interp, x, g.y(j - 1), g.y(j));
            fm.X(i, j) = x;
        }
    }
    return fm;
}

ScalarField solve_transport(const VectorField& v, const BoundaryTrace& omega0, double vmin) {
    const auto& g = v.grid();
    const SlopeInterpolator b(slope_field(v, vmin));
    const PeriodicCubicSpline w0(omega0.values);
    ScalarField omega(g);
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const double a = j == 0 ? g.x(i) : backtrace(b, g.x(i), g.y(j));
            omega(i, j) = j == 0 ? omega0[i] : w0(a - std::floor(a));
        }
    return omega;
}

}  // namespace steady
