#pragma once

#include <span>
#include <vector>

namespace steady {

/// C² periodic cubic spline through equispaced samples on [0, period).
class PeriodicCubicSpline {
public:
    PeriodicCubicSpline() = default;
    explicit PeriodicCubicSpline(std::span<const double> samples, double period = 1.0);

    double operator()(double x) const;
    double derivative(double x) const;

    std::size_t size() const noexcept { return values_.size(); }
    double period() const noexcept { return period_; }

private:
    double period_ = 1.0;
    double h_ = 1.0;
    std::vector<double> values_;
    std::vector<double> moments_;  // second derivatives at the knots
};

// Solves the cyclic system M[i-1] + 4 M[i] + M[i+1] = rhs[i].
std::vector<double> solve_cyclic_141(std::span<const double> rhs);

}  // namespace steady
