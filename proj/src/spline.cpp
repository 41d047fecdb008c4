#include "steady/spline.hpp"

#include <cmath>
#include <stdexcept>

namespace steady {

std::vector<double> solve_cyclic_141(std::span<const double> rhs) {
    const std::size_t n = rhs.size();
    if (n < 3) throw std::invalid_argument("cyclic spline needs at least 3 knots");

    // Sherman–Morrison on the cyclic tridiagonal matrix (a=1, b=4, c=1).
    const double gamma = -4.0;
    std::vector<double> diag(n, 4.0);
    diag[0] = 4.0 - gamma;
    diag[n - 1] = 4.0 - 1.0 / gamma;

    auto thomas = [&](std::vector<double> d) {
        std::vector<double> cp(n), dp(n);
        cp[0] = 1.0 / diag[0];
        dp[0] = d[0] / diag[0];
        for (std::size_t i = 1; i < n; ++i) {
            const double m = diag[i] - cp[i - 1];
            cp[i] = 1.0 / m;
            dp[i] = (d[i] - dp[i - 1]) / m;
        }
        std::vector<double> x(n);
        x[n - 1] = dp[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
        return x;
    };

    std::vector<double> y = thomas(std::vector<double>(rhs.begin(), rhs.end()));
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = 1.0;
    std::vector<double> z = thomas(u);
    const double factor = (y[0] + y[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
    for (std::size_t i = 0; i < n; ++i) y[i] -= factor * z[i];
    return y;
}

PeriodicCubicSpline::PeriodicCubicSpline(std::span<const double> samples, double period)
    : period_(period), values_(samples.begin(), samples.end()) {
    const std::size_t n = values_.size();
    h_ = period_ / static_cast<double>(n);
    std::vector<double> rhs(n);
    const double s = 6.0 / (h_ * h_);
    for (std::size_t i = 0; i < n; ++i) {
        const double prev = values_[(i + n - 1) % n];
        const double next = values_[(i + 1) % n];
        rhs[i] = s * (next - 2.0 * values_[i] + prev);
    }
    moments_ = solve_cyclic_141(rhs);
}

double PeriodicCubicSpline::operator()(double x) const {
    const std::size_t n = values_.size();
    const double u = x / h_;
    const double fl = std::floor(u);
    const double t = u - fl;
    long long i = static_cast<long long>(fl) % static_cast<long long>(n);
    if (i < 0) i += static_cast<long long>(n);
    const std::size_t i0 = static_cast<std::size_t>(i);
    const std::size_t i1 = (i0 + 1) % n;
    const double a = 1.0 - t;
    return a * values_[i0] + t * values_[i1] +
           h_ * h_ / 6.0 * ((a * a * a - a) * moments_[i0] + (t * t * t - t) * moments_[i1]);
}

double PeriodicCubicSpline::derivative(double x) const {
    const std::size_t n = values_.size();
    const double u = x / h_;
    const double fl = std::floor(u);
    const double t = u - fl;
    long long i = static_cast<long long>(fl) % static_cast<long long>(n);
    if (i < 0) i += static_cast<long long>(n);
    const std::size_t i0 = static_cast<std::size_t>(i);
    const std::size_t i1 = (i0 + 1) % n;
    const double a = 1.0 - t;
    return (values_[i1] - values_[i0]) / h_ +
           h_ / 6.0 * (-(3.0 * a * a - 1.0) * moments_[i0] + (3.0 * t * t - 1.0) * moments_[i1]);
}

}  // namespace steady
