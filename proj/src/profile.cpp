#include "steady/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace steady {

ProfileFunction::ProfileFunction(double period, std::vector<double> values, std::vector<double> derivatives)
    : period_(period), values_(std::move(values)), derivatives_(std::move(derivatives)) {
    if (!(period_ > 0.0)) throw std::invalid_argument("ProfileFunction: period must be positive");
    if (values_.empty() || values_.size() != derivatives_.size())
        throw std::invalid_argument("ProfileFunction: tables must be non-empty and of equal length");
}

ProfileFunction ProfileFunction::from_functions(double period, std::size_t samples,
                                                const std::function<double(double)>& F,
                                                const std::function<double(double)>& Fprime) {
    std::vector<double> v(samples), d(samples);
    for (std::size_t m = 0; m < samples; ++m) {
        const double xi = period * static_cast<double>(m) / static_cast<double>(samples);
        v[m] = F(xi);
        d[m] = Fprime(xi);
    }
    return ProfileFunction(period, std::move(v), std::move(d));
}

ProfileFunction ProfileFunction::zero(double period, std::size_t samples) {
    return ProfileFunction(period, std::vector<double>(samples, 0.0), std::vector<double>(samples, 0.0));
}

double ProfileFunction::sample_point(std::size_t m) const noexcept {
    return period_ * static_cast<double>(m) / static_cast<double>(values_.size());
}

double ProfileFunction::value(double xi) const noexcept {
    const std::size_t n = values_.size();
    const double step = period_ / static_cast<double>(n);
    const double u = xi / step;
    const double fl = std::floor(u);
    const double t = u - fl;
    long long k = static_cast<long long>(fl) % static_cast<long long>(n);
    if (k < 0) k += static_cast<long long>(n);
    const std::size_t k0 = static_cast<std::size_t>(k);
    const std::size_t k1 = (k0 + 1) % n;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * values_[k0] + (t3 - 2 * t2 + t) * step * derivatives_[k0] +
           (-2 * t3 + 3 * t2) * values_[k1] + (t3 - t2) * step * derivatives_[k1];
}

double ProfileFunction::derivative(double xi) const noexcept { return interpolate(derivatives_, xi); }

double ProfileFunction::interpolate(const std::vector<double>& table, double xi) const noexcept {
    const std::size_t n = table.size();
    const double u = xi / period_ * static_cast<double>(n);
    const double fl = std::floor(u);
    const double t = u - fl;
    long long k = static_cast<long long>(fl) % static_cast<long long>(n);
    if (k < 0) k += static_cast<long long>(n);
    const std::size_t k0 = static_cast<std::size_t>(k);
    const std::size_t k1 = (k0 + 1) % n;
    return (1.0 - t) * table[k0] + t * table[k1];
}

}  // namespace steady
