#pragma once

#include <functional>
#include <vector>

namespace steady {

/// Bernoulli profile F(ξ) and its derivative, J-periodic in the stream value
/// ξ, stored as tables on ξ_m = m·J/N. F is read back by cubic Hermite
/// interpolation of (F, F'), F' by periodic linear interpolation.
class ProfileFunction {
public:
    ProfileFunction(double period, std::vector<double> values, std::vector<double> derivatives);

    static ProfileFunction from_functions(double period, std::size_t samples,
                                          const std::function<double(double)>& F,
                                          const std::function<double(double)>& Fprime);
    static ProfileFunction zero(double period, std::size_t samples = 16);

    double period() const noexcept { return period_; }
    std::size_t size() const noexcept { return values_.size(); }
    double sample_point(std::size_t m) const noexcept;

    double value(double xi) const noexcept;
    double derivative(double xi) const noexcept;

    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<double>& derivatives() const noexcept { return derivatives_; }

private:
    double interpolate(const std::vector<double>& table, double xi) const noexcept;

    double period_;
    std::vector<double> values_;
    std::vector<double> derivatives_;
};

}  // namespace steady
