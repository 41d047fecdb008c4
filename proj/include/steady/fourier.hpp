#pragma once

#include <complex>
#include <span>
#include <vector>

namespace steady::fourier {

using Coefficients = std::vector<std::complex<double>>;

// Real-to-complex transform of one period of n samples; n/2+1 coefficients,
// unnormalised (FFTW convention).
Coefficients forward(std::span<const double> samples);

// Inverse of forward(); writes n = out.size() samples, normalised.
void inverse(const Coefficients& coeffs, std::span<double> out);

// d/dx over the unit period. The Nyquist mode is dropped for odd orders.
void derivative(std::span<const double> in, std::span<double> out, int order = 1);

// Antiderivative of the mean-free part of `in`, normalised to vanish at x=0.
// The discarded mean is returned.
double antiderivative(std::span<const double> in, std::span<double> out);

double mean(std::span<const double> samples);

/// Band-limited interpolant of a periodic sample set on the unit circle.
/// Used where off-grid values must be exact for trigonometric data.
class TrigInterpolant {
public:
    TrigInterpolant() = default;
    explicit TrigInterpolant(std::span<const double> samples);

    double operator()(double x) const;
    double derivative(double x) const;
    std::size_t size() const noexcept { return n_; }

private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    std::vector<double> cos_;  // index k-1 for k = 1..n/2
    std::vector<double> sin_;
};

}  // namespace steady::fourier
