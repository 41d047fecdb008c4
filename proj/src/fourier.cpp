#include "steady/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace steady::fourier {
namespace {

// FFTW planning is not thread safe; execution on plan-owned buffers is safe as
// long as every thread has its own plan, hence the thread_local cache below.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class RealPlan {
public:
    explicit RealPlan(int n) : n_(n) {
        real_ = fftw_alloc_real(static_cast<std::size_t>(n));
        spec_ = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
        std::lock_guard lock(planner_mutex());
        r2c_ = fftw_plan_dft_r2c_1d(n, real_, spec_, FFTW_ESTIMATE);
        c2r_ = fftw_plan_dft_c2r_1d(n, spec_, real_, FFTW_ESTIMATE);
    }
    ~RealPlan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(r2c_);
        fftw_destroy_plan(c2r_);
        fftw_free(real_);
        fftw_free(spec_);
    }
    RealPlan(const RealPlan&) = delete;
    RealPlan& operator=(const RealPlan&) = delete;

    Coefficients forward(std::span<const double> in) {
        std::copy(in.begin(), in.end(), real_);
        fftw_execute(r2c_);
        Coefficients out(static_cast<std::size_t>(n_ / 2 + 1));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = {spec_[k][0], spec_[k][1]};
        return out;
    }

    void inverse(const Coefficients& c, std::span<double> out) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            spec_[k][0] = c[k].real();
            spec_[k][1] = c[k].imag();
        }
        fftw_execute(c2r_);  // destroys spec_, which is fine
        const double scale = 1.0 / n_;
        for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = real_[i] * scale;
    }

private:
    int n_;
    double* real_ = nullptr;
    fftw_complex* spec_ = nullptr;
    fftw_plan r2c_ = nullptr;
    fftw_plan c2r_ = nullptr;
};

RealPlan& plan_for(std::size_t n) {
    thread_local std::map<std::size_t, std::unique_ptr<RealPlan>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<RealPlan>(static_cast<int>(n));
    return *slot;
}

constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace

Coefficients forward(std::span<const double> samples) {
    return plan_for(samples.size()).forward(samples);
}

void inverse(const Coefficients& coeffs, std::span<double> out) {
    plan_for(out.size()).inverse(coeffs, out);
}

void derivative(std::span<const double> in, std::span<double> out, int order) {
    const std::size_t n = in.size();
    auto c = forward(in);
    const bool even = n % 2 == 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const bool nyquist = even && k == n / 2;
        if (nyquist && order % 2 == 1) {
            c[k] = 0.0;
            continue;
        }
        std::complex<double> factor{1.0, 0.0};
        const std::complex<double> ik{0.0, two_pi * static_cast<double>(k)};
        for (int o = 0; o < order; ++o) factor *= ik;
        c[k] *= factor;
    }
    inverse(c, out);
}

double antiderivative(std::span<const double> in, std::span<double> out) {
    const std::size_t n = in.size();
    auto c = forward(in);
    const double avg = c[0].real() / static_cast<double>(n);
    c[0] = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (n % 2 == 0 && k == n / 2) {
            c[k] = 0.0;
            continue;
        }
        c[k] /= std::complex<double>{0.0, two_pi * static_cast<double>(k)};
    }
    inverse(c, out);
    const double at_zero = out[0];
    for (auto& v : out) v -= at_zero;
    return avg;
}

double mean(std::span<const double> samples) {
    // Rectangle rule on a periodic grid; exact for resolved trig polynomials.
    double s = 0.0;
    for (double v : samples) s += v;
    return s / static_cast<double>(samples.size());
}

TrigInterpolant::TrigInterpolant(std::span<const double> samples) : n_(samples.size()) {
    const auto c = forward(samples);
    const double inv_n = 1.0 / static_cast<double>(n_);
    mean_ = c[0].real() * inv_n;
    const std::size_t kmax = n_ / 2;
    cos_.assign(kmax, 0.0);
    sin_.assign(kmax, 0.0);
    for (std::size_t k = 1; k <= kmax; ++k) {
        // Split the Nyquist mode evenly so the interpolant stays real.
        const double w = (n_ % 2 == 0 && k == kmax) ? 1.0 : 2.0;
        cos_[k - 1] = w * c[k].real() * inv_n;
        sin_[k - 1] = -w * c[k].imag() * inv_n;
    }
}

double TrigInterpolant::operator()(double x) const {
    double s = mean_;
    const double theta = two_pi * x;
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    double ck = c1, sk = s1;
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        if (k > 0 && k % 16 == 0) {
            // Re-seed the recurrence to bound accumulated rounding.
            ck = std::cos(theta * static_cast<double>(k + 1));
            sk = std::sin(theta * static_cast<double>(k + 1));
        }
        s += cos_[k] * ck + sin_[k] * sk;
        const double nc = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = nc;
    }
    return s;
}

double TrigInterpolant::derivative(double x) const {
    double s = 0.0;
    const double theta = two_pi * x;
    const double c1 = std::cos(theta), s1 = std::sin(theta);
    double ck = c1, sk = s1;
    const bool even = n_ % 2 == 0;
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        if (k > 0 && k % 16 == 0) {
            ck = std::cos(theta * static_cast<double>(k + 1));
            sk = std::sin(theta * static_cast<double>(k + 1));
        }
        const double kk = two_pi * static_cast<double>(k + 1);
        if (!(even && k + 1 == n_ / 2)) s += kk * (sin_[k] * ck - cos_[k] * sk);
        const double nc = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = nc;
    }
    return s;
}

}  // namespace steady::fourier
