#pragma once

#include "steady/fourier.hpp"
#include "steady/grid.hpp"
#include "steady/profile.hpp"
#include "steady/report.hpp"
#include "steady/spline.hpp"

#include <vector>

namespace steady {

/// ψ₋(x) = J·x + P(x) on the bottom circle, P periodic with P(0) = 0.
struct StreamTrace {
    double slope = 0.0;  // J = mean of f
    BoundaryTrace periodic;
    fourier::TrigInterpolant interpolant;  // of `periodic`

    double operator()(double x) const { return slope * x + interpolant(x); }
    double derivative(double x) const { return slope + interpolant.derivative(x); }
};

/// Orientation-preserving circle map, T(x+1) = T(x) + 1, given by its lifted
/// values at the grid abscissae. Off-grid values use a periodic cubic spline of
/// T(x) - x.
class Diffeomorphism {
public:
    explicit Diffeomorphism(std::vector<double> lifted_samples);
    static Diffeomorphism identity(std::size_t nx);
    static Diffeomorphism shift(std::size_t nx, double s);

    double operator()(double x) const;
    std::size_t size() const noexcept { return samples_.size(); }
    const std::vector<double>& samples() const noexcept { return samples_; }

private:
    std::vector<double> samples_;
    PeriodicCubicSpline displacement_;
};

/// Sampled inverse of ψ₋ on ξ_m = m·J/N, extended by X(ξ+J) = X(ξ) + 1.
struct InverseMap {
    double period = 1.0;
    std::vector<double> values;

    double operator()(double xi) const;
};

StreamTrace build_stream_trace(const BoundaryTrace& f);

InverseMap invert_monotone(const StreamTrace& psi_minus, std::size_t samples);

/// F(ξ) = h⁻(X(ξ)), F'(ξ) = (h⁻)'(X(ξ)) / f(X(ξ)).
ProfileFunction build_profile(const BoundaryTrace& h_minus, const StreamTrace& psi_minus, std::size_t samples);

/// Profile table length used by the case solvers.
std::size_t profile_samples(const StripGrid& grid);

struct GsSolution {
    VectorField v;
    ScalarField p;
    SolveReport report;
    QuasiPeriodicField psi;
    ScalarField phi_init;  // harmonic extension used as the Picard start
    ProfileFunction profile;
};

GsSolution solve_case_D(const BoundaryTrace& f, const BoundaryTrace& h_minus, const BoundaryTrace& h_plus,
                        const Diffeomorphism& T, const StripGrid& grid, double tol = 1e-10, int max_iter = 200,
                        double compat_tol = 1e-8);

GsSolution solve_case_A(const BoundaryTrace& f_minus, const BoundaryTrace& f_plus, const BoundaryTrace& h_minus,
                        double flux, const StripGrid& grid, double tol = 1e-10, int max_iter = 200);

}  // namespace steady
