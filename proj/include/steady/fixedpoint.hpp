#pragma once

#include "steady/grid.hpp"
#include "steady/report.hpp"

#include <optional>
#include <vector>

namespace steady {

/// Irrotational reference solution (v₀, p₀) the perturbation is built around.
struct BaseFlow {
    VectorField v0;
    ScalarField p0;
    double J0 = 0.0;     // flux of v₀ through x = 0
    double vbar2 = 0.0;  // min over the grid of |v₀²|

    static BaseFlow from_fields(VectorField v0, ScalarField p0);
    /// v₀ = (0, c), p₀ = 0.
    static BaseFlow uniform(const StripGrid& grid, double speed = 1.0);
    /// v₀ = ∇(y + ε e^{-2πy} sin(2πx)/(2π)), p₀ = 1/2 - |v₀|²/2.
    static BaseFlow harmonic(const StripGrid& grid, double epsilon);
};

enum class FixedPointCase { B, C, G };

/// Boundary data of one fixed-point problem, as perturbations of the base flow.
///   B: v² = v₀² + f_minus on both circles, p = p₀ + h_minus on y=0.
///   C: v² = v₀² + f_minus and p = p₀ + h_minus on y=0, ∂ₓp = ∂ₓ(p₀ + h_plus) on y=L.
///   G: v² = v₀² + f_minus and H = H₀ + h_minus on y=0, p = p₀ + h_plus on y=L.
/// For case B, f_plus (when set) replaces f_minus on the top circle.
struct CaseData {
    FixedPointCase kind = FixedPointCase::B;
    BoundaryTrace f_minus;
    std::optional<BoundaryTrace> f_plus;
    BoundaryTrace h_minus;
    BoundaryTrace h_plus;
    double J = 0.0;
    double vmin = -1.0;  // < 0: half the base inflow bound

    static CaseData zero(FixedPointCase kind, const StripGrid& grid, double J);
};

/// ω₀ = ∂ₓH / v² on a boundary circle.
BoundaryTrace boundary_vorticity(const BoundaryTrace& H, const BoundaryTrace& v1, const BoundaryTrace& v2, double vmin);

struct GammaOutput {
    VectorField W;
    BoundaryTrace f_plus;  // outflow perturbation (cases C and G)
    ScalarField omega;
    BoundaryTrace omega0;
};

GammaOutput gamma_case_B(const VectorField& V, const CaseData& data, const BaseFlow& base);
GammaOutput gamma_case_C(const VectorField& V, const BoundaryTrace& f_plus, const CaseData& data, const BaseFlow& base);
GammaOutput gamma_case_G(const VectorField& V, const BoundaryTrace& f_plus, const CaseData& data, const BaseFlow& base);

/// Top-circle integrand 𝒯 whose antiderivative updates the outflow trace.
BoundaryTrace outflow_integrand(const ScalarField& omega, const VectorField& V, const BoundaryTrace& f_plus,
                                const BoundaryTrace& h_plus, const BaseFlow& base);

struct FixedPointResult {
    VectorField V;
    BoundaryTrace f_plus;
    ScalarField omega;
    SolveReport report;
    std::vector<double> updates;
    std::vector<double> mass_defects;  // |mean f̃⁺ - mean f⁻| per iteration
};

struct IterateOptions {
    double tol = 1e-10;
    int max_iter = 100;
    std::optional<VectorField> V_init;
    std::optional<BoundaryTrace> f_plus_init;
};

FixedPointResult iterate(const CaseData& data, const BaseFlow& base, const IterateOptions& opts = {});

}  // namespace steady
