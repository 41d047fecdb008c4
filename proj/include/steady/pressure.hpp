#pragma once

#include "steady/fixedpoint.hpp"
#include "steady/solution.hpp"

namespace steady {

struct PressureOptions {
    // |mean a¹(·,0)| ≤ (univalued_rel + univalued_h2·h²)·(1 + sup|a|); the
    // one-sided wall derivative leaves an O(h²) mean on y = 0.
    double univalued_rel = 1e-8;
    double univalued_h2 = 1.0;
    // sup|∂ₓa² - ∂ᵧa¹| ≤ (path_rel + path_h2·h²)·(1 + sup|a|)
    double path_rel = 1e-2;
    double path_h2 = 100.0;
};

/// (v·∇)v on the grid.
VectorField convective_acceleration(const VectorField& v);

/// p with ∇p = -(v·∇)v: x-antiderivative along y=0 from p(0,0) = anchor, then
/// trapezoid integration up each vertical line.
ScalarField recover_pressure(const VectorField& v, double anchor, const PressureOptions& opts = {});

/// Case C solve (∂ₓh⁺ condition on top) with its recovered pressure; Λ is
/// stored in the solution.
EulerSolution solve_case_C(const BoundaryTrace& h_minus, const BoundaryTrace& h_plus, const BoundaryTrace& f_minus,
                           double J, const BaseFlow& base, const IterateOptions& opts = {},
                           const PressureOptions& popts = {});

/// Λ = p(0,L) - p₀(0,L) for the case C solution.
double compatibility_lambda(const BoundaryTrace& h_minus, const BoundaryTrace& h_plus, const BoundaryTrace& f_minus,
                            double J, const BaseFlow& base, const IterateOptions& opts = {});

/// Full Dirichlet pressure data: succeeds iff |h⁺(0) - Λ| ≤ compat_tol,
/// otherwise throws CompatibilityViolated carrying Λ.
EulerSolution solve_case_C_full(const BoundaryTrace& h_minus, const BoundaryTrace& h_plus,
                                const BoundaryTrace& f_minus, double J, const BaseFlow& base,
                                const IterateOptions& opts = {}, double compat_tol = 1e-8);

}  // namespace steady
