#pragma once

#include "steady/grid.hpp"

namespace steady {

/// Divergence-free W with curl W = ω, W² = f_bottom on y=0, W² = f_top on
/// y=L and flux j through the segment x=0. Built as W = (0, A) + ∇⊥ψ with
/// A = mean(f_bottom) and Δψ = ω. `mass_tol` < 0 selects 1e-10·(1+|A|).
VectorField solve_div_curl(const ScalarField& omega, const BoundaryTrace& f_bottom, const BoundaryTrace& f_top,
                           double j, double mass_tol = -1.0);

}  // namespace steady
