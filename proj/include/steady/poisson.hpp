#pragma once

#include "steady/grid.hpp"
#include "steady/report.hpp"

#include <functional>

namespace steady {

class ProfileFunction;

/// Δψ = rhs on the interior rows (spectral in x, three-point in y) with
/// ψ(·,0) = bottom and ψ(·,L) = top. Each Fourier mode is a tridiagonal solve.
ScalarField solve_poisson_dirichlet(const ScalarField& rhs, const BoundaryTrace& bottom,
                                    const BoundaryTrace& top);

/// The scheme's discrete Laplacian; boundary rows are set to zero.
ScalarField discrete_laplacian(const ScalarField& psi);

struct SemilinearResult {
    ScalarField phi;
    SolveReport report;
};

/// Picard iteration for Δφ = F'(Jx + φ) with Dirichlet traces:
/// φ_{k+1} = solve_poisson_dirichlet(F'(Jx+φ_k), bottom, top), stopped once
/// sup|φ_{k+1} - φ_k| < tol. Throws NoConvergence when the iteration blows up
/// or stalls at max_iter with a ratio >= 1; otherwise an exhausted budget
/// returns with converged = false.
SemilinearResult solve_semilinear(const ProfileFunction& profile, double slope, const BoundaryTrace& bottom,
                                  const BoundaryTrace& top, const ScalarField& init, double tol = 1e-10,
                                  int max_iter = 200);

}  // namespace steady
