#include "steady/divcurl.hpp"

#include "steady/errors.hpp"
#include "steady/fourier.hpp"
#include "steady/poisson.hpp"

#include <cmath>
#include <string>

namespace steady {

VectorField solve_div_curl(const ScalarField& omega, const BoundaryTrace& f_bottom, const BoundaryTrace& f_top,
                           double j, double mass_tol) {
    const auto& g = omega.grid();
    if (f_bottom.size() != g.nx() || f_top.size() != g.nx())
        throw SolverError(ErrorKind::InvalidConfig, "normal trace length does not match grid");

    const double A = f_bottom.mean();
    const double top_mean = f_top.mean();
    const double tol = mass_tol < 0.0 ? 1e-10 * (1.0 + std::abs(A)) : mass_tol;
    if (!(std::abs(top_mean - A) <= tol))
        throw SolverError(ErrorKind::MassImbalance,
                          "inflow mean " + format_number(A) + " vs outflow mean " + format_number(top_mean),
                          top_mean - A);

    BoundaryTrace bottom(std::vector<double>(g.nx()), Side::Bottom);
    BoundaryTrace top(std::vector<double>(g.nx()), Side::Top);
    fourier::antiderivative(f_bottom.values, bottom.values);
    fourier::antiderivative(f_top.values, top.values);
    for (double& v : top.values) v -= j;

    const ScalarField psi = solve_poisson_dirichlet(omega, bottom, top);
    VectorField W = perp_gradient(psi, omega);
    for (double& v : W.comp2.values()) v += A;

    // The trapezoid flux of the discrete field differs from ψ(0,0) - ψ(0,L)
    // at O(h²); a uniform horizontal shift removes it without touching curl,
    // divergence or the normal traces.
    const double shift = (j - flux_through_C(W)) / g.height();
    for (double& v : W.comp1.values()) v += shift;
    return W;
}

}  // namespace steady
