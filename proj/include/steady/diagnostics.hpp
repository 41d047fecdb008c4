#pragma once

#include "steady/grid.hpp"
#include "steady/problem.hpp"
#include "steady/profile.hpp"

#include <map>
#include <string>

namespace steady {

using Metrics = std::map<std::string, double>;

/// momentum_sup / momentum_l2 of (v·∇)v + ∇p over interior rows, and
/// divergence_sup / divergence_l2 of div v over the whole grid.
Metrics euler_residual(const VectorField& v, const ScalarField& p);

/// Sup-norm mismatch of every boundary condition of the spec's case, plus
/// |flux - J| where a flux is prescribed.
Metrics boundary_check(const VectorField& v, const ScalarField& p, const BvpSpec& spec);

/// sup over interior points of |v·∇(p + |v|²/2)|.
double bernoulli_transport_check(const VectorField& v, const ScalarField& p);

/// sup over interior points of |v·∇ω|.
double transport_residual(const VectorField& v, const ScalarField& omega);

/// ½∫|∇φ|² + ∫F(Jx + φ) with spectral x-derivatives, row differences in y
/// and trapezoid weights; its discrete Euler-Lagrange equation is the
/// scheme's Δφ = F'(Jx + φ).
double energy_functional(const ScalarField& phi, const ProfileFunction& F, double J);

}  // namespace steady
