#pragma once

#include "steady/problem.hpp"

#include <utility>

namespace steady {

/// Magnetohydrostatic state: j×B = ∇p, div B = 0, j = curl B.
struct MhsState {
    VectorField B;
    ScalarField j;
    ScalarField p;
};

/// B = v, j = curl v, p = -(p_euler + |v|²/2).
MhsState euler_to_mhs(const VectorField& v, const ScalarField& p);
/// v = B, p_euler = -p - |B|²/2.
std::pair<VectorField, ScalarField> mhs_to_euler(const MhsState& state);

/// force_sup / force_l2 of B×j + ∇p over interior rows.
std::map<std::string, double> mhs_residual(const MhsState& state);

struct MhsSolution {
    MhsState state;
    EulerSolution euler;
};

/// Reads spec with magnetohydrostatic boundary data (pressures for h, base
/// field B₀ = v₀), solves the equivalent Euler problem and maps back.
MhsSolution solve_mhs(const BvpSpec& spec);

/// The Euler problem equivalent to an MHS spec: every h datum changes sign.
BvpSpec mhs_to_euler_spec(const BvpSpec& spec);

}  // namespace steady
