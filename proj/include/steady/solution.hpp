#pragma once

#include "steady/grid.hpp"
#include "steady/report.hpp"

#include <optional>

namespace steady {

/// A converged steady state together with how it was obtained.
struct EulerSolution {
    VectorField v;
    ScalarField p;
    ScalarField omega;
    SolveReport report;
    std::optional<double> lambda;         // compatibility value (case C)
    std::optional<BoundaryTrace> f_plus;  // outflow perturbation (cases C, G)
};

}  // namespace steady
