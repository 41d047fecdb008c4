#pragma once

#include "steady/fixedpoint.hpp"
#include "steady/gradshafranov.hpp"
#include "steady/solution.hpp"

#include <optional>
#include <string>

namespace steady {

/// Boundary-condition families that have a solver. E and F are rejected.
enum class CaseKind { A, B, C, CFull, D, G };

CaseKind parse_case(const std::string& name);  // throws UnsupportedCase / InvalidConfig
std::string case_name(CaseKind kind);

struct BaseFlowSpec {
    std::string kind = "uniform";  // uniform | harmonic
    double epsilon = 0.0;          // harmonic amplitude
    double speed = 1.0;            // uniform vertical speed
};

/// A complete boundary-value problem. Traces are sampled on the nx abscissae.
/// Cases A and D read f and h as absolute values; B, C, C-full and G read
/// them as perturbations of the base flow.
struct BvpSpec {
    CaseKind kind = CaseKind::B;
    double L = 1.0;
    std::size_t nx = 128;
    std::size_t ny = 129;
    std::optional<double> flux_J;  // default: J₀ of the base flow (0 for case A)
    BaseFlowSpec base;
    BoundaryTrace f_minus;
    std::optional<BoundaryTrace> f_plus;
    BoundaryTrace h_minus;
    BoundaryTrace h_plus;
    double tol = 1e-10;
    int max_iter = 100;
    std::optional<std::vector<double>> T_samples;  // case D, lifted
    double T_shift = 0.0;
    double compat_tol = 1e-8;

    StripGrid grid() const { return StripGrid(nx, ny, L); }
    /// Same problem on a grid with a different ny (traces only depend on nx).
    BvpSpec with_ny(std::size_t ny_new) const;
    /// Zero traces of the right length for every boundary datum.
    static BvpSpec zero(CaseKind kind, std::size_t nx, std::size_t ny, double L = 1.0);
};

BaseFlow make_base_flow(const BvpSpec& spec);
double prescribed_flux(const BvpSpec& spec, const BaseFlow& base);
Diffeomorphism circle_map(const BvpSpec& spec);

/// Runs the solver for spec.kind and fills report.residuals with the Euler
/// and boundary diagnostics.
EulerSolution solve(const BvpSpec& spec);

}  // namespace steady
