#include "steady/problem.hpp"

#include "steady/diagnostics.hpp"
#include "steady/errors.hpp"
#include "steady/pressure.hpp"

#include <cmath>

namespace steady {

CaseKind parse_case(const std::string& name) {
    if (name == "A") return CaseKind::A;
    if (name == "B") return CaseKind::B;
    if (name == "C") return CaseKind::C;
    if (name == "C-full" || name == "C_full" || name == "CFull") return CaseKind::CFull;
    if (name == "D") return CaseKind::D;
    if (name == "G") return CaseKind::G;
    if (name == "E" || name == "F")
        throw SolverError(ErrorKind::UnsupportedCase,
                          "case " + name + " has no existence theory to build a solver on and is not supported");
    throw SolverError(ErrorKind::InvalidConfig, "unknown case '" + name + "' (expected A, B, C, C-full, D or G)");
}

std::string case_name(CaseKind kind) {
    switch (kind) {
    case CaseKind::A: return "A";
    case CaseKind::B: return "B";
    case CaseKind::C: return "C";
    case CaseKind::CFull: return "C-full";
    case CaseKind::D: return "D";
    case CaseKind::G: return "G";
    }
    return "?";
}

BvpSpec BvpSpec::with_ny(std::size_t ny_new) const {
    BvpSpec s = *this;
    s.ny = ny_new;
    return s;
}

BvpSpec BvpSpec::zero(CaseKind kind, std::size_t nx, std::size_t ny, double L) {
    BvpSpec s;
    s.kind = kind;
    s.nx = nx;
    s.ny = ny;
    s.L = L;
    const StripGrid g = s.grid();
    s.f_minus = BoundaryTrace::zero(g, Side::Bottom);
    s.h_minus = BoundaryTrace::zero(g, Side::Bottom);
    s.h_plus = BoundaryTrace::zero(g, Side::Top);
    return s;
}

BaseFlow make_base_flow(const BvpSpec& spec) {
    const StripGrid g = spec.grid();
    if (spec.base.kind == "uniform") return BaseFlow::uniform(g, spec.base.speed);
    if (spec.base.kind == "harmonic") {
        if (!(std::abs(spec.base.epsilon) < 1.0))
            throw SolverError(ErrorKind::InvalidConfig, "harmonic base flow needs |epsilon| < 1");
        return BaseFlow::harmonic(g, spec.base.epsilon);
    }
    throw SolverError(ErrorKind::InvalidConfig, "unknown base flow '" + spec.base.kind + "'");
}

double prescribed_flux(const BvpSpec& spec, const BaseFlow& base) {
    if (spec.flux_J) return *spec.flux_J;
    return spec.kind == CaseKind::A ? 0.0 : base.J0;
}

Diffeomorphism circle_map(const BvpSpec& spec) {
    if (spec.T_samples) return Diffeomorphism(*spec.T_samples);
    return Diffeomorphism::shift(spec.nx, spec.T_shift);
}

namespace {

EulerSolution from_gs(GsSolution gs) {
    EulerSolution sol{std::move(gs.v), std::move(gs.p), ScalarField(gs.psi.periodic.grid()), gs.report, {}, {}};
    sol.omega = curl2d(sol.v);
    sol.report.residuals["energy_init"] = energy_functional(gs.phi_init, gs.profile, gs.psi.slope);
    sol.report.residuals["energy_final"] = energy_functional(gs.psi.periodic, gs.profile, gs.psi.slope);
    return sol;
}

CaseData case_data(const BvpSpec& spec, FixedPointCase kind, double J) {
    CaseData d;
    d.kind = kind;
    d.f_minus = spec.f_minus;
    d.f_plus = spec.f_plus;
    d.h_minus = spec.h_minus;
    d.h_plus = spec.h_plus;
    d.J = J;
    return d;
}

EulerSolution run(const BvpSpec& spec) {
    const StripGrid g = spec.grid();
    IterateOptions it;
    it.tol = spec.tol;
    it.max_iter = spec.max_iter;

    switch (spec.kind) {
    case CaseKind::A: {
        const BoundaryTrace f_plus = spec.f_plus ? *spec.f_plus : spec.f_minus;
        return from_gs(solve_case_A(spec.f_minus, f_plus, spec.h_minus, spec.flux_J.value_or(0.0), g, spec.tol,
                                    std::max(spec.max_iter, 200)));
    }
    case CaseKind::D:
        return from_gs(solve_case_D(spec.f_minus, spec.h_minus, spec.h_plus, circle_map(spec), g, spec.tol,
                                    std::max(spec.max_iter, 200), spec.compat_tol));
    case CaseKind::B:
    case CaseKind::G: {
        const BaseFlow base = make_base_flow(spec);
        const bool is_b = spec.kind == CaseKind::B;
        FixedPointResult fp =
            iterate(case_data(spec, is_b ? FixedPointCase::B : FixedPointCase::G, prescribed_flux(spec, base)), base, it);
        VectorField v = base.v0 + fp.V;
        double anchor = spec.h_minus[0] + base.p0(0, 0);
        if (!is_b) {
            // Bernoulli datum at the origin: H = H₀ + h⁻.
            const double u0 = base.v0.comp1(0, 0), w0 = base.v0.comp2(0, 0);
            const double u = v.comp1(0, 0), w = v.comp2(0, 0);
            anchor += 0.5 * (u0 * u0 + w0 * w0) - 0.5 * (u * u + w * w);
        }
        ScalarField p = recover_pressure(v, anchor);
        double worst = 0.0;
        for (double m : fp.mass_defects) worst = std::max(worst, m);
        if (!is_b) fp.report.residuals["mass_defect_max"] = worst;
        return EulerSolution{std::move(v), std::move(p), std::move(fp.omega), fp.report, {},
                             is_b ? std::nullopt : std::optional<BoundaryTrace>(std::move(fp.f_plus))};
    }
    case CaseKind::C: {
        const BaseFlow base = make_base_flow(spec);
        return solve_case_C(spec.h_minus, spec.h_plus, spec.f_minus, prescribed_flux(spec, base), base, it);
    }
    case CaseKind::CFull: {
        const BaseFlow base = make_base_flow(spec);
        return solve_case_C_full(spec.h_minus, spec.h_plus, spec.f_minus, prescribed_flux(spec, base), base, it,
                                 spec.compat_tol);
    }
    }
    throw SolverError(ErrorKind::UnsupportedCase, "unhandled case");
}

}  // namespace

EulerSolution solve(const BvpSpec& input) {
    // Unset traces mean zero data.
    BvpSpec spec = input;
    const StripGrid g = spec.grid();
    for (auto* t : {&spec.f_minus, &spec.h_minus, &spec.h_plus}) {
        if (t->values.empty()) *t = BoundaryTrace::zero(g, t == &spec.h_plus ? Side::Top : Side::Bottom);
        if (t->size() != g.nx())
            throw SolverError(ErrorKind::InvalidConfig, "boundary trace length differs from nx");
    }
    if (spec.f_plus && spec.f_plus->size() != g.nx())
        throw SolverError(ErrorKind::InvalidConfig, "f_plus length differs from nx");

    EulerSolution sol = run(spec);
    for (const auto& [k, val] : euler_residual(sol.v, sol.p)) sol.report.residuals[k] = val;
    for (const auto& [k, val] : boundary_check(sol.v, sol.p, spec)) sol.report.residuals["bc_" + k] = val;
    return sol;
}

}  // namespace steady
