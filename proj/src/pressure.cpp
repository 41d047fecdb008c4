#include "steady/pressure.hpp"

#include "steady/errors.hpp"
#include "steady/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steady {

VectorField convective_acceleration(const VectorField& v) {
    const ScalarField d1x = ddx(v.comp1), d1y = ddy(v.comp1);
    const ScalarField d2x = ddx(v.comp2), d2y = ddy(v.comp2);
    VectorField a(v.grid());
    for (std::size_t k = 0; k < v.grid().size(); ++k) {
        const double u = v.comp1.values()[k], w = v.comp2.values()[k];
        a.comp1.values()[k] = u * d1x.values()[k] + w * d1y.values()[k];
        a.comp2.values()[k] = u * d2x.values()[k] + w * d2y.values()[k];
    }
    return a;
}

ScalarField recover_pressure(const VectorField& v, double anchor, const PressureOptions& opts) {
    const auto& g = v.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    const VectorField a = convective_acceleration(v);
    const double scale = 1.0 + a.max_abs();

    const double drift = fourier::mean(a.comp1.row(0));
    const double h2 = g.dy() * g.dy();
    if (!(std::abs(drift) <= (opts.univalued_rel + opts.univalued_h2 * h2) * scale))
        throw SolverError(ErrorKind::MultiValuedPressure,
                          "mean of the horizontal acceleration on y=0 is " + format_number(drift), drift);

    const ScalarField rot = ddx(a.comp2) - ddy(a.comp1);
    // Rows next to the walls difference the one-sided wall values of a and
    // carry an O(h) stencil artifact; they are left out.
    const std::size_t margin = ny >= 5 ? 2 : 1;
    double curl = 0.0;
    for (std::size_t j = margin; j + margin < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) curl = std::max(curl, std::abs(rot(i, j)));
    if (!(curl <= (opts.path_rel + opts.path_h2 * h2) * scale))
        throw SolverError(ErrorKind::PathDependence, "curl of the acceleration is " + format_number(curl), curl);

    ScalarField p(g);
    std::vector<double> minus_a1(nx);
    for (std::size_t i = 0; i < nx; ++i) minus_a1[i] = -a.comp1(i, 0);
    fourier::antiderivative(minus_a1, p.row(0));
    for (std::size_t i = 0; i < nx; ++i) p(i, 0) += anchor;

    const double h = g.dy();
    for (std::size_t j = 1; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) p(i, j) = p(i, j - 1) - 0.5 * h * (a.comp2(i, j - 1) + a.comp2(i, j));
    return p;
}

EulerSolution solve_case_C(const BoundaryTrace& h_minus, const BoundaryTrace& h_plus, const BoundaryTrace& f_minus,
                           double J, const BaseFlow& base, const IterateOptions& opts, const PressureOptions& popts) {
    const StripGrid& g = base.v0.grid();
    CaseData data = CaseData::zero(FixedPointCase::C, g, J);
    data.h_minus = h_minus;
    data.h_plus = h_plus;
    data.f_minus = f_minus;
    FixedPointResult fp = iterate(data, base, opts);

    VectorField v = base.v0 + fp.V;
    ScalarField p = recover_pressure(v, h_minus[0] + base.p0(0, 0), popts);
    const double lambda = p(0, g.ny() - 1) - base.p0(0, g.ny() - 1);
    fp.report.residuals["lambda"] = lambda;
    return EulerSolution{std::move(v), std::move(p), std::move(fp.omega), fp.report, lambda, std::move(fp.f_plus)};
}

double compatibility_lambda(const BoundaryTrace& h_minus, const BoundaryTrace& h_plus, const BoundaryTrace& f_minus,
                            double J, const BaseFlow& base, const IterateOptions& opts) {
    return *solve_case_C(h_minus, h_plus, f_minus, J, base, opts).lambda;
}

EulerSolution solve_case_C_full(const BoundaryTrace& h_minus, const BoundaryTrace& h_plus,
                                const BoundaryTrace& f_minus, double J, const BaseFlow& base,
                                const IterateOptions& opts, double compat_tol) {
    EulerSolution sol = solve_case_C(h_minus, h_plus, f_minus, J, base, opts);
    const double gap = h_plus[0] - *sol.lambda;
    if (!(std::abs(gap) <= compat_tol))
        throw SolverError(ErrorKind::CompatibilityViolated,
                          "h+(0) = " + format_number(h_plus[0]) + " but the data force Lambda = " +
                              format_number(*sol.lambda),
                          *sol.lambda);
    sol.report.residuals["compatibility_gap"] = gap;
    return sol;
}

}  // namespace steady
