#include "steady/diagnostics.hpp"

#include "steady/pressure.hpp"

#include <algorithm>
#include <cmath>

namespace steady {
namespace {

double sup_interior(const ScalarField& f) {
    const auto& g = f.grid();
    double m = 0.0;
    for (std::size_t j = 1; j + 1 < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) m = std::max(m, std::abs(f(i, j)));
    return m;
}

double row_sup(const ScalarField& f, Side side, const std::function<double(std::size_t, std::size_t)>& target) {
    const std::size_t j = row_of(f.grid(), side);
    double m = 0.0;
    for (std::size_t i = 0; i < f.grid().nx(); ++i) m = std::max(m, std::abs(f(i, j) - target(i, j)));
    return m;
}

ScalarField bernoulli(const VectorField& v, const ScalarField& p) {
    ScalarField H = p;
    for (std::size_t k = 0; k < H.values().size(); ++k) {
        const double a = v.comp1.values()[k], b = v.comp2.values()[k];
        H.values()[k] += 0.5 * (a * a + b * b);
    }
    return H;
}

double advective_sup(const VectorField& v, const ScalarField& q) {
    const ScalarField qx = ddx(q), qy = ddy(q);
    return sup_interior(v.comp1 * qx + v.comp2 * qy);
}

}  // namespace

Metrics euler_residual(const VectorField& v, const ScalarField& p) {
    const auto& g = v.grid();
    const VectorField a = convective_acceleration(v);
    const ScalarField px = ddx(p), py = ddy(p);
    const ScalarField dv = div2d(v);
    const auto w = trapezoid_weights(g);
    const double dx = g.dx();

    double msup = 0.0, ml2 = 0.0, dsup = 0.0, dl2 = 0.0;
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const double d = dv(i, j);
            dsup = std::max(dsup, std::abs(d));
            dl2 += w[j] * dx * d * d;
            if (j == 0 || j + 1 == g.ny()) continue;
            const double r1 = a.comp1(i, j) + px(i, j), r2 = a.comp2(i, j) + py(i, j);
            const double r = std::hypot(r1, r2);
            msup = std::max(msup, r);
            ml2 += g.dy() * dx * r * r;
        }
    return {{"momentum_sup", msup}, {"momentum_l2", std::sqrt(ml2)}, {"divergence_sup", dsup},
            {"divergence_l2", std::sqrt(dl2)}};
}

Metrics boundary_check(const VectorField& v, const ScalarField& p, const BvpSpec& spec) {
    Metrics m;
    const StripGrid& g = v.grid();
    const std::size_t top = g.ny() - 1;
    const ScalarField H = bernoulli(v, p);

    const bool absolute = spec.kind == CaseKind::A || spec.kind == CaseKind::D;
    if (absolute) {
        m["normal_bottom"] = row_sup(v.comp2, Side::Bottom, [&](std::size_t i, std::size_t) { return spec.f_minus[i]; });
        m["bernoulli_bottom"] = row_sup(H, Side::Bottom, [&](std::size_t i, std::size_t) { return spec.h_minus[i]; });
        if (spec.kind == CaseKind::A) {
            const BoundaryTrace& fp = spec.f_plus ? *spec.f_plus : spec.f_minus;
            m["normal_top"] = row_sup(v.comp2, Side::Top, [&](std::size_t i, std::size_t) { return fp[i]; });
            m["flux"] = std::abs(flux_through_C(v) - spec.flux_J.value_or(0.0));
        } else {
            m["bernoulli_top"] = row_sup(H, Side::Top, [&](std::size_t i, std::size_t) { return spec.h_plus[i]; });
        }
        return m;
    }

    const BaseFlow base = make_base_flow(spec.with_ny(g.ny()));
    const auto& v0 = base.v0;
    const auto& p0 = base.p0;
    m["normal_bottom"] =
        row_sup(v.comp2, Side::Bottom, [&](std::size_t i, std::size_t j) { return v0.comp2(i, j) + spec.f_minus[i]; });
    m["flux"] = std::abs(flux_through_C(v) - prescribed_flux(spec, base));

    switch (spec.kind) {
    case CaseKind::B: {
        const BoundaryTrace& ft = spec.f_plus ? *spec.f_plus : spec.f_minus;
        m["normal_top"] =
            row_sup(v.comp2, Side::Top, [&](std::size_t i, std::size_t j) { return v0.comp2(i, j) + ft[i]; });
        m["pressure_bottom"] =
            row_sup(p, Side::Bottom, [&](std::size_t i, std::size_t j) { return p0(i, j) + spec.h_minus[i]; });
        break;
    }
    case CaseKind::C: {
        m["pressure_bottom"] =
            row_sup(p, Side::Bottom, [&](std::size_t i, std::size_t j) { return p0(i, j) + spec.h_minus[i]; });
        BoundaryTrace gap = trace_of(p, Side::Top);
        for (std::size_t i = 0; i < g.nx(); ++i) gap.values[i] -= p0(i, top) + spec.h_plus[i];
        m["pressure_gradient_top"] = ddx(gap).max_abs();
        break;
    }
    case CaseKind::CFull:
        m["pressure_bottom"] =
            row_sup(p, Side::Bottom, [&](std::size_t i, std::size_t j) { return p0(i, j) + spec.h_minus[i]; });
        m["pressure_top"] = row_sup(p, Side::Top, [&](std::size_t i, std::size_t j) { return p0(i, j) + spec.h_plus[i]; });
        break;
    case CaseKind::G: {
        const ScalarField H0 = bernoulli(v0, p0);
        m["bernoulli_bottom"] =
            row_sup(H, Side::Bottom, [&](std::size_t i, std::size_t j) { return H0(i, j) + spec.h_minus[i]; });
        m["pressure_top"] = row_sup(p, Side::Top, [&](std::size_t i, std::size_t j) { return p0(i, j) + spec.h_plus[i]; });
        break;
    }
    default: break;
    }
    return m;
}

double bernoulli_transport_check(const VectorField& v, const ScalarField& p) { return advective_sup(v, bernoulli(v, p)); }

double transport_residual(const VectorField& v, const ScalarField& omega) { return advective_sup(v, omega); }

double energy_functional(const ScalarField& phi, const ProfileFunction& F, double J) {
    const auto& g = phi.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    const auto w = trapezoid_weights(g);
    const double dx = g.dx(), h = g.dy();
    const ScalarField phix = ddx(phi);
    double e = 0.0;
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            e += w[j] * dx * (0.5 * phix(i, j) * phix(i, j) + F.value(J * g.x(i) + phi(i, j)));
            if (j + 1 < ny) {
                const double dy = (phi(i, j + 1) - phi(i, j)) / h;
                e += h * dx * 0.5 * dy * dy;
            }
        }
    return e;
}

}  // namespace steady
