#include "steady/fixedpoint.hpp"

#include "steady/divcurl.hpp"
#include "steady/errors.hpp"
#include "steady/fourier.hpp"
#include "steady/transport.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steady {
namespace {

double effective_vmin(const CaseData& data, const BaseFlow& base) {
    return data.vmin > 0.0 ? data.vmin : 0.5 * base.vbar2;
}

BoundaryTrace combine(const BoundaryTrace& a, const BoundaryTrace& b, double sb = 1.0) {
    BoundaryTrace out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += sb * b.values[i];
    return out;
}

double half_square_sum(double a, double b) { return 0.5 * (a * a + b * b); }

struct Inflow {
    BoundaryTrace v1, v2, H;
};

// Velocity and Bernoulli traces on y = 0 for the current iterate.
Inflow inflow_traces(const VectorField& V, const CaseData& data, const BaseFlow& base) {
    Inflow in;
    in.v1 = combine(trace_of(base.v0.comp1, Side::Bottom), trace_of(V.comp1, Side::Bottom));
    const BoundaryTrace v02 = trace_of(base.v0.comp2, Side::Bottom);
    in.v2 = combine(v02, data.f_minus);
    const BoundaryTrace p0 = trace_of(base.p0, Side::Bottom);
    const BoundaryTrace v01 = trace_of(base.v0.comp1, Side::Bottom);
    in.H = p0;
    for (std::size_t i = 0; i < in.H.size(); ++i) {
        if (data.kind == FixedPointCase::G)
            in.H.values[i] += half_square_sum(v01[i], v02[i]) + data.h_minus[i];
        else
            in.H.values[i] += data.h_minus[i] + half_square_sum(in.v1[i], in.v2[i]);
    }
    return in;
}

GammaOutput transport_step(const VectorField& V, const CaseData& data, const BaseFlow& base) {
    const double vmin = effective_vmin(data, base);
    const Inflow in = inflow_traces(V, data, base);
    GammaOutput out{VectorField(V.grid()), BoundaryTrace(), ScalarField(V.grid()), BoundaryTrace()};
    out.omega0 = boundary_vorticity(in.H, in.v1, in.v2, vmin);
    out.omega = solve_transport(base.v0 + V, out.omega0, vmin);
    return out;
}

GammaOutput gamma_with_outflow(const VectorField& V, const BoundaryTrace& f_plus, const CaseData& data,
                               const BaseFlow& base) {
    GammaOutput out = transport_step(V, data, base);
    const BoundaryTrace T = outflow_integrand(out.omega, V, f_plus, data.h_plus, base);
    BoundaryTrace ft(std::vector<double>(T.size()), Side::Top);
    fourier::antiderivative(T.values, ft.values);
    // The mean of 𝒯 integrates to a non-periodic ramp and is dropped; the
    // constant then fixes mass balance with the inflow.
    const double c = data.f_minus.mean() - ft.mean();
    for (double& v : ft.values) v += c;
    out.W = solve_div_curl(out.omega, data.f_minus, ft, data.J - base.J0);
    out.f_plus = std::move(ft);
    return out;
}

double field_norm(const ScalarField& f) {
    const auto& g = f.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    double s = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            s = std::max(s, std::abs(f(i, j)));
            dx = std::max(dx, std::abs(f((i + 1) % nx, j) - f(i, j)) / g.dx());
            if (j + 1 < ny) dy = std::max(dy, std::abs(f(i, j + 1) - f(i, j)) / g.dy());
        }
    return s + dx + dy;
}

double trace_norm(const BoundaryTrace& t) {
    const std::size_t n = t.size();
    double s = 0.0, d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s = std::max(s, std::abs(t[i]));
        d = std::max(d, std::abs(t[(i + 1) % n] - t[i]) * static_cast<double>(n));
    }
    return s + d;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

CaseData CaseData::zero(FixedPointCase kind, const StripGrid& grid, double J) {
    CaseData d;
    d.kind = kind;
    d.f_minus = BoundaryTrace::zero(grid, Side::Bottom);
    d.h_minus = BoundaryTrace::zero(grid, Side::Bottom);
    d.h_plus = BoundaryTrace::zero(grid, Side::Top);
    d.J = J;
    return d;
}

BoundaryTrace boundary_vorticity(const BoundaryTrace& H, const BoundaryTrace& v1, const BoundaryTrace& v2,
                                 double vmin) {
    (void)v1;  // enters through H
    const double smallest = [&] {
        double m = INFINITY;
        for (double v : v2.values) m = std::min(m, std::abs(v));
        return m;
    }();
    if (!(smallest >= vmin))
        throw SolverError(ErrorKind::TangencyDetected,
                          "boundary normal velocity " + format_number(smallest) + " below " + format_number(vmin),
                          smallest);
    BoundaryTrace w = ddx(H);
    for (std::size_t i = 0; i < w.size(); ++i) w.values[i] /= v2[i];
    w.side = H.side;
    return w;
}

BoundaryTrace outflow_integrand(const ScalarField& omega, const VectorField& V, const BoundaryTrace& f_plus,
                                const BoundaryTrace& h_plus, const BaseFlow& base) {
    // First Euler component on y = L with p = p₀ + h⁺ and v² = v₀² + f⁺:
    // ∂ₓv² = ω - ∂ₓ(p + (v¹)²/2) / v².
    const BoundaryTrace v01 = trace_of(base.v0.comp1, Side::Top);
    const BoundaryTrace v02 = trace_of(base.v0.comp2, Side::Top);
    const BoundaryTrace v1 = combine(v01, trace_of(V.comp1, Side::Top));
    BoundaryTrace q = combine(trace_of(base.p0, Side::Top), h_plus);
    for (std::size_t i = 0; i < q.size(); ++i) q.values[i] += 0.5 * v1[i] * v1[i];
    const BoundaryTrace dq = ddx(q);
    const BoundaryTrace dv02 = ddx(v02);
    BoundaryTrace T = trace_of(omega, Side::Top);
    for (std::size_t i = 0; i < T.size(); ++i) T.values[i] -= dq[i] / (v02[i] + f_plus[i]) + dv02[i];
    return T;
}

GammaOutput gamma_case_B(const VectorField& V, const CaseData& data, const BaseFlow& base) {
    GammaOutput out = transport_step(V, data, base);
    const BoundaryTrace& top = data.f_plus ? *data.f_plus : data.f_minus;
    out.W = solve_div_curl(out.omega, data.f_minus, top, data.J - base.J0);
    out.f_plus = top;
    out.f_plus.side = Side::Top;
    return out;
}

GammaOutput gamma_case_C(const VectorField& V, const BoundaryTrace& f_plus, const CaseData& data, const BaseFlow& base) {
    return gamma_with_outflow(V, f_plus, data, base);
}

GammaOutput gamma_case_G(const VectorField& V, const BoundaryTrace& f_plus, const CaseData& data, const BaseFlow& base) {
    return gamma_with_outflow(V, f_plus, data, base);
}

FixedPointResult iterate(const CaseData& data, const BaseFlow& base, const IterateOptions& opts) {
    const StripGrid& g = base.v0.grid();
    const bool has_outflow = data.kind != FixedPointCase::B;

    FixedPointResult res{opts.V_init ? *opts.V_init : VectorField(g),
                         opts.f_plus_init ? *opts.f_plus_init : BoundaryTrace::zero(g, Side::Top), ScalarField(g), {},
                         {}, {}};
    std::vector<double> ratios;
    int growth = 0;

    for (int it = 1; it <= opts.max_iter; ++it) {
        GammaOutput out = data.kind == FixedPointCase::B ? gamma_case_B(res.V, data, base)
                          : data.kind == FixedPointCase::C ? gamma_case_C(res.V, res.f_plus, data, base)
                                                           : gamma_case_G(res.V, res.f_plus, data, base);

        double update = field_norm(out.W.comp1 - res.V.comp1) + field_norm(out.W.comp2 - res.V.comp2);
        if (has_outflow) {
            update += trace_norm(combine(out.f_plus, res.f_plus, -1.0));
            res.mass_defects.push_back(std::abs(out.f_plus.mean() - data.f_minus.mean()));
        }
        res.V = std::move(out.W);
        res.f_plus = std::move(out.f_plus);
        res.omega = std::move(out.omega);

        if (!res.updates.empty() && res.updates.back() > 0.0) {
            const double r = update / res.updates.back();
            ratios.push_back(r);
            growth = r > 1.0 ? growth + 1 : 0;
        }
        res.updates.push_back(update);
        res.report.iterations = it;
        res.report.final_update = update;
        res.report.contraction_ratio = median(ratios);

        if (!std::isfinite(update))
            throw SolverError(ErrorKind::NoConvergence, "fixed-point iterate is not finite");
        if (update < opts.tol) {
            res.report.converged = true;
            break;
        }
        if (res.V.max_abs() > 0.5 * base.vbar2)
            throw SolverError(ErrorKind::NoConvergence,
                              "perturbation left the admissible ball (sup|V| = " + format_number(res.V.max_abs()) + ")",
                              res.report.contraction_ratio);
        if (growth >= 5)
            throw SolverError(ErrorKind::NoConvergence, "update grew for 5 consecutive iterations",
                              res.report.contraction_ratio);
    }
    if (!res.report.converged)
        throw SolverError(ErrorKind::NoConvergence,
                          "no convergence after " + std::to_string(opts.max_iter) + " iterations, last update " +
                              format_number(res.report.final_update),
                          res.report.contraction_ratio);
    return res;
}

}  // namespace steady
