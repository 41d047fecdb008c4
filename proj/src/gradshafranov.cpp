#include "steady/gradshafranov.hpp"

#include "steady/errors.hpp"
#include "steady/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steady {
namespace {

void check_size(const BoundaryTrace& t, const StripGrid& g, const char* name) {
    if (t.size() != g.nx())
        throw SolverError(ErrorKind::InvalidConfig, std::string(name) + " has " + std::to_string(t.size()) +
                                                        " samples, grid has nx=" + std::to_string(g.nx()));
    for (double v : t.values)
        if (!std::isfinite(v)) throw SolverError(ErrorKind::NonFiniteInput, std::string(name) + " is not finite");
}

// ψ = Jx + φ on every row; F and F' evaluated pointwise.
void evaluate_profile(const ProfileFunction& prof, const QuasiPeriodicField& psi, ScalarField& F, ScalarField& dF) {
    const auto& g = psi.periodic.grid();
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const double xi = psi.slope * g.x(i) + psi.periodic(i, j);
            F(i, j) = prof.value(xi);
            dF(i, j) = prof.derivative(xi);
        }
}

GsSolution finish(const ProfileFunction& prof, double slope, const BoundaryTrace& bottom, const BoundaryTrace& top,
                  const StripGrid& grid, double tol, int max_iter) {
    ScalarField init = solve_poisson_dirichlet(ScalarField(grid), bottom, top);
    auto sl = solve_semilinear(prof, slope, bottom, top, init, tol, max_iter);
    if (!sl.report.converged)
        throw SolverError(ErrorKind::NoConvergence,
                          "Grad-Shafranov iteration stopped at update " + format_number(sl.report.final_update),
                          sl.report.contraction_ratio);

    QuasiPeriodicField psi{slope, std::move(sl.phi)};
    ScalarField F(grid), dF(grid);
    evaluate_profile(prof, psi, F, dF);
    VectorField v = perp_gradient(psi, dF);
    ScalarField p = F;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double a = v.comp1.values()[k], b = v.comp2.values()[k];
        p.values()[k] -= 0.5 * (a * a + b * b);
    }
    return GsSolution{std::move(v), std::move(p), sl.report, std::move(psi), std::move(init), prof};
}

}  // namespace

Diffeomorphism::Diffeomorphism(std::vector<double> lifted) : samples_(std::move(lifted)) {
    const std::size_t n = samples_.size();
    if (n < 4) throw SolverError(ErrorKind::InvalidConfig, "circle map needs at least 4 samples");
    std::vector<double> disp(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(samples_[i])) throw SolverError(ErrorKind::NonFiniteInput, "circle map sample is not finite");
        const double next = i + 1 < n ? samples_[i + 1] : samples_[0] + 1.0;
        if (!(next > samples_[i])) throw SolverError(ErrorKind::NotMonotone, "circle map is not strictly increasing");
        disp[i] = samples_[i] - static_cast<double>(i) / static_cast<double>(n);
    }
    displacement_ = PeriodicCubicSpline(disp);
}

Diffeomorphism Diffeomorphism::identity(std::size_t nx) { return shift(nx, 0.0); }

Diffeomorphism Diffeomorphism::shift(std::size_t nx, double s) {
    std::vector<double> v(nx);
    for (std::size_t i = 0; i < nx; ++i) v[i] = static_cast<double>(i) / static_cast<double>(nx) + s;
    return Diffeomorphism(std::move(v));
}

double Diffeomorphism::operator()(double x) const { return x + displacement_(x); }

double InverseMap::operator()(double xi) const {
    const std::size_t n = values.size();
    const double u = xi / period * static_cast<double>(n);
    const double fl = std::floor(u);
    const double t = u - fl;
    const long long k = static_cast<long long>(fl);
    const long long nn = static_cast<long long>(n);
    long long wraps = k / nn;
    long long r = k % nn;
    if (r < 0) {
        r += nn;
        --wraps;
    }
    const std::size_t k0 = static_cast<std::size_t>(r);
    const double x0 = values[k0] + static_cast<double>(wraps);
    const double x1 = k0 + 1 < n ? values[k0 + 1] + static_cast<double>(wraps) : values[0] + static_cast<double>(wraps + 1);
    return (1.0 - t) * x0 + t * x1;
}

StreamTrace build_stream_trace(const BoundaryTrace& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) throw SolverError(ErrorKind::NonFiniteInput, "inflow trace is not finite");
    if (f.min() <= 0.0)
        throw SolverError(ErrorKind::NonPositiveInflow, "inflow must be positive, min is " + format_number(f.min()),
                          f.min());
    StreamTrace st;
    st.periodic = BoundaryTrace(std::vector<double>(f.size()), f.side);
    st.slope = fourier::antiderivative(f.values, st.periodic.values);
    st.interpolant = fourier::TrigInterpolant(st.periodic.values);
    return st;
}

InverseMap invert_monotone(const StreamTrace& psi, std::size_t samples) {
    const double J = psi.slope;
    if (!(J > 0.0)) throw SolverError(ErrorKind::NotMonotone, "stream trace has non-positive period");

    // Strict monotonicity of the band-limited trace, checked on a 4x finer set.
    const std::size_t n = psi.periodic.size();
    double lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k < 4 * n; ++k) {
        const double x = static_cast<double>(k) / static_cast<double>(4 * n);
        if (psi.derivative(x) <= 0.0) throw SolverError(ErrorKind::NotMonotone, "stream trace is not increasing");
        const double P = psi.interpolant(x);
        lo = std::min(lo, P);
        hi = std::max(hi, P);
    }
    const double pad = 0.1 * (hi - lo) + 1e-12;
    lo -= pad;
    hi += pad;

    InverseMap inv{J, std::vector<double>(samples)};
    for (std::size_t m = 0; m < samples; ++m) {
        const double xi = J * static_cast<double>(m) / static_cast<double>(samples);
        // Jx + P(x) = ξ with P ∈ [lo, hi] brackets the root.
        double a = (xi - hi) / J, b = (xi - lo) / J;
        double x = 0.5 * (a + b);
        for (int it = 0; it < 200; ++it) {
            x = 0.5 * (a + b);
            const double r = psi(x) - xi;
            if (std::abs(r) <= 1e-13 || b - a < 1e-16) break;
            (r > 0.0 ? b : a) = x;
        }
        inv.values[m] = x;
    }
    return inv;
}

ProfileFunction build_profile(const BoundaryTrace& h_minus, const StreamTrace& psi, std::size_t samples) {
    const InverseMap X = invert_monotone(psi, samples);
    const fourier::TrigInterpolant h(h_minus.values);
    std::vector<double> F(samples), dF(samples);
    for (std::size_t m = 0; m < samples; ++m) {
        const double x = X.values[m];
        F[m] = h(x);
        dF[m] = h.derivative(x) / psi.derivative(x);
    }
    return ProfileFunction(psi.slope, std::move(F), std::move(dF));
}

std::size_t profile_samples(const StripGrid& grid) { return std::max<std::size_t>(2048, 8 * grid.nx()); }

GsSolution solve_case_D(const BoundaryTrace& f, const BoundaryTrace& h_minus, const BoundaryTrace& h_plus,
                        const Diffeomorphism& T, const StripGrid& grid, double tol, int max_iter, double compat_tol) {
    check_size(f, grid, "f");
    check_size(h_minus, grid, "h_minus");
    check_size(h_plus, grid, "h_plus");
    if (T.size() != grid.nx()) throw SolverError(ErrorKind::InvalidConfig, "circle map sample count differs from nx");

    const StreamTrace psi_minus = build_stream_trace(f);
    const PeriodicCubicSpline h_spline(h_minus.values);
    const PeriodicCubicSpline P_spline(psi_minus.periodic.values);

    const std::size_t nx = grid.nx();
    double mismatch = 0.0;
    BoundaryTrace top(std::vector<double>(nx), Side::Top);
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = grid.x(i);
        const double Tx = T.samples()[i];
        mismatch = std::max(mismatch, std::abs(h_plus[i] - h_spline(Tx)));
        // ψ₊ - Jx = J(T(x) - x) + P(T(x))
        top.values[i] = psi_minus.slope * (Tx - x) + P_spline(Tx);
    }
    if (mismatch > compat_tol)
        throw SolverError(ErrorKind::IncompatibleTraces,
                          "sup|h+ - h-(T)| = " + format_number(mismatch) + " exceeds tolerance", mismatch);

    const ProfileFunction prof = build_profile(h_minus, psi_minus, profile_samples(grid));
    BoundaryTrace bottom = psi_minus.periodic;
    bottom.side = Side::Bottom;
    auto sol = finish(prof, psi_minus.slope, bottom, top, grid, tol, max_iter);
    sol.report.residuals["compatibility"] = mismatch;
    return sol;
}

GsSolution solve_case_A(const BoundaryTrace& f_minus, const BoundaryTrace& f_plus, const BoundaryTrace& h_minus,
                        double flux, const StripGrid& grid, double tol, int max_iter) {
    check_size(f_minus, grid, "f_minus");
    check_size(f_plus, grid, "f_plus");
    check_size(h_minus, grid, "h_minus");

    const StreamTrace psi_minus = build_stream_trace(f_minus);
    const double m_plus = f_plus.mean();
    const double imbalance = std::abs(m_plus - psi_minus.slope);
    if (imbalance > 1e-10 * (1.0 + std::abs(psi_minus.slope)))
        throw SolverError(ErrorKind::MassImbalance,
                          "mean inflow " + format_number(psi_minus.slope) + " differs from mean outflow " +
                              format_number(m_plus),
                          imbalance);

    BoundaryTrace top(std::vector<double>(grid.nx()), Side::Top);
    fourier::antiderivative(f_plus.values, top.values);
    for (double& v : top.values) v -= flux;

    const ProfileFunction prof = build_profile(h_minus, psi_minus, profile_samples(grid));
    BoundaryTrace bottom = psi_minus.periodic;
    bottom.side = Side::Bottom;
    auto sol = finish(prof, psi_minus.slope, bottom, top, grid, tol, max_iter);
    sol.report.residuals["mass_imbalance"] = imbalance;
    return sol;
}

}  // namespace steady
