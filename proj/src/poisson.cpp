#include "steady/poisson.hpp"

#include "steady/errors.hpp"
#include "steady/fourier.hpp"
#include "steady/profile.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace steady {
namespace {

void require_finite(std::span<const double> v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw SolverError(ErrorKind::NonFiniteInput, std::string(what) + " has non-finite entries");
}

}  // namespace

ScalarField solve_poisson_dirichlet(const ScalarField& rhs, const BoundaryTrace& bottom, const BoundaryTrace& top) {
    const auto& g = rhs.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    if (bottom.size() != nx || top.size() != nx)
        throw SolverError(ErrorKind::NonFiniteInput, "boundary trace length does not match grid");
    require_finite(rhs.values(), "rhs");
    require_finite(bottom.values, "bottom trace");
    require_finite(top.values, "top trace");

    const std::size_t nk = nx / 2 + 1;
    // modes[j][k]: Fourier coefficient of row j.
    std::vector<fourier::Coefficients> modes(ny);
    modes[0] = fourier::forward(bottom.values);
    modes[ny - 1] = fourier::forward(top.values);
    for (std::size_t j = 1; j + 1 < ny; ++j) modes[j] = fourier::forward(rhs.row(j));

    const double h = g.dy();
    const double inv_h2 = 1.0 / (h * h);
    const std::size_t m = ny - 2;  // unknown rows
    std::vector<double> cp(m);
    std::vector<std::complex<double>> dp(m);

    for (std::size_t k = 0; k < nk; ++k) {
        const double kk = 2.0 * std::numbers::pi * static_cast<double>(k);
        const double diag = -2.0 * inv_h2 - kk * kk;
        const std::complex<double> lo = modes[0][k], hi = modes[ny - 1][k];

        // (u[j-1] - 2u[j] + u[j+1])/h² - k²u[j] = r[j], j = 1..ny-2
        for (std::size_t r = 0; r < m; ++r) {
            std::complex<double> d = modes[r + 1][k];
            if (r == 0) d -= inv_h2 * lo;
            if (r + 1 == m) d -= inv_h2 * hi;
            if (r == 0) {
                cp[r] = inv_h2 / diag;
                dp[r] = d / diag;
            } else {
                const double den = diag - inv_h2 * cp[r - 1];
                cp[r] = inv_h2 / den;
                dp[r] = (d - inv_h2 * dp[r - 1]) / den;
            }
        }
        for (std::size_t r = m; r-- > 0;) {
            std::complex<double> u = dp[r];
            if (r + 1 < m) u -= cp[r] * modes[r + 2][k];
            modes[r + 1][k] = u;
        }
    }

    ScalarField psi(g);
    std::copy(bottom.values.begin(), bottom.values.end(), psi.row(0).begin());
    std::copy(top.values.begin(), top.values.end(), psi.row(ny - 1).begin());
    for (std::size_t j = 1; j + 1 < ny; ++j) fourier::inverse(modes[j], psi.row(j));
    return psi;
}

ScalarField discrete_laplacian(const ScalarField& psi) {
    const auto& g = psi.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    const double inv_h2 = 1.0 / (g.dy() * g.dy());
    ScalarField out(g);
    std::vector<double> xx(nx);
    for (std::size_t j = 1; j + 1 < ny; ++j) {
        fourier::derivative(psi.row(j), xx, 2);
        for (std::size_t i = 0; i < nx; ++i)
            out(i, j) = xx[i] + (psi(i, j + 1) - 2.0 * psi(i, j) + psi(i, j - 1)) * inv_h2;
    }
    return out;
}

SemilinearResult solve_semilinear(const ProfileFunction& profile, double slope, const BoundaryTrace& bottom,
                                  const BoundaryTrace& top, const ScalarField& init, double tol, int max_iter) {
    const auto& g = init.grid();
    const std::size_t nx = g.nx(), ny = g.ny();

    ScalarField phi = init;
    ScalarField rhs(g);
    SemilinearResult result{phi, {}};
    std::vector<double> ratios;
    double prev_update = -1.0;

    for (int it = 1; it <= max_iter; ++it) {
        for (std::size_t j = 1; j + 1 < ny; ++j)
            for (std::size_t i = 0; i < nx; ++i) rhs(i, j) = profile.derivative(slope * g.x(i) + phi(i, j));

        ScalarField next = solve_poisson_dirichlet(rhs, bottom, top);
        double update = 0.0;
        {
            auto a = next.values();
            auto b = phi.values();
            for (std::size_t k = 0; k < a.size(); ++k) update = std::max(update, std::abs(a[k] - b[k]));
        }
        phi = std::move(next);

        if (!std::isfinite(update) || !phi.all_finite())
            throw SolverError(ErrorKind::NoConvergence, "semilinear iteration produced non-finite values");
        if (prev_update > 0.0) ratios.push_back(update / prev_update);
        prev_update = update;

        result.report.iterations = it;
        result.report.final_update = update;
        result.report.contraction_ratio = ratios.empty() ? 0.0 : ratios.back();
        if (update < tol) {
            result.report.converged = true;
            break;
        }
        if (update > 1e6 * (1.0 + init.max_abs()))
            throw SolverError(ErrorKind::NoConvergence, "semilinear iteration diverged",
                              result.report.contraction_ratio);
    }

    // A single ratio is noisy for oscillating iterates; judge on the geometric
    // mean of the last few.
    double recent = 0.0;
    if (!ratios.empty()) {
        const std::size_t take = std::min<std::size_t>(5, ratios.size());
        double logsum = 0.0;
        for (std::size_t k = ratios.size() - take; k < ratios.size(); ++k) logsum += std::log(ratios[k]);
        recent = std::exp(logsum / static_cast<double>(take));
    }
    if (!result.report.converged && recent >= 1.0)
        throw SolverError(ErrorKind::NoConvergence, "semilinear iteration did not contract",
                          result.report.contraction_ratio);
    result.phi = std::move(phi);
    return result;
}

}  // namespace steady
