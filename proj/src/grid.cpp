#include "steady/grid.hpp"

#include "steady/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace steady {

StripGrid::StripGrid(std::size_t nx, std::size_t ny, double height)
    : nx_(nx), ny_(ny), height_(height) {
    if (nx < 4 || nx % 2 != 0)
        throw std::invalid_argument("StripGrid: nx must be even and >= 4, got " + std::to_string(nx));
    if (ny < 3) throw std::invalid_argument("StripGrid: ny must be >= 3, got " + std::to_string(ny));
    if (!(height > 0.0) || !std::isfinite(height))
        throw std::invalid_argument("StripGrid: height must be positive and finite");
}

// ---------------------------------------------------------------------------
// ScalarField

ScalarField::ScalarField(const StripGrid& grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

ScalarField::ScalarField(const StripGrid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("ScalarField: value count does not match grid");
}

ScalarField ScalarField::sample(const StripGrid& grid, const std::function<double(double, double)>& fn) {
    ScalarField f(grid);
    for (std::size_t j = 0; j < grid.ny(); ++j)
        for (std::size_t i = 0; i < grid.nx(); ++i) f(i, j) = fn(grid.x(i), grid.y(j));
    return f;
}

double ScalarField::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool ScalarField::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    ScalarField out(a.grid());
    auto av = a.values();
    auto bv = b.values();
    auto ov = out.values();
    for (std::size_t k = 0; k < ov.size(); ++k) ov[k] = av[k] * bv[k];
    return out;
}

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(ScalarField c1, ScalarField c2) : comp1(std::move(c1)), comp2(std::move(c2)) {
    if (!(comp1.grid() == comp2.grid()))
        throw std::invalid_argument("VectorField: components live on different grids");
}

double VectorField::max_abs() const noexcept { return std::max(comp1.max_abs(), comp2.max_abs()); }

VectorField& VectorField::operator+=(const VectorField& o) {
    comp1 += o.comp1;
    comp2 += o.comp2;
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    comp1 -= o.comp1;
    comp2 -= o.comp2;
    return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }

// ---------------------------------------------------------------------------
// BoundaryTrace

BoundaryTrace BoundaryTrace::zero(const StripGrid& grid, Side s) { return constant(grid, s, 0.0); }

BoundaryTrace BoundaryTrace::constant(const StripGrid& grid, Side s, double c) {
    return BoundaryTrace(std::vector<double>(grid.nx(), c), s);
}

BoundaryTrace BoundaryTrace::sample(const StripGrid& grid, Side s, const std::function<double(double)>& fn) {
    std::vector<double> v(grid.nx());
    for (std::size_t i = 0; i < grid.nx(); ++i) v[i] = fn(grid.x(i));
    return BoundaryTrace(std::move(v), s);
}

double BoundaryTrace::mean() const noexcept { return fourier::mean(values); }

double BoundaryTrace::max_abs() const noexcept {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double BoundaryTrace::min() const noexcept { return *std::min_element(values.begin(), values.end()); }

std::size_t row_of(const StripGrid& grid, Side side) noexcept {
    return side == Side::Bottom ? 0 : grid.ny() - 1;
}

BoundaryTrace trace_of(const ScalarField& field, Side side) {
    auto r = field.row(row_of(field.grid(), side));
    return BoundaryTrace(std::vector<double>(r.begin(), r.end()), side);
}

// ---------------------------------------------------------------------------
// Differential operators

ScalarField ddx(const ScalarField& field) {
    ScalarField out(field.grid());
    for (std::size_t j = 0; j < field.grid().ny(); ++j) fourier::derivative(field.row(j), out.row(j), 1);
    return out;
}

ScalarField d2dx2(const ScalarField& field) {
    ScalarField out(field.grid());
    for (std::size_t j = 0; j < field.grid().ny(); ++j) fourier::derivative(field.row(j), out.row(j), 2);
    return out;
}

BoundaryTrace ddx(const BoundaryTrace& trace) {
    BoundaryTrace out(std::vector<double>(trace.size()), trace.side);
    fourier::derivative(trace.values, out.values, 1);
    return out;
}

ScalarField ddy(const ScalarField& field) {
    const auto& g = field.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    const double inv2h = 0.5 / g.dy();
    ScalarField out(g);
    for (std::size_t i = 0; i < nx; ++i) {
        out(i, 0) = (-3.0 * field(i, 0) + 4.0 * field(i, 1) - field(i, 2)) * inv2h;
        for (std::size_t j = 1; j + 1 < ny; ++j) out(i, j) = (field(i, j + 1) - field(i, j - 1)) * inv2h;
        out(i, ny - 1) = (3.0 * field(i, ny - 1) - 4.0 * field(i, ny - 2) + field(i, ny - 3)) * inv2h;
    }
    return out;
}

VectorField perp_gradient(const ScalarField& psi) {
    ScalarField u = ddy(psi);
    u *= -1.0;
    return VectorField(std::move(u), ddx(psi));
}

VectorField perp_gradient(const QuasiPeriodicField& psi) {
    VectorField v = perp_gradient(psi.periodic);
    for (double& w : v.comp2.values()) w += psi.slope;
    return v;
}

VectorField perp_gradient(const ScalarField& psi, const ScalarField& laplacian) {
    const auto& g = psi.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    const double h = g.dy();
    VectorField v = perp_gradient(psi);
    std::vector<double> psixx(nx);
    for (Side side : {Side::Bottom, Side::Top}) {
        const std::size_t j = row_of(g, side);
        fourier::derivative(psi.row(j), psixx, 2);
        for (std::size_t i = 0; i < nx; ++i) {
            const double psiyy = laplacian(i, j) - psixx[i];
            const double dpsi =
                side == Side::Bottom ? (psi(i, 1) - psi(i, 0)) / h - 0.5 * h * psiyy
                                     : (psi(i, ny - 1) - psi(i, ny - 2)) / h + 0.5 * h * psiyy;
            v.comp1(i, j) = -dpsi;
        }
    }
    return v;
}

VectorField perp_gradient(const QuasiPeriodicField& psi, const ScalarField& laplacian) {
    // Jx has zero Laplacian, so the periodic part carries all of Δψ.
    VectorField v = perp_gradient(psi.periodic, laplacian);
    for (double& w : v.comp2.values()) w += psi.slope;
    return v;
}

ScalarField curl2d(const VectorField& v) { return ddx(v.comp2) - ddy(v.comp1); }

ScalarField div2d(const VectorField& v) { return ddx(v.comp1) + ddy(v.comp2); }

std::vector<double> trapezoid_weights(const StripGrid& grid) {
    std::vector<double> w(grid.ny(), grid.dy());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

double flux_through_C(const VectorField& v) {
    const auto& g = v.grid();
    const auto w = trapezoid_weights(g);
    double s = 0.0;
    for (std::size_t j = 0; j < g.ny(); ++j) s += w[j] * v.comp1(0, j);
    return s;
}

double discrete_holder_seminorm(const ScalarField& field, double alpha) {
    const auto& g = field.grid();
    const std::size_t n = g.size();
    constexpr std::size_t max_points = 4096;
    const std::size_t stride = n <= max_points ? 1 : (n + max_points - 1) / max_points;

    std::vector<std::size_t> picks;
    for (std::size_t k = 0; k < n; k += stride) picks.push_back(k);

    auto vals = field.values();
    double best = 0.0;
    for (std::size_t a = 0; a < picks.size(); ++a) {
        const std::size_t p = picks[a];
        const double xp = g.x(p % g.nx()), yp = g.y(p / g.nx());
        for (std::size_t b = a + 1; b < picks.size(); ++b) {
            const std::size_t q = picks[b];
            double ddx_ = std::abs(xp - g.x(q % g.nx()));
            ddx_ = std::min(ddx_, 1.0 - ddx_);
            const double ddy_ = yp - g.y(q / g.nx());
            const double dist = std::sqrt(ddx_ * ddx_ + ddy_ * ddy_);
            if (dist <= 0.0) continue;
            best = std::max(best, std::abs(vals[p] - vals[q]) / std::pow(dist, alpha));
        }
    }
    return best;
}

}  // namespace steady
