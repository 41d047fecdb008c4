#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace steady {

/// Discrete periodic strip S¹×[0,L]: x_i = i/nx on the unit circle,
/// y_j = j·L/(ny-1) including both boundary circles.
class StripGrid {
public:
    StripGrid(std::size_t nx, std::size_t ny, double height);

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    std::size_t size() const noexcept { return nx_ * ny_; }
    double height() const noexcept { return height_; }
    double dx() const noexcept { return 1.0 / static_cast<double>(nx_); }
    double dy() const noexcept { return height_ / static_cast<double>(ny_ - 1); }

    double x(std::size_t i) const noexcept { return static_cast<double>(i) * dx(); }
    double y(std::size_t j) const noexcept {
        return j + 1 == ny_ ? height_ : static_cast<double>(j) * dy();
    }
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return j * nx_ + i; }

    friend bool operator==(const StripGrid&, const StripGrid&) = default;

private:
    std::size_t nx_;
    std::size_t ny_;
    double height_;
};

enum class Side { Bottom, Top };

/// Grid-sampled scalar, row-major by y then x.
class ScalarField {
public:
    explicit ScalarField(const StripGrid& grid, double fill = 0.0);
    ScalarField(const StripGrid& grid, std::vector<double> values);
    static ScalarField sample(const StripGrid& grid, const std::function<double(double, double)>& fn);

    const StripGrid& grid() const noexcept { return grid_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[grid_.index(i, j)]; }
    double& operator()(std::size_t i, std::size_t j) noexcept { return values_[grid_.index(i, j)]; }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    std::span<const double> row(std::size_t j) const noexcept {
        return std::span<const double>(values_).subspan(j * grid_.nx(), grid_.nx());
    }
    std::span<double> row(std::size_t j) noexcept {
        return std::span<double>(values_).subspan(j * grid_.nx(), grid_.nx());
    }

    double max_abs() const noexcept;
    bool all_finite() const noexcept;

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double s);

private:
    StripGrid grid_;
    std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
ScalarField operator*(const ScalarField& a, const ScalarField& b);  // pointwise

struct VectorField {
    ScalarField comp1;
    ScalarField comp2;

    explicit VectorField(const StripGrid& grid) : comp1(grid), comp2(grid) {}
    VectorField(ScalarField c1, ScalarField c2);

    const StripGrid& grid() const noexcept { return comp1.grid(); }
    double max_abs() const noexcept;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);

/// Periodic samples on one boundary circle (nx values at x_i).
struct BoundaryTrace {
    std::vector<double> values;
    Side side = Side::Bottom;

    BoundaryTrace() = default;
    BoundaryTrace(std::vector<double> v, Side s) : values(std::move(v)), side(s) {}
    static BoundaryTrace zero(const StripGrid& grid, Side s);
    static BoundaryTrace constant(const StripGrid& grid, Side s, double c);
    static BoundaryTrace sample(const StripGrid& grid, Side s, const std::function<double(double)>& fn);

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const noexcept { return values[i]; }
    double mean() const noexcept;
    double max_abs() const noexcept;
    double min() const noexcept;
};

BoundaryTrace trace_of(const ScalarField& field, Side side);
std::size_t row_of(const StripGrid& grid, Side side) noexcept;

/// Multivalued stream function ψ = J·x + φ with φ periodic.
struct QuasiPeriodicField {
    double slope = 0.0;  // J
    ScalarField periodic;
};

// Spectral derivative over the unit period, row by row.
ScalarField ddx(const ScalarField& field);
// Second-order central differences, second-order one-sided at y=0 and y=L.
ScalarField ddy(const ScalarField& field);
// Spectral second x-derivative (Nyquist mode retained).
ScalarField d2dx2(const ScalarField& field);

BoundaryTrace ddx(const BoundaryTrace& trace);

/// ∇⊥ψ = (-∂ψ/∂y, ∂ψ/∂x).
VectorField perp_gradient(const ScalarField& psi);
VectorField perp_gradient(const QuasiPeriodicField& psi);

/// ∇⊥ψ where Δψ is known on the two boundary rows. The boundary value of
/// ∂ψ/∂y uses (ψ₁-ψ₀)/h - (h/2)ψ_yy, whose leading error matches the
/// interior central stencil, so derivatives of the result stay second order
/// up to the wall.
VectorField perp_gradient(const ScalarField& psi, const ScalarField& laplacian);
VectorField perp_gradient(const QuasiPeriodicField& psi, const ScalarField& laplacian);

ScalarField curl2d(const VectorField& v);
ScalarField div2d(const VectorField& v);

/// ∫₀^L v¹(0,y) dy by composite trapezoid.
double flux_through_C(const VectorField& v);

/// Trapezoid weights in y (length ny); with 1/nx in x they integrate over Ω.
std::vector<double> trapezoid_weights(const StripGrid& grid);

/// max |f(p)-f(q)| / |p-q|^alpha with periodic x-distance. All pairs when the
/// grid has at most 4096 points, otherwise a fixed-stride subsample.
double discrete_holder_seminorm(const ScalarField& field, double alpha);

}  // namespace steady
