#include <doctest.h>

#include "steady/fourier.hpp"
#include "steady/grid.hpp"
#include "steady/spline.hpp"

#include <cmath>
#include <numbers>

using namespace steady;
namespace {
constexpr double pi = std::numbers::pi;

double max_diff(const ScalarField& a, const std::function<double(double, double)>& fn) {
    double m = 0.0;
    const auto& g = a.grid();
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) m = std::max(m, std::abs(a(i, j) - fn(g.x(i), g.y(j))));
    return m;
}
}  // namespace

TEST_CASE("grid rejects bad sizes") {
    CHECK_THROWS_AS(StripGrid(6, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StripGrid(5, 9, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StripGrid(2, 9, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(StripGrid(8, 9, 0.0), std::invalid_argument);
    StripGrid g(8, 7, 0.3);
    CHECK(g.y(0) == 0.0);
    CHECK(g.y(6) == 0.3);
}

TEST_CASE("ddx spectral exactness") {
    StripGrid g(32, 5, 1.0);
    auto c = ScalarField::sample(g, [](double, double) { return 3.5; });
    CHECK(ddx(c).max_abs() < 1e-13);
    auto s = ScalarField::sample(g, [](double x, double) { return std::sin(2 * pi * x); });
    CHECK(max_diff(ddx(s), [](double x, double) { return 2 * pi * std::cos(2 * pi * x); }) < 1e-12);
    auto c4 = ScalarField::sample(g, [](double x, double) { return std::cos(4 * pi * x); });
    CHECK(max_diff(ddx(c4), [](double x, double) { return -4 * pi * std::sin(4 * pi * x); }) < 1e-12);
    for (int k = 1; k < 16; ++k) {
        auto f = ScalarField::sample(g, [k](double x, double) { return std::sin(2 * pi * k * x); });
        CHECK(max_diff(ddx(f), [k](double x, double) { return 2 * pi * k * std::cos(2 * pi * k * x); }) <
              1e-11 * k);
    }
}

TEST_CASE("ddy linear exactness and second order") {
    StripGrid g(8, 9, 2.0);
    auto y = ScalarField::sample(g, [](double, double yy) { return yy; });
    CHECK(max_diff(ddy(y), [](double, double) { return 1.0; }) < 1e-13);
    CHECK(ddy(ScalarField(g, 4.0)).max_abs() < 1e-13);

    const double L = 1.0;
    double errs[3];
    const std::size_t nys[3] = {33, 65, 129};
    for (int r = 0; r < 3; ++r) {
        StripGrid gg(8, nys[r], L);
        auto f = ScalarField::sample(gg, [&](double, double yy) { return std::sin(pi * yy / L); });
        errs[r] = max_diff(ddy(f), [&](double, double yy) { return pi / L * std::cos(pi * yy / L); });
    }
    CHECK(errs[0] / errs[1] == doctest::Approx(4.0).epsilon(0.15));
    CHECK(errs[1] / errs[2] == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("perp_gradient conventions") {
    StripGrid g(16, 17, 1.0);
    auto y = ScalarField::sample(g, [](double, double yy) { return yy; });
    auto v = perp_gradient(y);
    CHECK(max_diff(v.comp1, [](double, double) { return -1.0; }) < 1e-13);
    CHECK(v.comp2.max_abs() < 1e-13);

    QuasiPeriodicField px{1.0, ScalarField(g)};
    auto w = perp_gradient(px);
    CHECK(w.comp1.max_abs() < 1e-14);
    CHECK(max_diff(w.comp2, [](double, double) { return 1.0; }) < 1e-14);

    const double L = 1.0;
    StripGrid gg(32, 65, L);
    auto psi = ScalarField::sample(gg, [&](double x, double yy) { return std::sin(2 * pi * x) * std::sin(pi * yy / L); });
    auto u = perp_gradient(psi);
    const double h = gg.dy();
    CHECK(max_diff(u.comp1, [&](double x, double yy) { return -(pi / L) * std::sin(2 * pi * x) * std::cos(pi * yy / L); }) <
          15 * h * h);  // one-sided wall stencil: (h²/3)|ψ_yyy|
    CHECK(max_diff(u.comp2, [&](double x, double yy) { return 2 * pi * std::cos(2 * pi * x) * std::sin(pi * yy / L); }) <
          1e-12);
}

TEST_CASE("boundary-corrected perp_gradient keeps the wall derivative second order") {
    const double L = 1.0;
    double errs[2];
    const std::size_t nys[2] = {33, 65};
    for (int r = 0; r < 2; ++r) {
        StripGrid g(16, nys[r], L);
        auto psi = ScalarField::sample(g, [](double x, double y) { return std::cos(2 * pi * x) * std::exp(2 * y); });
        auto lap = ScalarField::sample(g, [](double x, double y) {
            return (4.0 - 4 * pi * pi) * std::cos(2 * pi * x) * std::exp(2 * y);
        });
        auto v = perp_gradient(psi, lap);
        auto om = curl2d(v);
        errs[r] = max_diff(om, [](double x, double y) {
            return (4.0 - 4 * pi * pi) * std::cos(2 * pi * x) * std::exp(2 * y);
        });
    }
    CHECK(errs[0] / errs[1] > 3.5);
}

TEST_CASE("curl and div") {
    StripGrid g(32, 65, 1.0);
    VectorField up(ScalarField(g, 0.0), ScalarField(g, 1.0));
    CHECK(curl2d(up).max_abs() < 1e-13);
    CHECK(div2d(up).max_abs() < 1e-13);

    VectorField s(ScalarField(g), ScalarField::sample(g, [](double x, double) { return std::sin(2 * pi * x); }));
    CHECK(max_diff(curl2d(s), [](double x, double) { return 2 * pi * std::cos(2 * pi * x); }) < 1e-12);
    CHECK(div2d(s).max_abs() < 1e-13);

    const double eps = 0.05;
    auto grad1 = ScalarField::sample(g, [&](double x, double y) { return eps * std::exp(-2 * pi * y) * std::cos(2 * pi * x); });
    auto grad2 = ScalarField::sample(g, [&](double x, double y) { return 1.0 - eps * std::exp(-2 * pi * y) * std::sin(2 * pi * x); });
    VectorField gv(grad1, grad2);
    const double h = g.dy();
    CHECK(curl2d(gv).max_abs() < 60 * h * h);
    CHECK(div2d(gv).max_abs() < 60 * h * h);
}

TEST_CASE("flux through the vertical segment") {
    StripGrid g(16, 33, 2.0);
    VectorField up(ScalarField(g, 0.0), ScalarField(g, 1.0));
    CHECK(flux_through_C(up) == doctest::Approx(0.0));
    VectorField side(ScalarField(g, 0.7), ScalarField(g, 0.0));
    CHECK(std::abs(flux_through_C(side) - 1.4) < 1e-14);
    auto psi = ScalarField::sample(g, [](double, double y) { return -y / 2.0; });
    CHECK(std::abs(flux_through_C(perp_gradient(psi)) - 1.0) < 1e-12);
}

TEST_CASE("flux equals the stream function drop up to quadrature error") {
    StripGrid g(32, 65, 1.0);
    auto psi = ScalarField::sample(g, [](double x, double y) { return std::sin(2 * pi * x + 0.3) * std::sin(3 * y) + y * y; });
    const double drop = psi(0, 0) - psi(0, g.ny() - 1);
    CHECK(std::abs(flux_through_C(perp_gradient(psi)) - drop) < 20 * g.dy() * g.dy());
}

TEST_CASE("holder seminorm") {
    StripGrid g(8, 5, 1.0);
    CHECK(discrete_holder_seminorm(ScalarField(g, 2.0), 0.5) == 0.0);
    ScalarField spike(g, 0.0);
    spike(3, 2) = 1.0;
    CHECK(discrete_holder_seminorm(spike, 0.3) > 0.0);

    StripGrid gg(64, 9, 1.0);
    auto f = ScalarField::sample(gg, [](double x, double) { return std::sin(2 * pi * x); });
    // Brute-force all-pairs oracle, written independently.
    double best = 0.0;
    for (std::size_t p = 0; p < gg.size(); ++p)
        for (std::size_t q = 0; q < gg.size(); ++q) {
            if (p == q) continue;
            double dx = std::abs(gg.x(p % 64) - gg.x(q % 64));
            dx = std::min(dx, 1.0 - dx);
            const double dy = gg.y(p / 64) - gg.y(q / 64);
            const double d = std::hypot(dx, dy);
            best = std::max(best, std::abs(f.values()[p] - f.values()[q]) / std::pow(d, 0.5));
        }
    CHECK(discrete_holder_seminorm(f, 0.5) == doctest::Approx(best).epsilon(0.1));
}

TEST_CASE("antiderivative and trig interpolant") {
    std::vector<double> f(32), F(32);
    for (std::size_t i = 0; i < 32; ++i) f[i] = 1.0 + 0.1 * std::sin(2 * pi * i / 32.0);
    const double m = fourier::antiderivative(f, F);
    CHECK(m == doctest::Approx(1.0));
    for (std::size_t i = 0; i < 32; ++i) {
        const double x = i / 32.0;
        CHECK(std::abs(F[i] - 0.1 * (1 - std::cos(2 * pi * x)) / (2 * pi)) < 1e-15);
    }
    fourier::TrigInterpolant ti(f);
    for (double x : {0.013, 0.5, 0.77, 1.3})
        CHECK(std::abs(ti(x) - (1.0 + 0.1 * std::sin(2 * pi * x))) < 1e-14);
    CHECK(std::abs(ti.derivative(0.2) - 0.2 * pi * std::cos(0.4 * pi)) < 1e-13);
}

TEST_CASE("periodic cubic spline") {
    std::vector<double> s(64);
    for (std::size_t i = 0; i < 64; ++i) s[i] = std::sin(2 * pi * i / 64.0);
    PeriodicCubicSpline sp(s);
    CHECK(std::abs(sp(0.25) - 1.0) < 1e-12);
    CHECK(std::abs(sp(0.1234) - std::sin(2 * pi * 0.1234)) < 1e-5);
    CHECK(std::abs(sp(-0.8766) - std::sin(2 * pi * 0.1234)) < 1e-5);
    CHECK(std::abs(sp.derivative(0.1) - 2 * pi * std::cos(0.2 * pi)) < 1e-3);
}
