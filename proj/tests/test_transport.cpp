#include <doctest.h>

#include "steady/diagnostics.hpp"
#include "steady/errors.hpp"
#include "steady/transport.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace steady;
namespace {
constexpr double pi = std::numbers::pi;

VectorField field(const StripGrid& g, const std::function<double(double, double)>& a,
                  const std::function<double(double, double)>& b) {
    return VectorField(ScalarField::sample(g, a), ScalarField::sample(g, b));
}

// A generic smooth slope with both x and y dependence.
double wavy(double x, double y) { return 0.3 * std::sin(2 * pi * x) * std::cos(pi * y) + 0.1 * y; }
}  // namespace

TEST_CASE("slope field quotients") {
    StripGrid g(16, 9, 1.0);
    CHECK(slope_field(field(g, [](double, double) { return 0.0; }, [](double, double) { return 1.0; }), 0.5)
              .max_abs() == 0.0);
    auto half = slope_field(field(g, [](double, double) { return 1.0; }, [](double, double) { return 2.0; }), 0.5);
    for (double v : half.values()) CHECK(v == 0.5);
    auto s = slope_field(field(g, [](double x, double) { return std::sin(2 * pi * x); },
                               [](double, double) { return 1.0; }),
                         0.5);
    for (std::size_t i = 0; i < 16; ++i) CHECK(s(i, 4) == std::sin(2 * pi * g.x(i)));
}

TEST_CASE("tangency is detected") {
    StripGrid g(16, 9, 1.0);
    auto v = field(g, [](double, double) { return 1.0; }, [](double x, double) { return 0.5 + std::sin(2 * pi * x); });
    try {
        slope_field(v, 0.1);
        FAIL("expected throw");
    } catch (const SolverError& e) {
        CHECK(e.kind() == ErrorKind::TangencyDetected);
    }
}

TEST_CASE("flow map on simple slopes") {
    StripGrid g(32, 33, 1.0);
    ScalarField zero(g), c(g, 0.7);
    auto by = ScalarField::sample(g, [](double, double y) { return y; });
    for (double a : {0.0, 0.3, 0.91}) {
        for (double y : {0.0, 0.25, 0.6, 1.0}) {
            CHECK(integrate_flow(zero, a, y) == a);
            CHECK(std::abs(integrate_flow(c, a, y) - (a + 0.7 * y)) < 1e-14);
            CHECK(std::abs(integrate_flow(by, a, y) - (a + 0.5 * y * y)) < 1e-12);
            CHECK(backtrace(zero, a, y) == a);
            CHECK(std::abs(backtrace(c, a, y) - (a - 0.7 * y)) < 1e-14);
        }
    }
    // universal cover: not wrapped
    CHECK(integrate_flow(ScalarField(g, 3.0), 0.5, 1.0) == doctest::Approx(3.5));
}

TEST_CASE("forward and backward characteristics invert each other") {
    StripGrid g(128, 129, 1.0);
    const SlopeInterpolator b(ScalarField::sample(g, wavy));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ux(0.0, 1.0), uy(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double x = ux(rng), y = uy(rng);
        worst = std::max(worst, std::abs(integrate_flow(b, backtrace(b, x, y), y) - x));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("labels stay ordered") {
    StripGrid g(64, 65, 1.0);
    auto b = ScalarField::sample(g, wavy);
    const SlopeInterpolator bi(b);
    for (std::size_t j : {std::size_t{1}, std::size_t{20}, std::size_t{64}}) {
        double prev = backtrace(bi, g.x(0), g.y(j));
        const double first = prev;
        for (std::size_t i = 1; i < g.nx(); ++i) {
            const double a = backtrace(bi, g.x(i), g.y(j));
            CHECK(a > prev);
            prev = a;
        }
        CHECK(prev < first + 1.0);
    }
    auto fm = FlowMap::compute(b);
    for (std::size_t i = 0; i < g.nx(); ++i) CHECK(fm.X(i, 0) == g.x(i));
}

TEST_CASE("transport along vertical and diagonal characteristics") {
    StripGrid g(128, 129, 1.0);
    auto w0 = BoundaryTrace::sample(g, Side::Bottom, [](double x) { return std::sin(2 * pi * x); });

    auto up = field(g, [](double, double) { return 0.0; }, [](double, double) { return 1.0; });
    auto w = solve_transport(up, w0, 0.5);
    double e = 0.0;
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) e = std::max(e, std::abs(w(i, j) - w0[i]));
    CHECK(e <= 1e-12);

    auto diag = field(g, [](double, double) { return 1.0; }, [](double, double) { return 1.0; });
    auto wd = solve_transport(diag, w0, 0.5);
    e = 0.0;
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i)
            e = std::max(e, std::abs(wd(i, j) - std::sin(2 * pi * (g.x(i) - g.y(j)))));
    CHECK(e <= 1e-6);

    CHECK(solve_transport(diag, BoundaryTrace::zero(g, Side::Bottom), 0.5).max_abs() == 0.0);
}

TEST_CASE("transport residual is second order and range is preserved") {
    double res[2];
    const std::size_t ns[2] = {33, 65};
    for (int r = 0; r < 2; ++r) {
        StripGrid g(64, ns[r], 1.0);
        auto v = field(g, [](double x, double y) { return 0.2 * std::sin(2 * pi * x) * std::cos(pi * y); },
                       [](double x, double) { return 1.0 + 0.1 * std::cos(2 * pi * x); });
        auto w0 = BoundaryTrace::sample(g, Side::Bottom,
                                        [](double x) { return std::sin(2 * pi * x) + 0.3 * std::cos(4 * pi * x); });
        auto w = solve_transport(v, w0, 0.5);
        res[r] = transport_residual(v, w);
        double lo = 1e300, hi = -1e300;
        for (double x : w0.values) lo = std::min(lo, x), hi = std::max(hi, x);
        const double slack = 1e-3 * (hi - lo);
        for (double x : w.values()) {
            CHECK(x >= lo - slack);
            CHECK(x <= hi + slack);
        }
    }
    CHECK(res[1] < 1e-2);
    CHECK(res[0] / res[1] > 3.0);
}
