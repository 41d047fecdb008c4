#include <doctest.h>

#include "steady/diagnostics.hpp"
#include "steady/mhs.hpp"

#include <cmath>
#include <numbers>

using namespace steady;
namespace {
constexpr double pi = std::numbers::pi;

VectorField wavy(const StripGrid& g) {
    return VectorField(ScalarField::sample(g, [](double x, double y) { return 0.1 * std::sin(2 * pi * x) * y; }),
                       ScalarField::sample(g, [](double x, double y) { return 1.0 + 0.2 * std::cos(2 * pi * x) * y; }));
}
}  // namespace

TEST_CASE("uniform field") {
    StripGrid g(16, 9, 1.0);
    VectorField v(ScalarField(g), ScalarField(g, 1.0));
    auto s = euler_to_mhs(v, ScalarField(g));
    CHECK(s.B.comp2.max_abs() == 1.0);
    CHECK(s.B.comp1.max_abs() == 0.0);
    CHECK(s.j.max_abs() == 0.0);
    for (double x : s.p.values()) CHECK(x == -0.5);
}

TEST_CASE("transformation round trips") {
    StripGrid g(32, 33, 1.0);
    auto v = wavy(g);
    auto p = ScalarField::sample(g, [](double x, double y) { return std::cos(2 * pi * x) + y * y; });
    auto back = mhs_to_euler(euler_to_mhs(v, p));
    CHECK((back.first - v).max_abs() == 0.0);
    CHECK((back.second - p).max_abs() <= 4e-16);

    MhsState s{wavy(g), ScalarField::sample(g, [](double x, double) { return std::sin(2 * pi * x); }),
               ScalarField::sample(g, [](double, double y) { return 3.0 - y; })};
    auto [ve, pe] = mhs_to_euler(s);
    auto s2 = euler_to_mhs(ve, pe);
    CHECK((s2.B - s.B).max_abs() == 0.0);
    CHECK((s2.p - s.p).max_abs() <= 4e-15);
}

TEST_CASE("current and divergence of the field") {
    StripGrid g(32, 33, 1.0);
    const BaseFlow b = BaseFlow::harmonic(g, 0.1);
    auto s = euler_to_mhs(b.v0, b.p0);
    CHECK((s.j - curl2d(s.B)).max_abs() == 0.0);
    CHECK(div2d(s.B).max_abs() < 0.05);
}

TEST_CASE("force balance follows the Euler residual") {
    auto spec = BvpSpec::zero(CaseKind::B, 64, 65);
    for (std::size_t i = 0; i < spec.nx; ++i) spec.h_minus.values[i] = 1e-3 * std::sin(2 * pi * i / 64.0);
    const auto sol = solve(spec);
    const auto s = euler_to_mhs(sol.v, sol.p);
    const double r = euler_residual(sol.v, sol.p).at("momentum_sup");
    CHECK(mhs_residual(s).at("force_sup") <= r + 1e-10);
}

TEST_CASE("MHS solves through the Euler equivalent") {
    auto zb = BvpSpec::zero(CaseKind::B, 32, 33);
    auto sb = solve_mhs(zb);
    CHECK(sb.state.B.comp1.max_abs() < 1e-12);
    CHECK((sb.state.B.comp2 - ScalarField(sb.state.B.grid(), 1.0)).max_abs() < 1e-12);
    CHECK(sb.state.j.max_abs() < 1e-12);

    auto d = BvpSpec::zero(CaseKind::D, 32, 33);
    for (auto& v : d.f_minus.values) v = 1.0;
    for (auto& v : d.h_minus.values) v = 0.3;
    for (auto& v : d.h_plus.values) v = 0.3;
    auto sd = solve_mhs(d);
    CHECK((sd.state.B.comp2 - ScalarField(sd.state.B.grid(), 1.0)).max_abs() < 1e-10);
    // Euler data -0.3 gives p = -0.3 - 1/2, hence p_mhs = 0.3
    CHECK((sd.state.p - ScalarField(sd.state.B.grid(), 0.3)).max_abs() < 1e-10);

    auto a = BvpSpec::zero(CaseKind::A, 64, 65);
    for (auto& v : a.f_minus.values) v = 1.0;
    a.f_plus = a.f_minus;
    a.f_plus->side = Side::Top;
    for (std::size_t i = 0; i < a.nx; ++i) a.h_minus.values[i] = 1e-3 * std::sin(2 * pi * i / 64.0);
    auto sa = solve_mhs(a);
    double m = 0.0;
    for (std::size_t i = 0; i < a.nx; ++i) m = std::max(m, std::abs(sa.state.p(i, 0) - a.h_minus[i]));
    CHECK(m <= 1e-10 + 1.0 / (64.0 * 64.0));
}

TEST_CASE("spec translation flips pressure data only") {
    auto s = BvpSpec::zero(CaseKind::G, 16, 9);
    s.h_minus.values[3] = 0.25;
    s.h_plus.values[5] = -0.5;
    s.f_minus.values[2] = 0.125;
    auto e = mhs_to_euler_spec(s);
    CHECK(e.h_minus[3] == -0.25);
    CHECK(e.h_plus[5] == 0.5);
    CHECK(e.f_minus[2] == 0.125);
}
