#include "steady/mhs.hpp"

#include <algorithm>
#include <cmath>

namespace steady {

MhsState euler_to_mhs(const VectorField& v, const ScalarField& p) {
    MhsState s{v, curl2d(v), p};
    for (std::size_t k = 0; k < p.values().size(); ++k) {
        const double a = v.comp1.values()[k], b = v.comp2.values()[k];
        s.p.values()[k] = -(p.values()[k] + 0.5 * (a * a + b * b));
    }
    return s;
}

std::pair<VectorField, ScalarField> mhs_to_euler(const MhsState& state) {
    ScalarField p = state.p;
    for (std::size_t k = 0; k < p.values().size(); ++k) {
        const double a = state.B.comp1.values()[k], b = state.B.comp2.values()[k];
        p.values()[k] = -state.p.values()[k] - 0.5 * (a * a + b * b);
    }
    return {state.B, std::move(p)};
}

std::map<std::string, double> mhs_residual(const MhsState& s) {
    const auto& g = s.B.grid();
    const ScalarField px = ddx(s.p), py = ddy(s.p);
    double sup = 0.0, l2 = 0.0;
    for (std::size_t j = 1; j + 1 < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) {
            // B×j with j normal to the plane: (B²j, -B¹j).
            const double r1 = s.B.comp2(i, j) * s.j(i, j) + px(i, j);
            const double r2 = -s.B.comp1(i, j) * s.j(i, j) + py(i, j);
            const double r = std::hypot(r1, r2);
            sup = std::max(sup, r);
            l2 += g.dx() * g.dy() * r * r;
        }
    return {{"force_sup", sup}, {"force_l2", std::sqrt(l2)}};
}

BvpSpec mhs_to_euler_spec(const BvpSpec& spec) {
    BvpSpec e = spec;
    for (auto* t : {&e.h_minus, &e.h_plus})
        for (double& v : t->values) v = -v;
    return e;
}

MhsSolution solve_mhs(const BvpSpec& spec) {
    EulerSolution sol = solve(mhs_to_euler_spec(spec));
    MhsState state = euler_to_mhs(sol.v, sol.p);
    for (const auto& [k, v] : mhs_residual(state)) sol.report.residuals["mhs_" + k] = v;
    return MhsSolution{std::move(state), std::move(sol)};
}

}  // namespace steady
