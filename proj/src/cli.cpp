#include "steady/cli.hpp"

#include "steady/config.hpp"
#include "steady/diagnostics.hpp"
#include "steady/fieldio.hpp"
#include "steady/mhs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace steady {
namespace {

using nlohmann::json;

std::string num(double v) { return format_number(v); }

json report_json(const BvpSpec& spec, const EulerSolution& sol) {
    json j;
    j["case"] = case_name(spec.kind);
    j["nx"] = spec.nx;
    j["ny"] = spec.ny;
    j["L"] = spec.L;
    j["iterations"] = sol.report.iterations;
    j["final_update"] = sol.report.final_update;
    j["contraction_ratio"] = sol.report.contraction_ratio;
    j["converged"] = sol.report.converged;
    j["residuals"] = sol.report.residuals;
    if (sol.lambda) j["lambda"] = *sol.lambda;
    return j;
}

void print_report(std::ostream& out, const BvpSpec& spec, const SolveReport& r) {
    out << "case " << case_name(spec.kind) << "  nx=" << spec.nx << " ny=" << spec.ny << " L=" << num(spec.L) << "\n";
    out << "iterations " << r.iterations << "  final_update " << num(r.final_update) << "  contraction_ratio "
        << num(r.contraction_ratio) << "  converged " << (r.converged ? "yes" : "no") << "\n";
    for (const auto& [k, v] : r.residuals) out << "  " << k << " = " << num(v) << "\n";
}

void write_report(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw SolverError(ErrorKind::Io, "cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

std::map<std::string, double> recompute(const FieldSet& fs, const BvpSpec& spec) {
    std::map<std::string, double> m = euler_residual(fs.v, fs.p);
    for (const auto& [k, v] : boundary_check(fs.v, fs.p, spec)) m["bc_" + k] = v;
    return m;
}

int cmd_solve(const std::string& config, const std::string& output, const std::string& plot, std::ostream& out) {
    const BvpSpec spec = load_config(config);
    const EulerSolution sol = solve(spec);
    print_report(out, spec, sol.report);
    if (sol.lambda) out << "Lambda = " << num(*sol.lambda) << "\n";
    write_fields(output, sol.v, sol.p, sol.omega);
    write_report(output + ".report.json", report_json(spec, sol));
    if (!plot.empty()) write_plotdata(plot, sol.v, sol.p, sol.omega);
    out << "wrote " << output << "\n";
    return 0;
}

int cmd_mhs(const std::string& config, const std::string& output, const std::string& plot, std::ostream& out) {
    const BvpSpec spec = load_config(config);
    const MhsSolution sol = solve_mhs(spec);
    print_report(out, spec, sol.euler.report);
    const MhsState& s = sol.state;
    // Same layout; the last column is the total pressure p + |B|²/2.
    write_fields(output, s.B, s.p, s.j, "x y B1 B2 p j p_total");
    write_report(output + ".report.json", report_json(spec, sol.euler));
    if (!plot.empty()) write_plotdata(plot, s.B, s.p, s.j, "x,y,B1,B2,p,j,p_total");
    out << "wrote " << output << "\n";
    return 0;
}

int cmd_verify(const std::string& fieldfile, const std::string& config, std::ostream& out, std::ostream& err) {
    const BvpSpec spec = load_config(config);
    const FieldSet fs = read_fields(fieldfile);
    if (fs.grid.nx() != spec.nx || fs.grid.ny() != spec.ny || fs.grid.height() != spec.L)
        throw SolverError(ErrorKind::InvalidConfig, "field file grid does not match the config");

    const auto fresh = recompute(fs, spec);
    std::ifstream rf(fieldfile + ".report.json");
    json stored;
    if (rf) stored = json::parse(rf, nullptr, false);
    const bool have_report = stored.is_object() && stored.contains("residuals");

    bool ok = true;
    for (const auto& [k, v] : fresh) {
        out << "  " << k << " = " << num(v);
        if (have_report && stored["residuals"].contains(k)) {
            const double s = stored["residuals"][k].get<double>();
            const double diff = std::abs(v - s);
            const bool same = diff <= 1e-14 * std::max(1.0, std::abs(s));
            ok = ok && same;
            out << "  stored " << num(s) << (same ? "  ok" : "  MISMATCH");
        }
        out << "\n";
    }
    if (!have_report) err << "no stored report next to " << fieldfile << "; printed fresh residuals only\n";
    out << (ok ? "verify: residuals reproduced" : "verify: residuals differ from the stored report") << "\n";
    return ok ? 0 : 1;
}

int cmd_convergence(const std::string& config, std::ostream& out) {
    const BvpSpec spec = load_config(config);
    const std::size_t nys[3] = {33, 65, 129};
    double mom[3], dv[3];
    for (int r = 0; r < 3; ++r) {
        const EulerSolution sol = solve(spec.with_ny(nys[r]));
        mom[r] = sol.report.residuals.at("momentum_sup");
        dv[r] = sol.report.residuals.at("divergence_sup");
        out << "ny=" << nys[r] << "  momentum_sup " << num(mom[r]) << "  divergence_sup " << num(dv[r]) << "\n";
    }
    for (int r = 0; r < 2; ++r)
        out << "order " << nys[r] << "->" << nys[r + 1] << "  momentum " << num(std::log2(mom[r] / mom[r + 1]))
            << "  divergence " << num(std::log2(dv[r] / dv[r + 1])) << "\n";
    return 0;
}

}  // namespace

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::MultiValuedPressure:
    case ErrorKind::PathDependence: return 2;
    case ErrorKind::CompatibilityViolated: return 3;
    case ErrorKind::InvalidConfig:
    case ErrorKind::UnsupportedCase:
    case ErrorKind::NonPositiveInflow:
    case ErrorKind::NotMonotone:
    case ErrorKind::IncompatibleTraces:
    case ErrorKind::NonFiniteInput: return 4;
    case ErrorKind::TangencyDetected:
    case ErrorKind::MassImbalance: return 5;
    case ErrorKind::Io: return 1;
    }
    return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steady 2D Euler and magnetohydrostatic boundary-value solver on the periodic strip"};
    app.require_subcommand(1);

    std::string config, output, plot, fieldfile;
    auto* solve_cmd = app.add_subcommand("solve", "solve the problem in a YAML config");
    solve_cmd->add_option("config", config, "problem config")->required();
    solve_cmd->add_option("-o,--output", output, "field file")->default_val("solution.txt");
    solve_cmd->add_option("--plot", plot, "also write comma-separated plot data here");

    auto* verify_cmd = app.add_subcommand("verify", "recompute residuals of a written field file");
    verify_cmd->add_option("fieldfile", fieldfile, "field file")->required();
    verify_cmd->add_option("config", config, "problem config")->required();

    auto* conv_cmd = app.add_subcommand("convergence", "solve at ny = 33, 65, 129 and report observed orders");
    conv_cmd->add_option("config", config, "problem config")->required();

    auto* mhs_cmd = app.add_subcommand("mhs", "solve a magnetohydrostatic problem");
    mhs_cmd->add_option("config", config, "problem config")->required();
    mhs_cmd->add_option("-o,--output", output, "field file")->default_val("mhs_solution.txt");
    mhs_cmd->add_option("--plot", plot, "also write comma-separated plot data here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 4;
    }

    try {
        if (*solve_cmd) return cmd_solve(config, output, plot, out);
        if (*verify_cmd) return cmd_verify(fieldfile, config, out, err);
        if (*conv_cmd) return cmd_convergence(config, out);
        if (*mhs_cmd) return cmd_mhs(config, output, plot, out);
    } catch (const SolverError& e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::CompatibilityViolated && e.value())
            out << "Lambda = " << num(*e.value()) << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 4;
}

}  // namespace steady
