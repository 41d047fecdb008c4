#include "steady/fieldio.hpp"

#include "steady/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace steady {
namespace {

void append_rows(std::string& out, const VectorField& v, const ScalarField& p, const ScalarField& omega, char sep) {
    const auto& g = v.grid();
    char buf[256];
    for (std::size_t j = 0; j < g.ny(); ++j)
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const double a = v.comp1(i, j), b = v.comp2(i, j);
            const double H = p(i, j) + 0.5 * (a * a + b * b);
            std::snprintf(buf, sizeof buf, "%.17g%c%.17g%c%.17g%c%.17g%c%.17g%c%.17g%c%.17g\n", g.x(i), sep, g.y(j),
                          sep, a, sep, b, sep, p(i, j), sep, omega(i, j), sep, H);
            out += buf;
        }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SolverError(ErrorKind::Io, "cannot write '" + path + "'");
    out << text;
    if (!out) throw SolverError(ErrorKind::Io, "write to '" + path + "' failed");
}

}  // namespace

std::string format_fields(const VectorField& v, const ScalarField& p, const ScalarField& omega, const char* columns) {
    const auto& g = v.grid();
    char head[128];
    std::snprintf(head, sizeof head, "# nx=%zu ny=%zu L=%.17g\n", g.nx(), g.ny(), g.height());
    std::string out = "# steady-bvp v1\n";
    out += head;
    out += "# columns: ";
    out += columns;
    out += "\n";
    out.reserve(out.size() + g.size() * 160);
    append_rows(out, v, p, omega, ' ');
    return out;
}

void write_fields(const std::string& path, const VectorField& v, const ScalarField& p, const ScalarField& omega,
                  const char* columns) {
    write_text(path, format_fields(v, p, omega, columns));
}

void write_plotdata(const std::string& path, const VectorField& v, const ScalarField& p, const ScalarField& omega,
                    const char* columns) {
    std::string out = columns;
    out += "\n";
    append_rows(out, v, p, omega, ',');
    write_text(path, out);
}

FieldSet read_fields(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SolverError(ErrorKind::Io, "cannot open field file '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line != "# steady-bvp v1")
        throw SolverError(ErrorKind::Io, "'" + path + "' is not a steady-bvp v1 field file");
    std::size_t nx = 0, ny = 0;
    double L = 0.0;
    if (!std::getline(in, line) || std::sscanf(line.c_str(), "# nx=%zu ny=%zu L=%lf", &nx, &ny, &L) != 3)
        throw SolverError(ErrorKind::Io, "bad grid line in '" + path + "'");
    if (!std::getline(in, line) || line.rfind("# columns:", 0) != 0)
        throw SolverError(ErrorKind::Io, "missing column line in '" + path + "'");

    const StripGrid g(nx, ny, L);
    FieldSet fs{g, VectorField(g), ScalarField(g), ScalarField(g)};
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            if (!std::getline(in, line)) throw SolverError(ErrorKind::Io, "field file '" + path + "' is truncated");
            const char* s = line.c_str();
            char* end = nullptr;
            double vals[7];
            for (double& val : vals) {
                val = std::strtod(s, &end);
                if (end == s) throw SolverError(ErrorKind::Io, "malformed row in '" + path + "'");
                s = end;
            }
            fs.v.comp1(i, j) = vals[2];
            fs.v.comp2(i, j) = vals[3];
            fs.p(i, j) = vals[4];
            fs.omega(i, j) = vals[5];
        }
    return fs;
}

}  // namespace steady
