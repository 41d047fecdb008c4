#pragma once

#include "steady/grid.hpp"
#include "steady/solution.hpp"

#include <string>

namespace steady {

/// Grid fields as stored in a field file.
struct FieldSet {
    StripGrid grid;
    VectorField v;
    ScalarField p;
    ScalarField omega;
};

/// Text field file: three comment lines, then one row per grid point
/// (x, y, v1, v2, p, omega, H) with 17 significant digits.
std::string format_fields(const VectorField& v, const ScalarField& p, const ScalarField& omega,
                          const char* columns = "x y v1 v2 p omega H");
void write_fields(const std::string& path, const VectorField& v, const ScalarField& p, const ScalarField& omega,
                  const char* columns = "x y v1 v2 p omega H");
FieldSet read_fields(const std::string& path);

/// Comma-separated rows behind a single column line.
void write_plotdata(const std::string& path, const VectorField& v, const ScalarField& p, const ScalarField& omega,
                    const char* columns = "x,y,v1,v2,p,omega,H");

}  // namespace steady
