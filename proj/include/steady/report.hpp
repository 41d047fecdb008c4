#pragma once

#include <map>
#include <string>

namespace steady {

/// Outcome of an iterative solve.
struct SolveReport {
    int iterations = 0;
    double final_update = 0.0;       // norm of the last increment
    double contraction_ratio = 0.0;  // median of successive update ratios
    bool converged = false;
    std::map<std::string, double> residuals;
};

}  // namespace steady
