#pragma once

#include <vector>

#include "nvres/appendix_solution.hpp"
#include "nvres/lindblad.hpp"

namespace nvres {

struct ElementDiscrepancy {
    int row, col;        // 1-based
    double max_abs_err;  // over the time grid
    bool flagged;        // exceeds the typo threshold
};

struct ValidationReport {
    std::vector<ElementDiscrepancy> elements;  // all 81, row-major
    std::vector<ElementDiscrepancy> flagged;   // subset over threshold
    double worst_err = 0.0;
    double integrator_step = 0.0;
    double step_check = 0.0;  // halve-and-compare defect of the integrator
    double flag_threshold = 1e-4;
};

/// Element-wise comparison of the closed-form solution against the RK4
/// integrator over t_grid (ascending, starting at >= 0). Elements whose
/// maximum discrepancy exceeds flag_threshold are flagged as suspected
/// print errors in the closed forms.
ValidationReport cross_validate(const LindbladSystem& sys, const DensityMatrix& rho0,
                                const std::vector<double>& t_grid, double flag_threshold = 1e-4);

}  // namespace nvres
