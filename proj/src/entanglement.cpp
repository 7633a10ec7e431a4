#include "nvres/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nvres/jacobi.hpp"

namespace nvres {

DensityMatrix DensityMatrix::from_matrix(const Mat9& m, double positivity_tol) {
    const double defect = m.hermiticity_defect();
    if (!(defect < 1e-12))
        throw std::domain_error("DensityMatrix: not Hermitian (defect " + std::to_string(defect) +
                                ")");
    const double tr_err = std::abs(m.trace() - cplx{1.0, 0.0});
    if (!(tr_err < 1e-10))
        throw std::domain_error("DensityMatrix: trace differs from 1 by " + std::to_string(tr_err));
    const auto eig = hermitian_eigensystem(m);
    if (eig.values[0] < -positivity_tol)
        throw std::domain_error("DensityMatrix: negative eigenvalue " +
                                std::to_string(eig.values[0]));
    return DensityMatrix(m);
}

Mat9 partial_transpose_spin1(const Mat9& rho) {
    Mat9 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l)
                    out(3 * i + j, 3 * k + l) = rho(3 * k + j, 3 * i + l);
    return out;
}

std::array<double, 9> hermitian_eigenvalues(const Mat9& m) {
    return hermitian_eigensystem(m).values;
}

NegativityResult negativity_raw(const Mat9& rho) {
    const Mat9 pt = partial_transpose_spin1(rho);
    const auto vals = hermitian_eigenvalues(pt);
    NegativityResult res{0.0, {}};
    for (double chi : vals) {
        if (chi < -1e-12) {
            res.negative_eigenvalues.push_back(chi);
            res.value -= chi;
        }
    }
    return res;
}

NegativityResult negativity(const DensityMatrix& rho) { return negativity_raw(rho.matrix()); }

}  // namespace nvres
