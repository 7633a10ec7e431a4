#pragma once

#include <array>
#include <vector>

#include "nvres/linalg.hpp"

namespace nvres {

/// Two-qutrit density matrix over the ordered product basis
/// |1>|1>, |1>|2>, |1>|3>, |2>|1>, ..., |3>|3>  (first spin major:
/// row index = 3*(i-1) + (j-1) for |i>|j>). Validated on construction:
///   hermiticity defect < 1e-12, |trace - 1| < 1e-10,
///   min eigenvalue > -positivity_tol (default 1e-9).
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(const Mat9& m, double positivity_tol = 1e-9);

    const Mat9& matrix() const { return m_; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  private:
    explicit DensityMatrix(const Mat9& m) : m_(m) {}
    Mat9 m_;
};

struct NegativityResult {
    double value;                            // -(sum of negative PT eigenvalues)
    std::vector<double> negative_eigenvalues;  // ascending
};

/// <i1,j2| rho^T1 |k1,l2> = <k1,j2| rho |i1,l2>; pure index permutation.
Mat9 partial_transpose_spin1(const Mat9& rho);

/// Ascending eigenvalues of a 9x9 Hermitian matrix (cyclic complex Jacobi).
std::array<double, 9> hermitian_eigenvalues(const Mat9& m);

/// Negativity of rho with respect to the first spin. Eigenvalues below
/// -1e-12 count as negative; smaller magnitudes are treated as round-off.
NegativityResult negativity(const DensityMatrix& rho);

/// Same, for a raw Hermitian trace-1 matrix (used on integrator output where
/// positivity may drift below the construction tolerance).
NegativityResult negativity_raw(const Mat9& rho);

}  // namespace nvres
