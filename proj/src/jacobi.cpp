#include "nvres/jacobi.hpp"

#include <stdexcept>
#include <string>

namespace nvres {

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const CMat<N>& m, double hermitian_tol) {
    const double defect = m.hermiticity_defect();
    if (!(defect < hermitian_tol))
        throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian (defect " +
                                    std::to_string(defect) + ")");
    return detail::jacobi_hermitian(m.hermitized());
}

template EigenSystem<3> hermitian_eigensystem<3>(const CMat<3>&, double);
template EigenSystem<9> hermitian_eigensystem<9>(const CMat<9>&, double);

}  // namespace nvres
