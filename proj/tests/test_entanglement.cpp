#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nvres/entanglement.hpp"
#include "nvres/jacobi.hpp"
#include "test_util.hpp"

using namespace nvres;
using testutil::Rng;

namespace {

Mat9 product_density(Rng& rng) {
    const auto factor = [&rng]() {
        Mat3 a;
        for (auto& x : a.a) x = rng.complex_unit();
        Mat3 r = a * a.adjoint();
        r *= cplx{1.0 / r.trace().real()};
        return r.hermitized();
    };
    return kron(factor(), factor());
}

std::array<double, 9> sorted_eigs(const Mat9& m) {
    auto v = hermitian_eigenvalues(m);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("partial transpose fixes the maximally mixed state") {
    Mat9 id = Mat9::identity();
    id *= cplx{1.0 / 9.0};
    CHECK((partial_transpose_spin1(id) - id).max_abs() == 0.0);
}

TEST_CASE("partial transpose of a product state preserves the spectrum") {
    Rng rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        const Mat9 rho = product_density(rng);
        const auto before = sorted_eigs(rho);
        const auto after = sorted_eigs(partial_transpose_spin1(rho));
        for (std::size_t i = 0; i < 9; ++i)
            CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("partial transpose is a bit-exact involution") {
    Rng rng(13);
    const Mat9 rho = testutil::random_density(rng);
    const Mat9 twice = partial_transpose_spin1(partial_transpose_spin1(rho));
    for (std::size_t i = 0; i < 81; ++i) CHECK(twice.a[i] == rho.a[i]);
}

TEST_CASE("partial transpose preserves hermiticity and trace") {
    Rng rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        const Mat9 rho = testutil::random_density(rng);
        const Mat9 pt = partial_transpose_spin1(rho);
        CHECK(pt.hermiticity_defect() < 1e-14);
        CHECK(std::abs(pt.trace() - rho.trace()) < 1e-14);
    }
}

TEST_CASE("product states have zero negativity") {
    Rng rng(55);
    for (int rep = 0; rep < 100; ++rep) {
        const auto res = negativity(DensityMatrix::from_matrix(product_density(rng)));
        CHECK(res.value < 1e-10);
    }
}

TEST_CASE("the shared pair (|12> + |21>)/sqrt(2) has negativity one half") {
    Vec9 psi{};
    psi[1] = psi[3] = 1.0 / std::numbers::sqrt2;
    const auto res = negativity(DensityMatrix::from_matrix(outer(psi, psi)));
    CHECK(res.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(res.negative_eigenvalues.size() == 1);
}

TEST_CASE("maximally entangled two-qutrit state has negativity one") {
    Vec9 psi{};
    psi[0] = psi[4] = psi[8] = 1.0 / std::sqrt(3.0);
    const Mat9 rho = outer(psi, psi);

    // independent route: explicit permutation of indices, then the eigensolver
    Mat9 pt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    pt(static_cast<std::size_t>(3 * i + j), static_cast<std::size_t>(3 * k + l)) =
                        rho(static_cast<std::size_t>(3 * k + j), static_cast<std::size_t>(3 * i + l));
    double brute = 0;
    for (double chi : hermitian_eigenvalues(pt))
        if (chi < -1e-12) brute -= chi;
    CHECK(brute == doctest::Approx(1.0).epsilon(1e-10));

    const auto res = negativity(DensityMatrix::from_matrix(rho));
    CHECK(res.value == doctest::Approx(brute).epsilon(1e-10));
}

TEST_CASE("negativity is invariant under local unitaries") {
    Rng rng(123);
    for (int rep = 0; rep < 8; ++rep) {
        const Mat9 rho = testutil::random_density(rng);
        const double base = negativity_raw(rho).value;
        const Mat9 u = kron(testutil::random_unitary<3>(rng), testutil::random_unitary<3>(rng));
        const Mat9 rotated = (u * rho * u.adjoint()).hermitized();
        CHECK(negativity_raw(rotated).value == doctest::Approx(base).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("density matrix validation") {
    Rng rng(7);
    Mat9 good = testutil::random_density(rng);
    CHECK_NOTHROW((void)DensityMatrix::from_matrix(good));

    Mat9 skew = good;
    skew(0, 1) += cplx{1e-6, 0.0};
    CHECK_THROWS_AS((void)DensityMatrix::from_matrix(skew), std::domain_error);

    Mat9 traced = good;
    traced *= cplx{1.1};
    CHECK_THROWS_AS((void)DensityMatrix::from_matrix(traced), std::domain_error);

    Mat9 indefinite = good;
    indefinite(0, 0) -= 2.0;
    indefinite(1, 1) += 2.0;
    CHECK_THROWS_AS((void)DensityMatrix::from_matrix(indefinite), std::domain_error);
}
