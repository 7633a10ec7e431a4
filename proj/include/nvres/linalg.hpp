#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace nvres {

using cplx = std::complex<double>;

/// Dense N x N complex matrix, row-major, value semantics.
template <std::size_t N>
struct CMat {
    std::array<cplx, N * N> a{};

    cplx& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

    bool operator==(const CMat&) const = default;

    static CMat identity() {
        CMat m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    CMat& operator+=(const CMat& o) {
        for (std::size_t i = 0; i < N * N; ++i) a[i] += o.a[i];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        for (std::size_t i = 0; i < N * N; ++i) a[i] -= o.a[i];
        return *this;
    }
    CMat& operator*=(cplx s) {
        for (auto& x : a) x *= s;
        return *this;
    }

    friend CMat operator+(CMat l, const CMat& r) { return l += r; }
    friend CMat operator-(CMat l, const CMat& r) { return l -= r; }
    friend CMat operator*(CMat m, cplx s) { return m *= s; }
    friend CMat operator*(cplx s, CMat m) { return m *= s; }

    friend CMat operator*(const CMat& l, const CMat& r) {
        CMat out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx lik = l(i, k);
                if (lik == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) out(i, j) += lik * r(k, j);
            }
        return out;
    }

    CMat adjoint() const {
        CMat out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    cplx trace() const {
        cplx t = 0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0;
        for (const auto& x : a) s += std::norm(x);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0;
        for (const auto& x : a) m = std::max(m, std::abs(x));
        return m;
    }

    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const {
        double m = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    CMat hermitized() const {
        CMat out;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
        return out;
    }
};

using Mat3 = CMat<3>;
using Mat9 = CMat<9>;

template <std::size_t N>
using CVec = std::array<cplx, N>;
using Vec3 = CVec<3>;
using Vec9 = CVec<9>;

template <std::size_t N>
CVec<N> operator*(const CMat<N>& m, const CVec<N>& v) {
    CVec<N> out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i] += m(i, j) * v[j];
    return out;
}

/// |u><v|
template <std::size_t N>
CMat<N> outer(const CVec<N>& u, const CVec<N>& v) {
    CMat<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = u[i] * std::conj(v[j]);
    return out;
}

template <std::size_t N>
double norm(const CVec<N>& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

inline Mat9 kron(const Mat3& l, const Mat3& r) {
    Mat9 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l2 = 0; l2 < 3; ++l2)
                    out(3 * i + k, 3 * j + l2) = l(i, j) * r(k, l2);
    return out;
}

/// |i><j| on a single qutrit, 1-based indices.
inline Mat3 qutrit_op(int i, int j) {
    Mat3 m;
    m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1.0;
    return m;
}

}  // namespace nvres
