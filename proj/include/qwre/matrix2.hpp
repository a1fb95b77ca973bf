#pragma once

#include <cmath>
#include <complex>

namespace qwre {

using cplx = std::complex<double>;

/// Two-component internal (chirality) amplitude: coordinates in the (|L>,|R>) basis.
struct ChiralityVector {
    cplx left{};
    cplx right{};

    double norm_sq() const { return std::norm(left) + std::norm(right); }
};

inline ChiralityVector operator+(const ChiralityVector& u, const ChiralityVector& v) {
    return {u.left + v.left, u.right + v.right};
}

/// Dense 2x2 complex matrix, row-major entries.
struct Mat2 {
    cplx m00{}, m01{};
    cplx m10{}, m11{};

    Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Mat2 operator-(const Mat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    ChiralityVector operator*(const ChiralityVector& v) const {
        return {m00 * v.left + m01 * v.right, m10 * v.left + m11 * v.right};
    }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline Mat2 operator*(const cplx& s, const Mat2& m) {
    return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m.m00), std::conj(m.m10), std::conj(m.m01), std::conj(m.m11)};
}

/// Trace inner product <A|B> = tr(A* B).
inline cplx trace_inner(const Mat2& a, const Mat2& b) {
    return std::conj(a.m00) * b.m00 + std::conj(a.m01) * b.m01 +
           std::conj(a.m10) * b.m10 + std::conj(a.m11) * b.m11;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
    return std::max(std::max(std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01)),
                    std::max(std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)));
}

}  // namespace qwre
