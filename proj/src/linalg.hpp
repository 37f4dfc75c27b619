#pragma once

#include <cmath>
#include <complex>

namespace etasch {

using cplx = std::complex<double>;

// 2x2 real matrix, row major.
struct Mat2 {
    double a00 = 0, a01 = 0, a10 = 0, a11 = 0;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Mat2 operator*(const Mat2& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }
    double det() const { return a00 * a11 - a01 * a10; }
    double frob2() const { return a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11; }
};

// 2x2 complex matrix, row major.
struct Mat2c {
    cplx a00{0, 0}, a01{0, 0}, a10{0, 0}, a11{0, 0};

    static Mat2c identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }
    static Mat2c from_real(const Mat2& m) { return {{m.a00, 0}, {m.a01, 0}, {m.a10, 0}, {m.a11, 0}}; }

    Mat2c operator*(const Mat2c& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }
    Mat2c operator+(const Mat2c& o) const {
        return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
    }
    Mat2c operator*(cplx s) const { return {s * a00, s * a01, s * a10, s * a11}; }
    cplx det() const { return a00 * a11 - a01 * a10; }
    double max_abs() const {
        return std::max(std::max(std::abs(a00), std::abs(a01)),
                        std::max(std::abs(a10), std::abs(a11)));
    }
    double max_abs_diff(const Mat2c& o) const {
        return std::max(std::max(std::abs(a00 - o.a00), std::abs(a01 - o.a01)),
                        std::max(std::abs(a10 - o.a10), std::abs(a11 - o.a11)));
    }
};

inline cplx mul_row0(const Mat2c& m, cplx x, cplx y) { return m.a00 * x + m.a01 * y; }
inline cplx mul_row1(const Mat2c& m, cplx x, cplx y) { return m.a10 * x + m.a11 * y; }

} // namespace etasch
