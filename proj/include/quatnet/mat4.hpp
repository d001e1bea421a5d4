#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace quatnet {

template <class T>
using Vec4 = std::array<T, 4>;

/// Dense 4x4 matrix, row-major. Small enough to pass by value.
template <class T>
struct Mat4 {
    std::array<T, 16> m{};

    T& operator()(int r, int c) { return m[4 * r + c]; }
    const T& operator()(int r, int c) const { return m[4 * r + c]; }

    static Mat4 identity() {
        Mat4 out;
        for (int i = 0; i < 4; ++i) out(i, i) = T(1);
        return out;
    }

    static Mat4 diagonal(T d0, T d1, T d2, T d3) {
        Mat4 out;
        out(0, 0) = d0;
        out(1, 1) = d1;
        out(2, 2) = d2;
        out(3, 3) = d3;
        return out;
    }

    Mat4 transposed() const {
        Mat4 out;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out(c, r) = (*this)(r, c);
        return out;
    }
};

template <class T>
Mat4<T> matmul(const Mat4<T>& a, const Mat4<T>& b) {
    Mat4<T> out;
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) {
            const T av = a(r, k);
            for (int c = 0; c < 4; ++c) out(r, c) += av * b(k, c);
        }
    return out;
}

template <class T>
Vec4<T> matvec(const Mat4<T>& a, const Vec4<T>& x) {
    Vec4<T> out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += a(r, c) * x[c];
    return out;
}

template <class T>
T max_abs_diff(const Mat4<T>& a, const Mat4<T>& b) {
    T worst = T(0);
    for (int i = 0; i < 16; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

}  // namespace quatnet
