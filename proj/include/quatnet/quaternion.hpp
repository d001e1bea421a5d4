#pragma once

#include <cmath>

#include "quatnet/mat4.hpp"

namespace quatnet {

/// One hypercomplex scalar a + b*i + c*j + d*k. All scalar algebra here is
/// 64-bit; this module is the reference against which the tensor-level
/// quaternion operations are checked.
struct Quaternion {
    double a = 0.0;  // real part
    double b = 0.0;  // i component
    double c = 0.0;  // j component
    double d = 0.0;  // k component

    static Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

    Vec4<double> components() const { return {a, b, c, d}; }
};

inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}

inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}

/// Hamilton product. Noncommutative: ij = k but ji = -k.
inline Quaternion qmul(const Quaternion& p, const Quaternion& q) {
    return {
        p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
        p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
        p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
    };
}

inline Quaternion conjugate(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

inline double norm(const Quaternion& q) {
    return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
}

inline Quaternion scale(const Quaternion& q, double s) {
    return {q.a * s, q.b * s, q.c * s, q.d * s};
}

/// The injective homomorphism H -> M(4,R). First column is (a,b,c,d)^T; this
/// exact sign pattern is the canonical real form used everywhere in the
/// library (quaternion convolution assembles the same block pattern).
inline Mat4<double> embed(const Quaternion& q) {
    Mat4<double> m;
    m(0, 0) = q.a; m(0, 1) = -q.b; m(0, 2) = -q.c; m(0, 3) = -q.d;
    m(1, 0) = q.b; m(1, 1) =  q.a; m(1, 2) = -q.d; m(1, 3) =  q.c;
    m(2, 0) = q.c; m(2, 1) =  q.d; m(2, 2) =  q.a; m(2, 3) = -q.b;
    m(3, 0) = q.d; m(3, 1) = -q.c; m(3, 2) =  q.b; m(3, 3) =  q.a;
    return m;
}

}  // namespace quatnet
