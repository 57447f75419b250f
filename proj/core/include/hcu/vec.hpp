#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace hcu {

// Small fixed-size state vector (conserved variables, characteristic
// variables, flux values). Plain aggregate so it stays trivially copyable
// and the compiler can keep it in registers.
template <int N>
struct Vec {
    double d[N];

    double& operator[](int i) { return d[i]; }
    double operator[](int i) const { return d[i]; }

    static constexpr int size() { return N; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) d[i] += o.d[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) d[i] -= o.d[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < N; ++i) d[i] *= s;
        return *this;
    }
};

template <int N>
inline Vec<N> operator+(Vec<N> a, const Vec<N>& b) { return a += b; }
template <int N>
inline Vec<N> operator-(Vec<N> a, const Vec<N>& b) { return a -= b; }
template <int N>
inline Vec<N> operator*(double s, Vec<N> a) { return a *= s; }
template <int N>
inline Vec<N> operator*(Vec<N> a, double s) { return a *= s; }

template <int N>
inline double max_abs(const Vec<N>& a) {
    double m = 0.0;
    for (int i = 0; i < N; ++i) m = std::max(m, std::abs(a.d[i]));
    return m;
}

// Dense row-major d-by-d matrix for the characteristic bases (d = 2..4).
template <int N>
struct Mat {
    double d[N * N];

    double& operator()(int i, int j) { return d[i * N + j]; }
    double operator()(int i, int j) const { return d[i * N + j]; }

    static Mat identity() {
        Mat m{};
        for (int i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
};

template <int N>
inline Vec<N> matvec(const Mat<N>& m, const Vec<N>& v) {
    Vec<N> r;
    for (int i = 0; i < N; ++i) {
        double s = 0.0;
        for (int j = 0; j < N; ++j) s += m.d[i * N + j] * v.d[j];
        r.d[i] = s;
    }
    return r;
}

template <int N>
inline Mat<N> matmul(const Mat<N>& a, const Mat<N>& b) {
    Mat<N> r{};
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

}  // namespace hcu
