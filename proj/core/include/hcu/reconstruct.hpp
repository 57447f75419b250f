#pragma once

#include <algorithm>
#include <span>

#include "hcu/euler.hpp"
#include "hcu/vec.hpp"

namespace hcu {

// minmod: min of all-positive arguments, max of all-negative, else 0.
inline double minmod(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::min(a, b);
    if (a < 0.0 && b < 0.0) return std::max(a, b);
    return 0.0;
}

inline double minmod(double a, double b, double c) {
    if (a > 0.0 && b > 0.0 && c > 0.0) return std::min(std::min(a, b), c);
    if (a < 0.0 && b < 0.0 && c < 0.0) return std::max(std::max(a, b), c);
    return 0.0;
}

inline double minmod(std::span<const double> z) {
    if (z.empty()) return 0.0;
    double lo = z[0], hi = z[0];
    for (double v : z) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo > 0.0) return lo;
    if (hi < 0.0) return hi;
    return 0.0;
}

// Generalized minmod slope
// minmod(theta(w1-w0)/dx, (w2-w0)/(2dx), theta(w2-w1)/dx), componentwise.
template <int N>
inline Vec<N> limited_slope(const Vec<N>& w0, const Vec<N>& w1, const Vec<N>& w2, double dx,
                            double theta) {
    Vec<N> s;
    const double t_over_dx = theta / dx, half_over_dx = 0.5 / dx;
    for (int i = 0; i < N; ++i)
        s[i] = minmod(t_over_dx * (w1[i] - w0[i]), half_over_dx * (w2[i] - w0[i]),
                      t_over_dx * (w2[i] - w1[i]));
    return s;
}

// Characteristic-variable slope: full compression (theta = 2), the most
// compressive of the dissipative limiters.
template <int N>
inline Vec<N> limited_slope(const Vec<N>& w0, const Vec<N>& w1, const Vec<N>& w2, double dx) {
    return limited_slope(w0, w1, w2, dx, 2.0);
}

// Limiting the conserved components directly tolerates far less compression:
// at theta = 2 a face next to a strong shock can land exactly on the
// downstream energy while keeping the upstream momentum, which turns the
// reconstructed pressure negative. The classical scheme therefore runs the
// customary milder factor.
inline constexpr double conservative_theta = 1.3;

namespace detail {

// Limited face values at the interface between cells w[1] and w[2] of a
// four-cell window: fm from the left cell's slope, fp from the right cell's.
template <int N>
inline void limited_faces(const Vec<N>* w, double dx, Vec<N>& fm, Vec<N>& fp) {
    const Vec<N> sl = limited_slope(w[0], w[1], w[2], dx, conservative_theta);
    const Vec<N> sr = limited_slope(w[1], w[2], w[3], dx, conservative_theta);
    const double h = 0.5 * dx;
    for (int i = 0; i < N; ++i) {
        fm[i] = w[1][i] + h * sl[i];
        fp[i] = w[2][i] - h * sr[i];
    }
}

}  // namespace detail

// One interface's reconstructed values. For the characteristic variant the
// u and gamma members are tied by u_pm = R * gamma_pm; the conservative
// variant sets gamma_pm = u_pm and an identity basis.
template <int N>
struct InterfacePair {
    Vec<N> u_minus{}, u_plus{};
    Vec<N> gamma_minus{}, gamma_plus{};
    Basis<N> basis{};
};

template <int N>
inline InterfacePair<N> lcd_interface_states(const Vec<N>* window, const Basis<N>& basis,
                                             double dx) {
    InterfacePair<N> ip;
    ip.basis = basis;
    Vec<N> g[4];
    for (int k = 0; k < 4; ++k) g[k] = matvec(basis.Rinv, window[k]);
    const Vec<N> sl = limited_slope(g[0], g[1], g[2], dx);
    const Vec<N> sr = limited_slope(g[1], g[2], g[3], dx);
    const double h = 0.5 * dx;
    ip.gamma_minus = g[1] + h * sl;
    ip.gamma_plus = g[2] - h * sr;
    // u anchored at the window averages rather than R*gamma: identical in
    // exact arithmetic, but flat windows return the averages unchanged.
    ip.u_minus = window[1] + h * matvec(basis.R, sl);
    ip.u_plus = window[2] - h * matvec(basis.R, sr);
    return ip;
}

template <int N>
inline InterfacePair<N> conservative_interface_states(const Vec<N>* window, double dx) {
    InterfacePair<N> ip;
    ip.basis.R = Mat<N>::identity();
    ip.basis.Rinv = Mat<N>::identity();
    ip.basis.lam = Vec<N>{};
    detail::limited_faces(window, dx, ip.u_minus, ip.u_plus);
    ip.gamma_minus = ip.u_minus;
    ip.gamma_plus = ip.u_plus;
    return ip;
}

}  // namespace hcu
