#pragma once

#include <algorithm>

#include "hcu/config.hpp"
#include "hcu/physics.hpp"
#include "hcu/reconstruct.hpp"

namespace hcu {

// Per-characteristic-field one-sided speeds, paired by the analytic
// eigenvalue ordering of the two face Jacobians.
template <int N>
struct FieldSpeeds {
    Vec<N> lam_plus{}, lam_minus{};
};

// Diagonal entries of the P, M, Q diffusion matrices. Active fields satisfy
// p_i + m_i = 1 and q_i <= 0; fields whose speed gap is below eps get zeros.
template <int N>
struct LcdCoefficients {
    Vec<N> p{}, m{}, q{};
};

template <PhysicsModel P, int N = P::dim>
inline bool per_field_speeds(const P& phys, const Vec<N>& um, const Vec<N>& up,
                             FieldSpeeds<N>& s) {
    Vec<N> lm, lp;
    if (!phys.eigenvalues(um, lm) || !phys.eigenvalues(up, lp)) return false;
    for (int i = 0; i < N; ++i) {
        s.lam_plus[i] = std::max(std::max(lm[i], lp[i]), 0.0);
        s.lam_minus[i] = std::min(std::min(lm[i], lp[i]), 0.0);
    }
    return true;
}

template <int N>
inline LcdCoefficients<N> lcd_coefficients(const FieldSpeeds<N>& s, double eps) {
    LcdCoefficients<N> c;
    for (int i = 0; i < N; ++i) {
        const double gap = s.lam_plus[i] - s.lam_minus[i];
        if (gap > eps) {
            const double inv = 1.0 / gap;
            c.p[i] = s.lam_plus[i] * inv;
            c.m[i] = -s.lam_minus[i] * inv;
            c.q[i] = s.lam_plus[i] * s.lam_minus[i] * inv;
        }
    }
    return c;
}

// LCD central-upwind flux over a four-cell window. The mean term uses the
// fluxes of the two adjacent CELL AVERAGES (f1, f2), not of the
// reconstructed faces; sweep loops precompute them once per cell.
//
//   out = mean + R [ P Rinv (F(u-) - mean) + M Rinv (F(u+) - mean)
//                    + Q (gamma+ - gamma-) ]
template <PhysicsModel P, int N = P::dim>
inline bool lcd_interface_flux(const P& phys, const Vec<N>* w, const Vec<N>& f1,
                               const Vec<N>& f2, double dx, double eps, Reconstruction recon,
                               bool first_order, Vec<N>& out) {
    Basis<N> b;
    if (!phys.basis(w[1], w[2], b)) return false;

    Vec<N> um, up, gm, gp;
    if (first_order) {
        um = w[1];
        up = w[2];
        gm = matvec(b.Rinv, um);
        gp = matvec(b.Rinv, up);
    } else if (recon == Reconstruction::Characteristic) {
        Vec<N> g[4];
        for (int k = 0; k < 4; ++k) g[k] = matvec(b.Rinv, w[k]);
        const Vec<N> sl = limited_slope(g[0], g[1], g[2], dx);
        const Vec<N> sr = limited_slope(g[1], g[2], g[3], dx);
        const double h = 0.5 * dx;
        gm = g[1] + h * sl;
        gp = g[2] - h * sr;
        // Anchored at the averages so flat windows yield um == w[1], up == w[2]
        // and the whole diffusion term cancels exactly.
        um = w[1] + h * matvec(b.R, sl);
        up = w[2] - h * matvec(b.R, sr);
    } else {
        detail::limited_faces(w, dx, um, up);
        gm = matvec(b.Rinv, um);
        gp = matvec(b.Rinv, up);
    }

    FieldSpeeds<N> s;
    if (!per_field_speeds(phys, um, up, s)) return false;

    const Vec<N> mean = 0.5 * (f1 + f2);
    const Vec<N> cm = matvec(b.Rinv, phys.flux(um) - mean);
    const Vec<N> cp = matvec(b.Rinv, phys.flux(up) - mean);

    Vec<N> comb;
    for (int i = 0; i < N; ++i) {
        const double gap = s.lam_plus[i] - s.lam_minus[i];
        comb[i] = (gap > eps)
                      ? (s.lam_plus[i] * cm[i] - s.lam_minus[i] * cp[i] +
                         s.lam_plus[i] * s.lam_minus[i] * (gp[i] - gm[i])) /
                            gap
                      : 0.0;
    }
    out = mean + matvec(b.R, comb);
    return true;
}

// Euler-typed entry points.
inline FieldSpeeds<3> per_field_speeds(const Cons1& um, const Cons1& up, double gamma) {
    FieldSpeeds<3> s;
    if (!per_field_speeds(EulerPhys1{gamma}, um, up, s))
        throw SolverError("per_field_speeds: inadmissible state");
    return s;
}

inline FieldSpeeds<4> per_field_speeds(const Cons2& um, const Cons2& up, double gamma,
                                       Axis axis) {
    FieldSpeeds<4> s;
    const Cons2 a = axis == Axis::X ? um : swap_momentum(um);
    const Cons2 b = axis == Axis::X ? up : swap_momentum(up);
    if (!per_field_speeds(EulerPhys2X{gamma}, a, b, s))
        throw SolverError("per_field_speeds: inadmissible state");
    return s;
}

inline Vec<3> lcd_flux(const Cons1* window, double gamma, double dx, double eps = 1e-10,
                       Reconstruction recon = Reconstruction::Characteristic) {
    const EulerPhys1 phys{gamma};
    Vec<3> out;
    if (!lcd_interface_flux(phys, window, phys.flux(window[1]), phys.flux(window[2]), dx, eps,
                            recon, false, out))
        throw SolverError("lcd_flux: inadmissible state");
    return out;
}

inline Vec<4> lcd_flux(const Cons2* window, double gamma, double dx, Axis axis,
                       double eps = 1e-10,
                       Reconstruction recon = Reconstruction::Characteristic) {
    const EulerPhys2X phys{gamma};
    Cons2 w[4];
    for (int k = 0; k < 4; ++k) w[k] = axis == Axis::X ? window[k] : swap_momentum(window[k]);
    Vec<4> out;
    if (!lcd_interface_flux(phys, w, phys.flux(w[1]), phys.flux(w[2]), dx, eps, recon, false,
                            out))
        throw SolverError("lcd_flux: inadmissible state");
    return axis == Axis::X ? out : swap_momentum(out);
}

}  // namespace hcu
