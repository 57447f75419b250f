#pragma once

#include <concepts>

#include "hcu/euler.hpp"
#include "hcu/vec.hpp"

namespace hcu {

// Model of a hyperbolic system as seen by the flux kernels: analytic flux,
// eigenvalues in a fixed analytic order, and the characteristic basis at an
// interface built from the two adjacent cell averages. The eigenvalue and
// basis hooks return false when the state leaves the model's domain (for
// Euler: non-positive density or pressure); the step driver turns that into
// a located failure instead of letting NaNs run.
// eigenvalues are ascending (first = slowest, last = fastest wave), which the
// CFL scan relies on. check_state is the per-cell post-step assertion: it
// writes the two positivity monitors (density and pressure for Euler) and
// returns whether the state is admissible and finite.
template <class P>
concept PhysicsModel = requires(const P p, const Vec<P::dim>& u, Vec<P::dim>& lam,
                                Basis<P::dim>& b, double& m) {
    { P::dim } -> std::convertible_to<int>;
    { p.flux(u) } -> std::same_as<Vec<P::dim>>;
    { p.eigenvalues(u, lam) } -> std::same_as<bool>;
    { p.basis(u, u, b) } -> std::same_as<bool>;
    { p.check_state(u, m, m) } -> std::same_as<bool>;
};

struct EulerPhys1 {
    static constexpr int dim = 3;
    double gamma = 1.4;

    Vec<3> flux(const Cons1& u) const { return euler_flux(u, gamma); }

    bool eigenvalues(const Cons1& u, Vec<3>& lam) const {
        if (!(u[0] > 0.0)) return false;
        const double vel = u[1] / u[0];
        const double p = (gamma - 1.0) * (u[2] - 0.5 * u[1] * vel);
        if (!(p > 0.0)) return false;
        const double c = std::sqrt(gamma * p / u[0]);
        lam = {vel - c, vel, vel + c};
        return true;
    }

    bool basis(const Cons1& l, const Cons1& r, Basis<3>& b) const {
        if (!(l[0] > 0.0) || !(r[0] > 0.0)) return false;
        const Hat1 h = hat_average(l, r, gamma);
        if (!(h.p > 0.0)) return false;
        b = lcd_basis(h, gamma);
        return true;
    }

    bool check_state(const Cons1& u, double& rho, double& p) const {
        rho = u[0];
        p = (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
        return std::isfinite(u[0]) && std::isfinite(u[1]) && std::isfinite(u[2]) &&
               rho > 0.0 && p > 0.0;
    }
};

// x-direction 2-D physics. The y-direction never needs its own adapter: the
// solver runs y-sweeps through this one on a momentum-swapped transpose of
// the field, which is exactly the B = S A S symmetry.
struct EulerPhys2X {
    static constexpr int dim = 4;
    double gamma = 1.4;

    Vec<4> flux(const Cons2& u) const { return euler_flux(u, gamma, Axis::X); }

    bool eigenvalues(const Cons2& u, Vec<4>& lam) const {
        if (!(u[0] > 0.0)) return false;
        const double vu = u[1] / u[0], vv = u[2] / u[0];
        const double p = (gamma - 1.0) * (u[3] - 0.5 * (u[1] * vu + u[2] * vv));
        if (!(p > 0.0)) return false;
        const double c = std::sqrt(gamma * p / u[0]);
        lam = {vu - c, vu, vu, vu + c};
        return true;
    }

    bool basis(const Cons2& l, const Cons2& r, Basis<4>& b) const {
        if (!(l[0] > 0.0) || !(r[0] > 0.0)) return false;
        const Hat2 h = hat_average(l, r, gamma);
        if (!(h.p > 0.0)) return false;
        b = lcd_basis(h, gamma, Axis::X);
        return true;
    }

    bool check_state(const Cons2& u, double& rho, double& p) const {
        rho = u[0];
        p = (gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
        return std::isfinite(u[0]) && std::isfinite(u[1]) && std::isfinite(u[2]) &&
               std::isfinite(u[3]) && rho > 0.0 && p > 0.0;
    }
};

inline Cons2 swap_momentum(const Cons2& u) { return {u[0], u[2], u[1], u[3]}; }

}  // namespace hcu
