#pragma once

#include <cmath>
#include <stdexcept>

#include "hcu/vec.hpp"

namespace hcu {

enum class Axis { X, Y };

// Conserved state layouts: (rho, rho*u, E) and (rho, rho*u, rho*v, E).
using Cons1 = Vec<3>;
using Cons2 = Vec<4>;

struct Prim1 {
    double rho = 0, u = 0, p = 0;
};
struct Prim2 {
    double rho = 0, u = 0, v = 0, p = 0;
};

// Arithmetic-average interface state. E, H, c, phi are derived from the
// averaged primitives, so H = |vel|^2/2 + c^2/(gamma-1) holds exactly and
// phi = 2H - |vel|^2 stays positive for admissible inputs.
struct Hat1 {
    double rho = 0, u = 0, p = 0;
    double E = 0, H = 0, c = 0, phi = 0;
};
struct Hat2 {
    double rho = 0, u = 0, v = 0, p = 0;
    double E = 0, H = 0, c = 0, phi = 0;
};

// Eigendecomposition at one interface: A_hat * R = R * diag(lam),
// eigenvalues ascending.
template <int N>
struct Basis {
    Mat<N> R, Rinv;
    Vec<N> lam;
};

inline bool is_admissible(const Cons1& u, double gamma) {
    if (!(u[0] > 0.0)) return false;
    const double p = (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
    return p > 0.0 && std::isfinite(p);
}

inline bool is_admissible(const Cons2& u, double gamma) {
    if (!(u[0] > 0.0)) return false;
    const double p = (gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0]);
    return p > 0.0 && std::isfinite(p);
}

inline Cons1 prim_to_cons(const Prim1& q, double gamma) {
    if (!(q.rho > 0.0) || !(q.p > 0.0))
        throw std::domain_error("prim_to_cons: non-positive density or pressure");
    return {q.rho, q.rho * q.u, q.p / (gamma - 1.0) + 0.5 * q.rho * q.u * q.u};
}

inline Cons2 prim_to_cons(const Prim2& q, double gamma) {
    if (!(q.rho > 0.0) || !(q.p > 0.0))
        throw std::domain_error("prim_to_cons: non-positive density or pressure");
    return {q.rho, q.rho * q.u, q.rho * q.v,
            q.p / (gamma - 1.0) + 0.5 * q.rho * (q.u * q.u + q.v * q.v)};
}

// Pressure may come out non-positive for a state produced mid-computation;
// the caller decides whether that is fatal (the step drivers do).
inline Prim1 cons_to_prim(const Cons1& u, double gamma) {
    if (!(u[0] > 0.0)) throw std::domain_error("cons_to_prim: non-positive density");
    const double vel = u[1] / u[0];
    return {u[0], vel, (gamma - 1.0) * (u[2] - 0.5 * u[1] * vel)};
}

inline Prim2 cons_to_prim(const Cons2& u, double gamma) {
    if (!(u[0] > 0.0)) throw std::domain_error("cons_to_prim: non-positive density");
    const double vu = u[1] / u[0], vv = u[2] / u[0];
    return {u[0], vu, vv, (gamma - 1.0) * (u[3] - 0.5 * (u[1] * vu + u[2] * vv))};
}

inline Cons1 euler_flux(const Cons1& u, double gamma) {
    const double vel = u[1] / u[0];
    const double p = (gamma - 1.0) * (u[2] - 0.5 * u[1] * vel);
    return {u[1], u[1] * vel + p, vel * (u[2] + p)};
}

inline Cons2 euler_flux(const Cons2& u, double gamma, Axis axis) {
    const double vu = u[1] / u[0], vv = u[2] / u[0];
    const double p = (gamma - 1.0) * (u[3] - 0.5 * (u[1] * vu + u[2] * vv));
    if (axis == Axis::X) return {u[1], u[1] * vu + p, u[2] * vu, vu * (u[3] + p)};
    return {u[2], u[1] * vv, u[2] * vv + p, vv * (u[3] + p)};
}

// Eigenvalues in ascending order: (u-c, u, u+c), 2-D adds the multiplicity-2
// middle value. Assumes an admissible state.
inline Vec<3> euler_eigenvalues(const Cons1& u, double gamma) {
    const double vel = u[1] / u[0];
    const double p = (gamma - 1.0) * (u[2] - 0.5 * u[1] * vel);
    const double c = std::sqrt(gamma * p / u[0]);
    return {vel - c, vel, vel + c};
}

inline Vec<4> euler_eigenvalues(const Cons2& u, double gamma, Axis axis) {
    const double vu = u[1] / u[0], vv = u[2] / u[0];
    const double p = (gamma - 1.0) * (u[3] - 0.5 * (u[1] * vu + u[2] * vv));
    const double c = std::sqrt(gamma * p / u[0]);
    const double w = (axis == Axis::X) ? vu : vv;
    return {w - c, w, w, w + c};
}

// The hat averages take the arithmetic mean of (rho, u, [v], p) and then
// rebuild E, H, c, phi from the means. They carry no direction dependence;
// the axis only selects which neighbor pair the caller feeds in.
inline Hat1 hat_average(const Cons1& l, const Cons1& r, double gamma) {
    const double ul = l[1] / l[0], ur = r[1] / r[0];
    const double pl = (gamma - 1.0) * (l[2] - 0.5 * l[1] * ul);
    const double pr = (gamma - 1.0) * (r[2] - 0.5 * r[1] * ur);
    Hat1 h;
    h.rho = 0.5 * (l[0] + r[0]);
    h.u = 0.5 * (ul + ur);
    h.p = 0.5 * (pl + pr);
    h.E = h.p / (gamma - 1.0) + 0.5 * h.rho * h.u * h.u;
    h.H = (h.E + h.p) / h.rho;
    h.c = std::sqrt(gamma * h.p / h.rho);
    h.phi = 2.0 * h.H - h.u * h.u;
    return h;
}

inline Hat2 hat_average(const Cons2& l, const Cons2& r, double gamma) {
    const double ul = l[1] / l[0], vl = l[2] / l[0];
    const double ur = r[1] / r[0], vr = r[2] / r[0];
    const double pl = (gamma - 1.0) * (l[3] - 0.5 * (l[1] * ul + l[2] * vl));
    const double pr = (gamma - 1.0) * (r[3] - 0.5 * (r[1] * ur + r[2] * vr));
    Hat2 h;
    h.rho = 0.5 * (l[0] + r[0]);
    h.u = 0.5 * (ul + ur);
    h.v = 0.5 * (vl + vr);
    h.p = 0.5 * (pl + pr);
    h.E = h.p / (gamma - 1.0) + 0.5 * h.rho * (h.u * h.u + h.v * h.v);
    h.H = (h.E + h.p) / h.rho;
    h.c = std::sqrt(gamma * h.p / h.rho);
    h.phi = 2.0 * h.H - h.u * h.u - h.v * h.v;
    return h;
}

// Flux Jacobian dF/dU evaluated at a hat state.
inline Mat<3> euler_jacobian(const Hat1& h, double gamma) {
    const double u = h.u;
    Mat<3> a{};
    a(0, 0) = 0;
    a(0, 1) = 1;
    a(0, 2) = 0;
    a(1, 0) = 0.5 * (gamma - 3.0) * u * u;
    a(1, 1) = (3.0 - gamma) * u;
    a(1, 2) = gamma - 1.0;
    a(2, 0) = -gamma * u * h.E / h.rho + (gamma - 1.0) * u * u * u;
    a(2, 1) = h.H - (gamma - 1.0) * u * u;
    a(2, 2) = gamma * u;
    return a;
}

namespace detail {

inline Mat<4> jacobian2_x(double u, double v, double E, double rho, double H, double gamma) {
    Mat<4> a{};
    a(0, 1) = 1;
    a(1, 0) = 0.5 * (gamma - 3.0) * u * u + 0.5 * (gamma - 1.0) * v * v;
    a(1, 1) = (3.0 - gamma) * u;
    a(1, 2) = (1.0 - gamma) * v;
    a(1, 3) = gamma - 1.0;
    a(2, 0) = -u * v;
    a(2, 1) = v;
    a(2, 2) = u;
    a(3, 0) = -gamma * u * E / rho + (gamma - 1.0) * u * (u * u + v * v);
    a(3, 1) = H - (gamma - 1.0) * u * u;
    a(3, 2) = (1.0 - gamma) * u * v;
    a(3, 3) = gamma * u;
    return a;
}

// dG/dU relates to dF/dU through the momentum swap S: B(U) = S A(S U) S.
inline Mat<4> swap_momentum_rows_cols(Mat<4> m) {
    for (int j = 0; j < 4; ++j) std::swap(m(1, j), m(2, j));
    for (int i = 0; i < 4; ++i) std::swap(m(i, 1), m(i, 2));
    return m;
}

}  // namespace detail

inline Mat<4> euler_jacobian(const Hat2& h, double gamma, Axis axis) {
    if (axis == Axis::X) return detail::jacobian2_x(h.u, h.v, h.E, h.rho, h.H, gamma);
    return detail::swap_momentum_rows_cols(detail::jacobian2_x(h.v, h.u, h.E, h.rho, h.H, gamma));
}

// Closed-form eigenvector matrices of the hat Jacobian. phi = 2H - |vel|^2
// is the common denominator of R^{-1}; it equals 2c^2/(gamma-1) and is
// positive whenever the hat state is admissible.
inline Basis<3> lcd_basis(const Hat1& h, double /*gamma*/) {
    const double u = h.u, c = h.c, H = h.H, phi = h.phi;
    Basis<3> b;
    b.lam = {u - c, u, u + c};

    b.R(0, 0) = 1;
    b.R(0, 1) = 1;
    b.R(0, 2) = 1;
    b.R(1, 0) = u - c;
    b.R(1, 1) = u;
    b.R(1, 2) = u + c;
    b.R(2, 0) = H - u * c;
    b.R(2, 1) = 0.5 * u * u;
    b.R(2, 2) = H + u * c;

    const double ip = 1.0 / phi;
    const double uh = 0.5 * u * u, w = 0.5 * phi / c;
    b.Rinv(0, 0) = ip * (uh + u * w);
    b.Rinv(0, 1) = ip * (-u - w);
    b.Rinv(0, 2) = ip;
    b.Rinv(1, 0) = ip * (2.0 * phi - 2.0 * H);
    b.Rinv(1, 1) = ip * 2.0 * u;
    b.Rinv(1, 2) = ip * -2.0;
    b.Rinv(2, 0) = ip * (uh - u * w);
    b.Rinv(2, 1) = ip * (-u + w);
    b.Rinv(2, 2) = ip;
    return b;
}

namespace detail {

inline Basis<4> basis2_x(double u, double v, double c, double H, double phi) {
    Basis<4> b;
    b.lam = {u - c, u, u, u + c};

    b.R(0, 0) = 1;
    b.R(0, 1) = 1;
    b.R(0, 2) = 0;
    b.R(0, 3) = 1;
    b.R(1, 0) = u - c;
    b.R(1, 1) = u;
    b.R(1, 2) = 0;
    b.R(1, 3) = u + c;
    b.R(2, 0) = v;
    b.R(2, 1) = v;
    b.R(2, 2) = 1;
    b.R(2, 3) = v;
    b.R(3, 0) = H - u * c;
    b.R(3, 1) = 0.5 * (u * u + v * v);
    b.R(3, 2) = v;
    b.R(3, 3) = H + u * c;

    const double ip = 1.0 / phi;
    const double ke = 0.5 * (u * u + v * v), w = 0.5 * phi / c;
    b.Rinv(0, 0) = ip * (ke + u * w);
    b.Rinv(0, 1) = ip * (-u - w);
    b.Rinv(0, 2) = ip * -v;
    b.Rinv(0, 3) = ip;
    b.Rinv(1, 0) = ip * (2.0 * phi - 2.0 * H);
    b.Rinv(1, 1) = ip * 2.0 * u;
    b.Rinv(1, 2) = ip * 2.0 * v;
    b.Rinv(1, 3) = ip * -2.0;
    b.Rinv(2, 0) = -v;  // row carries a phi factor, so 1/phi cancels
    b.Rinv(2, 1) = 0;
    b.Rinv(2, 2) = 1;
    b.Rinv(2, 3) = 0;
    b.Rinv(3, 0) = ip * (ke - u * w);
    b.Rinv(3, 1) = ip * (-u + w);
    b.Rinv(3, 2) = ip * -v;
    b.Rinv(3, 3) = ip;
    return b;
}

}  // namespace detail

inline Basis<4> lcd_basis(const Hat2& h, double /*gamma*/, Axis axis) {
    if (axis == Axis::X) return detail::basis2_x(h.u, h.v, h.c, h.H, h.phi);
    // y-direction via the u<->v swap symmetry: R_y = S R_x', Rinv_y = Rinv_x' S,
    // where the primed basis is built with the roles of u and v exchanged.
    Basis<4> b = detail::basis2_x(h.v, h.u, h.c, h.H, h.phi);
    for (int j = 0; j < 4; ++j) std::swap(b.R(1, j), b.R(2, j));
    for (int i = 0; i < 4; ++i) std::swap(b.Rinv(i, 1), b.Rinv(i, 2));
    return b;
}

}  // namespace hcu
