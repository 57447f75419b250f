#pragma once

// Constant-coefficient 2x2 hyperbolic system u_t + (A u)_x = 0 with
// eigenvalues {-1, 2}: the harness for the upwind-reduction checks. The
// library kernels see it through the same PhysicsModel concept as Euler.

#include <cmath>
#include <limits>

#include "hcu/physics.hpp"

namespace support {

struct LinearPhys {
    static constexpr int dim = 2;

    // A = R diag(-1, 2) R^{-1} with R = [[2, 1], [1, 1]]  =>  A = [[-4, 6], [-3, 5]]
    hcu::Mat<2> A{{-4.0, 6.0, -3.0, 5.0}};
    hcu::Mat<2> R{{2.0, 1.0, 1.0, 1.0}};
    hcu::Mat<2> Rinv{{1.0, -1.0, -1.0, 2.0}};

    hcu::Vec<2> flux(const hcu::Vec<2>& u) const { return matvec(A, u); }

    bool eigenvalues(const hcu::Vec<2>& u, hcu::Vec<2>& lam) const {
        if (!std::isfinite(u[0]) || !std::isfinite(u[1])) return false;
        lam = {-1.0, 2.0};
        return true;
    }

    bool basis(const hcu::Vec<2>&, const hcu::Vec<2>&, hcu::Basis<2>& b) const {
        b.R = R;
        b.Rinv = Rinv;
        b.lam = {-1.0, 2.0};
        return true;
    }

    bool check_state(const hcu::Vec<2>& u, double& m1, double& m2) const {
        m1 = m2 = std::numeric_limits<double>::infinity();
        return std::isfinite(u[0]) && std::isfinite(u[1]);
    }
};

// One-sided split matrices for the directly coded upwind flux
// A+ = R diag(0, 2) R^{-1}, A- = R diag(-1, 0) R^{-1}.
inline hcu::Mat<2> linear_a_plus() {
    // R diag(0,2) Rinv = [[2,1],[1,1]] [[0,0],[-2,4]] = [[-2,4],[-2,4]]
    return hcu::Mat<2>{{-2.0, 4.0, -2.0, 4.0}};
}

inline hcu::Mat<2> linear_a_minus() {
    // R diag(-1,0) Rinv = [[2,1],[1,1]] [[-1,1],[0,0]] = [[-2,2],[-1,1]]
    return hcu::Mat<2>{{-2.0, 2.0, -1.0, 1.0}};
}

}  // namespace support
