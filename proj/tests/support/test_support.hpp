#pragma once

#include <random>

#include "hcu/euler.hpp"
#include "hcu/vec.hpp"

namespace support {

// Deterministic state generator for property tests. Ranges keep states well
// inside the admissible set so reconstructed faces stay evaluable.
struct Rng {
    std::mt19937_64 gen{0x2545f4914f6cdd1dULL};

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen);
    }

    hcu::Prim1 prim1() { return {uniform(0.1, 5.0), uniform(-2.0, 2.0), uniform(0.05, 5.0)}; }

    hcu::Prim2 prim2() {
        return {uniform(0.1, 5.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(0.05, 5.0)};
    }

    hcu::Cons1 cons1(double gamma) { return hcu::prim_to_cons(prim1(), gamma); }
    hcu::Cons2 cons2(double gamma) { return hcu::prim_to_cons(prim2(), gamma); }
};

template <int N>
inline double max_abs_diff(const hcu::Vec<N>& a, const hcu::Vec<N>& b) {
    return hcu::max_abs(a - b);
}

template <int N>
inline double mat_inf_norm(const hcu::Mat<N>& m) {
    double worst = 0.0;
    for (int i = 0; i < N; ++i) {
        double row = 0.0;
        for (int j = 0; j < N; ++j) row += std::abs(m(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

}  // namespace support
