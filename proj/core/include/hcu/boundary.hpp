#pragma once

#include <string>

#include "hcu/errors.hpp"
#include "hcu/euler.hpp"
#include "hcu/field.hpp"

namespace hcu {

enum class BcType { Free, SolidWall, Periodic, Dirichlet };

struct BcSide1 {
    BcType type = BcType::Free;
    Prim1 dirichlet{};
};

struct BcSide2 {
    BcType type = BcType::Free;
    Prim2 dirichlet{};
};

struct BoundarySpec1 {
    BcSide1 left, right;

    // Periodic makes sense only as a matched pair.
    void validate() const {
        if ((left.type == BcType::Periodic) != (right.type == BcType::Periodic))
            throw ConfigError("periodic boundary must be set on both ends");
    }

    static BoundarySpec1 all_free() { return {}; }
    static BoundarySpec1 all_periodic() {
        return {{BcType::Periodic, {}}, {BcType::Periodic, {}}};
    }
    static BoundarySpec1 all_wall() {
        return {{BcType::SolidWall, {}}, {BcType::SolidWall, {}}};
    }
};

struct BoundarySpec2 {
    BcSide2 left, right, bottom, top;

    void validate() const {
        if ((left.type == BcType::Periodic) != (right.type == BcType::Periodic))
            throw ConfigError("periodic boundary must be set on both x ends");
        if ((bottom.type == BcType::Periodic) != (top.type == BcType::Periodic))
            throw ConfigError("periodic boundary must be set on both y ends");
    }

    static BoundarySpec2 all_free() { return {}; }
    static BoundarySpec2 all_periodic() {
        BoundarySpec2 bc;
        bc.left.type = bc.right.type = bc.bottom.type = bc.top.type = BcType::Periodic;
        return bc;
    }
    static BoundarySpec2 all_wall() {
        BoundarySpec2 bc;
        bc.left.type = bc.right.type = bc.bottom.type = bc.top.type = BcType::SolidWall;
        return bc;
    }
};

// Ghost fill for 1-D fields. Reads interior cells only, so applying it twice
// is a no-op. Free and Periodic work for any state size (the linear-system
// tests use N = 2); SolidWall and Dirichlet are Euler-specific.
template <int N>
inline void fill_ghost(Field1D<N>& f, const BoundarySpec1& bc, double gamma) {
    bc.validate();
    const int n = f.n;
    if (n < ghost_width) throw ConfigError("grid too small for ghost fill");

    auto fill_side = [&](const BcSide1& side, bool is_left) {
        const int g0 = is_left ? -1 : n;      // nearest ghost
        const int g1 = is_left ? -2 : n + 1;  // outer ghost
        const int i0 = is_left ? 0 : n - 1;   // nearest interior
        const int i1 = is_left ? 1 : n - 2;
        switch (side.type) {
            case BcType::Free:
                f.at(g0) = f.at(i0);
                f.at(g1) = f.at(i0);
                break;
            case BcType::Periodic:
                f.at(g0) = f.at(is_left ? n - 1 : 0);
                f.at(g1) = f.at(is_left ? n - 2 : 1);
                break;
            case BcType::SolidWall:
                if constexpr (N == 3) {
                    f.at(g0) = f.at(i0);
                    f.at(g1) = f.at(i1);
                    f.at(g0)[1] = -f.at(g0)[1];
                    f.at(g1)[1] = -f.at(g1)[1];
                } else {
                    throw ConfigError("solid wall boundary requires Euler states");
                }
                break;
            case BcType::Dirichlet:
                if constexpr (N == 3) {
                    const Cons1 u = prim_to_cons(side.dirichlet, gamma);
                    f.at(g0) = u;
                    f.at(g1) = u;
                } else {
                    throw ConfigError("dirichlet boundary requires Euler states");
                }
                break;
        }
    };
    fill_side(bc.left, true);
    fill_side(bc.right, false);
}

// 2-D ghost fill: x sides first from interior rows, then y sides across every
// column including the freshly filled ghost columns, which defines the corner
// cells. Idempotent for the same reason as the 1-D fill.
void fill_ghost(Field2D<4>& f, const BoundarySpec2& bc, double gamma);

}  // namespace hcu
