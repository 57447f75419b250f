#include "hcu/boundary.hpp"

namespace hcu {
namespace {

Cons2 reflect(const Cons2& u, int comp) {
    Cons2 r = u;
    r[comp] = -r[comp];
    return r;
}

}  // namespace

void fill_ghost(Field2D<4>& f, const BoundarySpec2& bc, double gamma) {
    bc.validate();
    const int nx = f.nx, ny = f.ny;
    if (nx < ghost_width || ny < ghost_width)
        throw ConfigError("grid too small for ghost fill");

    auto fill_x = [&](const BcSide2& side, bool left) {
        const int g0 = left ? -1 : nx, g1 = left ? -2 : nx + 1;
        const int i0 = left ? 0 : nx - 1, i1 = left ? 1 : nx - 2;
        const int w0 = left ? nx - 1 : 0, w1 = left ? nx - 2 : 1;
        switch (side.type) {
            case BcType::Free:
                for (int k = 0; k < ny; ++k) f.at(g0, k) = f.at(g1, k) = f.at(i0, k);
                break;
            case BcType::Periodic:
                for (int k = 0; k < ny; ++k) {
                    f.at(g0, k) = f.at(w0, k);
                    f.at(g1, k) = f.at(w1, k);
                }
                break;
            case BcType::SolidWall:
                for (int k = 0; k < ny; ++k) {
                    f.at(g0, k) = reflect(f.at(i0, k), 1);
                    f.at(g1, k) = reflect(f.at(i1, k), 1);
                }
                break;
            case BcType::Dirichlet: {
                const Cons2 u = prim_to_cons(side.dirichlet, gamma);
                for (int k = 0; k < ny; ++k) f.at(g0, k) = f.at(g1, k) = u;
                break;
            }
        }
    };
    fill_x(bc.left, true);
    fill_x(bc.right, false);

    // y sides sweep every column, ghost columns included, so the corner cells
    // inherit the x fill.
    auto fill_y = [&](const BcSide2& side, bool bottom) {
        const int g0 = bottom ? -1 : ny, g1 = bottom ? -2 : ny + 1;
        const int i0 = bottom ? 0 : ny - 1, i1 = bottom ? 1 : ny - 2;
        const int w0 = bottom ? ny - 1 : 0, w1 = bottom ? ny - 2 : 1;
        switch (side.type) {
            case BcType::Free:
                for (int j = -ghost_width; j < nx + ghost_width; ++j)
                    f.at(j, g0) = f.at(j, g1) = f.at(j, i0);
                break;
            case BcType::Periodic:
                for (int j = -ghost_width; j < nx + ghost_width; ++j) {
                    f.at(j, g0) = f.at(j, w0);
                    f.at(j, g1) = f.at(j, w1);
                }
                break;
            case BcType::SolidWall:
                for (int j = -ghost_width; j < nx + ghost_width; ++j) {
                    f.at(j, g0) = reflect(f.at(j, i0), 2);
                    f.at(j, g1) = reflect(f.at(j, i1), 2);
                }
                break;
            case BcType::Dirichlet: {
                const Cons2 u = prim_to_cons(side.dirichlet, gamma);
                for (int j = -ghost_width; j < nx + ghost_width; ++j)
                    f.at(j, g0) = f.at(j, g1) = u;
                break;
            }
        }
    };
    fill_y(bc.bottom, true);
    fill_y(bc.top, false);
}

}  // namespace hcu
